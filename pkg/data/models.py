import json
import logging
from pathlib import Path

from hamiltonian.parent import WeightSet
from mps import families as builders
from mps.core import families
from mps.errors import SpecificationError


class ModelSpec(object):
    """
    A model parameter document: the family name, its parameters and,
    optionally, Hamiltonian weights.
    """

    def __init__(self, family, params, weights=None, source=None):
        self.family = family
        self.params = params
        self.weights = weights
        self.source = source

        logging.debug("Initialized %s" % self)

    def __str__(self):
        return 'ModelSpec %s %s%s' % (self.family.name, self.params,
                                      ' from %s' % self.source if self.source else '')

    def _get(self, *names):
        missing = [name for name in names if name not in self.params]
        if missing:
            raise SpecificationError("family %s needs %s" % (self.family.name, ', '.join(missing)))
        return [self.params[name] for name in names]

    def build(self):
        """
        Builds the LadderMPS this document describes.
        """
        if self.family == families.general_so2:
            return builders.build_so2(*self._get('a', 'b', 'a_prime', 'b_prime', 'g'))
        elif self.family == families.spin_flip:
            return builders.build_spin_flip(*self._get('a', 'b', 'g', 'epsilon'))
        elif self.family == families.leg_exchange:
            return builders.build_leg_exchange(*self._get('a', 'b', 'g', 'eta'))
        elif self.family == families.parity:
            return builders.build_parity(*self._get('a', 'a_prime', 'g', 'sigma'))
        elif self.family == families.class_a:
            return builders.build_class_a(*self._get('a', 'g', 'epsilon', 'sigma'))
        elif self.family == families.class_b:
            return builders.build_class_b(*self._get('u'))
        else:
            raise NotImplementedError("Can't build family %s: unknown family" % self.family.name)

    def as_dict(self):
        record = {'family': self.family.name}
        record.update(self.params)
        if self.weights is not None:
            record['weights'] = self.weights.as_dict()
        return record


PARAMETER_NAMES = ('a', 'b', 'a_prime', 'b_prime', 'g', 'epsilon', 'sigma', 'eta', 'u')
SIGN_NAMES = ('epsilon', 'sigma', 'eta')


def from_dict(document, source=None):
    """
    Validates a parsed parameter document; fields a family does not use are ignored.

    :raises SpecificationError: for a missing or non-numeric field
    :raises NotImplementedError: for an unknown family name
    """
    if not isinstance(document, dict) or 'family' not in document:
        raise SpecificationError("a model document is an object with a 'family' field")
    try:
        family = families[document['family']]
    except KeyError:
        raise NotImplementedError("Can't load family %r: unknown family" % (document['family'],))

    params = {}
    for name in PARAMETER_NAMES:
        if name not in document:
            continue
        value = document[name]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SpecificationError("field %s=%r is not a number" % (name, value))
        params[name] = int(value) if name in SIGN_NAMES else float(value)

    weights = None
    if document.get('weights') is not None:
        if not isinstance(document['weights'], dict):
            raise SpecificationError("weights must be an object")
        for label, value in document['weights'].items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise SpecificationError("weight %s=%r is not a number" % (label, value))
        weights = WeightSet(**document['weights'])
    return ModelSpec(family, params, weights, source)


def load(path):
    """
    Loads a model document from a JSON file.

    :raises SpecificationError: when the file is not valid JSON
    """
    path = Path(path)
    try:
        document = json.loads(path.read_text())
    except ValueError as e:
        raise SpecificationError("%s is not valid JSON: %s" % (path, e))
    return from_dict(document, source=str(path))
