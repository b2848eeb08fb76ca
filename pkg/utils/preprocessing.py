"""
Parsing of scan specifications into parameter grids.
"""
import logging

import numpy as np

from mps.errors import SpecificationError

# GLOBAL VARIABLES

GRID_DIGITS = 12

# the first entry is the default swept parameter
SWEPT_PARAMETERS = {'class_a': ('x', 'g'), 'class_b': ('u',), 'spin_flip': ('x', 'g')}
FIXED_PARAMETERS = {
    'class_a': ('a', 'epsilon', 'sigma'),
    'class_b': (),
    'spin_flip': ('a', 'b', 'mu_t', 'epsilon'),
}
OUTPUTS = ('S', 'C', 'zz', 'nn', 'xi_z', 'xi_n', 'lambda')
OUTPUT_ALIASES = {'S_bits': 'S'}
DEFAULT_OUTPUTS = {
    'class_a': ('S', 'C', 'zz', 'nn', 'xi_z', 'xi_n'),
    'class_b': ('S', 'C', 'zz', 'nn', 'xi_z', 'xi_n'),
    'spin_flip': ('xi_z', 'xi_n', 'zz', 'nn'),
}

# END GLOBAL VARIABLES


def parse_grid(text):
    """
    Parses 'min:max:step'.

    :return: a (min, max, step) tuple of floats
    :raises SpecificationError: for anything but three numbers with step > 0 and min < max
    """
    parts = str(text).split(':')
    if len(parts) != 3:
        raise SpecificationError("grid %r is not of the form min:max:step" % (text,))
    try:
        low, high, step = (float(p) for p in parts)
    except ValueError:
        raise SpecificationError("grid %r holds a non-numeric bound" % (text,))
    if not step > 0:
        raise SpecificationError("grid %r needs step > 0" % (text,))
    if not low < high:
        raise SpecificationError("grid %r needs min < max" % (text,))
    return low, high, step


class ScanSpec(object):
    """
    A one-parameter sweep over a model family.

    :param family: 'class_a', 'class_b' or 'spin_flip'
    :param grid: a (min, max, step) tuple or a 'min:max:step' string
    :param fixed: the parameters held constant (epsilon, sigma, mu_t, ...)
    :param outputs: the requested columns, a subset of OUTPUTS
    :param out: the output path, or None for standard output
    :param fmt: 'csv' or 'json'
    :param parameter: the swept parameter, one of SWEPT_PARAMETERS[family]
    """

    def __init__(self, family, grid, fixed=None, outputs=None, out=None, fmt='csv', parameter=None):
        if family not in SWEPT_PARAMETERS:
            raise NotImplementedError("Can't scan family %r: unknown family" % (family,))
        self.family = family
        self.parameter = parameter or SWEPT_PARAMETERS[family][0]
        if self.parameter not in SWEPT_PARAMETERS[family]:
            raise SpecificationError("family %s sweeps one of %s, not %r" % (
                family, ', '.join(SWEPT_PARAMETERS[family]), self.parameter))
        self.low, self.high, self.step = parse_grid(grid) if isinstance(grid, str) else parse_grid(
            '%r:%r:%r' % tuple(grid))
        self.fixed = dict(fixed or {})
        unknown = [name for name in self.fixed if name not in FIXED_PARAMETERS[family]]
        if unknown:
            raise SpecificationError("family %s has no fixed parameter %s" % (family, ', '.join(unknown)))
        outputs = outputs or DEFAULT_OUTPUTS[family]
        self.outputs = tuple(OUTPUT_ALIASES.get(o, o) for o in outputs)
        unknown = [o for o in self.outputs if o not in OUTPUTS]
        if unknown:
            raise SpecificationError("unknown scan outputs %s" % unknown)
        if fmt not in ('csv', 'json'):
            raise SpecificationError("unknown output format %r" % (fmt,))
        self.out = out
        self.fmt = fmt
        logging.debug("Initialized %s" % self)

    def __str__(self):
        return 'ScanSpec %s over %s in [%g, %g] step %g' % (
            self.family, self.parameter, self.low, self.high, self.step)

    def grid(self):
        """
        The grid points, rounded so that the same ScanSpec always yields the same values.
        """
        count = int(np.floor((self.high - self.low) / self.step + 1e-9)) + 1
        values = np.round(self.low + self.step * np.arange(count), GRID_DIGITS)
        return [float(v) + 0.0 for v in values]

    def as_dict(self):
        return {'family': self.family, 'parameter': self.parameter,
                'grid': [self.low, self.high, self.step], 'fixed': self.fixed,
                'outputs': list(self.outputs), 'format': self.fmt}
