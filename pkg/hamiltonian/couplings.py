"""
Coupling constants J0..J13 of the parent Hamiltonian.

The two-rung term is expanded in the four-qubit Pauli basis with sites
ordered (i, i', i+1, i'+1); the coefficients are then fitted to the fourteen
coupling structures. The closed-form coupling table is kept alongside for
comparison; the numeric expansion is authoritative.
"""
import itertools
import logging
from collections import OrderedDict
from functools import lru_cache

import numpy as np
import scipy.linalg

from mps import core
from mps.errors import StructuralResidualError
from utils import numerics

# GLOBAL VARIABLES

STRUCTURE_TOL = 1e-10
DELTA_WARN = 1e-9
N_COUPLINGS = 14
COUPLING_NAMES = tuple('J%d' % k for k in range(N_COUPLINGS))
ANISOTROPIC = ('J1', 'J8', 'J9', 'J10', 'J11', 'J12', 'J13')

PAULIS = OrderedDict([('I', core.IDENTITY_2), ('X', core.PAULI_X),
                      ('Y', core.PAULI_Y), ('Z', core.PAULI_Z)])

# END GLOBAL VARIABLES


class CouplingSet(object):
    """
    The fourteen couplings with where they came from.

    :param values: J0..J13 in order
    :param method: 'pauli_expand' or 'formulas'
    :param params: the model parameters (a, g, epsilon, sigma)
    :param weights: the WeightSet used
    """

    def __init__(self, values, method, params=None, weights=None, residuals=None):
        values = np.asarray(values, dtype=float)
        assert values.shape == (N_COUPLINGS,), "a coupling set has %d entries" % N_COUPLINGS
        self.values = values
        self.method = method
        self.params = params or {}
        self.weights = weights
        self.residuals = residuals or OrderedDict()
        self.deltas = None

    def __str__(self):
        return 'CouplingSet[%s] %s' % (self.method, ' '.join(
            '%s=%.6g' % (name, value) for name, value in zip(COUPLING_NAMES, self.values)))

    def __getitem__(self, name):
        return self.values[COUPLING_NAMES.index(name)]

    @property
    def max_residual(self):
        return max([abs(v) for v in self.residuals.values()] + [0.0])

    def anisotropic(self):
        return OrderedDict((name, self[name]) for name in ANISOTROPIC)

    def as_dict(self):
        result = OrderedDict((name, float(value)) for name, value in zip(COUPLING_NAMES, self.values))
        result['provenance'] = {
            'method': self.method,
            'params': dict(self.params),
            'weights': self.weights.as_dict() if self.weights is not None else None,
            'deltas': dict(self.deltas) if self.deltas is not None else None,
        }
        return result


def pauli_string(label):
    return numerics.kron(*[PAULIS[c] for c in label])


@lru_cache(maxsize=1)
def _pauli_table():
    labels = [''.join(p) for p in itertools.product(PAULIS.keys(), repeat=4)]
    return labels, np.array([pauli_string(label) for label in labels])


def pauli_coefficients(m):
    """
    Coefficients tr(m P) / 16 of a 16x16 matrix in all 256 Pauli strings.
    """
    labels, strings = _pauli_table()
    values = np.einsum('pij,ji->p', strings, m) / 16.0
    return OrderedDict(zip(labels, values))


def _two_site(pauli, first, second):
    factors = [core.IDENTITY_2] * 4
    factors[first] = PAULIS[pauli]
    factors[second] = PAULIS[pauli]
    return numerics.kron(*factors)


def _dot(first, second):
    return sum(_two_site(p, first, second) for p in 'XYZ')


def _zz(first, second):
    return _two_site('Z', first, second)


@lru_cache(maxsize=1)
def structure_operators():
    """
    The fourteen 16x16 operators S_k with 8h = sum_k J_k S_k.

    Sites 0, 1 are the legs of the first rung and 2, 3 those of the second.
    Rung terms carry a factor 1/2 because each rung is shared by two
    neighbouring two-rung terms.
    """
    legs = ((0, 2), (1, 3))
    rungs = ((0, 1), (2, 3))
    diagonals = ((0, 3), (1, 2))

    def paired(pairs, op):
        return op(*pairs[0]) + op(*pairs[1])

    def mixed(pairs):
        return _zz(*pairs[0]).dot(_dot(*pairs[1])) + _zz(*pairs[1]).dot(_dot(*pairs[0]))

    ops = [
        2.0 * np.eye(16),
        paired(legs, _zz),
        paired(legs, _dot),
        0.5 * paired(rungs, _dot),
        paired(diagonals, _dot),
        _dot(*rungs[0]).dot(_dot(*rungs[1])),
        _dot(*legs[0]).dot(_dot(*legs[1])),
        _dot(*diagonals[0]).dot(_dot(*diagonals[1])),
        0.5 * paired(rungs, _zz),
        paired(diagonals, _zz),
        pauli_string('ZZZZ'),
        mixed(rungs),
        mixed(legs),
        mixed(diagonals),
    ]
    return np.array([op.real for op in ops])


def reassemble(couplings):
    """
    The 16x16 term h = (1/8) sum_k J_k S_k.
    """
    values = getattr(couplings, 'values', couplings)
    return np.einsum('k,kij->ij', values, structure_operators()) / 8.0


def pauli_expand(h, check=True, tol=STRUCTURE_TOL):
    """
    Expands 8h in Pauli strings and fits J0..J13.

    :param h: a LocalHamiltonian or a 16x16 real symmetric matrix
    :param check: raise when Pauli coefficients fall outside the structure
    :return: a CouplingSet whose ``residuals`` maps every Pauli string of
             8h - 8 reassemble(J) above ``tol`` to its coefficient
    :raises StructuralResidualError: when ``check`` and residuals remain
    """
    matrix = np.asarray(getattr(h, 'h', h))
    assert matrix.shape == (16, 16), "the local term acts on two rungs"
    target = 8.0 * matrix.real
    design = structure_operators().reshape(N_COUPLINGS, -1).T
    values = scipy.linalg.lstsq(design, target.reshape(-1))[0]

    leftover = target - np.einsum('k,kij->ij', values, structure_operators())
    residuals = OrderedDict((label, float(np.real_if_close(c)))
                            for label, c in pauli_coefficients(leftover).items() if abs(c) > tol)

    weights = getattr(h, 'weights', None)
    basis = getattr(h, 'basis', None)
    couplings = CouplingSet(values, 'pauli_expand', params=getattr(basis, 'params', None),
                            weights=weights, residuals=residuals)
    logging.debug("Expanded %s" % couplings)
    if check and residuals:
        raise StructuralResidualError(residuals)
    return couplings


def coupling_formulas(a, g, epsilon, sigma, weights):
    """
    The closed-form coupling table, evaluated as printed.
    """
    s, e, se = sigma, epsilon, sigma * epsilon
    m22, m21, m20 = weights['mu22'], weights['mu21'], weights['mu20']
    m11, m10 = weights['mu11'], weights['mu10']
    m1p1, m1p0, m00 = weights['mu1p1'], weights['mu1p0'], weights['mu00']
    a2, a4, g2 = a * a, a ** 4, g * g

    values = [
        m22 + 4 * (m21 + m11 + m1p1) + m10 - m1p0 + 2 * (m00 + m20) + 16 * a4 * m20,
        m22 + 0.5 * (-m21 + m11 + s * m1p1 + m1p0 - m10) + 4.0 / 3 * a2 * (g * se - 2 * a2) * m20,
        0.5 * (m21 - m11 - s * m1p1) - 4.0 / 3 * se * a2 * g * m20,
        -e * (m21 - m11) - se * m1p1 + se * (2.0 / 3 * g2 * m20 - m00),
        -0.5 * e * (m21 + m11 - m1p1) - 4.0 / 3 * a2 * g * m20,
        0.5 * (m00 - m10 - m1p0) + 1.0 / 3 * m20 * (g2 - 8 * a4),
        8.0 / 3 * a4 * m20 + 0.5 * (m1p0 - m10),
        8.0 / 3 * a4 * m20 + 0.5 * (m10 - m1p0),
        2 * m22 + e * (m21 - m11) + se * m1p1 - m10 - m1p0 + (se - 1) * m00
        + 2.0 / 3 * m20 * (8 * a4 - (1 + se) * g2),
        m22 + 0.5 * e * (m21 + m11 - m1p1) + 0.5 * (m10 - m1p0) + 4.0 / 3 * a2 * (g - 2 * a2) * m20,
        m22 + 2 * (e - 1) * m21 + (e + 1) * (s - 1) * m1p1 + (1 - se) * m00
        + 2.0 / 3 * (1 + se) * g2 * m20 + 8.0 / 3 * a2 * (2 * a2 - g - g * se) * m20,
        0.5 * (-e * m21 + e * m11 - se * m1p1 + m10 + m1p0) + 0.5 * (se - 1) * m00
        + m20 / 3.0 * (8 * a4 - (1 + se) * g2),
        0.5 * (m21 - m11 - s * m1p1 + m10 - m1p0) - 4.0 / 3 * a2 * (2 * a2 - g * se) * m20,
        0.5 * (-e * m21 - e * m11 + e * m1p1 - m10 + m1p0) + 4.0 / 3 * a2 * m20 * (g - 2 * a2),
    ]
    params = {'a': a, 'g': g, 'epsilon': epsilon, 'sigma': sigma}
    return CouplingSet(values, 'formulas', params=params, weights=weights)


def rotational_formulas(mu, nu, xi, eta):
    """
    The reduced table of the fully rotation-invariant point, as printed;
    the J0 line repeats mu and is reported, not trusted.
    """
    return OrderedDict([
        ('J0', 48 * mu + 10 * nu + 6 * xi + 4 * mu),
        ('J2', 5 * mu - nu + xi),
        ('J3', 10 * mu - 2 * nu - 2 * xi - 2 * eta),
        ('J4', 5 * mu + nu - xi),
        ('J5', mu - nu - xi + eta),
        ('J6', mu + xi - nu),
        ('J7', mu + nu - xi),
    ])


def coupling_deltas(formulas, expanded, warn=DELTA_WARN):
    """
    Per-coupling differences formula - expansion; stores them on ``formulas``.
    """
    deltas = OrderedDict((name, float(f - x)) for name, f, x in
                         zip(COUPLING_NAMES, formulas.values, expanded.values))
    large = OrderedDict((name, d) for name, d in deltas.items() if abs(d) > warn)
    if large:
        logging.warning("Printed couplings differ from the expansion: %s" % ', '.join(
            '%s %+.3e' % item for item in large.items()))
    formulas.deltas = deltas
    expanded.deltas = deltas
    return deltas


def rotational_deltas(couplings, mu, nu, xi, eta):
    """
    Printed rotational relations minus the expanded couplings.
    """
    return OrderedDict((name, float(value - couplings[name]))
                       for name, value in rotational_formulas(mu, nu, xi, eta).items())
