"""
One-rung density matrices, entanglement measures and correlation functions.

Closed forms hold for spin-flip symmetric models (a' = eps*b, b' = eps*a);
the numeric routes work for any ladder MPS and are used to check them.
Entropies are in bits.
"""
import logging
from enum import Enum

import numpy as np
import scipy.linalg

from mps import core
from mps.errors import DegenerateSpectrumError, FamilyMismatchError

# GLOBAL VARIABLES

rhoMode = Enum("RhoMode", "closed_form finite thermo")
concurrenceMethod = Enum("ConcurrenceMethod", "closed_form wootters")
axes = Enum("Axes", "z n")

SIGMA_YY = np.kron(core.PAULI_Y, core.PAULI_Y)

# END GLOBAL VARIABLES


class RungDensity(object):
    """
    A 4x4 one-rung density matrix.

    :param matrix: the matrix in the |00>, |01>, |10>, |11> basis
    :param mode: the ``rhoMode`` it was obtained with
    :param params: (a, b, g, epsilon) when the model is spin-flip symmetric,
                   enabling the closed-form concurrence
    """

    def __init__(self, matrix, mode, params=None):
        self.matrix = np.asarray(matrix)
        self.mode = mode
        self.params = params
        self.eigenvalues = scipy.linalg.eigvalsh(self.matrix)

    def __str__(self):
        return 'RungDensity (%s) eigenvalues %s' % (
            self.mode.name, ', '.join('%.6g' % e for e in self.eigenvalues))

    @property
    def Q(self):
        if self.params is None:
            return None
        return 2.0 * (self.params['a'] ** 2 + self.params['b'] ** 2 + abs(self.params['g']))

    def trace(self):
        return np.trace(self.matrix).real

    def expectation(self, op):
        return np.trace(self.matrix.dot(getattr(op, 'matrix', op))).real


class EntanglementReport(object):

    def __init__(self, entropy_bits, concurrence, s2_expectation):
        self.entropy_bits = entropy_bits
        self.concurrence = concurrence
        self.s2_expectation = s2_expectation

    def as_dict(self):
        return {'S_bits': self.entropy_bits, 'C': self.concurrence, 's2': self.s2_expectation}


class CorrelationReport(object):
    """
    x = g/(a^2+b^2), mu_t = 2|ab|/(a^2+b^2), the correlation lengths along z
    and in the plane, and the intra-rung correlators.
    """

    def __init__(self, x, mu_t, xi_z, xi_n, zz, nn):
        self.x = x
        self.mu_t = mu_t
        self.xi_z = xi_z
        self.xi_n = xi_n
        self.zz = zz
        self.nn = nn

    def as_dict(self):
        return {'x': self.x, 'mu_t': self.mu_t, 'xi_z': self.xi_z, 'xi_n': self.xi_n,
                'zz': self.zz, 'nn': self.nn}


class ClassReport(object):
    """
    Closed-form summary of a class A or class B model.
    """

    def __init__(self, family, params, entropy_bits, concurrence, zz, nn, xi_z, xi_n,
                 degenerate_top=False):
        self.family = family
        self.params = params
        self.entropy_bits = entropy_bits
        self.concurrence = concurrence
        self.zz = zz
        self.nn = nn
        self.xi_z = xi_z
        self.xi_n = xi_n
        self.degenerate_top = degenerate_top

    def __str__(self):
        return 'ClassReport %s %s: S=%.6g C=%.6g zz=%.6g nn=%.6g xi_z=%.6g xi_n=%.6g' % (
            self.family, self.params, self.entropy_bits, self.concurrence,
            self.zz, self.nn, self.xi_z, self.xi_n)

    def as_dict(self):
        record = {'family': self.family}
        record.update(self.params)
        record.update({'S_bits': self.entropy_bits, 'C': self.concurrence, 'zz': self.zz,
                       'nn': self.nn, 'xi_z': self.xi_z, 'xi_n': self.xi_n,
                       'degenerate_top': self.degenerate_top})
        return record


def _spin_flip_params(mps, what):
    if not mps.is_spin_flip():
        raise FamilyMismatchError("%s needs a spin-flip symmetric model, got %s" % (what, mps))
    p = mps.params
    return {'a': p['a'], 'b': p['b'], 'g': p['g'], 'epsilon': p['epsilon']}


def rung_spectrum(mps):
    """
    Closed-form eigenvalues |g|/Q, |g|/Q, (a-b)^2/Q, (a+b)^2/Q of the rung matrix.
    """
    p = _spin_flip_params(mps, 'rung_spectrum')
    a, b, g = p['a'], p['b'], abs(p['g'])
    q = 2.0 * (a * a + b * b + g)
    return np.array([g / q, g / q, (a - b) ** 2 / q, (a + b) ** 2 / q])


def block_density(mps, k, n=None, transfer=None):
    """
    Reduced density matrix of ``k`` consecutive rungs.

    With ``n`` given it is the exact N-rung contraction
    tr((A*_J (x) A_I) E^(N-k)) / tr(E^N); without it, the thermodynamic limit
    <l|A*_J (x) A_I|r> / lambda_max^k.

    :return: a 4^k x 4^k matrix indexed by rung configurations
    """
    transfer = transfer or core.transfer_matrix(mps)
    d = mps.bond_dim
    products = mps.matrices
    for _ in range(k - 1):
        products = np.einsum('pab,ibc->piac', products, mps.matrices).reshape(-1, d, d)

    if n is not None:
        assert n >= k, "block of %d rungs on a %d-rung ladder" % (k, n)
        scale = transfer.scale
        rest = transfer.spectrum.power(n - k, scale).reshape(d, d, d, d)
        rho = np.einsum('jac,ibd,cdab->ij', products.conj(), products, rest)
        rho = rho / (scale ** k * transfer.spectrum.power_trace(n, scale))
    else:
        if transfer.degenerate_top:
            raise DegenerateSpectrumError('thermodynamic block density')
        spectrum = transfer.spectrum
        left = spectrum.left[0].reshape(d, d)
        right = spectrum.right[:, 0].reshape(d, d)
        rho = np.einsum('ab,jac,ibd,cd->ij', left, products.conj(), products, right)
        rho = rho / spectrum.top ** k

    if not np.any(np.abs(np.imag(rho)) > 1e-13):
        rho = np.real(rho)
    return rho


def rung_density(mps, mode=rhoMode.closed_form, n=None):
    """
    The one-rung reduced density matrix.

    :param mode: closed_form (spin-flip models), finite (needs ``n``) or thermo
    :return: a RungDensity
    """
    params = _spin_flip_params(mps, 'rung_density') if mps.is_spin_flip() else None
    if mode == rhoMode.closed_form:
        if params is None:
            raise FamilyMismatchError("closed-form rho needs a spin-flip model, got %s" % mps)
        a, b, g, eps = params['a'], params['b'], abs(params['g']), params['epsilon']
        s = a * a + b * b
        matrix = np.array([[g, 0, 0, 0],
                           [0, s, 2 * eps * a * b, 0],
                           [0, 2 * eps * a * b, s, 0],
                           [0, 0, 0, g]]) / (2.0 * (s + g))
    elif mode == rhoMode.finite:
        assert n is not None, "finite mode needs N"
        matrix = block_density(mps, 1, n)
    elif mode == rhoMode.thermo:
        matrix = block_density(mps, 1)
    else:
        raise NotImplementedError("Can't build rho: unknown mode")
    rho = RungDensity(matrix, mode, params)
    logging.debug("%s" % rho)
    return rho


def entropy(rho):
    """
    Von Neumann entropy -sum alpha log2 alpha, with 0 log 0 = 0.
    """
    alphas = np.clip(rho.eigenvalues, 0.0, None)
    alphas = alphas[alphas > 0]
    return float(-np.sum(alphas * np.log2(alphas)))


def _psd_sqrt(matrix):
    weights, vectors = scipy.linalg.eigh(matrix)
    return (vectors * np.sqrt(np.clip(weights, 0.0, None))).dot(vectors.conj().T)


def _wootters(matrix):
    # singular values of sqrt(rho) sqrt(rho~) are the square roots of eig(rho rho~)
    root = _psd_sqrt(matrix)
    flipped = SIGMA_YY.dot(root.conj()).dot(SIGMA_YY)
    roots = scipy.linalg.svdvals(root.dot(flipped))
    return max(0.0, roots[0] - roots[1] - roots[2] - roots[3])


def concurrence(rho, method=concurrenceMethod.closed_form):
    """
    Concurrence between the two spins of a rung.

    :param rho: a RungDensity; the closed form needs its spin-flip parameters
    :param method: closed_form, max(0, (2|ab|-|g|)/(a^2+b^2+|g|)), or wootters,
                   the two-qubit formula on the eigenvalues of rho (sy sy) rho* (sy sy)
    """
    if method == concurrenceMethod.wootters:
        return float(_wootters(rho.matrix))
    elif method == concurrenceMethod.closed_form:
        if rho.params is None:
            raise FamilyMismatchError("closed-form concurrence needs a spin-flip model")
        a, b, g = rho.params['a'], rho.params['b'], abs(rho.params['g'])
        return max(0.0, (2 * abs(a * b) - g) / (a * a + b * b + g))
    else:
        raise NotImplementedError("Can't compute concurrence: unknown method")


def intra_rung(mps):
    """
    Closed-form <sz sz>, <sn sn> (any in-plane n) and <S^2> on one rung.
    """
    p = _spin_flip_params(mps, 'intra_rung')
    a, b, g, eps = p['a'], p['b'], abs(p['g']), p['epsilon']
    s = a * a + b * b
    return {'zz': (g - s) / (g + s),
            'nn': 2 * eps * a * b / (g + s),
            's2': ((a + eps * b) ** 2 + 2 * g) / (s + g)}


def intra_rung_numeric(rho, theta=0.0):
    return {'zz': rho.expectation(core.rung_operator('zz')),
            'nn': rho.expectation(core.rung_operator('nn', theta)),
            's2': rho.expectation(core.rung_operator('S2'))}


def entanglement_report(mps):
    rho = rung_density(mps)
    return EntanglementReport(entropy(rho), concurrence(rho), intra_rung(mps)['s2'])


def distance_correlator(mps, axis, r):
    """
    Closed-form <S_1 S_r> along z or along an in-plane direction.

    z:      -g^2 (a^2+b^2-|g|)^(r-2) / (a^2+b^2+|g|)^r
    plane:  (sgn g + eps)(a + sgn(g) b)^2 (|g|/2) (2ab)^(r-2) / (a^2+b^2+|g|)^r

    :param axis: ``axes.z`` or ``axes.n`` (or their names)
    :param r: position of the second rung, r >= 2
    """
    assert r >= 2, "r must be at least 2"
    p = _spin_flip_params(mps, 'distance_correlator')
    a, b, g, eps = p['a'], p['b'], p['g'], p['epsilon']
    if g == 0:
        raise DegenerateSpectrumError('distance_correlator')
    if not isinstance(axis, axes):
        try:
            axis = axes[axis]
        except KeyError:
            raise NotImplementedError("Can't correlate along %r: unknown axis" % (axis,))
    s = a * a + b * b
    top = s + abs(g)
    if axis == axes.z:
        return -g * g * (s - abs(g)) ** (r - 2) / top ** r
    sign = np.sign(g)
    return (sign + eps) * (a + sign * b) ** 2 * (abs(g) / 2.0) * (2 * a * b) ** (r - 2) / top ** r


def _inverse_log_length(ratio):
    if ratio == 1:
        return float('inf')
    if np.isinf(ratio):
        return 0.0
    return 1.0 / np.log(ratio)


def _length(numerator, denominator):
    if denominator == 0:
        return 0.0
    return _inverse_log_length(numerator / denominator)


def correlation_report(mps):
    """
    x, mu_t, xi_z = 1/ln((1+|x|)/|1-|x||), xi_n = 1/ln((1+|x|)/mu_t) and the
    intra-rung correlators of a spin-flip model.
    """
    p = _spin_flip_params(mps, 'correlation_report')
    a, b, g = p['a'], p['b'], p['g']
    s = a * a + b * b
    x = g / s
    mu_t = 2 * abs(a * b) / s
    intra = intra_rung(mps)
    return CorrelationReport(x, mu_t, _length(1 + abs(x), abs(1 - abs(x))),
                             _length(1 + abs(x), mu_t), intra['zz'], intra['nn'])


def _xlog2x(value):
    return value * np.log2(value) if value > 0 else 0.0


def class_report(family, x=None, epsilon=1, sigma=1, u=None):
    """
    Closed forms of one class member.

    Class A is parametrized by x = g/(2a^2) and the signs; class B by u.

    :param family: 'A' or 'B'
    :return: a ClassReport
    """
    if family == 'A':
        ax = abs(x)
        concurrence_a = max(0.0, (1 - ax) / (1 + ax))
        entropy_a = 0.0 if ax == 0 else \
            (ax / (1 + ax)) * (1 - np.log2(ax)) + np.log2(1 + ax)
        return ClassReport('A', {'x': x, 'epsilon': epsilon, 'sigma': sigma},
                           float(entropy_a), concurrence_a,
                           (ax - 1) / (ax + 1), epsilon * sigma / (ax + 1),
                           _length(1 + ax, abs(1 - ax)), _length(1 + ax, 1.0),
                           degenerate_top=(x == 0))
    elif family == 'B':
        u2 = u * u
        concurrence_b = max(0.0, (u2 - 3) / (u2 + 3))
        entropy_b = np.log2(u2 + 3) - _xlog2x(u2) / (u2 + 3)
        xi = _length(u2 + 3, abs(u2 - 1))
        correlator = (1 - u2) / (3 + u2)
        return ClassReport('B', {'u': u}, float(entropy_b), concurrence_b,
                           correlator, correlator, xi, xi)
    else:
        raise NotImplementedError("Can't report on class %r: unknown family" % (family,))
