"""
Translationally invariant matrix product states on a two-leg spin-1/2 ladder.

A rung carries the local basis |00>, |01>, |10>, |11> (first index on leg 1,
0 meaning spin up), so a ladder state is a periodic MPS with d = 4 and one
D x D matrix per rung label.
"""
import logging
from enum import Enum

import numpy as np

from mps.errors import DegenerateSpectrumError, DegenerateStateError
from utils import numerics

# GLOBAL VARIABLES

RUNG_LABELS = ('00', '01', '10', '11')
ELEMENT_TOL = 1e-10     # smallest transfer matrix element counted as a coupling
INFINITE_TOL = 1e-12    # |lambda_1| within this of lambda_max means xi is infinite

families = Enum("Families", "general_so2 spin_flip leg_exchange parity class_a class_b custom")
correlatorMode = Enum("CorrelatorMode", "finite thermo")

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

# END GLOBAL VARIABLES


class LadderMPS(object):
    """
    The four rung matrices A00, A01, A10, A11 of a ladder MPS.

    :param matrices: a sequence of four D x D matrices ordered as RUNG_LABELS
    :param family: one of the ``families`` enum members
    :param params: the family parameters (a, b, a_prime, b_prime, g, epsilon,
                   sigma, eta, u as applicable)
    """

    def __init__(self, matrices, family=families.custom, params=None):
        matrices = np.array(matrices)
        assert matrices.ndim == 3 and matrices.shape[0] == 4 \
            and matrices.shape[1] == matrices.shape[2], \
            "a ladder MPS needs four square matrices of equal size"
        assert np.all(np.isfinite(matrices)), "rung matrices must be finite"
        if np.isrealobj(matrices) or not np.any(matrices.imag):
            matrices = matrices.real.astype(float)
        self.matrices = matrices
        self.family = family
        self.params = dict(params or {})

    def __str__(self):
        described = ', '.join('%s=%g' % (k, v) for k, v in sorted(self.params.items()))
        return 'LadderMPS %s (D=%d) %s' % (self.family.name, self.bond_dim, described)

    def __getitem__(self, label):
        return self.matrices[rung_index(label)]

    @property
    def bond_dim(self):
        return self.matrices.shape[1]

    @property
    def A00(self):
        return self.matrices[0]

    @property
    def A01(self):
        return self.matrices[1]

    @property
    def A10(self):
        return self.matrices[2]

    @property
    def A11(self):
        return self.matrices[3]

    def param(self, name, default=None):
        return self.params.get(name, default)

    def is_spin_flip(self):
        """
        True when the parameters satisfy a' = eps*b, b' = eps*a.
        """
        needed = ('a', 'b', 'a_prime', 'b_prime', 'g', 'epsilon')
        if any(name not in self.params for name in needed):
            return False
        p = self.params
        return np.isclose(p['a_prime'], p['epsilon'] * p['b']) \
            and np.isclose(p['b_prime'], p['epsilon'] * p['a'])


class TransferOperator(object):

    def __init__(self, matrix, spectrum):
        self.matrix = matrix
        self.spectrum = spectrum
        self.degenerate_top = spectrum.degenerate_top()

    def __str__(self):
        return 'TransferOperator %s%s' % (
            self.spectrum, ' (degenerate top)' if self.degenerate_top else '')

    @property
    def eigenvalues(self):
        return self.spectrum.eigenvalues

    @property
    def top(self):
        return self.spectrum.top

    @property
    def scale(self):
        top = abs(self.spectrum.top)
        return top if top > 0 else 1.0


class RungOperator(object):

    def __init__(self, name, matrix):
        matrix = np.asarray(matrix, dtype=complex)
        assert matrix.shape == (4, 4), "rung operators act on the 4-dim rung space"
        assert np.allclose(matrix, matrix.conj().T, atol=1e-14), \
            "rung operator %s is not Hermitian" % name
        self.name = name
        self.matrix = matrix

    def __str__(self):
        return 'RungOperator %s' % self.name


def rung_index(label):
    if isinstance(label, (int, np.integer)):
        assert 0 <= label < 4, "rung index out of range"
        return int(label)
    try:
        return RUNG_LABELS.index(str(label))
    except ValueError:
        raise NotImplementedError("Can't read rung label %r: unknown label" % (label,))


def _leg_operator(pauli, leg):
    if leg == 1:
        return np.kron(pauli, IDENTITY_2)
    return np.kron(IDENTITY_2, pauli)


def _in_plane(theta):
    return np.cos(theta) * PAULI_X + np.sin(theta) * PAULI_Y


def rung_operator(name, theta=0.0):
    """
    Builds a named one-rung observable in the |00>, |01>, |10>, |11> basis.

    Known names: identity, sx1, sx2, sy1, sy2, sz1, sz2, Sx, Sy, Sz, Sn (in-plane
    direction at angle ``theta``), S2 (total rung spin squared), zz and nn
    (intra-rung products along z and along the in-plane direction).

    :param name: the operator name
    :param theta: in-plane angle for Sn and nn
    :return: a RungOperator
    """
    single = {'x': PAULI_X, 'y': PAULI_Y, 'z': PAULI_Z}
    if name == 'identity':
        matrix = np.eye(4)
    elif len(name) == 3 and name[0] == 's' and name[1] in single and name[2] in '12':
        matrix = _leg_operator(single[name[1]], int(name[2]))
    elif name in ('Sx', 'Sy', 'Sz'):
        pauli = single[name[1]]
        matrix = 0.5 * (_leg_operator(pauli, 1) + _leg_operator(pauli, 2))
    elif name == 'Sn':
        pauli = _in_plane(theta)
        matrix = 0.5 * (_leg_operator(pauli, 1) + _leg_operator(pauli, 2))
        name = 'Sn(%g)' % theta
    elif name == 'S2':
        total = [0.5 * (_leg_operator(p, 1) + _leg_operator(p, 2))
                 for p in (PAULI_X, PAULI_Y, PAULI_Z)]
        matrix = sum(s.dot(s) for s in total)
    elif name == 'zz':
        matrix = np.kron(PAULI_Z, PAULI_Z)
    elif name == 'nn':
        pauli = _in_plane(theta)
        matrix = np.kron(pauli, pauli)
        name = 'nn(%g)' % theta
    else:
        raise NotImplementedError("Can't build rung operator %r: unknown label" % (name,))
    return RungOperator(name, matrix)


def transition_matrix(i, j, dim=4):
    """
    The matrix |j><i|; its expectation value is the density matrix element (i, j).
    """
    matrix = np.zeros((dim, dim))
    matrix[j, i] = 1.0
    return matrix


def _as_matrix(op):
    return op.matrix if isinstance(op, RungOperator) else np.asarray(op)


def transfer_matrix(mps):
    """
    E = sum_i conj(A_i) (x) A_i with its spectral data.
    """
    matrix = operator_transfer(mps, np.eye(4))
    if not np.any(np.asarray(matrix).imag):
        matrix = np.real(matrix)
    spectrum = numerics.eigen_decompose(matrix)
    transfer = TransferOperator(matrix, spectrum)
    logging.debug("Built %s for %s" % (transfer, mps))
    return transfer


def amplitude(mps, config, n):
    """
    Unnormalized amplitude tr(A_{i1} ... A_{iN}).

    :param mps: a LadderMPS
    :param config: the N rung labels (strings like '01' or indices 0..3)
    :param n: the number of rungs
    :return: the amplitude
    """
    assert n >= 1 and len(config) == n, "configuration length must equal N>=1"
    product = np.eye(mps.bond_dim)
    for label in config:
        product = product.dot(mps.matrices[rung_index(label)])
    return np.trace(product)


def partition_norm(mps, n, transfer=None):
    """
    Z = tr(E^N) as the N-th power sum of the transfer eigenvalues.
    """
    assert n >= 1, "N must be positive"
    transfer = transfer or transfer_matrix(mps)
    z = transfer.spectrum.power_trace(n)
    if abs(z.imag) > 1e-9 * max(abs(z), 1.0) or not z.real > 0:
        raise DegenerateStateError(z, n)
    return z.real


def operator_transfer(mps, op):
    """
    E_O = sum_ij <i|O|j> conj(A_i) (x) A_j.
    """
    o = _as_matrix(op)
    a = mps.matrices
    # einsum over rung labels, then the Kronecker index layout (alpha, beta) x (gamma, delta)
    block = np.einsum('ij,iac,jbd->abcd', o, a.conj(), a)
    dim = mps.bond_dim ** 2
    return block.reshape(dim, dim)


def _scaled_ratio(mps, transfer, operators, gaps, n):
    """
    tr(E_O1 E^g1 E_O2 E^g2 ...) / tr(E^N) with powers scaled by |lambda_max|.
    """
    scale = transfer.scale
    spectrum = transfer.spectrum
    product = np.eye(transfer.matrix.shape[0], dtype=complex)
    for op, gap in zip(operators, gaps):
        product = product.dot(operator_transfer(mps, op) / scale).dot(spectrum.power(gap, scale))
    z = spectrum.power_trace(n, scale)
    if not abs(z) > 0:
        raise DegenerateStateError(z, n)
    value = np.trace(product) / z
    return value.real if abs(value.imag) < 1e-12 * max(abs(value), 1.0) else value


def one_point(mps, op, k, n, transfer=None):
    """
    Finite-N expectation tr(E^{k-1} E_O E^{N-k}) / tr(E^N) on rung ``k``.

    Powers are evaluated spectrally; by cyclicity the value does not depend on k.
    """
    assert 1 <= k <= n, "site k=%d outside 1..%d" % (k, n)
    transfer = transfer or transfer_matrix(mps)
    return _scaled_ratio(mps, transfer, [op], [n - 1], n)


def _require_gap(transfer, operation):
    if transfer.degenerate_top:
        raise DegenerateSpectrumError(operation)


def one_point_thermo(mps, op, transfer=None):
    """
    Thermodynamic expectation <l|E_O|r> / lambda_max.
    """
    transfer = transfer or transfer_matrix(mps)
    _require_gap(transfer, 'one_point_thermo')
    spectrum = transfer.spectrum
    element = spectrum.left[0].dot(operator_transfer(mps, op)).dot(spectrum.right[:, 0])
    value = element / spectrum.top
    return value.real if abs(value.imag) < 1e-12 else value


def _channel_weights(mps, op, transfer):
    """
    <l_max|E_O|r_i><l_i|E_O|r_max> for every transfer eigenvector i.
    """
    spectrum = transfer.spectrum
    e_o = operator_transfer(mps, op)
    into = spectrum.left[0].dot(e_o).dot(spectrum.right)
    out = spectrum.left.dot(e_o).dot(spectrum.right[:, 0])
    return into * out


def two_point(mps, op, r, mode=correlatorMode.thermo, n=None, transfer=None):
    """
    Two-point function <O_1 O_r> between rung 1 and rung r.

    :param mps: a LadderMPS
    :param op: the observable placed on both rungs
    :param r: position of the second operator, r >= 2 (r = 2 means neighbours)
    :param mode: correlatorMode.finite (needs ``n``) or correlatorMode.thermo
    :param n: rung count for the finite mode
    :return: the correlator (not connected)
    """
    assert r >= 2, "r must be at least 2"
    transfer = transfer or transfer_matrix(mps)
    if mode == correlatorMode.finite:
        assert n is not None and r <= n, "finite mode needs r <= N"
        return _scaled_ratio(mps, transfer, [op, op], [r - 2, n - r], n)
    elif mode == correlatorMode.thermo:
        _require_gap(transfer, 'two_point')
        spectrum = transfer.spectrum
        ratios = (spectrum.eigenvalues / spectrum.top) ** (r - 2)
        value = np.sum(ratios * _channel_weights(mps, op, transfer)) / spectrum.top ** 2
        return value.real if abs(value.imag) < 1e-12 * max(abs(value), 1.0) else value
    else:
        raise NotImplementedError("Can't evaluate correlator: unknown mode")


def correlation_length(mps, op, transfer=None):
    """
    xi = 1 / ln(lambda_max / |lambda_1|) for the slowest channel coupled by ``op``.

    Eigenvalues equal within the degeneracy tolerance are grouped and their
    channel weights summed, so the result does not depend on the basis chosen
    inside a degenerate eigenspace.

    :return: the length in rung units, ``float('inf')`` when the channel is
             gapless, or None when ``op`` couples no subleading channel
    """
    transfer = transfer or transfer_matrix(mps)
    _require_gap(transfer, 'correlation_length')
    spectrum = transfer.spectrum
    weights = _channel_weights(mps, op, transfer)
    top = abs(spectrum.top)

    i = 1
    while i < len(spectrum):
        j = i
        while j + 1 < len(spectrum) and \
                abs(spectrum.eigenvalues[j + 1] - spectrum.eigenvalues[i]) <= numerics.DEGENERACY_TOL * top:
            j += 1
        weight = abs(np.sum(weights[i:j + 1]))
        if weight > ELEMENT_TOL * top ** 2:
            modulus = abs(spectrum.eigenvalues[i])
            if modulus >= top * (1 - INFINITE_TOL):
                return float('inf')
            if modulus == 0:
                return 0.0
            return 1.0 / np.log(top / modulus)
        i = j + 1
    logging.debug("No connected correlations for %s" % _as_name(op))
    return None


def _as_name(op):
    return op.name if isinstance(op, RungOperator) else 'matrix operator'
