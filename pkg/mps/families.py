"""
Symmetry-constrained ladder families and the witness matrices that certify
each symmetry.

All builders fix the gauge A11 = [[0, 0], [1, 0]].
"""
import logging
from enum import Enum

import numpy as np
import scipy.linalg

from eval import oracle
from mps import core
from mps.core import LadderMPS, families
from mps.errors import DegenerateFamilyError, FamilyMismatchError

# GLOBAL VARIABLES

WITNESS_TOL = 1e-12
FLIP_CHECK_RUNGS = 4

symmetries = Enum("Symmetries", "Tz spin_flip leg_exchange parity su2")

T_Z = 0.5 * np.diag([1.0, -1.0])
T_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]])
T_MINUS = T_PLUS.T
FLIP = (1, 0, 3, 2)     # position of the spin-flipped partner: 00<->11, 01<->10
SWAP = (0, 2, 1, 3)     # position of the leg-exchanged partner: 01<->10

# END GLOBAL VARIABLES


class SymmetryWitness(object):
    """
    Outcome of checking one symmetry with an explicit witness.

    :param kind: a ``symmetries`` member
    :param matrices: the witness matrices by name
    :param residual: largest entrywise defect over the defining equations
    :param method: 'conjugation' or 'state' (g = 0 spin flip)
    """

    def __init__(self, kind, matrices, residual, method='conjugation'):
        self.kind = kind
        self.matrices = matrices
        self.residual = float(residual)
        self.method = method

    def __str__(self):
        return 'SymmetryWitness %s: residual %.3e (%s)' % (
            self.kind.name, self.residual, 'pass' if self.passed else 'fail')

    @property
    def passed(self):
        return self.residual <= WITNESS_TOL


def _so2_matrices(a, b, a_prime, b_prime, g):
    return [np.array([[0.0, g], [0.0, 0.0]]),
            np.diag([a, b]).astype(float),
            np.diag([a_prime, b_prime]).astype(float),
            np.array([[0.0, 0.0], [1.0, 0.0]])]


def _check_sign(name, value):
    assert value in (1, -1), "%s must be +1 or -1, got %r" % (name, value)


def build_so2(a, b, a_prime, b_prime, g):
    """
    The SO(2)-symmetric ansatz: A00 = [[0, g], [0, 0]], A01 = diag(a, b),
    A10 = diag(a', b'), A11 = [[0, 0], [1, 0]].
    """
    if g == 0:
        logging.warning("g=0: the SO(2) ansatz reduces to commuting diagonal matrices; "
                        "correlations are trivial (a=%g b=%g a'=%g b'=%g)" % (a, b, a_prime, b_prime))
    params = {'a': a, 'b': b, 'a_prime': a_prime, 'b_prime': b_prime, 'g': g}
    return LadderMPS(_so2_matrices(a, b, a_prime, b_prime, g), families.general_so2, params)


def _retag(mps, family, **extra):
    mps.family = family
    mps.params.update(extra)
    return mps


def build_spin_flip(a, b, g, epsilon):
    """
    Spin-flip symmetric models: a' = eps*b, b' = eps*a.
    """
    _check_sign('epsilon', epsilon)
    mps = build_so2(a, b, epsilon * b, epsilon * a, g)
    return _retag(mps, families.spin_flip, epsilon=epsilon)


def build_leg_exchange(a, b, g, eta):
    """
    Leg-exchange symmetric models: a' = eta*a, b' = eta*b.
    """
    _check_sign('eta', eta)
    mps = build_so2(a, b, eta * a, eta * b, g)
    return _retag(mps, families.leg_exchange, eta=eta)


def build_parity(a, a_prime, g, sigma):
    """
    Parity symmetric models: b = sigma*a, b' = sigma*a'.
    """
    _check_sign('sigma', sigma)
    mps = build_so2(a, sigma * a, a_prime, sigma * a_prime, g)
    return _retag(mps, families.parity, sigma=sigma)


def build_class_a(a, g, epsilon, sigma):
    """
    Class A: SO(2) plus spin flip, leg exchange and parity.

    A01 = diag(a, sigma*a), A10 = diag(eps*sigma*a, eps*a) and eta = eps*sigma.

    :return: a LadderMPS whose parameters include x = g / (2 a^2)
    """
    _check_sign('epsilon', epsilon)
    _check_sign('sigma', sigma)
    if a == 0:
        raise DegenerateFamilyError("class A needs a != 0")
    mps = build_so2(a, sigma * a, epsilon * sigma * a, epsilon * a, g)
    return _retag(mps, families.class_a, epsilon=epsilon, sigma=sigma,
                  eta=epsilon * sigma, x=g / (2.0 * a * a))


def build_class_b(u):
    """
    Class B: the one-parameter family with full rotational symmetry.

    a = (u+1)/2, a' = (1-u)/2, b = (u-1)/2, b' = -(1+u)/2, g = -1. The sign
    parameters stored are those of the u = 0 point, where the model coincides
    with class A (1/2, -1, -1, -1).
    """
    mps = build_so2((u + 1) / 2.0, (u - 1) / 2.0, (1 - u) / 2.0, -(1 + u) / 2.0, -1.0)
    return _retag(mps, families.class_b, u=u, epsilon=-1, sigma=-1, eta=1)


def _defect(lhs, rhs, scale):
    return np.max(np.abs(np.asarray(lhs) - np.asarray(rhs))) / scale


def _scale(mps):
    return max(1.0, np.max(np.abs(mps.matrices)))


def _sign_param(mps, name, sign):
    if sign is not None:
        return sign
    value = mps.param(name)
    if value is None:
        raise FamilyMismatchError("%s carries no %s parameter; pass it explicitly" % (mps, name))
    return value


def _check_tz(mps):
    a, scale = mps.matrices, _scale(mps)
    commutator = [T_Z.dot(m) - m.dot(T_Z) for m in a]
    residual = max(_defect(commutator[0], a[0], scale),
                   _defect(commutator[3], -a[3], scale),
                   _defect(commutator[1], 0, scale),
                   _defect(commutator[2], 0, scale))
    return SymmetryWitness(symmetries.Tz, {'T_z': T_Z}, residual)


def _flipped_state_residual(mps, epsilon, n=FLIP_CHECK_RUNGS):
    state = oracle.build_state(mps, n)
    flipped = oracle.spin_flip(state)
    scale = max(np.max(np.abs(state.amplitudes)), 1e-300)
    return np.max(np.abs(flipped.amplitudes - epsilon ** n * state.amplitudes)) / scale


def _check_spin_flip(mps, epsilon):
    g = mps.A00[0, 1]
    x = np.array([[0.0, g], [epsilon, 0.0]])
    if g == 0:
        residual = _flipped_state_residual(mps, epsilon)
        return SymmetryWitness(symmetries.spin_flip, {'X': x}, residual, method='state')
    scale = _scale(mps)
    x_inv = scipy.linalg.inv(x)
    residual = max(_defect(x.dot(mps.matrices[i]).dot(x_inv), epsilon * mps.matrices[FLIP[i]], scale)
                   for i in range(4))
    return SymmetryWitness(symmetries.spin_flip, {'X': x}, residual)


def _check_leg_exchange(mps, eta):
    y = np.diag([1.0, eta])
    y_inv = np.diag([1.0, 1.0 / eta])
    scale = _scale(mps)
    residual = max(_defect(y.dot(mps.matrices[i]).dot(y_inv), eta * mps.matrices[SWAP[i]], scale)
                   for i in range(4))
    return SymmetryWitness(symmetries.leg_exchange, {'Y': y}, residual)


def _check_parity(mps, sigma):
    pi = np.array([[0.0, 1.0], [sigma, 0.0]])
    pi_inv = np.array([[0.0, sigma], [1.0, 0.0]])
    scale = _scale(mps)
    residual = max(_defect(pi.dot(m).dot(pi_inv), sigma * m.T, scale) for m in mps.matrices)
    return SymmetryWitness(symmetries.parity, {'Pi': pi}, residual)


def spin_multiplet_matrices(mps):
    """
    The spin-1 and spin-0 combinations B11, B10, B1-1 and B00 of the rung matrices.
    """
    root = np.sqrt(2.0)
    return {(1, 1): mps.A00,
            (1, 0): (mps.A01 + mps.A10) / root,
            (1, -1): mps.A11,
            (0, 0): (mps.A01 - mps.A10) / root}


def _check_su2(mps):
    b = spin_multiplet_matrices(mps)
    scale = _scale(mps)
    generators = {'T_x': 0.5 * core.PAULI_X.real, 'T_y': 0.5 * core.PAULI_Y,
                  'T_z': T_Z}
    defects = [_defect(t.dot(b[(0, 0)]) - b[(0, 0)].dot(t), 0, scale) for t in generators.values()]
    for m in (1, 0, -1):
        commutator = T_Z.dot(b[(1, m)]) - b[(1, m)].dot(T_Z)
        defects.append(_defect(commutator, m * b[(1, m)], scale))
        for step, ladder in ((1, T_PLUS), (-1, T_MINUS)):
            coefficient = np.sqrt(2 - m * (m + step))
            target = coefficient * b[(1, m + step)] if abs(m + step) <= 1 else 0
            commutator = ladder.dot(b[(1, m)]) - b[(1, m)].dot(ladder)
            defects.append(_defect(commutator, target, scale))
    return SymmetryWitness(symmetries.su2, generators, max(defects))


def verify_symmetry(mps, kind, sign=None):
    """
    Checks one symmetry of ``mps`` with the explicit witness for that symmetry.

    :param mps: a LadderMPS in the gauge A11 = [[0, 0], [1, 0]]
    :param kind: a ``symmetries`` member or its name
    :param sign: epsilon, eta or sigma for the discrete symmetries; defaults to
                 the model parameter of that name
    :return: a SymmetryWitness
    """
    if not isinstance(kind, symmetries):
        try:
            kind = symmetries[kind]
        except KeyError:
            raise NotImplementedError("Can't verify symmetry %r: unknown kind" % (kind,))

    if kind == symmetries.Tz:
        witness = _check_tz(mps)
    elif kind == symmetries.spin_flip:
        witness = _check_spin_flip(mps, _sign_param(mps, 'epsilon', sign))
    elif kind == symmetries.leg_exchange:
        witness = _check_leg_exchange(mps, _sign_param(mps, 'eta', sign))
    elif kind == symmetries.parity:
        witness = _check_parity(mps, _sign_param(mps, 'sigma', sign))
    else:
        witness = _check_su2(mps)

    logging.debug("%s for %s" % (witness, mps))
    return witness


def rung_rotation(theta, axis):
    """
    U (x) U with U = exp(-i theta n.sigma / 2) for the unit vector along ``axis``.
    """
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    generator = n[0] * core.PAULI_X + n[1] * core.PAULI_Y + n[2] * core.PAULI_Z
    u = scipy.linalg.expm(-0.5j * theta * generator)
    return np.kron(u, u)


def rotation_residual(mps, theta, axis, n=FLIP_CHECK_RUNGS):
    """
    Applies the rung rotation as A'_i = sum_j R_ij A_j and measures how far the
    transfer matrix and the N-rung state move.

    :return: max of ||E(A') - E(A)|| and ||R^N psi - psi|| / ||psi||
    """
    rotation = rung_rotation(theta, axis)
    rotated = LadderMPS(np.einsum('ij,jab->iab', rotation, mps.matrices), mps.family, mps.params)
    transfer_change = np.max(np.abs(core.transfer_matrix(rotated).matrix
                                    - core.transfer_matrix(mps).matrix))
    before = oracle.build_state(mps, n)
    after = oracle.build_state(rotated, n)
    state_change = np.linalg.norm(after.amplitudes - before.amplitudes) / before.norm()
    return max(transfer_change, state_change)
