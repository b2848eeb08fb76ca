"""
Brute-force dense states: every amplitude of a periodic N-rung ladder MPS,
written out explicitly and used as independent ground truth.

Amplitudes are indexed by the base-4 rung configuration, first rung most
significant, leg-1 bit high within each rung.
"""
import itertools
import logging
import struct
from enum import Enum
from pathlib import Path

import numpy as np

from mps.errors import OracleSizeError, SpecificationError
from utils import numerics

# GLOBAL VARIABLES

MAX_RUNGS = 10
MAX_DENSE_PROJECTOR_RUNGS = 5
HEADER = struct.Struct('<Q')

UP_RUNG = 1      # |01>
DOWN_RUNG = 2    # |10>
T_PLUS_RUNG = 0  # |00>
T_MINUS_RUNG = 3  # |11>

ghzForm = Enum("GhzForm", "uniform staggered")

# END GLOBAL VARIABLES


class DenseState(object):
    """
    An explicit 4^N amplitude vector of an N-rung ladder.
    """

    def __init__(self, n, amplitudes):
        amplitudes = np.asarray(amplitudes)
        assert amplitudes.shape == (4 ** n,), \
            "a %d-rung state needs %d amplitudes" % (n, 4 ** n)
        self.n = n
        self.amplitudes = amplitudes

    def __str__(self):
        return 'DenseState N=%d norm=%.6g' % (self.n, self.norm())

    def norm(self):
        return np.linalg.norm(self.amplitudes)

    def norm2(self):
        return np.vdot(self.amplitudes, self.amplitudes).real

    def normalized(self):
        norm = self.norm()
        assert norm > 0, "can't normalize a zero state"
        return DenseState(self.n, self.amplitudes / norm)

    def tensor(self):
        return self.amplitudes.reshape([4] * self.n)


def _check_size(what, n, limit=MAX_RUNGS):
    if n > limit:
        raise OracleSizeError(what, n, limit)


def build_state(mps, n):
    """
    Dense amplitudes tr(A_{i1} ... A_{iN}) of a ladder MPS.

    Prefix products are cached, so one D x D product is formed per prefix.

    :param mps: a LadderMPS
    :param n: the number of rungs, at most MAX_RUNGS
    :return: an unnormalized DenseState
    """
    assert n >= 1, "N must be positive"
    _check_size('build_state', n)
    matrices = mps.matrices
    prefixes = matrices
    for _ in range(n - 1):
        prefixes = np.einsum('pab,ibc->piac', prefixes, matrices).reshape(
            -1, mps.bond_dim, mps.bond_dim)
    amplitudes = np.trace(prefixes, axis1=1, axis2=2)
    if not np.any(np.asarray(amplitudes).imag):
        amplitudes = np.real(amplitudes)
    state = DenseState(n, amplitudes)
    logging.debug("Built %s for %s" % (state, mps))
    return state


def spin_flip(state):
    """
    Flips all 2N spins: rung label i goes to 3 - i.
    """
    flipped = state.tensor()[(slice(None, None, -1),) * state.n]
    return DenseState(state.n, flipped.reshape(-1))


def apply_rung_operator(state, op, k):
    """
    Applies a 4x4 operator on rung ``k`` (1-based).
    """
    if not 1 <= k <= state.n:
        raise IndexError("rung %d outside 1..%d" % (k, state.n))
    matrix = getattr(op, 'matrix', op)
    tensor = np.tensordot(matrix, state.tensor(), axes=([1], [k - 1]))
    return DenseState(state.n, np.moveaxis(tensor, 0, k - 1).reshape(-1))


def expectation(state, placement):
    """
    <psi| prod_k O_k |psi> / <psi|psi>.

    The operator and its placement travel together: <O_k> for one operator
    on rung k is ``expectation(state, {k: op})``, and a two-point function
    is ``expectation(state, {1: op, r: op})``.

    :param state: a DenseState
    :param placement: a mapping from rung index (1-based) to the operator
                      placed there (a RungOperator or a 4x4 matrix)
    :return: the expectation value
    """
    applied = state
    for k, op in placement.items():
        applied = apply_rung_operator(applied, op, k)
    value = np.vdot(state.amplitudes, applied.amplitudes) / state.norm2()
    return value.real if abs(value.imag) < 1e-12 * max(abs(value), 1.0) else value


def reduced(state, k):
    """
    One-rung reduced density matrix of rung ``k`` (1-based).
    """
    if not 1 <= k <= state.n:
        raise IndexError("rung %d outside 1..%d" % (k, state.n))
    block = np.moveaxis(state.tensor(), k - 1, 0).reshape(4, -1)
    return block.dot(block.conj().T) / state.norm2()


def reduced_block(state, rungs):
    """
    Reduced density matrix of several rungs (0-based), by a full partial trace
    of the dense projector; meant for N <= 5.
    """
    _check_size('reduced_block', state.n, MAX_DENSE_PROJECTOR_RUNGS)
    psi = state.amplitudes / state.norm()
    return numerics.partial_trace(np.outer(psi, psi.conj()), rungs, 4)


def overlap(first, second):
    """
    |<first|second>| between normalized versions of the two states.
    """
    assert first.n == second.n, "states on different ladders"
    return abs(np.vdot(first.amplitudes, second.amplitudes)) / (first.norm() * second.norm())


def hamiltonian_residual(hamiltonian, state):
    """
    ||H psi|| / ||psi|| for a dense 4^N x 4^N Hamiltonian.
    """
    hamiltonian = np.asarray(hamiltonian)
    assert hamiltonian.shape == (state.amplitudes.size,) * 2, "Hamiltonian and state disagree on N"
    return np.linalg.norm(hamiltonian.dot(state.amplitudes)) / state.norm()


def frustration_residual(h, state):
    """
    ||sum_l h_{l,l+1} psi|| / ||psi|| with periodic wrap, applied rung pair by
    rung pair without forming the global matrix.

    :param h: the 16x16 two-rung term (a LocalHamiltonian or a matrix)
    """
    matrix = np.asarray(getattr(h, 'h', h))
    assert matrix.shape == (16, 16), "the local term acts on two rungs"
    n = state.n
    assert n >= 2, "a two-rung term needs N >= 2"
    tensor = state.tensor()
    total = np.zeros_like(tensor, dtype=np.result_type(tensor, matrix))
    for l in range(n):
        pair = (l, (l + 1) % n)
        moved = np.moveaxis(tensor, pair, (0, 1))
        shape = moved.shape
        acted = matrix.dot(moved.reshape(16, -1)).reshape(shape)
        total += np.moveaxis(acted, (0, 1), pair)
    return np.linalg.norm(total) / state.norm()


def g_zero_state(a, b, epsilon, n):
    """
    The g = 0 state sum_k [a^k (eps b)^(N-k) + b^k (eps a)^(N-k)] |u^k d^(N-k)>,
    where |u^k d^(N-k)> is the unnormalized sum of all configurations with k
    rungs in |01> and N-k in |10>.
    """
    _check_size('g_zero_state', n)
    amplitudes = np.zeros(4 ** n)
    weights = 4 ** np.arange(n - 1, -1, -1)
    for config in itertools.product((UP_RUNG, DOWN_RUNG), repeat=n):
        k = config.count(UP_RUNG)
        amplitudes[np.dot(config, weights)] = a ** k * (epsilon * b) ** (n - k) \
            + b ** k * (epsilon * a) ** (n - k)
    return DenseState(n, amplitudes)


def g_zero_norm(a, b, n):
    return 2.0 * ((a * a + b * b) ** n + (2.0 * a * b) ** n)


def ghz_state(n, form=None):
    """
    A two-configuration cat state of N rungs.

    ``ghzForm.uniform`` (the default) is (|t1 ... t1> + |t-1 ... t-1>)/sqrt(2)
    for any N. ``ghzForm.staggered`` is the equal superposition of
    |t1 t-1 t1 ...> and |t-1 t1 t-1 ...>, the large-|g| limit of the family,
    whose states carry zero total Tz; it exists for even N only.

    :raises SpecificationError: for the staggered form at odd N
    """
    form = form or ghzForm.uniform
    _check_size('ghz_state', n)
    if form == ghzForm.uniform:
        first = np.full(n, T_PLUS_RUNG)
        second = np.full(n, T_MINUS_RUNG)
    elif form == ghzForm.staggered:
        if n % 2:
            raise SpecificationError("the staggered cat state needs an even number of rungs, got N=%d" % n)
        first = np.array([T_PLUS_RUNG, T_MINUS_RUNG] * (n // 2))
        second = first[::-1]
    else:
        raise NotImplementedError("Can't build a cat state: unknown form")
    weights = 4 ** np.arange(n - 1, -1, -1)
    amplitudes = np.zeros(4 ** n)
    amplitudes[np.dot(first, weights)] = 1 / np.sqrt(2)
    amplitudes[np.dot(second, weights)] = 1 / np.sqrt(2)
    return DenseState(n, amplitudes)


def ghz_overlap(mps, n, form=None):
    """
    |<cat|psi>| on normalized states; compares against the staggered form by
    default, the only cat state the family approaches.
    """
    return overlap(ghz_state(n, form or ghzForm.staggered), build_state(mps, n))


def write_state(state, path):
    """
    Binary dump: little-endian uint64 N, then the 4^N amplitudes as float64.
    """
    amplitudes = np.asarray(state.amplitudes)
    assert not np.any(np.abs(np.imag(amplitudes)) > 1e-14), "only real states can be dumped"
    path = Path(path)
    with path.open('wb') as f:
        f.write(HEADER.pack(state.n))
        f.write(np.real(amplitudes).astype('<f8').tobytes())
    logging.info("Wrote %s to %s" % (state, path))
    return path


def read_state(path):
    data = Path(path).read_bytes()
    (n,) = HEADER.unpack_from(data)
    amplitudes = np.frombuffer(data, dtype='<f8', offset=HEADER.size)
    return DenseState(n, amplitudes.copy())
