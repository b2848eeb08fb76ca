"""
Frustration-free parent Hamiltonian of a class A ladder state.

The two-rung term h is a non-negative combination of projectors onto the
kernel of the constraint map c -> sum c_ijkl A_ij A_kl, written in the
multiplet basis |l, m> so that h keeps the symmetries of the state. Two-rung
kets |ijkl> put rung 1 (legs i, j) before rung 2 (legs k, l).
"""
import logging
from collections import OrderedDict

import numpy as np

from mps import core, families, observables
from mps.errors import NegativeWeightError, NullSpaceError, OracleSizeError
from utils import numerics

# GLOBAL VARIABLES

MEMBERSHIP_TOL = 1e-10
MAX_GLOBAL_RUNGS = 6

WEIGHT_LABELS = ('mu22', 'mu21', 'mu20', 'mu11', 'mu10', 'mu1p1', 'mu1p0', 'mu00')
MULTIPLET_WEIGHT = OrderedDict([
    ('2,2', 'mu22'), ('2,1', 'mu21'), ('2,0', 'mu20'),
    ('1,1', 'mu11'), ('1,0', 'mu10'),
    ("1',1", 'mu1p1'), ("1',0", 'mu1p0'),
    ('0,0', 'mu00'),
])

# END GLOBAL VARIABLES


def ket(bits):
    """
    The two-rung basis vector |ijkl> for a string such as '0110'.
    """
    vector = np.zeros(16)
    vector[int(bits, 2)] = 1.0
    return vector


def flip_all(vector):
    """
    sigma_x on all four sites: |ijkl> -> |(1-i)(1-j)(1-k)(1-l)>.
    """
    return np.asarray(vector)[::-1].copy()


def constraint_matrix(mps):
    """
    The D^2 x 16 matrix M[(alpha, beta), (ijkl)] = (A_ij A_kl)[alpha, beta].
    """
    assert mps.bond_dim == 2, "the two-rung construction is written for D=2"
    products = np.einsum('iab,jbc->ijac', mps.matrices, mps.matrices)
    return products.reshape(16, -1).T


class MultipletBasis(object):
    """
    The twelve kernel vectors |l, m> in the two-rung space.

    ``raw`` keeps the vectors with their printed prefactors, ``vectors`` the
    normalized ones; ``norms`` records the norm each raw vector had.
    """

    def __init__(self, raw, params):
        self.raw = raw
        self.params = params
        self.norms = OrderedDict((label, np.linalg.norm(v)) for label, v in raw.items())
        self.vectors = OrderedDict((label, v / self.norms[label]) for label, v in raw.items())

    def __str__(self):
        return 'MultipletBasis of %d vectors (a=%g g=%g eps=%d sigma=%d)' % (
            len(self.vectors), self.params['a'], self.params['g'],
            self.params['epsilon'], self.params['sigma'])

    def __len__(self):
        return len(self.vectors)

    @property
    def labels(self):
        return list(self.vectors.keys())

    def matrix(self):
        return np.column_stack(list(self.vectors.values()))

    def gram_defect(self):
        m = self.matrix()
        return np.max(np.abs(m.T.dot(m) - np.eye(m.shape[1])))


def _printed_multiplets(a, g, epsilon, sigma):
    e, se = epsilon, sigma * epsilon
    half = 0.5
    root2 = np.sqrt(2.0)
    return OrderedDict([
        ('2,2', ket('0000')),
        ('2,1', half * (-e * ket('0001') + ket('0010') - e * ket('0100') + ket('1000'))),
        ('2,0', (-4 * a * a * (ket('0011') + ket('1100'))
                 + g * (ket('0101') + se * ket('0110') + se * ket('1001') + ket('1010'))) / np.sqrt(6.0)),
        ('1,1', half * (e * ket('0001') + ket('0010') - e * ket('0100') - ket('1000'))),
        ('1,0', (ket('0110') - ket('1001')) / root2),
        ("1',1", half * (-se * ket('0001') + ket('0010') + e * ket('0100') - sigma * ket('1000'))),
        ("1',0", (ket('0101') - ket('1010')) / root2),
        ('0,0', half * (ket('0101') - se * ket('0110') - se * ket('1001') + ket('1010'))),
    ])


def multiplet_basis(a, g, epsilon, sigma, check=True):
    """
    Builds the multiplet vectors of the class A model (a, g, eps, sigma).

    The m < 0 partners are sigma_x^(x4) images of the m > 0 vectors.

    :param check: verify that every vector is annihilated by the constraint map
    :return: a MultipletBasis
    :raises NullSpaceError: naming the first vector outside the kernel
    """
    printed = _printed_multiplets(a, g, epsilon, sigma)
    raw = OrderedDict()
    for label, vector in printed.items():
        raw[label] = vector
        l, m = label.split(',')
        if m != '0':
            raw['%s,-%s' % (l, m)] = flip_all(vector)

    basis = MultipletBasis(raw, {'a': a, 'g': g, 'epsilon': epsilon, 'sigma': sigma})
    if check:
        constraint = constraint_matrix(families.build_class_a(a, g, epsilon, sigma))
        scale = max(1.0, np.max(np.abs(constraint)))
        for label, vector in basis.vectors.items():
            residual = np.max(np.abs(constraint.dot(vector))) / scale
            if residual > MEMBERSHIP_TOL:
                raise NullSpaceError(label, residual)
    logging.debug("Built %s" % basis)
    return basis


def nullspace_match(mps, basis):
    """
    Largest entry of P(span basis) - P(kernel of the constraint map).
    """
    kernel = numerics.null_space(constraint_matrix(mps))
    difference = numerics.span_projector(basis.matrix()) - kernel.dot(kernel.conj().T)
    return np.max(np.abs(difference))


def kernel_containment(mps, basis, n=None):
    """
    Largest ||rho_2 v|| over the multiplet vectors, rho_2 being the two-rung
    reduced density matrix (finite N when given, else thermodynamic).
    """
    rho2 = observables.block_density(mps, 2, n)
    return max(np.linalg.norm(rho2.dot(v)) for v in basis.vectors.values())


class WeightSet(object):
    """
    The eight non-negative projector weights mu_lm, one per multiplet row m >= 0.

    |l, m> and |l, -m> share a weight; m = 0 projectors enter once.
    """

    def __init__(self, **weights):
        unknown = set(weights) - set(WEIGHT_LABELS)
        if unknown:
            raise NotImplementedError("Can't set weights %s: unknown label" % sorted(unknown))
        self.values = OrderedDict((label, float(weights.get(label, 0.0))) for label in WEIGHT_LABELS)
        for label, value in self.values.items():
            if value < 0:
                raise NegativeWeightError(label, value)

    def __str__(self):
        return 'WeightSet(%s)' % ', '.join('%s=%g' % item for item in self.values.items())

    def __getitem__(self, label):
        return self.values[label]

    def as_dict(self):
        return dict(self.values)

    @classmethod
    def rotational(cls, mu, nu, xi, eta):
        """
        mu_2m = 6 mu, mu_1m = 2 nu, mu_1'm = 2 xi, mu_00 = 2 eta.
        """
        return cls(mu22=6 * mu, mu21=6 * mu, mu20=6 * mu, mu11=2 * nu, mu10=2 * nu,
                   mu1p1=2 * xi, mu1p0=2 * xi, mu00=2 * eta)

    @classmethod
    def random(cls, rng, low=0.0, high=1.0):
        return cls(**dict(zip(WEIGHT_LABELS, rng.uniform(low, high, len(WEIGHT_LABELS)))))


class LocalHamiltonian(object):

    def __init__(self, h, basis, weights):
        self.h = h
        self.basis = basis
        self.weights = weights

    def __str__(self):
        return 'LocalHamiltonian on %s with %s' % (self.basis, self.weights)

    def min_eigenvalue(self):
        return np.linalg.eigvalsh(self.h)[0]


def _weight_label(label):
    l, m = label.split(',')
    return MULTIPLET_WEIGHT['%s,%s' % (l, m.lstrip('-'))]


def local_h(basis, weights):
    """
    h = sum_lm mu_lm (|l,m><l,m| + |l,-m><l,-m|) over the normalized vectors.
    """
    h = np.zeros((16, 16))
    for label, vector in basis.vectors.items():
        h += weights[_weight_label(label)] * np.outer(vector, vector)
    local = LocalHamiltonian(h, basis, weights)
    logging.debug("Built %s" % local)
    return local


def site_permutation(mapping):
    """
    The 16x16 operator sending |s0 s1 s2 s3> to the ket whose site
    ``mapping[i]`` holds s_i.
    """
    operator = np.zeros((16, 16))
    for index in range(16):
        bits = [(index >> (3 - i)) & 1 for i in range(4)]
        moved = [0] * 4
        for i, target in enumerate(mapping):
            moved[target] = bits[i]
        operator[int(''.join(map(str, moved)), 2), index] = 1.0
    return operator


PARITY = site_permutation((2, 3, 0, 1))
LEG_EXCHANGE = site_permutation((1, 0, 3, 2))
SPIN_FLIP = np.fliplr(np.eye(16))


def total_spin(axis):
    """
    sum over the four sites of sigma_axis / 2.
    """
    pauli = {'x': core.PAULI_X, 'y': core.PAULI_Y, 'z': core.PAULI_Z}[axis]
    ops = []
    for site in range(4):
        factors = [core.IDENTITY_2] * 4
        factors[site] = pauli
        ops.append(numerics.kron(*factors))
    return 0.5 * sum(ops)


def symmetry_defects(h):
    """
    ||[h, U]|| for parity, leg exchange, spin flip and the z rotation generator.
    """
    matrix = getattr(h, 'h', h)
    defects = OrderedDict()
    for name, op in (('parity', PARITY), ('leg_exchange', LEG_EXCHANGE),
                     ('spin_flip', SPIN_FLIP), ('Tz', total_spin('z'))):
        defects[name] = np.max(np.abs(matrix.dot(op) - op.dot(matrix)))
    return defects


def rotation_defect(h):
    matrix = getattr(h, 'h', h)
    return max(np.max(np.abs(matrix.dot(s) - s.dot(matrix)))
               for s in (total_spin(axis) for axis in 'xyz'))


def embed_global(h, n):
    """
    H = sum_l h_{l,l+1} on an N-rung periodic ladder as a dense 4^N x 4^N matrix.
    """
    if n > MAX_GLOBAL_RUNGS:
        raise OracleSizeError('embed_global', n, MAX_GLOBAL_RUNGS)
    assert n >= 2, "a two-rung term needs N >= 2"
    matrix = getattr(h, 'h', h)
    first = np.kron(matrix, np.eye(4 ** (n - 2))).reshape([4] * (2 * n))
    total = np.zeros_like(first)
    for l in range(n):
        axes = [(m - l) % n for m in range(n)]
        total += np.transpose(first, axes + [n + a for a in axes])
    return total.reshape(4 ** n, 4 ** n)
