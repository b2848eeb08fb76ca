import logging
from functools import reduce

import numpy as np
import scipy.linalg

# GLOBAL VARIABLES

NULL_TOL = 1e-9         # null-space cutoff, relative to the largest singular value
DEGENERACY_TOL = 1e-12  # relative gap below which two eigenvalues are merged
MAX_EIG_DIM = 64
SORT_DIGITS = 12        # |lambda| is rounded to this many digits before sorting

# END GLOBAL VARIABLES


class Spectrum(object):
    """
    Eigenvalues of a square matrix with matched right and left eigenvectors.

    Eigenvalues are sorted by descending modulus, ties broken by descending
    real part and then descending imaginary part. Right eigenvectors are the
    columns of ``right`` (unit norm), left eigenvectors the rows of ``left``,
    scaled so that ``left[i] @ right[:, j] == delta_ij``.
    """

    def __init__(self, matrix, eigenvalues, right, left, diagonalizable):
        self.matrix = matrix
        self.eigenvalues = eigenvalues
        self.right = right
        self.left = left
        self.diagonalizable = diagonalizable
        self.degenerate = _has_degeneracy(eigenvalues)

    def __str__(self):
        return 'Spectrum of a %dx%d matrix: %s' % (
            self.matrix.shape[0], self.matrix.shape[1],
            ', '.join(_format_scalar(l) for l in self.eigenvalues))

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def top(self):
        return self.eigenvalues[0]

    def degenerate_top(self, tol=DEGENERACY_TOL):
        """
        True when the two largest moduli coincide within ``tol`` (relative).
        """
        if len(self.eigenvalues) < 2:
            return False
        first, second = np.abs(self.eigenvalues[:2])
        return first - second <= tol * first

    def reconstruct(self):
        return self.right.dot(np.diag(self.eigenvalues)).dot(self.left)

    def power(self, n, scale=1.0):
        """
        Returns (M / scale)^n from the eigenvalue powers.

        Falls back to repeated squaring when the matrix is defective.

        :param n: a non-negative integer exponent
        :param scale: divides the matrix before exponentiation, used to keep
                      large powers finite
        :return: the matrix power
        """
        if n == 0:
            return np.eye(self.matrix.shape[0], dtype=self.right.dtype)
        if not self.diagonalizable:
            return np.linalg.matrix_power(self.matrix / scale, n)
        weights = (self.eigenvalues / scale) ** n
        return (self.right * weights).dot(self.left)

    def power_trace(self, n, scale=1.0):
        return np.sum((self.eigenvalues / scale) ** n)


def _format_scalar(value):
    if abs(value.imag) < 1e-14:
        return '%.6g' % value.real
    return '%.6g%+.6gj' % (value.real, value.imag)


def _has_degeneracy(eigenvalues, tol=DEGENERACY_TOL):
    scale = max(np.max(np.abs(eigenvalues)), 1.0) if len(eigenvalues) else 1.0
    for i in range(len(eigenvalues)):
        for j in range(i + 1, len(eigenvalues)):
            if abs(eigenvalues[i] - eigenvalues[j]) <= tol * scale:
                return True
    return False


def _sort_order(eigenvalues):
    scale = max(np.max(np.abs(eigenvalues)), 1e-300)
    modulus = np.round(np.abs(eigenvalues) / scale, SORT_DIGITS)
    real = np.round(eigenvalues.real / scale, SORT_DIGITS)
    imag = np.round(eigenvalues.imag / scale, SORT_DIGITS)
    # lexsort uses the last key as primary
    return np.lexsort((-imag, -real, -modulus))


def eigen_decompose(m):
    """
    Eigendecomposition with biorthonormal left and right eigenvectors.

    :param m: a square matrix of dimension at most 64
    :return: a Spectrum
    """
    m = np.asarray(m)
    assert m.ndim == 2 and m.shape[0] == m.shape[1], \
        "eigen_decompose needs a square matrix, got shape %s" % (m.shape,)
    assert m.shape[0] <= MAX_EIG_DIM, \
        "eigen_decompose is meant for small matrices (dimension %d)" % m.shape[0]

    eigenvalues, left, right = scipy.linalg.eig(m, left=True, right=True)
    order = _sort_order(eigenvalues)
    eigenvalues = eigenvalues[order]
    right = right[:, order]
    left = left[:, order].conj().T

    right = right / np.linalg.norm(right, axis=0)

    # inverting the right eigenbasis gives biorthonormal left vectors even
    # inside degenerate eigenspaces
    diagonalizable = np.linalg.cond(right) < 1e10
    if diagonalizable:
        left = scipy.linalg.inv(right)
    else:
        logging.debug("Defective matrix, left vectors normalized pairwise only")
        overlaps = np.einsum('ij,ji->i', left, right)
        overlaps[np.abs(overlaps) < 1e-300] = 1.0
        left = left / overlaps[:, None]

    spectrum = Spectrum(m, eigenvalues, right, left, diagonalizable)
    logging.debug("Eigendecomposition: %s" % spectrum)
    return spectrum


def null_space(m, tol=NULL_TOL):
    """
    Orthonormal basis of the kernel of ``m``.

    Singular values at or below ``tol`` times the largest one count as zero.

    :param m: a matrix
    :param tol: relative singular value cutoff
    :return: a matrix whose columns are the kernel basis (possibly no columns)
    """
    assert tol > 0, "null-space tolerance must be positive"
    return scipy.linalg.null_space(np.asarray(m), rcond=tol)


def orthonormalize(vectors, tol=NULL_TOL):
    """
    Orthonormal basis for the span of the columns of ``vectors``.
    """
    return scipy.linalg.orth(np.asarray(vectors), rcond=tol)


def span_projector(vectors):
    basis = orthonormalize(vectors)
    return basis.dot(basis.conj().T)


def kron(*ops):
    """
    Kronecker product of any number of matrices.

    Composite indices are row major: for ``kron(a, b)`` the row index is
    ``i * rows(b) + k``.

    :param ops: matrices, left factor first
    :return: the product, or a 1x1 identity when no factor is given
    """
    if not ops:
        return np.eye(1)
    return reduce(np.kron, ops)


def partial_trace(m, keep, local_dim):
    """
    Traces out every tensor factor of ``m`` not listed in ``keep``.

    :param m: a square matrix of dimension ``local_dim ** n``
    :param keep: indices (0-based) of the factors to keep, in any order
    :param local_dim: dimension of one factor
    :return: the reduced matrix on the kept factors, in ascending factor order
    """
    m = np.asarray(m)
    assert m.ndim == 2 and m.shape[0] == m.shape[1], "partial_trace needs a square matrix"
    n = int(round(np.log(m.shape[0]) / np.log(local_dim))) if m.shape[0] > 1 else 0
    assert local_dim ** n == m.shape[0], \
        "dimension %d is not a power of %d" % (m.shape[0], local_dim)
    keep = sorted(set(keep))
    assert all(0 <= k < n for k in keep), "kept factors out of range"

    tensor = m.reshape([local_dim] * (2 * n))
    traced = [s for s in range(n) if s not in keep]
    current = n
    for site in reversed(traced):
        tensor = np.trace(tensor, axis1=site, axis2=site + current)
        current -= 1
    size = local_dim ** len(keep)
    return tensor.reshape(size, size)
