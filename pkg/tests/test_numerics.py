import numpy as np
import pytest

from utils import numerics


def test_eigenvalues_sorted_by_modulus():
    spectrum = numerics.eigen_decompose(np.diag([1.0, 3.0, -2.0]))
    np.testing.assert_allclose(spectrum.eigenvalues, [3.0, -2.0, 1.0])


def test_left_and_right_vectors_are_biorthonormal(rng):
    m = rng.normal(size=(4, 4))
    spectrum = numerics.eigen_decompose(m)
    np.testing.assert_allclose(spectrum.left.dot(spectrum.right), np.eye(4), atol=1e-10)
    np.testing.assert_allclose(spectrum.reconstruct(), m, atol=1e-10)


def test_power_matches_matrix_power(rng):
    m = rng.normal(size=(4, 4))
    spectrum = numerics.eigen_decompose(m)
    np.testing.assert_allclose(spectrum.power(5), np.linalg.matrix_power(m, 5), atol=1e-9)
    assert abs(spectrum.power_trace(5) - np.trace(np.linalg.matrix_power(m, 5))) < 1e-9


def test_defective_matrix_power_falls_back():
    jordan = np.array([[2.0, 1.0], [0.0, 2.0]])
    spectrum = numerics.eigen_decompose(jordan)
    assert not spectrum.diagonalizable
    np.testing.assert_allclose(spectrum.power(3), np.linalg.matrix_power(jordan, 3))


def test_degenerate_top_detects_equal_moduli():
    assert numerics.eigen_decompose(np.diag([2.0, -2.0, 1.0])).degenerate_top()
    assert not numerics.eigen_decompose(np.diag([2.0, 1.5, 1.0])).degenerate_top()


def test_null_space():
    kernel = numerics.null_space(np.array([[1.0, 1.0]]))
    assert kernel.shape == (2, 1)
    np.testing.assert_allclose(abs(kernel[:, 0]), [2 ** -0.5, 2 ** -0.5])
    assert numerics.null_space(np.eye(3)).shape == (3, 0)


def test_span_projector_is_idempotent(rng):
    vectors = rng.normal(size=(5, 2))
    projector = numerics.span_projector(vectors)
    np.testing.assert_allclose(projector.dot(projector), projector, atol=1e-12)
    assert np.trace(projector) == pytest.approx(2.0)


def test_kron_order():
    a = np.array([[0.0, 1.0], [0.0, 0.0]])
    b = np.diag([1.0, 2.0])
    product = numerics.kron(a, b, np.eye(2))
    np.testing.assert_allclose(product, np.kron(np.kron(a, b), np.eye(2)))
    assert numerics.kron().shape == (1, 1)


def test_partial_trace_of_product_state(rng):
    first = rng.normal(size=(3, 3))
    second = rng.normal(size=(3, 3))
    third = rng.normal(size=(3, 3))
    m = numerics.kron(first, second, third)
    np.testing.assert_allclose(numerics.partial_trace(m, [0], 3),
                               first * np.trace(second) * np.trace(third), atol=1e-10)
    np.testing.assert_allclose(numerics.partial_trace(m, [2, 0], 3),
                               np.kron(first, third) * np.trace(second), atol=1e-10)


def test_null_space_of_random_constraint_matrices(rng):
    for _ in range(1000):
        m = rng.normal(size=(4, 16))
        kernel = numerics.null_space(m)
        assert kernel.shape == (16, 12)
        np.testing.assert_allclose(kernel.T.dot(kernel), np.eye(12), atol=1e-12)
        assert np.max(np.abs(m.dot(kernel))) <= 1e-12 * np.linalg.norm(m, 2)


def test_kron_is_associative(rng):
    a, b, c = rng.normal(size=(2, 2)), rng.normal(size=(3, 3)), rng.normal(size=(2, 3))
    grouped = numerics.kron(numerics.kron(a, b), c)
    np.testing.assert_allclose(numerics.kron(a, numerics.kron(b, c)), grouped, atol=1e-14)
    np.testing.assert_allclose(numerics.kron(a, b, c), grouped, atol=1e-14)
