import numpy as np
import pytest

from eval import oracle
from mps import core, families
from mps.errors import DegenerateSpectrumError
from mps.observables import distance_correlator


def test_transfer_spectrum_of_spin_flip_models(rng):
    for _ in range(10000):
        a, b = rng.uniform(-2, 2, size=2)
        g = rng.uniform(-2, 2)
        mps = families.build_spin_flip(a, b, g, int(rng.choice([-1, 1])))
        s = a * a + b * b
        expected = np.sort([s + abs(g), s - abs(g), 2 * a * b, 2 * a * b])
        numeric = np.sort(np.real(core.transfer_matrix(mps).eigenvalues))
        np.testing.assert_allclose(numeric, expected, atol=1e-12)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_one_point_matches_dense_state(spin_flip, n):
    state = oracle.build_state(spin_flip, n)
    for op in (core.rung_operator('Sz'), core.rung_operator('Sn', 0.4), core.rung_operator('zz'),
               core.rung_operator('nn', 1.1), core.rung_operator('S2')):
        assert core.one_point(spin_flip, op, 2, n) == pytest.approx(
            oracle.expectation(state, {2: op}), abs=1e-12)


@pytest.mark.parametrize("r", [2, 3, 5])
def test_finite_two_point_matches_dense_state(class_a, r):
    n = 5
    state = oracle.build_state(class_a, n)
    for name in ('Sz', 'Sx'):
        op = core.rung_operator(name)
        dense = oracle.expectation(state, {1: op, r: op})
        assert core.two_point(class_a, op, r, core.correlatorMode.finite, n) == pytest.approx(dense, abs=1e-12)


def test_partition_norm_matches_dense_norm(spin_flip):
    assert core.partition_norm(spin_flip, 5) == pytest.approx(oracle.build_state(spin_flip, 5).norm2(), rel=1e-12)


def test_partition_norm_at_g_zero():
    a, b = 0.9, 0.4
    mps = families.build_spin_flip(a, b, 0.0, 1)
    assert core.partition_norm(mps, 7) == pytest.approx(oracle.g_zero_norm(a, b, 7), rel=1e-12)


def test_amplitude_is_trace_of_product(class_a):
    expected = oracle.build_state(class_a, 3).tensor()[0, 3, 1]
    assert core.amplitude(class_a, ['00', '11', '01'], 3) == pytest.approx(expected)


@pytest.mark.parametrize("r", [2, 3, 4, 7])
def test_thermodynamic_correlators_match_closed_forms(r):
    mps = families.build_spin_flip(0.8, 0.3, 0.5, 1)
    assert core.two_point(mps, core.rung_operator('Sz'), r) == pytest.approx(
        distance_correlator(mps, 'z', r), abs=1e-12)
    assert core.two_point(mps, core.rung_operator('Sx'), r) == pytest.approx(
        distance_correlator(mps, 'n', r), abs=1e-12)


def test_thermodynamic_limit_of_finite_correlator():
    mps = families.build_spin_flip(0.8, 0.3, 0.5, 1)
    op = core.rung_operator('Sz')
    finite = core.two_point(mps, op, 3, core.correlatorMode.finite, 1000)
    assert finite == pytest.approx(core.two_point(mps, op, 3), abs=1e-10)


def test_longitudinal_correlation_length(spin_flip):
    s = 0.8 ** 2 + 0.3 ** 2
    x = 0.5 / s
    expected = 1.0 / np.log((1 + x) / abs(1 - x))
    assert core.correlation_length(spin_flip, core.rung_operator('Sz')) == pytest.approx(expected, rel=1e-10)


def test_thermodynamic_values_refused_at_g_zero():
    mps = families.build_spin_flip(0.9, 0.4, 0.0, 1)
    assert core.transfer_matrix(mps).degenerate_top
    with pytest.raises(DegenerateSpectrumError, match="g=0"):
        core.one_point_thermo(mps, core.rung_operator('Sz'))
    with pytest.raises(DegenerateSpectrumError):
        core.correlation_length(mps, core.rung_operator('Sz'))


def test_rung_operators():
    assert core.rung_operator('S2').matrix.diagonal().real.tolist() == pytest.approx([2, 1, 1, 2])
    np.testing.assert_allclose(core.rung_operator('Sz').matrix.diagonal(), [1, 0, 0, -1])
    with pytest.raises(NotImplementedError):
        core.rung_operator('Sw')
    with pytest.raises(NotImplementedError):
        core.rung_index('02')


def test_transition_matrix_reads_density_elements(class_a):
    rho = oracle.reduced(oracle.build_state(class_a, 4), 1)
    for i, j in ((1, 2), (0, 0), (3, 3)):
        assert core.one_point(class_a, core.transition_matrix(i, j), 1, 4) == pytest.approx(rho[i, j], abs=1e-12)


@pytest.mark.parametrize("n", [3, 4, 6])
def test_amplitude_is_cyclic(class_a, spin_flip, rng, n):
    for mps in (class_a, spin_flip, families.build_so2(0.7, 0.3, -0.2, 1.1, 0.4)):
        for _ in range(20):
            config = list(rng.integers(0, 4, size=n))
            amplitude = core.amplitude(mps, config, n)
            for shift in range(1, n):
                assert core.amplitude(mps, config[shift:] + config[:shift], n) == pytest.approx(
                    amplitude, rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("a, b, g, epsilon", [(0.8, 0.3, 0.5, 1), (0.8, 0.3, -0.5, -1), (1.1, -0.4, 1.7, 1)])
def test_distance_correlator_decays_geometrically(a, b, g, epsilon):
    mps = families.build_spin_flip(a, b, g, epsilon)
    s = a * a + b * b
    top = s + abs(g)
    for r in range(2, 12):
        ratio = distance_correlator(mps, 'z', r + 1) / distance_correlator(mps, 'z', r)
        assert ratio == pytest.approx((s - abs(g)) / top, rel=1e-12)
        transverse = distance_correlator(mps, 'n', r)
        if transverse != 0.0:
            assert distance_correlator(mps, 'n', r + 1) / transverse == pytest.approx(2 * a * b / top, rel=1e-12)
