import numpy as np
import pytest

from eval import metrics, oracle
from hamiltonian import parent
from mps import core, families, observables
from mps.errors import DegenerateSpectrumError, FamilyMismatchError
from mps.observables import concurrenceMethod, rhoMode
from utils import preprocessing


def test_closed_form_rho_matches_thermodynamic_and_finite(spin_flip):
    closed = observables.rung_density(spin_flip)
    thermo = observables.rung_density(spin_flip, rhoMode.thermo)
    finite = observables.rung_density(spin_flip, rhoMode.finite, n=1000)
    np.testing.assert_allclose(thermo.matrix, closed.matrix, atol=1e-10)
    np.testing.assert_allclose(finite.matrix, closed.matrix, atol=1e-10)
    assert closed.trace() == pytest.approx(1.0)


def test_finite_rho_matches_dense_state(class_a):
    state = oracle.build_state(class_a, 5)
    np.testing.assert_allclose(observables.rung_density(class_a, rhoMode.finite, n=5).matrix,
                               oracle.reduced(state, 3), atol=1e-12)


def test_rung_spectrum(spin_flip):
    np.testing.assert_allclose(np.sort(observables.rung_spectrum(spin_flip)),
                               observables.rung_density(spin_flip).eigenvalues, atol=1e-12)


def test_closed_form_needs_spin_flip_model():
    mps = families.build_so2(0.7, 0.3, 0.2, 0.1, 0.4)
    with pytest.raises(FamilyMismatchError):
        observables.rung_density(mps)
    assert observables.rung_density(mps, rhoMode.thermo).trace() == pytest.approx(1.0)


def test_concurrence_closed_form_matches_wootters():
    rng = np.random.default_rng(1)
    clamped = 0
    for _ in range(10000):
        a, b, g = rng.uniform(-2.0, 2.0, size=3)
        mps = families.build_spin_flip(a, b, g, int(rng.choice([-1, 1])))
        rho = observables.rung_density(mps)
        closed = observables.concurrence(rho)
        clamped += closed == 0
        assert closed == pytest.approx(observables.concurrence(rho, concurrenceMethod.wootters), abs=1e-10)
    assert 0 < clamped < 10000


@pytest.mark.parametrize("a, b, g, epsilon", [
    (-1.0876, 1.0866, 0.8205, -1),
    (0.9, 0.9, 0.3, -1),
    (0.9, -0.9, 0.3, 1),
    (1e-4, 1.3, 0.01, 1),
])
def test_wootters_near_a_vanishing_rung_eigenvalue(a, b, g, epsilon):
    mps = families.build_spin_flip(a, b, g, epsilon)
    for mode in (rhoMode.closed_form, rhoMode.thermo):
        rho = observables.rung_density(mps, mode)
        assert observables.concurrence(rho, concurrenceMethod.wootters) == pytest.approx(
            observables.concurrence(observables.rung_density(mps)), abs=1e-10)


def test_entropy_matches_class_report():
    mps = families.build_class_a(1.0, 0.7, 1, -1)
    report = observables.class_report('A', x=0.35, epsilon=1, sigma=-1)
    rho = observables.rung_density(mps)
    assert observables.entropy(rho) == pytest.approx(report.entropy_bits, abs=1e-12)
    assert observables.concurrence(rho) == pytest.approx(report.concurrence, abs=1e-12)
    intra = observables.intra_rung(mps)
    assert intra['zz'] == pytest.approx(report.zz)
    assert intra['nn'] == pytest.approx(report.nn)


def test_intra_rung_closed_form_matches_numeric(spin_flip):
    numeric = observables.intra_rung_numeric(observables.rung_density(spin_flip, rhoMode.thermo), 0.9)
    for name, value in observables.intra_rung(spin_flip).items():
        assert value == pytest.approx(numeric[name], abs=1e-10)


def test_class_a_entanglement_at_the_transition():
    report = observables.class_report('A', x=0.0)
    assert report.concurrence == 1.0
    assert report.entropy_bits == 0.0
    assert report.degenerate_top
    for x in (1.0, -1.0, 2.5):
        assert observables.class_report('A', x=x).concurrence == 0.0


def test_class_a_entropy_saturates_at_one_bit():
    entropies = [observables.class_report('A', x=x).entropy_bits for x in (10.0, 1e3, 1e5)]
    assert entropies[0] > entropies[1] > entropies[2]
    assert entropies[2] == pytest.approx(1.0, abs=1e-3)


def test_class_b_entanglement():
    assert observables.class_report('B', u=0.0).entropy_bits == pytest.approx(np.log2(3), abs=1e-12)
    for u in (0.0, 1.0, 1.73, -1.7):
        assert observables.class_report('B', u=u).concurrence == 0.0
    assert observables.class_report('B', u=2.0).concurrence == pytest.approx(1.0 / 7)


def test_class_b_report_matches_model():
    mps = families.build_class_b(2.0)
    report = observables.class_report('B', u=2.0)
    rho = observables.rung_density(mps)
    assert observables.entropy(rho) == pytest.approx(report.entropy_bits, abs=1e-12)
    assert observables.intra_rung(mps)['zz'] == pytest.approx(report.zz)
    assert core.correlation_length(mps, core.rung_operator('Sz')) == pytest.approx(report.xi_z)


def test_longitudinal_length_diverges_near_the_transition():
    assert observables.class_report('A', x=1e-4).xi_z > 1e3


def test_transverse_correlator_vanishes_on_one_side():
    for g in (0.5, 1.7):
        mps = families.build_spin_flip(0.8, 0.3, g, -1)
        assert observables.distance_correlator(mps, 'n', 3) == 0.0
        assert core.two_point(mps, core.rung_operator('Sx'), 3) == pytest.approx(0.0, abs=1e-14)
    assert observables.distance_correlator(families.build_spin_flip(0.8, 0.3, -0.5, -1), 'n', 3) != 0.0


def test_log_slope_fit_recovers_correlation_length(spin_flip):
    distances = np.arange(2, 41)
    values = [observables.distance_correlator(spin_flip, 'z', r) for r in distances]
    report = observables.correlation_report(spin_flip)
    assert metrics.log_slope_length(distances, values) == pytest.approx(report.xi_z, abs=1e-6)

    transverse = families.build_spin_flip(0.8, 0.3, 0.5, 1)
    values = [observables.distance_correlator(transverse, 'n', r) for r in distances]
    assert metrics.log_slope_length(distances, values) == pytest.approx(
        observables.correlation_report(transverse).xi_n, abs=1e-6)


def test_distance_correlator_refused_at_g_zero():
    with pytest.raises(DegenerateSpectrumError):
        observables.distance_correlator(families.build_spin_flip(0.8, 0.3, 0.0, 1), 'z', 3)


def test_two_rung_density_annihilates_the_multiplets(class_a):
    basis = parent.multiplet_basis(1.0, 0.7, 1, 1)
    rho2 = observables.block_density(class_a, 2)
    assert np.trace(rho2) == pytest.approx(1.0)
    assert max(np.linalg.norm(rho2.dot(v)) for v in basis.vectors.values()) <= 1e-9
    np.testing.assert_allclose(observables.block_density(class_a, 2, n=4),
                               oracle.reduced_block(oracle.build_state(class_a, 4), [0, 1]), atol=1e-12)


@pytest.mark.parametrize("theta, axis", [(0.3, (0, 0, 1)), (1.1, (1, 0, 0)), (2.4, (0.3, -0.5, 0.8))])
def test_entropy_is_invariant_under_rung_rotations(spin_flip, theta, axis):
    rho = observables.rung_density(spin_flip)
    rotation = families.rung_rotation(theta, axis)
    rotated = observables.RungDensity(rotation.dot(rho.matrix).dot(rotation.conj().T), rho.mode)
    assert observables.entropy(rotated) == pytest.approx(observables.entropy(rho), abs=1e-12)


@pytest.mark.parametrize("u", [0.5, 2.0, -1.2])
def test_class_b_correlators_are_isotropic(u):
    mps = families.build_class_b(u)
    for r in (2, 3, 6):
        along_z = core.two_point(mps, core.rung_operator('Sz'), r)
        for name in ('Sx', 'Sy'):
            assert core.two_point(mps, core.rung_operator(name), r) == pytest.approx(along_z, abs=1e-12)


def test_class_a_concurrence_slope_at_the_transition():
    step = 1e-3
    slope = (observables.class_report('A', x=step).concurrence
             - observables.class_report('A', x=0.0).concurrence) / step
    assert abs(slope + 2) <= 0.05


def test_class_a_entanglement_is_extremal_at_the_transition():
    grid = preprocessing.ScanSpec('class_a', '-3:3:0.01').grid()
    reports = [observables.class_report('A', x=x) for x in grid]
    concurrences = np.array([r.concurrence for r in reports])
    entropies = np.array([r.entropy_bits for r in reports])
    middle = grid.index(0.0)
    assert np.argmax(concurrences) == middle and np.argmin(entropies) == middle
    assert np.all(np.diff(concurrences[middle:]) <= 0)
    assert np.all(np.diff(concurrences[:middle + 1]) >= 0)
    # entropy grows with |x| until the three nonzero weights are equal at |x| = 2
    rising = entropies[middle:middle + 200]
    assert np.all(np.diff(rising) > 0)
    np.testing.assert_allclose(entropies[middle:], entropies[middle::-1], atol=1e-12)
