import numpy as np
import pytest

from conftest import SIGN_CLASSES
from mps import families
from mps.core import families as family_names
from mps.errors import DegenerateFamilyError, FamilyMismatchError


@pytest.mark.parametrize("epsilon,sigma", SIGN_CLASSES)
def test_class_a_passes_every_discrete_witness(epsilon, sigma):
    mps = families.build_class_a(0.9, -0.6, epsilon, sigma)
    for kind in ('Tz', 'spin_flip', 'leg_exchange', 'parity'):
        witness = families.verify_symmetry(mps, kind)
        assert witness.passed, str(witness)
    assert mps.param('eta') == epsilon * sigma
    assert mps.param('x') == pytest.approx(-0.6 / (2 * 0.81))


def test_unit_class_a_has_exact_witnesses():
    mps = families.build_class_a(1, 1, 1, 1)
    for kind in families.symmetries:
        if kind == families.symmetries.su2:
            continue
        assert families.verify_symmetry(mps, kind).residual == 0


def test_class_a_needs_nonzero_a():
    with pytest.raises(DegenerateFamilyError):
        families.build_class_a(0.0, 1.0, 1, 1)


def test_class_b_is_rotation_invariant():
    mps = families.build_class_b(0.7)
    assert mps.family == family_names.class_b
    assert families.verify_symmetry(mps, 'su2').residual <= 1e-14
    assert families.rotation_residual(mps, 0.83, (1, -2, 0.5)) <= 1e-10


def test_class_b_breaks_leg_exchange_and_parity_away_from_zero():
    mps = families.build_class_b(0.5)
    assert families.verify_symmetry(mps, 'spin_flip').passed
    assert not families.verify_symmetry(mps, 'parity').passed
    assert not families.verify_symmetry(mps, 'leg_exchange').passed
    assert families.verify_symmetry(families.build_class_b(0.0), 'parity').passed


def test_class_b_at_zero_is_a_class_a_point():
    np.testing.assert_allclose(families.build_class_b(0.0).matrices,
                               families.build_class_a(0.5, -1.0, -1, -1).matrices)


def test_generic_class_a_is_not_rotation_invariant(class_a):
    assert families.rotation_residual(class_a, 0.83, (1, 0, 0)) > 1e-3
    assert not families.verify_symmetry(class_a, 'su2').passed


def test_builders_pass_their_own_witness():
    assert families.verify_symmetry(families.build_leg_exchange(0.7, -0.2, 0.4, -1), 'leg_exchange').passed
    assert families.verify_symmetry(families.build_parity(0.7, -0.2, 0.4, -1), 'parity').passed
    assert families.verify_symmetry(families.build_spin_flip(0.7, -0.2, 0.4, -1), 'spin_flip').passed


def test_two_symmetries_imply_the_third():
    mps = families.build_spin_flip(0.6, -0.6, 1.3, 1)
    assert families.verify_symmetry(mps, 'parity', sign=-1).passed
    assert families.verify_symmetry(mps, 'leg_exchange', sign=-1).passed


def test_spin_flip_at_g_zero_is_checked_on_the_state():
    witness = families.verify_symmetry(families.build_spin_flip(0.7, 0.3, 0.0, -1), 'spin_flip')
    assert witness.method == 'state'
    assert witness.passed


def test_wrong_sign_fails_the_witness():
    mps = families.build_spin_flip(0.7, 0.3, 0.4, 1)
    assert not families.verify_symmetry(mps, 'spin_flip', sign=-1).passed


def test_missing_sign_and_unknown_kind():
    mps = families.build_so2(0.7, 0.3, 0.2, 0.1, 0.4)
    with pytest.raises(FamilyMismatchError):
        families.verify_symmetry(mps, 'parity')
    with pytest.raises(NotImplementedError):
        families.verify_symmetry(mps, 'time_reversal')
