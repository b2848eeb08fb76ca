import numpy as np
import pytest

from conftest import SIGN_CLASSES
from eval import oracle
from hamiltonian import parent
from mps import families
from mps.errors import NegativeWeightError, NullSpaceError, OracleSizeError
from utils import numerics


def test_constraint_matrix_columns(class_a):
    m = parent.constraint_matrix(class_a)
    assert m.shape == (4, 16)
    np.testing.assert_allclose(m[:, int('0011', 2)], class_a.A00.dot(class_a.A11).ravel())


@pytest.mark.parametrize("epsilon,sigma", SIGN_CLASSES)
def test_multiplets_span_the_null_space(epsilon, sigma, rng):
    for _ in range(100):
        a = rng.uniform(0.2, 2.0)
        g = rng.uniform(0.05, 2.0) * rng.choice([-1, 1])
        mps = families.build_class_a(a, g, epsilon, sigma)
        basis = parent.multiplet_basis(a, g, epsilon, sigma)
        assert len(basis) == 12
        assert numerics.null_space(parent.constraint_matrix(mps)).shape[1] == 12
        assert basis.gram_defect() <= 1e-10
        assert parent.nullspace_match(mps, basis) <= 1e-9


def test_negative_m_partners_are_flipped():
    basis = parent.multiplet_basis(0.8, 0.3, -1, 1)
    np.testing.assert_allclose(basis.vectors['2,-1'], basis.vectors['2,1'][::-1], atol=1e-15)
    assert basis.labels.count('1,0') == 1
    assert basis.norms['2,0'] == pytest.approx(np.sqrt((32 * 0.8 ** 4 + 4 * 0.09) / 6))


def test_mismatched_model_names_the_offending_vector(monkeypatch):
    build = families.build_class_a
    monkeypatch.setattr(parent.families, 'build_class_a', lambda a, g, e, s: build(a, g, -e, s))
    with pytest.raises(NullSpaceError) as error:
        parent.multiplet_basis(1.0, 0.7, 1, 1)
    assert error.value.label in parent.multiplet_basis(1.0, 0.7, 1, 1, check=False).labels


@pytest.mark.parametrize("epsilon,sigma", SIGN_CLASSES)
def test_parent_hamiltonian_is_frustration_free(epsilon, sigma, rng):
    a, g = rng.uniform(0.2, 2.0), rng.uniform(0.05, 2.0)
    mps = families.build_class_a(a, g, epsilon, sigma)
    local = parent.local_h(parent.multiplet_basis(a, g, epsilon, sigma), parent.WeightSet.random(rng))
    assert local.min_eigenvalue() >= -1e-10
    for n in (4, 5):
        assert oracle.frustration_residual(local, oracle.build_state(mps, n)) <= 1e-9
    state = oracle.build_state(mps, 4).normalized()
    energy = state.amplitudes.dot(parent.embed_global(local, 4)).dot(state.amplitudes)
    assert energy == pytest.approx(0.0, abs=1e-10)


def test_local_term_keeps_the_symmetries(rng):
    local = parent.local_h(parent.multiplet_basis(0.7, -1.2, -1, 1), parent.WeightSet.random(rng))
    for name, defect in parent.symmetry_defects(local).items():
        assert defect <= 1e-12, name


def test_rotational_weights_give_a_rotation_invariant_term():
    basis = parent.multiplet_basis(0.5, -1.0, -1, -1)
    local = parent.local_h(basis, parent.WeightSet.rotational(0.3, 1.1, 0.7, 2.0))
    assert parent.rotation_defect(local) <= 1e-10
    generic = parent.local_h(parent.multiplet_basis(1.0, 0.7, 1, 1), parent.WeightSet(mu22=1.0))
    assert parent.rotation_defect(generic) > 1e-3


def test_kernel_containment(class_a):
    basis = parent.multiplet_basis(1.0, 0.7, 1, 1)
    assert parent.kernel_containment(class_a, basis) <= 1e-9
    assert parent.kernel_containment(class_a, basis, n=6) <= 1e-9


def test_weights():
    weights = parent.WeightSet.rotational(1, 2, 3, 4)
    assert weights['mu20'] == 6 and weights['mu10'] == 4 and weights['mu1p0'] == 6 and weights['mu00'] == 8
    assert parent.WeightSet().as_dict() == dict.fromkeys(parent.WEIGHT_LABELS, 0.0)
    with pytest.raises(NegativeWeightError):
        parent.WeightSet(mu11=-0.1)
    with pytest.raises(NotImplementedError):
        parent.WeightSet(mu33=1.0)


def test_zero_weights_give_zero_term():
    local = parent.local_h(parent.multiplet_basis(1.0, 0.7, 1, 1), parent.WeightSet())
    assert not np.any(local.h)


def test_global_embedding_of_two_rungs(rng):
    h = rng.normal(size=(16, 16))
    np.testing.assert_allclose(parent.embed_global(h, 2), h + parent.PARITY.dot(h).dot(parent.PARITY))
    with pytest.raises(OracleSizeError):
        parent.embed_global(h, 7)
