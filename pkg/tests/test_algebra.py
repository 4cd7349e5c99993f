import itertools

import numpy as np
import pytest

from mcs_dkp.algebra import (
    EPS_E,
    EPS_R,
    GaussMatrix,
    LeviCivita,
    basis_matrix,
    gen_kronecker,
    index_position,
    jordan_indices,
    levi_civita,
    matrix_poly_residual,
    numeric_rank,
)


def test_linear_order_is_a_bijection():
    keys = [1, 2, 3, (1, 2), (3, 1), (2, 3)]
    positions = [index_position(k) for k in keys]
    assert [p for p, _ in positions] == list(range(6))
    assert all(s == 1 for _, s in positions)


@pytest.mark.parametrize("pair,expected", [((2, 1), (3, -1)), ((1, 3), (4, -1)), ((3, 2), (5, -1))])
def test_reversed_bivector_carries_minus_sign(pair, expected):
    assert index_position(pair) == expected


def test_repeated_bivector_has_no_slot():
    assert index_position((2, 2)) == (None, 0)


@pytest.mark.parametrize("bad", [0, 4, (1, 4)])
def test_invalid_index_rejected(bad):
    with pytest.raises(ValueError):
        index_position(bad)


def test_matrix_unit_vector_bivector():
    m = basis_matrix(1, (2, 3)).to_complex()
    expected = np.zeros((6, 6))
    expected[0, 5] = 1
    np.testing.assert_array_equal(m, expected)


def test_matrix_unit_products():
    assert basis_matrix(1, (1, 2)) @ basis_matrix((1, 2), 2) == basis_matrix(1, 2)
    assert (basis_matrix(1, (1, 2)) @ basis_matrix((3, 1), 2)).is_zero()


def test_matrix_unit_reversed_pair_flips_sign():
    assert basis_matrix((2, 1), 1) == -basis_matrix((1, 2), 1)
    assert basis_matrix((1, 1), 2).is_zero()


@pytest.mark.parametrize("p1,p2,value", [((1, 2), (1, 2), 1), ((1, 2), (2, 1), -1), ((1, 2), (3, 1), 0)])
def test_generalised_kronecker(p1, p2, value):
    assert gen_kronecker(p1, p2) == value


def test_levi_civita_values():
    assert levi_civita(1, 2, 3) == -1j
    assert levi_civita(2, 3, 1) == -1j
    assert levi_civita(2, 1, 3) == 1j
    assert levi_civita(1, 1, 2) == 0
    assert levi_civita(1, 2, 3, LeviCivita.REAL) == 1
    with pytest.raises(ValueError):
        levi_civita(0, 1, 2)


def test_levi_civita_tensors_are_antisymmetric_and_related():
    for perm in itertools.permutations(range(3)):
        sign = np.linalg.det(np.eye(3)[list(perm)])
        np.testing.assert_array_equal(EPS_E.transpose(perm), sign * EPS_E)
    np.testing.assert_array_equal(EPS_R, 1j * EPS_E)
    # contraction identity eps_mna eps_mnb = 2 delta_ab for the real symbol
    np.testing.assert_array_equal(np.einsum("mna,mnb->ab", EPS_R, EPS_R), 2 * np.eye(3))


def test_gauss_matrix_exact_arithmetic():
    a = GaussMatrix([[1, 2], [0, -1]], [[0, 1], [1, 0]])
    b = GaussMatrix([[0, 1], [1, 1]], [[2, 0], [0, -1]])
    np.testing.assert_array_equal((a @ b).to_complex(), a.to_complex() @ b.to_complex())
    assert (a @ b) @ a == a @ (b @ a)
    assert a.H.H == a
    assert (a + b - b) == a
    assert a[0, 1] == 2 + 1j


def test_gauss_matrix_rejects_non_integers():
    with pytest.raises(ValueError):
        GaussMatrix.from_complex([[0.5, 0], [0, 1]])
    with pytest.raises(ValueError):
        GaussMatrix([[1, 2, 3]])


def test_gauss_matrix_halve_requires_even_entries():
    assert GaussMatrix([[2, 0], [0, 4]]).halve() == GaussMatrix([[1, 0], [0, 2]])
    with pytest.raises(ValueError):
        GaussMatrix([[1, 0], [0, 0]]).halve()


def test_matrix_poly_residual_trivial_cases():
    assert matrix_poly_residual(np.zeros((3, 3)), [0]) == 0.0
    assert matrix_poly_residual(np.eye(3), [1]) == 0.0
    assert matrix_poly_residual(np.diag([1.0, 2.0]), [1, 2]) == 0.0
    assert matrix_poly_residual(np.diag([1.0, 2.0]), [1]) == 1.0
    assert matrix_poly_residual(GaussMatrix.identity(4), [1]) == 0.0


def test_matrix_poly_residual_shape_checks():
    with pytest.raises(ValueError):
        matrix_poly_residual(np.zeros((2, 3)), [0])
    with pytest.raises(ValueError):
        matrix_poly_residual(np.eye(2), [np.eye(3)])


def test_jordan_indices_detect_nontrivial_block():
    nilpotent = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert jordan_indices(nilpotent, [0]) == [2]
    assert jordan_indices(np.diag([1.0, 1.0, 2.0]), [1, 2]) == [1, 1]


def test_numeric_rank():
    assert numeric_rank(np.zeros((3, 3))) == 0
    assert numeric_rank(np.diag([1.0, 1e-12, 2.0])) == 2
