import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from mcs_dkp import fieldtheory as ft
from mcs_dkp import momentum as mo
from mcs_dkp import schroedinger as sc
from mcs_dkp.algebra import GaussMatrix, levi_civita
from mcs_dkp.report import check, negative_control

small_int = st.integers(-3, 3)
gauss4 = st.builds(lambda re, im: GaussMatrix(re, im),
                   arrays(np.int64, (4, 4), elements=small_int), arrays(np.int64, (4, 4), elements=small_int))
coord = st.floats(-10, 10, allow_nan=False)
mass = st.floats(0.1, 10, allow_nan=False)
component = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)

FAST = settings(max_examples=60, deadline=None)


@FAST
@given(gauss4, gauss4, gauss4)
def test_gauss_product_is_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@FAST
@given(gauss4, gauss4)
def test_gauss_adjoint_is_an_antihomomorphic_involution(a, b):
    assert a.H.H == a
    assert (a @ b).H == b.H @ a.H


@FAST
@given(st.permutations([1, 2, 3]))
def test_levi_civita_permutation_sign(perm):
    # even permutations of (1,2,3) are its cyclic shifts
    even = tuple(perm) in {(1, 2, 3), (2, 3, 1), (3, 1, 2)}
    assert levi_civita(*perm) == (-1j if even else 1j)


@FAST
@given(coord, coord, mass)
def test_lambda_quartic_and_w_cubic_on_shell(p1, p2, m):
    p = mo.Momentum3.on_shell(p1, p2, m)
    assert mo.lambda_poly_residual(p) < 1e-10
    assert mo.w_poly_residual(p) < 1e-10


@FAST
@given(coord, coord, mass)
def test_spin_projectors_complete_and_mass_flip(p1, p2, m):
    p = mo.Momentum3.on_shell(p1, p2, m)
    res = mo.operator_suite(p)
    assert res["spin_complete"] < 1e-12
    assert res["mass_flip"] < 1e-12


@FAST
@given(coord, coord, st.floats(-10, 10, allow_nan=False), mass)
def test_hamilton_cayley_off_shell(p1, p2, p0, m):
    p = mo.Momentum3(p1, p2, p0, m)
    vm = mo.build_m_matrix(p)
    assert mo.hamilton_cayley_residual(vm) < 1e-9
    # on the light cone M is defective and its eigenvalues are only cube-root accurate
    assume(abs(p.p_squared) > 1e-3 * max(1.0, p.scale ** 2))
    assert mo.verify_char_poly(vm).status == "pass"


@FAST
@given(coord, coord, mass)
def test_h_annihilating_polynomial(p1, p2, m):
    assert sc.verify_h_annihilating(sc.build_h(p1, p2, m)).status == "pass"


@FAST
@given(arrays(complex, 3, elements=component), arrays(complex, (3, 3), elements=component), mass)
def test_chern_simons_tensor_vanishes(A, G, m):
    F = G - G.T
    lhs, rhs = ft.tensor_identity_sides(F, A)
    size = max(1.0, np.abs(F).max() * np.abs(A).max())
    assert np.abs(lhs - rhs).max() < 1e-13 * size
    assert np.abs(ft.chern_simons_emt(F, A, m)).max() < 1e-13 * size


@FAST
@given(st.floats(0, 1e3), st.floats(0, 1e3))
def test_report_status_follows_residual(residual, tol):
    r = check("x", "ref", residual, tol)
    assert (r.status == "pass") == (residual <= tol)


@FAST
@given(st.floats(0, 1e3), st.floats(0, 1e3))
def test_negative_control_passes_only_above_threshold(observed, threshold):
    r = negative_control("x", "ref", observed, threshold)
    assert (r.status == "pass") == (observed > threshold)
