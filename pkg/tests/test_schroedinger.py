import numpy as np
import pytest
import sympy

from mcs_dkp import momentum as mo
from mcs_dkp import printed
from mcs_dkp import schroedinger as sc
from mcs_dkp.dkp import WaveFunction6, psi_from_potential, solution_space

p1, p2, mu = printed.p1, printed.p2, printed.mu


def test_h_entries():
    H = sc.derived_symbolic_h()
    assert H[0, 2] == -sympy.I * p1
    assert H[0, 3] == -mu
    assert sympy.simplify(H[3, 4] + sympy.I * (p2 ** 2 + mu ** 2) / mu) == 0
    # first-order in time: no p0 anywhere
    assert not any(e.has(sympy.Symbol("p0")) for e in H)


def test_h_rejects_unknown_elimination():
    with pytest.raises(ValueError):
        sc.derived_symbolic_h("nonsense")


def test_build_h_rejects_nonpositive_mass():
    with pytest.raises(ValueError):
        sc.build_h(1.0, 1.0, 0.0)


def test_rest_frame_spectrum_and_minimal_degree():
    h = sc.build_h(0.0, 0.0, 1.0)
    assert mo.match_eigenvalues(np.linalg.eigvals(h.H), [0, 0, 0, 1, -1]) < 1e-12
    assert sc.minimal_polynomial_degree(h) == 3
    assert sc.minimal_polynomial_degree(sc.build_h(2.0, 1.0, 1.0)) == 5


@pytest.mark.parametrize("pt,zeros", [((2.0, 1.0, 1.0), 1), ((0.0, 0.0, 1.0), 3), ((-4.0, 0.5, 3.0), 1)])
def test_zero_eigenvalue_multiplicity(pt, zeros):
    eig = np.linalg.eigvals(sc.build_h(*pt).H)
    assert int(np.sum(np.abs(eig) < 1e-9)) == zeros


def test_spectrum_3_4_12():
    h = sc.build_h(3.0, 4.0, 12.0)
    assert mo.match_eigenvalues(np.linalg.eigvals(h.H), [0, 5, -5, 13, -13]) < 1e-8 * 13
    np.testing.assert_allclose(sorted(sc.expected_spectrum(h).real), [-13, -5, 0, 5, 13])


@pytest.mark.parametrize("pt", [(2.0, 2.0, 1.0), (3.0, 4.0, 12.0), (0.0, 0.0, 1.0), (-7.0, 0.3, 0.2)])
def test_annihilating_polynomial(pt):
    report = sc.verify_h_annihilating(sc.build_h(*pt))
    assert report.status == "pass", report.detail
    assert sc.annihilating_residual(sc.build_h(*pt)) < 1e-9


def test_sigma_projectors():
    h = sc.build_h(2.0, 2.0, 1.0)
    sp, sm = sc.build_sigma_projectors(h)
    assert h.energy == 3.0
    assert np.abs(h.H @ sp - 3 * sp).max() < 1e-9
    assert np.abs(h.H @ sm + 3 * sm).max() < 1e-9
    assert np.abs(sp @ sm).max() < 1e-9
    assert np.trace(sp) == pytest.approx(1.0)
    r = sc.sigma_residuals(h)
    assert max(r["idempotent"], r["eigen"], r["orthogonal"]) < 1e-12


def test_physical_states():
    h = sc.build_h(2.0, 2.0, 1.0)
    seed = sc.Phi5.from_array(np.ones(5))
    plus = sc.physical_state(h, 1, seed)
    minus = sc.physical_state(h, -1, seed)
    assert sc.eigen_residual(h, plus, 3.0) < 1e-9
    assert sc.eigen_residual(h, minus, -3.0) < 1e-9
    assert np.linalg.norm(plus.array) == pytest.approx(1.0)


@pytest.mark.parametrize("sign,seed", [(1, np.zeros(5)), (2, np.ones(5)), (1, np.ones(4))])
def test_physical_state_errors(sign, seed):
    with pytest.raises(ValueError):
        sc.physical_state(sc.build_h(2.0, 2.0, 1.0), sign, seed)


def test_phi5_shape_check():
    with pytest.raises(ValueError):
        sc.Phi5.from_array(np.ones(6))


def test_reduction_of_physical_column():
    p = mo.Momentum3.on_shell(2.0, 2.0, 1.0)
    delta = mo.build_state_projectors(p).Delta[-1]
    col = delta[:, np.argmax(np.abs(delta).max(axis=0))]
    psi = sc.lorentz_project(WaveFunction6.from_array(col, 1.0), p)
    phi, report = sc.reduce_from_rwe(psi, p)
    assert report.status == "pass", report.detail
    a = phi.array
    assert np.abs(sc.build_h(2.0, 2.0, 1.0).H @ a - 3 * a).max() < 1e-9 * np.abs(a).max()


def test_reduction_of_field_equation_solutions(rng):
    for _ in range(10):
        p = mo.random_on_shell(rng, 1.0, 10.0)
        for A in solution_space(p.euclidean, 1.0):
            psi = WaveFunction6.from_array(psi_from_potential(A, p.euclidean, 1.0), 1.0)
            psi = sc.lorentz_project(psi, p)
            if np.abs(psi.array).max() < 1e-9:
                continue
            _, eig, f12 = sc.reduction_residuals(psi, p)
            assert eig < 1e-9 and f12 < 1e-12


def test_pure_gauge_state_is_rejected():
    p = mo.Momentum3.on_shell(2.0, 2.0, 1.0)
    psi = WaveFunction6(p.euclidean.astype(complex), np.zeros(3, complex), 1.0)
    assert abs(sc.lorentz_product(psi, p)) > 0.5
    with pytest.raises(ValueError):
        sc.reduce_from_rwe(psi, p)


def test_lorentz_projection_needs_nonnull_momentum():
    p = mo.Momentum3.on_shell(1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        sc.lorentz_project(WaveFunction6.from_array(np.ones(6), 1.0), p)


def test_elimination_routes_agree_on_physical_states():
    p = mo.Momentum3.on_shell(1.0, -2.0, 1.5)
    delta = mo.build_state_projectors(p).Delta[-1]
    col = delta[:, np.argmax(np.abs(delta).max(axis=0))]
    phi, _ = sc.reduce_from_rwe(sc.lorentz_project(WaveFunction6.from_array(col, 1.5), p), p)
    other = sc.build_h(p.p1, p.p2, 1.5, "definition")
    a = phi.array
    assert np.abs(other.H @ a - p.p0 * a).max() < 1e-9 * np.abs(a).max()
    assert not np.allclose(other.H, sc.build_h(p.p1, p.p2, 1.5).H)


def test_printed_operator_form_maps_to_printed_matrix():
    assert sc.printed_h_self_consistent()


def test_printed_h_differs_in_sign_on_bivector_block():
    diffs = sc.compare_printed_h()
    for target in ("H", "H_operator"):
        positions = sorted(d.position for d in diffs if d.target == target)
        assert positions == [(4, 4), (4, 5), (5, 4), (5, 5)]
    assert all(d.note.startswith("sign differs") for d in diffs)


def test_unit5_orientation():
    assert sc.unit5((1, 3), 1)[3, 0] == -1
    assert sc.unit5(3, 3)[2, 2] == 1
    with pytest.raises(ValueError):
        sc.unit5((1, 2), 1)
