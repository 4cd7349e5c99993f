"""Hamiltonian form on the five dynamical components (mu A_1, mu A_2, mu A_3, F_31, F_23).

The Hamiltonian is derived here from the first-order wave equation itself:

* rows of the wave equation containing beta_3 give ``p0`` times a dynamical
  component in terms of the others (with p_3 = i p0);
* F_12 carries no time derivative and is eliminated either through the Gauss
  law (the vector-3 row, default; leaves the field-strength block closed) or
  through its definition F_12 = i p1 A_2 - i p2 A_1;
* the Lorentz condition p_mu A_mu = 0 supplies ``p0 A_3``.

Frequency convention: a plane wave exp(i(p.x - p0 t)) with p0 > 0 is an
eigenvector of H with eigenvalue +p0.
"""
from __future__ import annotations

import dataclasses
import functools
import math

import numpy as np
import sympy

from . import printed
from .algebra import index_position, jordan_indices
from .dkp import WaveFunction6, build_dkp_basis
from .momentum import Momentum3, match_eigenvalues
from .report import CheckReport, check

LABELS5 = ("1", "2", "3", "[31]", "[23]")
DYNAMICAL = (0, 1, 2, 4, 5)  # 6-slot positions kept in Phi


@dataclasses.dataclass(frozen=True)
class Phi5:
    vector: np.ndarray
    f31: complex
    f23: complex

    @classmethod
    def from_array(cls, a) -> "Phi5":
        a = np.asarray(a, dtype=complex)
        if a.shape != (5,):
            raise ValueError("Phi5 needs 5 components")
        return cls(a[:3].copy(), complex(a[3]), complex(a[4]))

    @property
    def array(self) -> np.ndarray:
        return np.concatenate([self.vector, [self.f31, self.f23]]).astype(complex)


@dataclasses.dataclass(frozen=True)
class Hamiltonian5:
    H: np.ndarray
    p1: float
    p2: float
    mass: float

    @property
    def pn_squared(self) -> float:
        return self.p1 ** 2 + self.p2 ** 2

    @property
    def energy(self) -> float:
        return math.sqrt(self.pn_squared + self.mass ** 2)

    @property
    def scale(self) -> float:
        return max(1.0, float(np.abs(self.H).max()))


# -- symbolic derivation ---------------------------------------------------

ELIMINATIONS = {"gauss": 2, "definition": 3}  # wave-equation row used to remove F_12


@functools.lru_cache(maxsize=4)
def derived_symbolic_h(elimination: str = "gauss") -> sympy.Matrix:
    """H(p1, p2, mu) eliminated from the wave equation; see module docstring."""
    if elimination not in ELIMINATIONS:
        raise ValueError(f"elimination must be one of {sorted(ELIMINATIONS)}")
    p1, p2, mu = printed.p1, printed.p2, printed.mu
    p0 = sympy.Symbol("p0")
    basis = build_dkp_basis(1.0)
    beta = [b.to_sympy() for b in basis.beta]
    psi = sympy.Matrix(sympy.symbols("a1 a2 a3 f12 f31 f23"))
    q = sympy.Matrix(sympy.symbols("q1:6"))  # q_k stands for p0 * Phi_k
    # Lambda psi = i(b1 p1 + b2 p2) psi - p0 b3 psi + mu P psi
    rest = (sympy.I * (beta[0] * p1 + beta[1] * p2) + mu * basis.P.to_sympy()) * psi
    b3 = beta[2]
    eqs = []
    constraint_rows = []
    for r in range(6):
        row = b3.row(r)
        if row.is_zero_matrix:
            constraint_rows.append(r)
            continue
        touched = [c for c in range(6) if row[c] != 0]
        if any(c not in DYNAMICAL or c == 2 for c in touched):
            raise RuntimeError("time-derivative row touches a non-dynamical component")
        # p0 (b3 psi)_r written with the q symbols
        timed = sum(row[c] * q[DYNAMICAL.index(c)] for c in touched)
        eqs.append(sympy.Eq(timed, rest[r]))
    if sorted(constraint_rows) != sorted(ELIMINATIONS.values()):
        raise RuntimeError(f"unexpected constraint rows {constraint_rows}")
    a1, a2, f12 = psi[0], psi[1], psi[3]
    f12_value = sympy.solve(rest[ELIMINATIONS[elimination]], f12)[0]
    # Lorentz condition p1 A1 + p2 A2 + i p0 A3 = 0, i.e. p0 (mu A3) = i(p1 mu A1 + p2 mu A2)
    eqs.append(sympy.Eq(q[2], sympy.I * (p1 * a1 + p2 * a2)))
    sol = sympy.solve([e.subs(f12, f12_value) for e in eqs], list(q), dict=True)[0]
    phi = [psi[c] for c in DYNAMICAL]
    H = sympy.Matrix(5, 5, lambda r, c: sympy.expand(sol[q[r]]).coeff(phi[c]))
    # everything must be linear in Phi with no leftover
    for r in range(5):
        leftover = sympy.expand(sol[q[r]] - sum(H[r, c] * phi[c] for c in range(5)))
        if leftover != 0:
            raise RuntimeError(f"row {r + 1} is not linear in Phi: {leftover}")
    return H.applyfunc(sympy.simplify)


def _slot5(idx) -> tuple[int | None, int]:
    pos, sign = index_position(idx)
    if pos == 3:
        raise ValueError("F_12 has no slot in the 5-component function")
    if pos is None:
        return None, 0
    return (pos if pos < 3 else pos - 1), sign


def unit5(M, N) -> sympy.Matrix:
    """5x5 matrix unit with bivector orientation signs; (3,3)-type pairs vanish."""
    out = sympy.zeros(5)
    (r, s1), (c, s2) = _slot5(M), _slot5(N)
    if r is not None and c is not None:
        out[r, c] = s1 * s2
    return out


def operator_form_h() -> sympy.Matrix:
    """Coordinate-space Hamiltonian in matrix units, with d1, d2 standing for the partials."""
    mu, d1, d2 = printed.mu, printed.d1, printed.d2
    E = unit5
    mass_part = sum((E(n, (n, 3)) for n in (1, 2, 3)), sympy.zeros(5))
    mass_part += sympy.I * (E((3, 1), (2, 3)) - E((2, 3), (3, 1)))
    return (mu * mass_part
            + d1 * (E(3, 1) - E(1, 3)) + d2 * (E(3, 2) - E(2, 3))
            + sympy.I / mu * ((E((3, 1), (3, 1)) - E((3, 2), (3, 2))) * d1 * d2
                              - E((3, 1), (2, 3)) * d2 ** 2 + E((2, 3), (3, 1)) * d1 ** 2))


def momentum_image(op: sympy.Matrix) -> sympy.Matrix:
    """Replace each partial derivative by i p_k."""
    return op.subs({printed.d1: sympy.I * printed.p1, printed.d2: sympy.I * printed.p2}).expand()


@functools.lru_cache(maxsize=4)
def _h_numeric(elimination: str):
    return sympy.lambdify((printed.p1, printed.p2, printed.mu), derived_symbolic_h(elimination), "numpy")


def build_h(p1: float, p2: float, mass: float, elimination: str = "gauss") -> Hamiltonian5:
    if not mass > 0:
        raise ValueError("mass must be positive")
    H = np.array(_h_numeric(elimination)(float(p1), float(p2), float(mass)), dtype=complex)
    return Hamiltonian5(H, float(p1), float(p2), float(mass))


# -- spectrum and projectors -----------------------------------------------

def expected_spectrum(h: Hamiltonian5) -> np.ndarray:
    pn = math.sqrt(h.pn_squared)
    return np.array([0.0, pn, -pn, h.energy, -h.energy], dtype=complex)


def annihilating_residual(h: Hamiltonian5) -> float:
    H, one = h.H, np.eye(5)
    H2 = H @ H
    poly = H2 @ (H2 - h.pn_squared * one) @ (H2 - (h.pn_squared + h.mass ** 2) * one)
    return float(np.abs(poly).max()) / h.scale ** 6


def minimal_polynomial_degree(h: Hamiltonian5, rtol: float = 1e-8) -> int:
    distinct = []
    for lam in expected_spectrum(h):
        if all(abs(lam - d) > rtol * h.scale for d in distinct):
            distinct.append(lam)
    return sum(jordan_indices(h.H, distinct, rtol))


def verify_h_annihilating(h: Hamiltonian5, tol: float = 1e-9, eig_tol: float = 1e-8) -> CheckReport:
    """Polynomial residual and spectrum, each as a fraction of its own bound (pass at <= 1)."""
    res = annihilating_residual(h)
    eig_err = match_eigenvalues(np.linalg.eigvals(h.H), expected_spectrum(h)) / h.scale
    detail = (f"polynomial residual {res:.1e} (tol {tol:.0e}); eigenvalue error {eig_err:.1e} "
              f"(tol {eig_tol:.0e}); minimal polynomial degree {minimal_polynomial_degree(h)}")
    return check("schroedinger.h_annihilating", "H^2(H^2 - pn^2)(H^2 - pn^2 - mu^2) = 0",
                 max(res / tol, eig_err / eig_tol), 1.0,
                 {"p1": h.p1, "p2": h.p2, "mass": h.mass}, detail)


def build_sigma_projectors(h: Hamiltonian5) -> tuple[np.ndarray, np.ndarray]:
    H, one = h.H, np.eye(5)
    E = h.energy
    core = H @ H @ (H @ H - h.pn_squared * one)
    norm = 2 * h.mass ** 2 * E ** 3
    return (H + E * one) @ core / norm, (H - E * one) @ core / -norm


def sigma_residuals(h: Hamiltonian5) -> dict:
    sp, sm = build_sigma_projectors(h)
    E, s = h.energy, h.scale
    n = max(1.0, float(np.abs(sp).max()), float(np.abs(sm).max()))

    def rel(m, k):
        return float(np.abs(m).max()) / (n ** k * s ** (2 - k))

    return {
        "idempotent": max(rel(sp @ sp - sp, 2), rel(sm @ sm - sm, 2)),
        "eigen": max(rel(h.H @ sp - E * sp, 1), rel(h.H @ sm + E * sm, 1)),
        "orthogonal": rel(sp @ sm, 2),
        "trace_plus": complex(np.trace(sp)),
        "trace_minus": complex(np.trace(sm)),
    }


def physical_state(h: Hamiltonian5, sign: int, seed) -> Phi5:
    """Sigma_sign applied to ``seed``, normalised to unit length."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    seed = np.asarray(seed.array if isinstance(seed, Phi5) else seed, dtype=complex)
    if seed.shape != (5,):
        raise ValueError("seed must have 5 components")
    sp, sm = build_sigma_projectors(h)
    v = (sp if sign == 1 else sm) @ seed
    size = float(np.linalg.norm(v))
    if size <= 1e-12 * max(1.0, float(np.linalg.norm(seed))):
        raise ValueError("seed lies in the kernel of the projector; choose a different seed")
    return Phi5.from_array(v / size)


def eigen_residual(h: Hamiltonian5, phi: Phi5, value: float) -> float:
    a = phi.array
    return float(np.abs(h.H @ a - value * a).max()) / (h.scale * max(1e-300, float(np.abs(a).max())))


# -- reduction of 6-component solutions --------------------------------------

def lorentz_product(psi: WaveFunction6, p: Momentum3) -> complex:
    """p_mu (mu A_mu) with the Euclidean bilinear form."""
    return complex(np.dot(p.euclidean, psi.vector))


def lorentz_project(psi: WaveFunction6, p: Momentum3) -> WaveFunction6:
    """Add the pure-gauge solution (vector part along p, no field strength) so p.A = 0."""
    pe = p.euclidean
    pp = complex(np.dot(pe, pe))
    if abs(pp) < 1e-12 * max(1.0, p.scale ** 2):
        raise ValueError("p.p vanishes; the gauge mode cannot fix the Lorentz condition")
    c = -lorentz_product(psi, p) / pp
    return WaveFunction6(psi.vector + c * pe, psi.bivector.copy(), psi.mass)


def reduction_residuals(psi: WaveFunction6, p: Momentum3) -> tuple[Phi5, float, float]:
    """Reduced state, relative |H Phi - p0 Phi| and relative F12 constraint residual."""
    size = max(1e-300, float(np.abs(psi.array).max()))
    if abs(lorentz_product(psi, p)) > 1e-9 * p.scale * size:
        raise ValueError("Lorentz condition p.A = 0 is violated; the reduction does not apply")
    phi = Phi5.from_array(psi.array[list(DYNAMICAL)])
    h = build_h(p.p1, p.p2, psi.mass)
    a = phi.array
    eig = float(np.abs(h.H @ a - p.p0 * a).max()) / (h.scale * size)
    A = psi.potential
    f12 = abs(psi.bivector[0] - (1j * p.p1 * A[1] - 1j * p.p2 * A[0])) / (max(1.0, p.scale) * size / psi.mass)
    return phi, eig, float(f12)


def reduce_from_rwe(psi: WaveFunction6, p: Momentum3, tol: float = 1e-9) -> tuple[Phi5, CheckReport]:
    phi, eig, f12 = reduction_residuals(psi, p)
    report = check("schroedinger.reduction", "H Phi = p0 Phi for a reduced wave-equation solution",
                   max(eig, f12), tol, {"p1": p.p1, "p2": p.p2, "p0": p.p0, "mass": psi.mass},
                   f"eigen residual {eig:.1e}; F12 constraint residual {f12:.1e}")
    return phi, report


# -- printed matrix ----------------------------------------------------------

def compare_printed_h() -> list:
    derived = derived_symbolic_h()
    out = printed.diff_matrices("H", derived, printed.load_symbolic("H"), LABELS5)
    out += printed.diff_matrices("H_operator", derived, momentum_image(operator_form_h()), LABELS5)
    return out


def printed_h_self_consistent() -> bool:
    """Whether the printed momentum-space matrix is the image of the printed operator form."""
    return (momentum_image(operator_form_h()) - printed.load_symbolic("H")).applyfunc(sympy.simplify).is_zero_matrix
