"""Momentum-space operators: Lambda(p), the projectors Pi, S and Delta, the
Pauli-Lubanski operator W, and the 3x3 vector-potential matrix M.

Residuals of numerical identities are reported relative to the natural
magnitude of the operands: for a product of matrices the max-abs residual is
divided by the product of their max-abs entries (each floored at 1), and for
polynomials in an operator by ``scale**degree`` with
``scale = max(mu, |p1|, |p2|, |p0|)``.
"""
from __future__ import annotations

import csv
import dataclasses
import functools
import math
from pathlib import Path
from typing import Sequence

import numpy as np
import sympy
from scipy.optimize import brentq, linear_sum_assignment

from . import printed
from .algebra import EPS_R, LABELS, commutator, jordan_indices, matrix_poly_residual, numeric_rank
from .dkp import DkpBasis, build_dkp_basis, rwe_matrix
from .report import CheckReport, check, negative_control


@dataclasses.dataclass(frozen=True)
class Momentum3:
    """Energy-momentum (p1, p2, p0) with mass; Euclidean form (p1, p2, i p0)."""

    p1: float
    p2: float
    p0: float
    mass: float

    @classmethod
    def on_shell(cls, p1: float, p2: float, mass: float, branch: int = 1) -> "Momentum3":
        if mass < 0:
            raise ValueError("mass must be non-negative")
        return cls(float(p1), float(p2), branch * math.sqrt(p1 * p1 + p2 * p2 + mass * mass), float(mass))

    @property
    def euclidean(self) -> np.ndarray:
        return np.array([self.p1, self.p2, 1j * self.p0])

    @property
    def p_squared(self) -> float:
        return self.p1 ** 2 + self.p2 ** 2 - self.p0 ** 2

    @property
    def scale(self) -> float:
        return max(self.mass, abs(self.p1), abs(self.p2), abs(self.p0))

    def is_on_shell(self, tol: float = 1e-9) -> bool:
        return abs(self.p_squared + self.mass ** 2) <= tol * max(1.0, self.scale ** 2)

    def with_mass(self, mass: float) -> "Momentum3":
        return dataclasses.replace(self, mass=mass)


def random_on_shell(rng: np.random.Generator, mass: float, pmax: float) -> Momentum3:
    """Spatial momentum uniform in the disc of radius ``pmax``, positive energy."""
    r = pmax * math.sqrt(rng.uniform())
    phi = rng.uniform(0, 2 * math.pi)
    return Momentum3.on_shell(r * math.cos(phi), r * math.sin(phi), mass)


@functools.lru_cache(maxsize=32)
def _basis(mass: float) -> DkpBasis:
    return build_dkp_basis(mass)


def _rel(residual: np.ndarray, *factors) -> float:
    denom = 1.0
    for f in factors:
        denom *= max(1.0, float(np.abs(f).max()))
    return float(np.abs(residual).max()) / denom


def _require_on_shell(p: Momentum3, what: str) -> None:
    if not p.is_on_shell():
        raise ValueError(f"{what} needs an on-shell momentum (p^2 = {p.p_squared:.6g}, mu = {p.mass})")


# -- Lambda and Pi -------------------------------------------------------

def build_lambda(p: Momentum3) -> np.ndarray:
    return rwe_matrix(_basis(p.mass), p.euclidean)


def lambda_poly_residual(p: Momentum3) -> float:
    mu = p.mass
    return matrix_poly_residual(build_lambda(p), [0, mu, -mu, 2 * mu]) / p.scale ** 4


def verify_lambda_minpoly(p: Momentum3, tol: float = 1e-10, floor: float = 1e-3) -> CheckReport:
    """Annihilating quartic on shell; off shell it must visibly fail."""
    res = lambda_poly_residual(p)
    inputs = {"p1": p.p1, "p2": p.p2, "p0": p.p0, "mass": p.mass}
    ref = "Lambda(Lambda^2 - mu^2)(Lambda - 2mu) = 0"
    if p.is_on_shell():
        mu = p.mass
        idx = jordan_indices(build_lambda(p), [0, mu, -mu, 2 * mu])
        minimal = all(k == 1 for k in idx)
        return check("momentum.lambda_poly", ref, res, tol, inputs,
                     f"Jordan indices {idx}; quartic is {'minimal' if minimal else 'not minimal'}")
    return negative_control("momentum.lambda_poly.off_shell", ref, res, floor, inputs)


def build_pi(p: Momentum3) -> np.ndarray:
    """Pi = (Lambda^2 - mu^2)(Lambda - 2mu) / (2 mu^3)."""
    _require_on_shell(p, "Pi")
    mu = p.mass
    if mu <= 0:
        raise ValueError("mass must be positive")
    lam = build_lambda(p)
    one = np.eye(6)
    return (lam @ lam - mu ** 2 * one) @ (lam - 2 * mu * one) / (2 * mu ** 3)


# -- W and spin projectors -------------------------------------------------

def build_w(p: Momentum3) -> np.ndarray:
    """W = p_mu J_mu."""
    b = _basis(p.mass) if p.mass > 0 else _basis(1.0)
    return sum(j.to_complex() * pk for j, pk in zip(b.Jvec, p.euclidean))


def w_poly_residual(p: Momentum3) -> float:
    W = build_w(p)
    root = np.sqrt(complex(p.p_squared))
    return matrix_poly_residual(W, [0, root, -root]) / p.scale ** 3


def verify_w_poly(p: Momentum3, tol: float = 1e-10) -> CheckReport:
    _require_on_shell(p, "W polynomial check")
    return check("momentum.w_poly", "W(W^2 - p^2) = 0", w_poly_residual(p), tol,
                 {"p1": p.p1, "p2": p.p2, "p0": p.p0, "mass": p.mass})


def spin_projectors_from_w(W: np.ndarray, mass: float) -> dict:
    """S(+1), S(-1), S(0) from Sigma = -i W / mass (mass may carry either sign)."""
    sigma = -1j * W / mass
    one = np.eye(W.shape[0])
    sq = sigma @ sigma
    return {1: 0.5 * (sq + sigma), -1: 0.5 * (sq - sigma), 0: one - sq}


def build_spin_projectors(p: Momentum3) -> dict:
    _require_on_shell(p, "spin projectors")
    if p.mass <= 0:
        raise ValueError("mass must be positive")
    return spin_projectors_from_w(build_w(p), p.mass)


SPIN_LABELS = {1: "+1", -1: "-1", 0: "0"}


@dataclasses.dataclass(frozen=True)
class ProjectorSet:
    Pi: np.ndarray
    S: dict
    Delta: dict


def build_state_projectors(p: Momentum3) -> ProjectorSet:
    pi = build_pi(p)
    S = build_spin_projectors(p)
    return ProjectorSet(pi, S, {s: pi @ m for s, m in S.items()})


def operator_suite(p: Momentum3) -> dict:
    """Relative residuals of every on-shell operator identity at ``p``."""
    lam, W = build_lambda(p), build_w(p)
    basis = _basis(p.mass)
    phat = basis.beta_hat(p.euclidean)
    P = basis.P.to_complex()
    ps = build_state_projectors(p)
    pi, S, D = ps.Pi, ps.S, ps.Delta
    one = np.eye(6)
    out = {
        "lambda_poly": lambda_poly_residual(p),
        "pi_idempotent": _rel(pi @ pi - pi, pi, pi),
        "lambda_pi": _rel(lam @ pi, lam, pi),
        "w_lambda": _rel(commutator(W, lam), W, lam),
        "w_P": _rel(commutator(W, P), W, P),
        "w_phat": _rel(commutator(W, phat), W, phat),
        "w_poly": w_poly_residual(p),
        "spin_complete": _rel(S[1] + S[-1] + S[0] - one, S[1], S[-1]),
    }
    spins = (1, -1, 0)
    out["spin_idempotent"] = max(_rel(S[s] @ S[s] - S[s], S[s], S[s]) for s in spins)
    out["spin_orthogonal"] = max(_rel(S[a] @ S[b], S[a], S[b]) for a in spins for b in spins if a != b)
    out["pi_spin_commute"] = max(_rel(commutator(pi, S[s]), pi, S[s]) for s in spins)
    # Delta is formed as Pi @ S, so its rounding error scales with those factors
    out["lambda_delta"] = max(_rel(lam @ D[s], lam, pi, S[s]) for s in spins)
    out["delta_idempotent"] = max(_rel(D[s] @ D[s] - D[s], pi, S[s], pi, S[s]) for s in spins)
    flipped = spin_projectors_from_w(W, -p.mass)
    out["mass_flip"] = max(_rel(S[1] - flipped[-1], S[1]), _rel(S[-1] - flipped[1], S[-1]))
    return out


def projector_ranks(p: Momentum3) -> dict:
    ps = build_state_projectors(p)
    out = {"Pi": numeric_rank(ps.Pi)}
    out.update({f"S({SPIN_LABELS[s]})": numeric_rank(m) for s, m in ps.S.items()})
    out.update({f"Delta({SPIN_LABELS[s]})": numeric_rank(m) for s, m in ps.Delta.items()})
    out["trace_Pi"] = complex(np.trace(ps.Pi))
    return out


# -- the 3x3 matrix M -----------------------------------------------------

@dataclasses.dataclass(frozen=True)
class VectorMatrixM:
    M: np.ndarray
    momentum: Momentum3


def build_m_matrix(p: Momentum3) -> VectorMatrixM:
    """M_{mu nu} = p^2 d_{mu nu} - p_mu p_nu - mu e_{mu alpha nu} p_alpha, e_123 = +1."""
    pe = p.euclidean
    M = p.p_squared * np.eye(3) - np.outer(pe, pe) - p.mass * np.einsum("man,a->mn", EPS_R, pe)
    return VectorMatrixM(M, p)


def char_poly_coefficients(M: np.ndarray) -> np.ndarray:
    """Coefficients of det(M - x) from x^n down to x^0 (Faddeev-LeVerrier)."""
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    c = [1.0 + 0j]
    Mk = np.zeros_like(M)
    for k in range(1, n + 1):
        Mk = M @ (Mk + c[-1] * np.eye(n))
        c.append(-np.trace(Mk) / k)
    # det(x - M) = sum c_k x^{n-k}; det(M - x) = (-1)^n det(x - M)
    return (-1) ** n * np.array(c)


@dataclasses.dataclass(frozen=True)
class CharPoly:
    coefficients: np.ndarray
    expected_coefficients: np.ndarray
    eigenvalues: np.ndarray
    expected_eigenvalues: np.ndarray


def expected_char_poly(p: Momentum3) -> tuple[np.ndarray, np.ndarray]:
    """-x(x^2 - 2 p^2 x + p^2 (p^2 + mu^2)) and its roots 0, p^2 +- sqrt(-p^2 mu^2)."""
    s, mu = p.p_squared, p.mass
    coeffs = np.array([-1.0, 2 * s, -s * (s + mu ** 2), 0.0], dtype=complex)
    root = np.sqrt(complex(-s * mu ** 2))
    return coeffs, np.array([0.0, s + root, s - root], dtype=complex)


def char_poly_eigs(vm: VectorMatrixM) -> CharPoly:
    coeffs, eigs = expected_char_poly(vm.momentum)
    return CharPoly(char_poly_coefficients(vm.M), coeffs, np.linalg.eigvals(vm.M), eigs)


def match_eigenvalues(found: Sequence[complex], expected: Sequence[complex]) -> float:
    """Largest distance under the best one-to-one pairing."""
    found, expected = np.asarray(found), np.asarray(expected)
    cost = np.abs(found[:, None] - expected[None, :])
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


def verify_char_poly(vm: VectorMatrixM, coeff_tol: float = 1e-10, eig_tol: float = 1e-8) -> CheckReport:
    cp = char_poly_eigs(vm)
    s2 = max(1.0, vm.momentum.scale ** 2)
    coeff_err = max(abs(a - b) / s2 ** k for k, (a, b) in
                    enumerate(zip(cp.coefficients, cp.expected_coefficients)))
    eig_err = match_eigenvalues(cp.eigenvalues, cp.expected_eigenvalues) / s2
    p = vm.momentum
    # both tolerances folded into one residual: each error as a fraction of its own bound
    res = max(coeff_err / coeff_tol, eig_err / eig_tol)
    return check("momentum.char_poly", "characteristic polynomial and eigenvalues of M", res, 1.0,
                 {"p1": p.p1, "p2": p.p2, "p0": p.p0, "mass": p.mass},
                 f"coefficient error {coeff_err:.1e} (tol {coeff_tol:.0e}), "
                 f"eigenvalue error {eig_err:.1e} (tol {eig_tol:.0e})")


def hamilton_cayley_residual(vm: VectorMatrixM) -> float:
    s, mu = vm.momentum.p_squared, vm.momentum.mass
    M = vm.M
    poly = M @ (M @ M - 2 * s * M + s * (s + mu ** 2) * np.eye(3))
    return float(np.abs(poly).max()) / max(1.0, vm.momentum.scale ** 2) ** 3


def verify_hamilton_cayley(vm: VectorMatrixM, tol: float = 1e-9) -> CheckReport:
    p = vm.momentum
    return check("momentum.hamilton_cayley", "M[M^2 - 2p^2 M + p^2(p^2 + mu^2)] = 0",
                 hamilton_cayley_residual(vm), tol, {"p1": p.p1, "p2": p.p2, "p0": p.p0, "mass": p.mass})


# -- dispersion relation ---------------------------------------------------

def gauge_fixed_det(p1: float, p2: float, p0: float, mass: float) -> float:
    """det(M - p p^T).

    det M vanishes for every p because M p = 0 (the gauge mode); removing that
    direction leaves -p^4 (p^2 + mu^2), which changes sign only on shell.
    """
    p = Momentum3(p1, p2, p0, mass)
    pe = p.euclidean
    return float(np.linalg.det(build_m_matrix(p).M - np.outer(pe, pe)).real)


@dataclasses.dataclass(frozen=True)
class DispersionRow:
    p1: float
    p2: float
    p0_found: float
    p0_expected: float
    abs_err: float
    error: str = ""


def find_energy(p1: float, p2: float, mass: float) -> float:
    """Positive p0 at which the gauge-fixed determinant changes sign.

    The squared light-cone factor (p^2)^2 is divided out: its double root
    never changes sign, but rounding near it can fake one.  The search
    starts inside the timelike region, halfway to the nearest the mass
    shell can lie, so the divisor never vanishes on the bracket.
    """
    pn2 = p1 * p1 + p2 * p2
    f = lambda p0: gauge_fixed_det(p1, p2, p0, mass) / (pn2 - p0 * p0) ** 2  # noqa: E731
    pn = math.sqrt(pn2)
    lo = pn + 0.5 * mass ** 2 / (2 * pn + mass)
    step = max(mass, 1.0)
    hi = lo + step
    for _ in range(200):
        if f(lo) * f(hi) < 0:
            return brentq(f, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
        lo, hi = hi, hi + step
        step *= 2
    raise RuntimeError(f"no sign change bracketed for p=({p1}, {p2}), mu={mass}")


def dispersion_scan(p1range: tuple, p2range: tuple, mass: float, grid: int) -> list[DispersionRow]:
    if grid < 2:
        raise ValueError("grid must be at least 2")
    if not mass > 0:
        raise ValueError("mass must be positive")
    rows = []
    for a in np.linspace(*p1range, grid):
        for b in np.linspace(*p2range, grid):
            a, b = float(a), float(b)
            expected = math.sqrt(a * a + b * b + mass * mass)
            try:
                found = find_energy(a, b, mass)
                rows.append(DispersionRow(a, b, found, expected, abs(found - expected)))
            except (RuntimeError, ValueError) as exc:
                rows.append(DispersionRow(a, b, math.nan, expected, math.nan, str(exc)))
    return rows


def max_relative_error(rows: Sequence[DispersionRow]) -> float:
    errs = [r.abs_err / r.p0_expected for r in rows]
    return math.inf if any(math.isnan(e) for e in errs) else max(errs, default=0.0)


def write_scan_csv(rows: Sequence[DispersionRow], path) -> None:
    with open(Path(path), "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["p1", "p2", "p0_found", "p0_expected", "abs_err"])
        for r in rows:
            w.writerow([repr(r.p1), repr(r.p2), repr(r.p0_found), repr(r.p0_expected), repr(r.abs_err)])


# -- printed matrices ------------------------------------------------------

def symbolic_operators(mass_symbol=printed.mu) -> dict:
    """Lambda, W and S(+-1) with p3 kept as an independent symbol."""
    basis = _basis(1.0)
    p = (printed.p1, printed.p2, printed.p3)
    beta = [b.to_sympy() for b in basis.beta]
    J = [j.to_sympy() for j in basis.Jvec]
    lam = sympy.I * sum((b * pk for b, pk in zip(beta, p)), sympy.zeros(6)) + mass_symbol * basis.P.to_sympy()
    W = sum((j * pk for j, pk in zip(J, p)), sympy.zeros(6))
    sigma = -sympy.I * W / mass_symbol
    sq = sigma * sigma
    return {
        "Lambda": lam.expand(),
        "W": W.expand(),
        "S_plus": ((sq + sigma) / 2).expand(),
        "S_minus": ((sq - sigma) / 2).expand(),
    }


def compare_printed_momentum() -> list:
    out = []
    for name, derived in symbolic_operators().items():
        out.extend(printed.diff_matrices(name, derived, printed.load_symbolic(name), LABELS))
    return out
