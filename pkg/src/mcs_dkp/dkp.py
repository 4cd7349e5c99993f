"""Constant 6x6 operators of the first-order wave equation and their relations.

The operators are assembled from sums of matrix units exactly as their
defining formulas read; only the orientation of the mass-term contraction in
``P`` is fixed by demanding that every row of ``(i beta.p + mu P) Psi = 0``
reproduce a component of the field equations.  With eps_123 = -i the literal
orientation yields the equations with ``mu -> -mu``.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import printed
from .algebra import (
    BIVECTORS,
    EPS_E,
    LABELS,
    GaussMatrix,
    LeviCivita,
    basis_matrix,
    commutator,
    index_position,
)
from .report import CheckReport, check

R = (1, 2, 3)
E = basis_matrix
I6 = GaussMatrix.identity(6)

# sign of the eps-contraction in P relative to its literal form
MASS_TERM_ORIENTATION = -1


@dataclasses.dataclass(frozen=True)
class WaveFunction6:
    """Psi = (mu A_nu, F_[12], F_[31], F_[23])."""

    vector: np.ndarray
    bivector: np.ndarray
    mass: float

    @classmethod
    def from_fields(cls, A, F, mass: float) -> "WaveFunction6":
        """``F`` is either an antisymmetric 3x3 array or (F12, F31, F23)."""
        A = np.asarray(A, dtype=complex)
        F = np.asarray(F, dtype=complex)
        if F.shape == (3, 3):
            F = np.array([F[a - 1, b - 1] for a, b in BIVECTORS])
        return cls(mass * A, F, float(mass))

    @classmethod
    def from_array(cls, psi, mass: float) -> "WaveFunction6":
        psi = np.asarray(psi, dtype=complex)
        return cls(psi[:3].copy(), psi[3:].copy(), float(mass))

    @property
    def array(self) -> np.ndarray:
        return np.concatenate([self.vector, self.bivector]).astype(complex)

    @property
    def potential(self) -> np.ndarray:
        return self.vector / self.mass

    def is_physically_real(self, tol: float = 1e-12) -> bool:
        """Components 1, 2, [12] real; A_3 = i A_0 and F_[31], F_[23] imaginary."""
        v, b = self.vector, self.bivector
        real_parts = np.abs(np.imag([v[0], v[1], b[0]]))
        imag_parts = np.abs(np.real([v[2], b[1], b[2]]))
        return bool(max(real_parts.max(), imag_parts.max()) <= tol)


@dataclasses.dataclass(frozen=True)
class DkpBasis:
    mass: float
    beta: tuple
    P: GaussMatrix
    Pbar: GaussMatrix
    J: Mapping
    Jvec: tuple
    eta: GaussMatrix

    def beta_hat(self, p) -> np.ndarray:
        """beta_mu p_mu for a Euclidean 3-vector ``p``."""
        return sum(b.to_complex() * pk for b, pk in zip(self.beta, p))


def _beta(mu: int) -> GaussMatrix:
    out = GaussMatrix.zeros(6)
    for nu in R:
        out = out + E(nu, (nu, mu)) + E((nu, mu), nu)
    return out


def _projector_p(orientation: int = MASS_TERM_ORIENTATION) -> GaussMatrix:
    # accumulate 2P so the halves stay integral
    twice = GaussMatrix.zeros(6)
    for nu, m in itertools.product(R, R):
        twice = twice + E((nu, m), (nu, m))
    for nu, s, b in itertools.product(R, R, R):
        twice = twice + E(nu, (s, b)) * (orientation * LeviCivita.EUCLIDEAN(nu, s, b))
    return twice.halve()


def _generator(mu: int, nu: int) -> GaussMatrix:
    out = E(mu, nu) - E(nu, mu)
    for lam in R:
        out = out + E((lam, mu), (lam, nu)) - E((lam, nu), (lam, mu))
    return out


def _eta() -> GaussMatrix:
    twice = GaussMatrix.zeros(6)
    for m in (1, 2):
        twice = twice + (E(m, m) + E((m, 3), (m, 3))) * 2
    twice = twice - E(3, 3) * 2
    for m, n in itertools.product((1, 2), repeat=2):
        twice = twice - E((m, n), (m, n))
    return twice.halve()


def build_dkp_basis(mass: float = 1.0) -> DkpBasis:
    if not mass > 0:
        raise ValueError(f"mass must be positive, got {mass!r}")
    beta = tuple(_beta(m) for m in R)
    pbar = sum((E(m, m) for m in R), GaussMatrix.zeros(6))
    J = {(a, b): _generator(a, b) for a, b in itertools.product(R, R)}
    jvec = []
    for m in R:
        twice = GaussMatrix.zeros(6)
        for a, b in itertools.product(R, R):
            twice = twice + J[a, b] * LeviCivita.EUCLIDEAN(m, a, b)
        jvec.append(twice.halve())
    return DkpBasis(float(mass), beta, _projector_p(), pbar, J, tuple(jvec), _eta())


# -- exact relation checks ------------------------------------------------

def dkp_triple(basis: DkpBasis, mu: int, nu: int, alpha: int) -> GaussMatrix:
    b = basis.beta
    d = lambda i, j: int(i == j)  # noqa: E731
    return (b[mu - 1] @ b[nu - 1] @ b[alpha - 1] + b[alpha - 1] @ b[nu - 1] @ b[mu - 1]
            - b[alpha - 1] * d(mu, nu) - b[mu - 1] * d(alpha, nu))


def _exact_report(id, paper_ref, residuals: dict, detail="") -> CheckReport:
    worst = max(residuals.values(), default=0.0)
    failing = sorted(k for k, v in residuals.items() if v > 0)
    if failing:
        detail = (detail + "; " if detail else "") + "nonzero: " + ", ".join(failing[:8])
    return check(id, paper_ref, worst, 0.0, {"relations": len(residuals)}, detail)


def verify_dkp_algebra(basis: DkpBasis) -> CheckReport:
    res = {f"({m},{n},{a})": dkp_triple(basis, m, n, a).max_abs()
           for m, n, a in itertools.product(R, R, R)}
    for m in R:
        sq = basis.beta[m - 1] @ basis.beta[m - 1]
        res[f"beta{m}^2 idempotent"] = (sq @ sq - sq).max_abs()
    return _exact_report("dkp.algebra", "DKP trilinear relation; beta_k^2 are projectors", res,
                         "27 triples and 3 squares, exact")


def projector_relations(basis: DkpBasis) -> dict:
    P, Pb = basis.P, basis.Pbar
    res = {
        "P^2=P": (P @ P - P).max_abs(),
        "Pbar^2=Pbar": (Pb @ Pb - Pb).max_abs(),
        "P Pbar=0": (P @ Pb).max_abs(),
    }
    for m, b in zip(R, basis.beta):
        res[f"beta{m} Pbar + Pbar beta{m} = beta{m}"] = (b @ Pb + Pb @ b - b).max_abs()
        res[f"beta{m} hermitian"] = (b.H - b).max_abs()
    return res


def verify_projector_relations(basis: DkpBasis) -> CheckReport:
    res = projector_relations(basis)
    diff = basis.P.H - basis.P
    return _exact_report("dkp.projectors", "projectors P, Pbar and the gauge relations", res,
                         f"P^+ != P at {diff.nnz()} entries")


def generator_relations(basis: DkpBasis) -> dict:
    b, J, Jv, P = basis.beta, basis.J, basis.Jvec, basis.P
    d = lambda i, j: int(i == j)  # noqa: E731
    res = {}
    for m, a, n in itertools.product(R, R, R):
        lhs = commutator(b[m - 1], J[a, n])
        rhs = b[n - 1] * d(a, m) - b[a - 1] * d(n, m)
        res[f"[beta{m},J{a}{n}]"] = (lhs - rhs).max_abs()
    for a, n in itertools.product(R, R):
        res[f"[P,J{a}{n}]"] = commutator(P, J[a, n]).max_abs()
        res[f"J{a}{n}=[beta{a},beta{n}]"] = (J[a, n] - commutator(b[a - 1], b[n - 1])).max_abs()
    for m, n, a, c in itertools.product(R, R, R, R):
        rhs = J[m, c] * d(n, a) + J[n, a] * d(m, c) - J[m, a] * d(n, c) - J[n, c] * d(m, a)
        res[f"[J{m}{n},J{a}{c}]"] = (commutator(J[m, n], J[a, c]) - rhs).max_abs()
    for m, n in itertools.product(R, R):
        rhs = GaussMatrix.zeros(6)
        for a in R:
            rhs = rhs + Jv[a - 1] * LeviCivita.EUCLIDEAN(n, m, a)
        res[f"[J_{m},J_{n}]"] = (commutator(Jv[m - 1], Jv[n - 1]) - rhs).max_abs()
        res[f"[J_{m},beta{n}]"] = (commutator(Jv[m - 1], b[n - 1])
                                   - momentum_commutator_rhs(basis, m, n)).max_abs()
    return res


def momentum_commutator_rhs(basis: DkpBasis, m: int, n: int, sign: int = -1) -> GaussMatrix:
    """Coefficient of p_n in [J_m, beta.p], i.e. sign * eps_{m n a} beta_a.

    The derived generators give ``sign = -1`` (equivalently eps_{n m a}); the
    typeset relation carries ``+1`` and is reported as an erratum.
    """
    rhs = GaussMatrix.zeros(6)
    for a in R:
        rhs = rhs + basis.beta[a - 1] * (sign * LeviCivita.EUCLIDEAN(m, n, a))
    return rhs


def verify_generator_relations(basis: DkpBasis) -> CheckReport:
    return _exact_report("dkp.generators", "Lorentz generators: covariance, closure, pseudovector form",
                         generator_relations(basis))


def eta_relations(basis: DkpBasis) -> dict:
    eta, b = basis.eta, basis.beta
    res = {
        "eta hermitian": (eta.H - eta).max_abs(),
        "eta^2=1": (eta @ eta - I6).max_abs(),
        "eta P = P eta": commutator(eta, basis.P).max_abs(),
        "eta beta3 = beta3^+ eta^+": (eta @ b[2] - b[2].H @ eta.H).max_abs(),
    }
    for m in (1, 2):
        res[f"eta beta{m} = -beta{m}^+ eta^+"] = (eta @ b[m - 1] + b[m - 1].H @ eta.H).max_abs()
    return res


def verify_eta_relations(basis: DkpBasis) -> CheckReport:
    return _exact_report("dkp.eta", "hermitianizing matrix eta", eta_relations(basis))


# -- wave functions -------------------------------------------------------

def conjugate(psi: WaveFunction6, basis: DkpBasis) -> np.ndarray:
    """Row vector Psi^+ eta."""
    return psi.array.conj() @ basis.eta.to_complex()


def neutral_currents(psi: WaveFunction6, basis: DkpBasis) -> np.ndarray:
    """(Psibar beta_mu Psi) for mu = 1, 2, 3."""
    bar = conjugate(psi, basis)
    return np.array([bar @ b.to_complex() @ psi.array for b in basis.beta])


def gauge_shift(psi: WaveFunction6, grad_lambda, basis: DkpBasis) -> WaveFunction6:
    """Psi + Pbar phi with phi = (mu d_mu Lambda, 0)."""
    phi = np.concatenate([psi.mass * np.asarray(grad_lambda, dtype=complex), np.zeros(3)])
    return WaveFunction6.from_array(psi.array + basis.Pbar.to_complex() @ phi, psi.mass)


@dataclasses.dataclass(frozen=True)
class PolynomialGauge:
    """Gauge function sum c * x1^a x2^b x3^c given as {(a, b, c): coefficient}."""

    coefficients: Mapping

    def _deriv(self, x, orders) -> complex:
        x = np.asarray(x, dtype=complex)
        total = 0j
        for powers, c in self.coefficients.items():
            term = complex(c)
            for k, (n, o) in enumerate(zip(powers, orders)):
                if o > n:
                    term = 0j
                    break
                fall = 1
                for j in range(o):
                    fall *= n - j
                term *= fall * x[k] ** (n - o)
            total += term
        return total

    def gradient(self, x) -> np.ndarray:
        return np.array([self._deriv(x, np.eye(3, dtype=int)[k]) for k in range(3)])

    def hessian(self, x) -> np.ndarray:
        h = np.empty((3, 3), dtype=complex)
        for i, j in itertools.product(range(3), range(3)):
            orders = np.zeros(3, dtype=int)
            orders[i] += 1
            orders[j] += 1
            h[i, j] = self._deriv(x, orders)
        return h


def gauge_family(rng: np.random.Generator | None = None) -> list[PolynomialGauge]:
    fam = [
        PolynomialGauge({(1, 0, 0): 1.0}),
        PolynomialGauge({(1, 1, 0): 1.0}),
        PolynomialGauge({(2, 0, 0): 1.0, (0, 3, 0): 1.0}),
    ]
    if rng is not None:
        monos = [m for m in itertools.product(range(4), repeat=3) if sum(m) <= 3]
        fam.append(PolynomialGauge({m: complex(*rng.normal(size=2)) for m in monos}))
    return fam


def gauge_closure_residual(basis: DkpBasis, gauge: PolynomialGauge, x) -> float:
    """|(1 - Pbar) beta_mu d_mu phi| at ``x`` with phi = (mu d Lambda, 0)."""
    hess = gauge.hessian(x)
    proj = (I6 - basis.Pbar).to_complex()
    total = np.zeros(6, dtype=complex)
    for m in range(3):
        dphi = np.concatenate([basis.mass * hess[m], np.zeros(3)])
        total += proj @ basis.beta[m].to_complex() @ dphi
    return float(np.abs(total).max())


def verify_gauge_closure(basis: DkpBasis, rng: np.random.Generator,
                         family: Sequence[PolynomialGauge] | None = None,
                         n_points: int = 20) -> CheckReport:
    family = list(family) if family is not None else gauge_family(rng)
    worst = 0.0
    for g in family:
        for _ in range(n_points):
            x1, x2, t = rng.uniform(-2, 2, 3)
            x = np.array([x1, x2, 1j * t])
            worst = max(worst, gauge_closure_residual(basis, g, x))
    return check("dkp.gauge_closure", "U(1) gauge invariance of the first-order equation",
                 worst, 1e-12, {"family": len(family), "points": n_points})


# -- equivalence with the second-order field equations -------------------

def rwe_matrix(basis: DkpBasis, p) -> np.ndarray:
    """Lambda = i beta_mu p_mu + mu P for a Euclidean momentum (p1, p2, i p0)."""
    return 1j * basis.beta_hat(p) + basis.mass * basis.P.to_complex()


def component_equations(p, mass: float) -> np.ndarray:
    """Rows of the field equations in momentum space, as functionals on Psi.

    Rows 1-3: i p_mu F_{mu nu} + (mu/2) eps_{nu mu alpha} F_{mu alpha}.
    Rows 4-6: i p_a A_b - i p_b A_a - F_{ab} for the canonical bivectors,
    with A = Psi_vector / mu.
    """
    p = np.asarray(p, dtype=complex)
    out = np.zeros((6, 6), dtype=complex)
    for nu in R:
        for m, a in itertools.product(R, R):
            col, sign = index_position((m, a))
            if col is None:
                continue
            if a == nu:
                out[nu - 1, col] += 1j * p[m - 1] * sign
            out[nu - 1, col] += 0.5 * mass * EPS_E[nu - 1, m - 1, a - 1] * sign
    for k, (a, b) in enumerate(BIVECTORS):
        row = 3 + k
        out[row, b - 1] += 1j * p[a - 1] / mass
        out[row, a - 1] -= 1j * p[b - 1] / mass
        out[row, 3 + k] -= 1.0
    return out


def potential_operator(p, mass: float) -> np.ndarray:
    """3x3 matrix K with (field equation rows)(mu A, F(A)) = K A."""
    p = np.asarray(p, dtype=complex)
    eqs = component_equations(p, mass)
    K = np.empty((3, 3), dtype=complex)
    for s in range(3):
        A = np.eye(3)[s]
        K[:, s] = eqs[:3] @ psi_from_potential(A, p, mass)
    return K


def field_strength_from_potential(A, p) -> np.ndarray:
    """Antisymmetric F_{mu nu} = i (p_mu A_nu - p_nu A_mu)."""
    A, p = np.asarray(A, dtype=complex), np.asarray(p, dtype=complex)
    return 1j * (np.outer(p, A) - np.outer(A, p))


def psi_from_potential(A, p, mass: float) -> np.ndarray:
    F = field_strength_from_potential(A, p)
    return WaveFunction6.from_fields(A, F, mass).array


def solution_space(p, mass: float, rtol: float = 1e-9) -> np.ndarray:
    """Orthonormal rows spanning the potentials that solve the field equations."""
    K = potential_operator(p, mass)
    _, s, vh = np.linalg.svd(K)
    scale = max(1.0, s[0])
    return vh[s <= rtol * scale].conj()


def row_constants(basis: DkpBasis, p) -> tuple[np.ndarray, float]:
    """Per-row constants c_r with Lambda_r = c_r * (component equation r).

    Returns the constants and the worst relative mismatch of the fit.
    """
    lam = rwe_matrix(basis, p)
    eqs = component_equations(p, basis.mass)
    consts = np.empty(6, dtype=complex)
    worst = 0.0
    for r in range(6):
        e, l = eqs[r], lam[r]
        c = np.vdot(e, l) / np.vdot(e, e)
        consts[r] = c
        worst = max(worst, np.abs(l - c * e).max() / max(np.abs(l).max(), 1e-300))
    return consts, float(worst)


def verify_rwe_equivalence(basis: DkpBasis, momenta: Iterable, rng: np.random.Generator,
                           tol: float = 1e-12) -> CheckReport:
    """First-order equation against the field equations at on-shell momenta.

    For each momentum a solution of the field equations is drawn from the
    null space of the potential operator and must be annihilated by Lambda;
    independently, every row of Lambda must be a fixed multiple of the
    matching component equation.
    """
    worst_psi = worst_rows = 0.0
    constants = None
    spread = 0.0
    n = 0
    for p in momenta:
        if abs(p.mass - basis.mass) > 1e-15:
            raise ValueError("momentum mass differs from basis mass")
        pe = p.euclidean
        space = solution_space(pe, basis.mass)
        if len(space) == 0:
            raise ValueError(f"no solution of the field equations at {p!r}")
        coeff = rng.normal(size=len(space)) + 1j * rng.normal(size=len(space))
        A = coeff @ space
        psi = psi_from_potential(A, pe, basis.mass)
        eom = np.abs(component_equations(pe, basis.mass) @ psi).max() / np.abs(psi).max()
        if eom > 1e-10:
            raise ValueError(f"amplitude violates the field equations (residual {eom:.2e})")
        worst_psi = max(worst_psi, np.linalg.norm(rwe_matrix(basis, pe) @ psi) / np.linalg.norm(psi))
        c, mismatch = row_constants(basis, pe)
        worst_rows = max(worst_rows, mismatch)
        if constants is None:
            constants = c
        spread = max(spread, float(np.abs(c - constants).max()))
        n += 1
    consts = [] if constants is None else [complex(np.round(x, 12)) for x in constants]
    return check(
        "dkp.rwe_equivalence",
        "first-order equation equivalent to the field equations and F = dA",
        max(worst_psi, worst_rows, spread), tol,
        {"momenta": n, "mass": basis.mass, "row_constants": consts},
        f"|Lambda Psi|/|Psi| <= {worst_psi:.1e}; row fit {worst_rows:.1e}; constant spread {spread:.1e}",
    )


# -- printed matrices ------------------------------------------------------

CONSTANT_FIXTURES = {
    "beta1": lambda b: b.beta[0],
    "beta2": lambda b: b.beta[1],
    "beta3": lambda b: b.beta[2],
    "P": lambda b: b.P,
    "J12": lambda b: b.J[1, 2],
    "J13": lambda b: b.J[1, 3],
    "J23": lambda b: b.J[2, 3],
    "eta": lambda b: b.eta,
}


def compare_printed(basis: DkpBasis, names: Iterable[str] | None = None) -> list:
    """Entry-by-entry diff of derived constant matrices against the fixtures."""
    out = []
    for name in names or CONSTANT_FIXTURES:
        derived = CONSTANT_FIXTURES[name](basis)
        out.extend(printed.diff_matrices(name, derived, printed.load_constant(name), LABELS))
    return out


def compare_momentum_commutator(basis: DkpBasis) -> list:
    """Typeset [J_m, beta.p] = eps_{m n a} p_n beta_a against the derived generators."""
    out = []
    for m, n in itertools.product(R, R):
        derived = commutator(basis.Jvec[m - 1], basis.beta[n - 1])
        typeset = momentum_commutator_rhs(basis, m, n, sign=+1)
        if derived != typeset:
            out.append(printed.ErratumReport(
                "J_beta_commutator", (m, n), f"{-1}*eps_{{{m}{n}a}} beta_a",
                f"eps_{{{m}{n}a}} beta_a",
                "sign differs; holds with eps_{n m a} (the order of the closure relation)"))
    return out
