"""Verification suites: each turns a :class:`SuiteConfig` into a list of check records.

Random inputs come from :func:`~mcs_dkp.report.substream` keyed by the check
id, so adding or removing a check never changes the inputs of another.  The
configurable tolerance ``tol`` replaces every tolerance that defaults to 1e-9;
the tighter fixed tolerances (exact algebra, 1e-10, 1e-12, 1e-13) are not
affected by it.
"""
from __future__ import annotations

import dataclasses
import itertools
import math
import re
from typing import Callable

import numpy as np

from . import dkp, fieldtheory as ft, momentum as mo, schroedinger as sc
from .report import ERRATUM, FAIL, CheckReport, check, negative_control, substream

SUITES = ("algebra", "dkp", "momentum", "schroedinger", "fieldtheory", "errata")

N_RANDOM = 50


@dataclasses.dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    mass: float = 1.0
    p1: float = 2.0
    p2: float = 2.0
    seed: int = 42
    tol: float = 1e-9

    def __post_init__(self):
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if not self.mass > 0:
            raise ValueError("mass must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")

    def rng(self, check_id: str) -> np.random.Generator:
        return substream(self.seed, check_id)

    @property
    def momentum(self) -> mo.Momentum3:
        return mo.Momentum3.on_shell(self.p1, self.p2, self.mass)


def _slug(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", text.lower()).strip("_")


def _guarded(id: str, ref: str, fn: Callable[[], list]) -> list:
    """Run a check builder; an unexpected exception becomes a failing record."""
    try:
        return fn()
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        return [CheckReport(id, ref, {}, math.inf, 0.0, FAIL, f"{type(exc).__name__}: {exc}")]


# -- algebra ---------------------------------------------------------------

def algebra_suite(cfg: SuiteConfig) -> list[CheckReport]:
    basis = dkp.build_dkp_basis(cfg.mass)
    out = []
    for m, n, a in itertools.product(dkp.R, repeat=3):
        out.append(check(f"algebra.triple.{m}{n}{a}", "DKP trilinear relation",
                         dkp.dkp_triple(basis, m, n, a).max_abs(), 0.0, {"indices": [m, n, a]},
                         "exact Gaussian-integer arithmetic"))
    for name, res in dkp.projector_relations(basis).items():
        out.append(check(f"algebra.projector.{_slug(name)}", "projectors P, Pbar and their relations",
                         res, 0.0, {}, name))
    for m in dkp.R:
        sq = basis.beta[m - 1] @ basis.beta[m - 1]
        out.append(check(f"algebra.beta_square.{m}", "beta_k^2 is a projector",
                         (sq @ sq - sq).max_abs(), 0.0, {}, f"beta{m}^2 idempotent"))
    return out


# -- dkp -------------------------------------------------------------------

def random_real_psi(rng: np.random.Generator, mass: float) -> dkp.WaveFunction6:
    """Physically real fields: A_1, A_2, F_12 real; A_3 = i A_0, F_31, F_23 imaginary."""
    r = rng.normal(size=6)
    A = np.array([r[0], r[1], 1j * r[2]])
    F = np.array([r[3], 1j * r[4], 1j * r[5]])
    return dkp.WaveFunction6.from_fields(A, F, mass)


def neutral_current_check(cfg: SuiteConfig, basis: dkp.DkpBasis) -> CheckReport:
    id = "dkp.neutral_current"
    rng = cfg.rng(id)
    worst = 0.0
    P, Pd = basis.P.to_complex(), basis.P.H.to_complex()
    for _ in range(N_RANDOM):
        psi = random_real_psi(rng, cfg.mass)
        bar = dkp.conjugate(psi, basis)
        expected = np.concatenate([psi.vector, -psi.bivector])
        size = float(np.abs(psi.array).max()) ** 2
        worst = max(worst,
                    float(np.abs(bar - expected).max()) / math.sqrt(size),
                    float(np.abs(dkp.neutral_currents(psi, basis)).max()) / size,
                    abs(bar @ Pd @ psi.array - bar @ P @ psi.array) / size)
    return check(id, "conjugate wave function and vanishing current for neutral fields", worst, 1e-14,
                 {"samples": N_RANDOM},
                 "Psibar = (mu A, -F); Psibar beta_mu Psi = 0; Psibar P^+ Psi = Psibar P Psi")


def dkp_suite(cfg: SuiteConfig) -> list[CheckReport]:
    basis = dkp.build_dkp_basis(cfg.mass)
    out = [
        dkp.verify_dkp_algebra(basis),
        dkp.verify_projector_relations(basis),
        dkp.verify_generator_relations(basis),
        dkp.verify_eta_relations(basis),
        dkp.verify_gauge_closure(basis, cfg.rng("dkp.gauge_closure")),
        neutral_current_check(cfg, basis),
    ]
    rng = cfg.rng("dkp.rwe_equivalence")
    momenta = [mo.random_on_shell(rng, cfg.mass, 10 * cfg.mass) for _ in range(100)]
    out += _guarded("dkp.rwe_equivalence", "first-order equation equivalence",
                    lambda: [dkp.verify_rwe_equivalence(basis, momenta, rng)])
    for name in ("beta1", "beta2", "beta3", "J12", "J13", "J23", "eta"):
        diffs = dkp.compare_printed(basis, [name])
        out.append(check(f"dkp.printed_match.{name}", "typeset constant matrix", len(diffs), 0,
                         {"matrix": name}, f"{len(diffs)} differing entries"))
    return out


# -- momentum --------------------------------------------------------------

OPERATOR_TOLERANCES = {
    "lambda_poly": 1e-10, "pi_idempotent": 1e-10, "lambda_pi": 1e-10,
    "w_lambda": 1e-12, "w_P": 1e-12, "w_phat": 1e-12, "w_poly": 1e-10,
    "spin_complete": 1e-12, "spin_idempotent": 1e-12, "spin_orthogonal": 1e-12,
    "pi_spin_commute": 1e-10, "lambda_delta": 1e-10, "delta_idempotent": 1e-10,
    "mass_flip": 1e-12,
}


def operator_checks(cfg: SuiteConfig) -> list[CheckReport]:
    rng = cfg.rng("momentum.operators")
    momenta = [cfg.momentum, mo.Momentum3.on_shell(0, 0, cfg.mass)]
    momenta += [mo.random_on_shell(rng, cfg.mass, 10 * cfg.mass) for _ in range(N_RANDOM)]
    worst: dict = {}
    for p in momenta:
        for k, v in mo.operator_suite(p).items():
            worst[k] = max(worst.get(k, 0.0), v)
    return [check(f"momentum.operators.{k}", "on-shell projector and Pauli-Lubanski identities",
                  worst[k], tol, {"momenta": len(momenta), "mass": cfg.mass},
                  "worst relative residual over the sample")
            for k, tol in OPERATOR_TOLERANCES.items()]


def momentum_suite(cfg: SuiteConfig) -> list[CheckReport]:
    p = cfg.momentum
    out = [mo.verify_lambda_minpoly(p)]
    out += _guarded("momentum.operators", "on-shell operators", lambda: operator_checks(cfg))

    rng = cfg.rng("momentum.lambda_poly.off_shell")
    worst_low = math.inf
    for _ in range(N_RANDOM):
        q = mo.random_on_shell(rng, cfg.mass, 10 * cfg.mass)
        q = dataclasses.replace(q, p0=q.p0 * rng.uniform(1.1, 2.0))
        worst_low = min(worst_low, mo.lambda_poly_residual(q))
    out.append(negative_control("momentum.lambda_poly.off_shell", "annihilating quartic fails off shell",
                                worst_low, 1e-3, {"momenta": N_RANDOM}, "smallest residual over the sample"))

    rng = cfg.rng("momentum.w_poly.off_shell")
    off = [mo.Momentum3(*rng.uniform(-10, 10, 3) * cfg.mass, cfg.mass) for _ in range(N_RANDOM)]
    out.append(check("momentum.w_poly.off_shell", "W(W^2 - p^2) = 0 away from the mass shell",
                     max(mo.w_poly_residual(q) for q in off), 1e-10, {"momenta": N_RANDOM},
                     "informational: the cubic needs no field equations"))

    ranks_here, ranks_rest = mo.projector_ranks(p), mo.projector_ranks(mo.Momentum3.on_shell(0, 0, cfg.mass))
    mismatch = sum(ranks_here[k] != ranks_rest[k] for k in ranks_here if not k.startswith("trace"))
    out.append(check("momentum.projector_ranks", "ranks of Pi, S and Delta", mismatch, 0,
                     {k: v for k, v in ranks_here.items() if not k.startswith("trace")},
                     f"trace Pi = {ranks_here['trace_Pi'].real:.0f}; identical at rest and at p"))

    rng = cfg.rng("momentum.m_matrix")
    sample = [p, mo.Momentum3(1, 0, 0, 2.0), mo.Momentum3(0, 0, 1, 1.0), mo.Momentum3(0, 0, 0, cfg.mass)]
    for _ in range(N_RANDOM):
        q = mo.random_on_shell(rng, cfg.mass, 10 * cfg.mass)
        if rng.uniform() < 0.5:
            q = dataclasses.replace(q, p0=rng.uniform(-10, 10) * cfg.mass)
        sample.append(q)
    reps = [mo.verify_char_poly(mo.build_m_matrix(q)) for q in sample]
    worst = max(reps, key=lambda r: r.residual)
    out.append(dataclasses.replace(worst, inputs={"momenta": len(sample), "worst": worst.inputs}))
    hc = [mo.hamilton_cayley_residual(mo.build_m_matrix(q)) for q in sample]
    out.append(check("momentum.hamilton_cayley", "Hamilton-Cayley for M", max(hc), cfg.tol,
                     {"momenta": len(sample)}, "relative to max(1, scale^2)^3"))

    # Lambda's off-diagonal blocks compose to -M: ties the 6x6 and 3x3 conventions together
    schur = 0.0
    for q in sample:
        lam = mo.build_lambda(q.with_mass(cfg.mass)) if q.mass != cfg.mass else mo.build_lambda(q)
        M = mo.build_m_matrix(q.with_mass(cfg.mass)).M
        schur = max(schur, float(np.abs(lam[:3, 3:] @ lam[3:, :3] + M).max()) / max(1.0, q.scale) ** 2)
    out.append(check("momentum.m_from_lambda", "vector-block reduction of Lambda gives M", schur, 1e-12,
                     {"momenta": len(sample)}, "B C + M = 0 for Lambda = [[mu, B], [C, mu P']]"))

    gauge_det = max(abs(mo.gauge_fixed_det(q.p1, q.p2, math.sqrt(q.p1 ** 2 + q.p2 ** 2 + cfg.mass ** 2),
                                           cfg.mass)) / max(1.0, q.scale) ** 6 for q in sample[4:])
    plain_det = max(abs(np.linalg.det(mo.build_m_matrix(q).M)) / max(1.0, q.scale) ** 6 for q in sample)
    out.append(check("momentum.gauge_fixed_det", "determinant condition for nontrivial solutions",
                     gauge_det, 1e-10, {"momenta": len(sample) - 4},
                     f"det M itself vanishes for every p (M p = 0), max {plain_det:.1e}; "
                     "the scan uses det(M - p p^T) = -p^4 (p^2 + mu^2)"))

    rows = mo.dispersion_scan((-5.0, 5.0), (-5.0, 5.0), cfg.mass, 20)
    out.append(check("momentum.dispersion_scan", "dispersion relation from the determinant condition",
                     mo.max_relative_error(rows), 1e-6, {"grid": 20, "range": [-5.0, 5.0], "mass": cfg.mass},
                     f"{len(rows)} grid points; p0 = sqrt(p^2 + mu^2)"))
    found = mo.find_energy(3.0, 4.0, 12.0)
    out.append(check("momentum.dispersion_exact_row", "dispersion relation at (3, 4), mu = 12",
                     abs(found - 13.0) / 13.0, 1e-6, {"p1": 3.0, "p2": 4.0, "mass": 12.0},
                     f"p0 found {found!r}"))
    return out


# -- schroedinger ----------------------------------------------------------

def _reduction_reports(cfg: SuiteConfig) -> list[CheckReport]:
    rng = cfg.rng("schroedinger.reduction")
    momenta = [cfg.momentum] + [mo.random_on_shell(rng, cfg.mass, 10 * cfg.mass) for _ in range(20)]
    worst_eig, worst_f12, worst_routes, count = 0.0, 0.0, 0.0, 0
    for p in momenta:
        delta = mo.build_state_projectors(p).Delta
        for col in np.concatenate([d.T for d in delta.values()]):
            if np.abs(col).max() < 1e-9:
                continue
            psi = sc.lorentz_project(dkp.WaveFunction6.from_array(col, cfg.mass), p)
            if np.abs(psi.array).max() < 1e-9 * np.abs(col).max():
                continue  # pure gauge: removed entirely by the Lorentz projection
            phi, eig, f12 = sc.reduction_residuals(psi, p)
            worst_eig, worst_f12 = max(worst_eig, eig), max(worst_f12, f12)
            other = sc.build_h(p.p1, p.p2, cfg.mass, "definition")
            a = phi.array
            worst_routes = max(worst_routes, float(np.abs(other.H @ a - p.p0 * a).max())
                               / (other.scale * float(np.abs(a).max())))
            count += 1
    inputs = {"momenta": len(momenta), "states": count, "mass": cfg.mass}
    return [
        check("schroedinger.reduction", "reduced wave-equation solutions are H eigenvectors",
              worst_eig, cfg.tol, inputs, "H Phi = +p0 Phi after Lorentz projection"),
        check("schroedinger.reduction.f12", "eliminated component obeys its definition",
              worst_f12, 1e-12, inputs, "F12 = i p1 A2 - i p2 A1"),
        check("schroedinger.reduction.elimination_routes", "both eliminations of F12 agree on physical states",
              worst_routes, cfg.tol, inputs, "Gauss-law and definition forms of H"),
    ]


def schroedinger_suite(cfg: SuiteConfig) -> list[CheckReport]:
    out = []
    consistent = sc.printed_h_self_consistent()
    out.append(check("schroedinger.printed_operator_image", "typeset H equals the d -> i p image of its operator form",
                     0 if consistent else 1, 0, {}, "symbolic comparison in p1, p2, mu"))
    rng = cfg.rng("schroedinger.h_annihilating")
    points = [(cfg.p1, cfg.p2, cfg.mass), (3.0, 4.0, 12.0), (0.0, 0.0, 1.0), (2.0, 2.0, 1.0)]
    for _ in range(N_RANDOM):
        mu = cfg.mass * rng.uniform(0.2, 5.0)
        points.append((rng.uniform(-10, 10) * mu, rng.uniform(-10, 10) * mu, mu))
    hs = [sc.build_h(*pt) for pt in points]
    reps = [sc.verify_h_annihilating(h, cfg.tol) for h in hs]
    worst = max(reps, key=lambda r: r.residual)
    out.append(dataclasses.replace(worst, inputs={"points": len(points), "worst": worst.inputs}))
    h345 = sc.build_h(3.0, 4.0, 12.0)
    eigs = np.sort_complex(np.round(np.linalg.eigvals(h345.H), 10))
    out.append(check("schroedinger.spectrum_3_4_12", "spectrum of H at (3, 4), mu = 12",
                     mo.match_eigenvalues(np.linalg.eigvals(h345.H), [0, 5, -5, 13, -13]) / 13.0, 1e-8,
                     {"p1": 3.0, "p2": 4.0, "mass": 12.0}, f"eigenvalues {[round(e.real, 8) for e in eigs]}"))

    worst_sig = {"idempotent": 0.0, "eigen": 0.0, "orthogonal": 0.0}
    traces = set()
    for h in hs:
        r = sc.sigma_residuals(h)
        for k in worst_sig:
            worst_sig[k] = max(worst_sig[k], r[k])
        traces.add((round(r["trace_plus"].real, 9), round(r["trace_minus"].real, 9)))
    for k, v in worst_sig.items():
        out.append(check(f"schroedinger.sigma.{k}", "energy-sign projectors", v, cfg.tol,
                         {"points": len(hs)}, f"traces (Sigma+, Sigma-) observed: {sorted(traces)}"))

    h = sc.build_h(cfg.p1, cfg.p2, cfg.mass)
    seed = np.ones(5)
    res = max(sc.eigen_residual(h, sc.physical_state(h, s, seed), s * h.energy) for s in (1, -1))
    out.append(check("schroedinger.physical_state", "projected seeds are H eigenvectors with eigenvalue +-E",
                     res, cfg.tol, {"p1": cfg.p1, "p2": cfg.p2, "mass": cfg.mass, "seed": [1, 1, 1, 1, 1]}))
    out += _guarded("schroedinger.reduction", "reduction of wave-equation solutions",
                    lambda: _reduction_reports(cfg))
    return out


# -- field theory ----------------------------------------------------------

N_CONFIGS = 5
N_POINTS = 20


def _field_worst(cfg: SuiteConfig, mass: float, key: str) -> dict:
    rng = cfg.rng(key)
    w: dict = {}

    def up(k, v):
        w[k] = max(w.get(k, 0.0), float(v))

    for _ in range(N_CONFIGS):
        field = ft.random_on_shell_field(rng, mass)
        up("amplitude_eom", max(field.momentum_eom_residuals()))
        for x in ft.sample_points(rng, N_POINTS):
            s = ft.evaluate(field, x)
            up("eom", np.abs(ft.eom_residual(s, mass)).max())
            e = ft.canonical_emt(s, mass)
            up("canonical_conservation", np.abs(e.divergence).max())
            up("canonical_two_paths", np.abs(e.T - ft.canonical_emt_explicit(s, mass)).max())
            up("dilatation_four_way", ft.dilatation_divergence(s, mass, 0.5).spread())
            b = ft.belinfante(s, mass)
            up("belinfante_conservation", np.abs(b.divergence).max())
            up("belinfante_improvement", b.improvement_residual)
            up("belinfante_symmetry", b.symmetry_residual)
            up("belinfante_maxwell_form", b.maxwell_residual)
            up("belinfante_x_generators", b.generator_residual)
            up("belinfante_x_antisymmetry", b.antisymmetry_residual)
            bd = ft.belinfante_dilatation(s, mass)
            up("virial_two_forms", bd.virial_forms_residual)
            up("virial_divergence", abs(bd.div_V - bd.div_V_expected))
            up("dilatation_belinfante_equals_canonical", abs(bd.div_D_belinfante - bd.div_D_canonical))
            dv = ft.dual_vector(s, mass)
            up("dual_divergence", abs(dv.divergence))
            up("dual_klein_gordon", np.abs(dv.klein_gordon).max())
    return w


def fieldtheory_suite(cfg: SuiteConfig) -> list[CheckReport]:
    T9 = cfg.tol
    tolerances = {
        "amplitude_eom": 1e-12, "eom": 1e-10, "canonical_conservation": T9, "canonical_two_paths": 1e-12,
        "dilatation_four_way": T9, "belinfante_conservation": T9, "belinfante_improvement": T9,
        "belinfante_symmetry": T9, "belinfante_maxwell_form": 1e-12, "belinfante_x_generators": 1e-12,
        "belinfante_x_antisymmetry": 0.0, "virial_two_forms": 1e-12, "virial_divergence": 1e-12,
        "dilatation_belinfante_equals_canonical": T9, "dual_divergence": 1e-12, "dual_klein_gordon": T9,
    }
    out = []
    inputs = {"configs": N_CONFIGS, "points": N_POINTS, "terms": 2, "mass": cfg.mass}
    w = _field_worst(cfg, cfg.mass, "fieldtheory.on_shell")
    for k, tol in tolerances.items():
        out.append(check(f"fieldtheory.{k}", "field theory on on-shell superpositions", w[k], tol, inputs))

    # off-shell negative controls
    rng = cfg.rng("fieldtheory.off_shell")
    low_eom = low_kg = math.inf
    for _ in range(N_CONFIGS):
        field = ft.random_on_shell_field(rng, cfg.mass).detuned(1.2)
        for x in ft.sample_points(rng, 4):
            s = ft.evaluate(field, x)
            low_eom = min(low_eom, float(np.abs(ft.eom_residual(s, cfg.mass)).max()))
            low_kg = min(low_kg, float(np.abs(ft.dual_vector(s, cfg.mass).klein_gordon).max()))
    out.append(negative_control("fieldtheory.off_shell.eom", "field equations fail for detuned p0", low_eom, 1e-3))
    out.append(negative_control("fieldtheory.off_shell.klein_gordon", "Klein-Gordon fails for detuned p0",
                                low_kg, 1e-3))

    # trace identities hold without field equations
    rng = cfg.rng("fieldtheory.traces")
    worst_c = worst_b = 0.0
    for _ in range(N_RANDOM):
        s = ft.random_sample_from_jets(rng)
        e = ft.canonical_emt(s, cfg.mass)
        worst_c = max(worst_c, abs(e.trace - e.trace_expected))
        worst_b = max(worst_b, abs(np.trace(ft.belinfante_emt_of(s.F, s.A, cfg.mass)) + 0.25 * ft.f_squared(s.F)))
    out.append(check("fieldtheory.trace.canonical", "trace of the canonical tensor", worst_c, 1e-12,
                     {"samples": N_RANDOM}, "arbitrary A, dA"))
    out.append(check("fieldtheory.trace.belinfante", "trace of the Belinfante tensor", worst_b, 1e-12,
                     {"samples": N_RANDOM}, "arbitrary A, dA"))

    # Maxwell limit: the dilatation divergence vanishes only at d = 1/2
    rng = cfg.rng("fieldtheory.maxwell_dimension")
    fields = [ft.random_on_shell_field(rng, 0.0) for _ in range(N_CONFIGS)]
    samples = [ft.evaluate(f, x) for f in fields for x in ft.sample_points(rng, 4)]
    for d in (0.3, 0.4, 0.5, 0.6, 0.7):
        # relative to F^2, the only invariant left when mu = 0
        vals = [abs(ft.dilatation_divergence(s, 0.0, d).direct) / max(1e-300, abs(ft.f_squared(s.F)))
                for s in samples]
        id = f"fieldtheory.maxwell_dimension.d_{str(d).replace('.', '_')}"
        if d == 0.5:
            out.append(check(id, "Maxwell limit is scale invariant at d = 1/2", max(vals), T9,
                             {"d": d, "samples": len(samples)}, "|div D| / |F^2|"))
        else:
            out.append(negative_control(id, "Maxwell limit breaks scale invariance for d != 1/2",
                                        min(vals), 1e-3, {"d": d, "samples": len(samples)},
                                        f"|div D| / |F^2| = |1 - 2d| / 4 = {abs(1 - 2 * d) / 4:.3f}"))
    w0 = _field_worst(cfg, 0.0, "fieldtheory.maxwell")
    out.append(check("fieldtheory.maxwell.dilatation_belinfante", "Maxwell limit: improved current",
                     w0["dilatation_belinfante_equals_canonical"], T9, {"mass": 0.0}))

    rng = cfg.rng("fieldtheory.symmetric_tensor")
    seeds = rng.integers(0, 2 ** 31, size=100)
    worst = {"identity_residual": 0.0, "cs_emt_residual": 0.0, "metric_form_residual": 0.0}
    for sd in seeds:
        r = ft.symmetric_tensor_checks(ft.RandomTensorSample.draw(int(sd)), cfg.mass)
        for k in worst:
            worst[k] = max(worst[k], getattr(r, k))
    for k, tol in (("identity_residual", 1e-13), ("cs_emt_residual", 1e-13), ("metric_form_residual", 1e-12)):
        out.append(check(f"fieldtheory.symmetric_tensor.{k.removesuffix('_residual')}",
                         "symmetric tensor from the metric form; Chern-Simons part vanishes",
                         worst[k], tol, {"samples": 100}, "relative to |A| |F|"))
    return out


# -- errata ----------------------------------------------------------------

def errata_suite(cfg: SuiteConfig) -> list[CheckReport]:
    basis = dkp.build_dkp_basis(cfg.mass)
    out = []
    for e in dkp.compare_printed(basis):
        out.append(e.to_check("typeset constant matrix"))
    for e in dkp.compare_momentum_commutator(basis):
        out.append(e.to_check("typeset commutator of the pseudovector generator with beta"))
    for e in mo.compare_printed_momentum():
        out.append(e.to_check("typeset momentum-space operator"))
    for e in sc.compare_printed_h():
        out.append(e.to_check("typeset Hamiltonian"))
    return out


SUITE_FUNCTIONS = {
    "algebra": algebra_suite,
    "dkp": dkp_suite,
    "momentum": momentum_suite,
    "schroedinger": schroedinger_suite,
    "fieldtheory": fieldtheory_suite,
    "errata": errata_suite,
}


def run_suites(cfg: SuiteConfig) -> list[CheckReport]:
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    reports = []
    for name in names:
        reports += _guarded(f"{name}.suite", f"{name} suite", lambda n=name: SUITE_FUNCTIONS[n](cfg))
    ids = [r.id for r in reports]
    if len(ids) != len(set(ids)):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        raise RuntimeError(f"duplicate check ids: {dup}")
    return sorted(reports, key=lambda r: r.id)


def summary(reports: list[CheckReport]) -> dict:
    return {
        "total": len(reports),
        "pass": sum(r.status == "pass" for r in reports),
        "fail": sum(r.status == FAIL for r in reports),
        "erratum-note": sum(r.status == ERRATUM for r in reports),
    }
