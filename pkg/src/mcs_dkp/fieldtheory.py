"""Coordinate-space field theory on closed-form plane-wave superpositions.

Coordinates are Euclidean, x = (x1, x2, i t), with d_3 = -i d_t; a term
``a exp(i p.x)`` differentiates to ``i p_mu`` times itself.  Composite
tensors (energy-momentum tensors, dilatation currents) are evaluated as
:class:`~mcs_dkp.jets.Jet` objects so their divergences are exact.

K denotes the Chern-Simons density eps_{mu nu alpha} F_{mu nu} A_alpha and
F2 denotes F_{mu nu} F_{mu nu}.
"""
from __future__ import annotations

import dataclasses
import math
from typing import Sequence

import numpy as np

from .algebra import DELTA, EPS_E
from .jets import Jet, contract
from .momentum import Momentum3, build_m_matrix, random_on_shell

# (Sigma_{mu alpha})_{sigma rho} = d_{mu sigma} d_{alpha rho} - d_{alpha sigma} d_{mu rho}
LORENTZ_SIGMA = np.einsum("ms,ar->masr", DELTA, DELTA) - np.einsum("as,mr->masr", DELTA, DELTA)


# -- configurations --------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class PlaneWaveField:
    """A_nu(x) = sum_k a_k,nu exp(i p_k . x)."""

    amplitudes: tuple
    momenta: tuple
    mass: float

    def __post_init__(self):
        if len(self.amplitudes) != len(self.momenta):
            raise ValueError("one amplitude per momentum")

    def momentum_eom_residuals(self) -> list[float]:
        """Max-abs of M(p) a for each term (zero when the term solves the field equations)."""
        return [float(np.abs(build_m_matrix(p.with_mass(self.mass)).M @ a).max())
                for a, p in zip(self.amplitudes, self.momenta)]

    @property
    def scale(self) -> float:
        return max([1.0, self.mass] + [p.scale for p in self.momenta])

    def detuned(self, factor: float) -> "PlaneWaveField":
        """Same amplitudes with every p0 multiplied by ``factor`` (off shell for factor != 1)."""
        moved = tuple(dataclasses.replace(p, p0=p.p0 * factor) for p in self.momenta)
        return PlaneWaveField(self.amplitudes, moved, self.mass)


def on_shell_amplitude(p: Momentum3, rng: np.random.Generator) -> np.ndarray:
    """Random unit combination of the two null vectors of M(p)."""
    _, s, vh = np.linalg.svd(build_m_matrix(p).M)
    null = vh[-2:].conj()
    c = rng.normal(size=2) + 1j * rng.normal(size=2)
    a = c @ null
    return a / np.linalg.norm(a)


def random_on_shell_field(rng: np.random.Generator, mass: float, n_terms: int = 2,
                          pmax: float = 2.0) -> PlaneWaveField:
    momenta = []
    for _ in range(n_terms):
        if mass > 0:
            momenta.append(random_on_shell(rng, mass, pmax))
        else:
            # massless: keep the spatial momentum away from zero so the wave is not constant
            r, phi = rng.uniform(0.5, pmax), rng.uniform(0, 2 * math.pi)
            momenta.append(Momentum3.on_shell(r * math.cos(phi), r * math.sin(phi), 0.0))
    amps = tuple(on_shell_amplitude(p, rng) for p in momenta)
    return PlaneWaveField(amps, tuple(momenta), float(mass))


@dataclasses.dataclass(frozen=True)
class FieldSample:
    """Potential and its derivatives at one point; ``dA[m, n] = d_m A_n``."""

    x: np.ndarray
    A: np.ndarray
    dA: np.ndarray
    ddA: np.ndarray
    dddA: np.ndarray

    @property
    def euclidean_x(self) -> np.ndarray:
        return np.array([self.x[0], self.x[1], 1j * self.x[2]])

    @property
    def F(self) -> np.ndarray:
        return self.dA - self.dA.T

    @property
    def dF(self) -> np.ndarray:
        """dF[k, m, n] = d_k F_mn."""
        return self.ddA - self.ddA.transpose(0, 2, 1)

    # jets of the basic fields
    @property
    def A_jet(self) -> Jet:
        return Jet(self.A, self.dA)

    @property
    def dA_jet(self) -> Jet:
        return Jet(self.dA, self.ddA)

    @property
    def F_jet(self) -> Jet:
        return Jet(self.F, self.dF)

    @property
    def x_jet(self) -> Jet:
        return Jet(self.euclidean_x, np.eye(3))


def evaluate(config: PlaneWaveField, x) -> FieldSample:
    """Closed-form jets up to third order at real ``x = (x1, x2, t)``."""
    x = np.asarray(x, dtype=float)
    xe = np.array([x[0], x[1], 1j * x[2]])
    A = np.zeros(3, dtype=complex)
    dA = np.zeros((3, 3), dtype=complex)
    ddA = np.zeros((3, 3, 3), dtype=complex)
    dddA = np.zeros((3, 3, 3, 3), dtype=complex)
    for a, p in zip(config.amplitudes, config.momenta):
        ip = 1j * p.euclidean
        term = np.asarray(a) * np.exp(1j * np.dot(p.euclidean, xe))
        A += term
        dA += np.einsum("k,n->kn", ip, term)
        ddA += np.einsum("k,l,n->kln", ip, ip, term)
        dddA += np.einsum("k,l,m,n->klmn", ip, ip, ip, term)
    return FieldSample(x, A, dA, ddA, dddA)


@dataclasses.dataclass(frozen=True)
class RandomTensorSample:
    """Arbitrary potential and antisymmetric field strength; no field equations."""

    A: np.ndarray
    F: np.ndarray
    seed: int

    @classmethod
    def draw(cls, seed: int) -> "RandomTensorSample":
        rng = np.random.default_rng(seed)
        A = rng.normal(size=3) + 1j * rng.normal(size=3)
        G = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        return cls(A, G - G.T, seed)


# -- algebraic pieces ------------------------------------------------------

def f_squared(F):
    return contract("mn,mn->", F, F) if isinstance(F, Jet) else np.einsum("mn,mn->", F, F)


def cs_density(F, A):
    """K = eps_{mu nu alpha} F_{mu nu} A_alpha."""
    if isinstance(F, Jet) or isinstance(A, Jet):
        return contract("mna,mn,a->", EPS_E, F, A)
    return np.einsum("mna,mn,a->", EPS_E, F, A)


def lagrangian_of(F, A, mass: float):
    return -0.25 * f_squared(F) + 0.25 * mass * cs_density(F, A)


def lagrangian(s: FieldSample, mass: float) -> complex:
    return complex(lagrangian_of(s.F, s.A, mass))


def eom_residual(s: FieldSample, mass: float) -> np.ndarray:
    """d_mu F_{mu nu} + (mu/2) eps_{nu mu alpha} F_{mu alpha} for each nu."""
    return np.einsum("mmn->n", s.dF) + 0.5 * mass * np.einsum("nma,ma->n", EPS_E, s.F)


def canonical_pi_of(F, A, mass: float):
    """Pi_{mu nu} = -F_{mu nu} + (mu/2) eps_{mu nu alpha} A_alpha."""
    if isinstance(A, Jet):
        return -F + 0.5 * mass * contract("mna,a->mn", EPS_E, A)
    return -F + 0.5 * mass * np.einsum("mna,a->mn", EPS_E, A)


def canonical_pi(s: FieldSample, mass: float) -> np.ndarray:
    return canonical_pi_of(s.F, s.A, mass)


def _delta_times(scalar: Jet) -> Jet:
    return contract(",mn->mn", scalar, DELTA)


def canonical_emt_jet(s: FieldSample, mass: float) -> Jet:
    """T^c_{mu nu} = Pi_{mu alpha} d_nu A_alpha - delta_{mu nu} L."""
    A, dA, F = s.A_jet, s.dA_jet, s.F_jet
    pi = canonical_pi_of(F, A, mass)
    return contract("ma,na->mn", pi, dA) - _delta_times(lagrangian_of(F, A, mass))


def canonical_emt_explicit(s: FieldSample, mass: float) -> np.ndarray:
    """The same tensor written out term by term, without Pi."""
    A, dA, F = s.A, s.dA, s.F
    return (0.5 * mass * np.einsum("mab,b,na->mn", EPS_E, A, dA)
            - np.einsum("ma,na->mn", F, dA) - DELTA * lagrangian(s, mass))


@dataclasses.dataclass(frozen=True)
class EmtResult:
    T: np.ndarray
    divergence: np.ndarray
    trace: complex
    trace_expected: complex


def canonical_emt(s: FieldSample, mass: float) -> EmtResult:
    T = canonical_emt_jet(s, mass)
    expected = -0.5 * mass * cs_density(s.F, s.A) + 0.25 * f_squared(s.F)
    return EmtResult(T.value, T.divergence(0), complex(np.trace(T.value)), complex(expected))


# -- dilatation ------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class DilatationResult:
    direct: complex
    from_dimension_formula: complex
    mass_formula: complex
    from_lagrangian_formula: complex

    def spread(self) -> float:
        vals = [self.direct, self.from_dimension_formula, self.mass_formula, self.from_lagrangian_formula]
        return max(abs(a - b) for a in vals for b in vals)


def dilatation_current_jet(s: FieldSample, mass: float, d: float) -> Jet:
    """D^c_mu = x_alpha T^c_{mu alpha} + d Pi_{mu nu} A_nu."""
    T = canonical_emt_jet(s, mass)
    pi = canonical_pi_of(s.F_jet, s.A_jet, mass)
    return contract("a,ma->m", s.x_jet, T) + d * contract("mn,n->m", pi, s.A_jet)


def dilatation_divergence(s: FieldSample, mass: float, d: float) -> DilatationResult:
    K, F2 = cs_density(s.F, s.A), f_squared(s.F)
    direct = dilatation_current_jet(s, mass, d).divergence(0)
    dim_formula = 0.5 * (d - 1) * mass * K + 0.25 * (1 - 2 * d) * F2
    mass_formula = -0.25 * mass * K
    dL_dA = 0.25 * mass * np.einsum("rsn,rs->n", EPS_E, s.F)
    lag_formula = ((d + 1) * np.einsum("mn,mn->", canonical_pi(s, mass), s.dA)
                   + d * np.dot(dL_dA, s.A) - 3 * lagrangian(s, mass))
    return DilatationResult(complex(direct), complex(dim_formula), complex(mass_formula), complex(lag_formula))


# -- Belinfante ------------------------------------------------------------

def belinfante_x(pi, A) -> Jet | np.ndarray:
    """X_{beta mu nu} = Pi_{beta mu} A_nu."""
    if isinstance(pi, Jet):
        return contract("bm,n->bmn", pi, A)
    return np.einsum("bm,n->bmn", pi, A)


def belinfante_x_from_generators(pi: np.ndarray, A: np.ndarray) -> np.ndarray:
    """X from the Lorentz generators: half of [Pi_bs S^{mn}_sr - Pi_ms S^{bn}_sr - Pi_ns S^{bm}_sr] A_r."""
    S = LORENTZ_SIGMA
    return 0.5 * (np.einsum("bs,mnsr,r->bmn", pi, S, A)
                  - np.einsum("ms,bnsr,r->bmn", pi, S, A)
                  - np.einsum("ns,bmsr,r->bmn", pi, S, A))


def belinfante_emt_of(F, A, mass: float):
    """-F_{mu a} F_{nu a} + (mu/4) eps_{mu a b}(2 F_{nu a} A_b + F_{a b} A_nu) - delta L."""
    if isinstance(F, Jet):
        ff = contract("ma,na->mn", F, F)
        cs = (2 * contract("mab,na,b->mn", EPS_E, F, A) + contract("mab,ab,n->mn", EPS_E, F, A))
        return -ff + 0.25 * mass * cs - _delta_times(lagrangian_of(F, A, mass))
    ff = np.einsum("ma,na->mn", F, F)
    cs = 2 * np.einsum("mab,na,b->mn", EPS_E, F, A) + np.einsum("mab,ab,n->mn", EPS_E, F, A)
    return -ff + 0.25 * mass * cs - DELTA * lagrangian_of(F, A, mass)


def maxwell_emt(F: np.ndarray) -> np.ndarray:
    return -np.einsum("ma,na->mn", F, F) + 0.25 * DELTA * f_squared(F)


@dataclasses.dataclass(frozen=True)
class BelinfanteResult:
    T: np.ndarray
    X: np.ndarray
    divergence: np.ndarray
    trace: complex
    improvement_residual: float  # |T^c + d_b X_bmn - T^B|
    maxwell_residual: float
    generator_residual: float  # X from generators vs shortcut
    antisymmetry_residual: float
    symmetry_residual: float


def belinfante(s: FieldSample, mass: float) -> BelinfanteResult:
    A, F = s.A_jet, s.F_jet
    TB = belinfante_emt_of(F, A, mass)
    X = belinfante_x(canonical_pi_of(F, A, mass), A)
    Tc = canonical_emt_jet(s, mass)
    improved = Tc.value + np.einsum("bbmn->mn", X.grad)
    pi = canonical_pi(s, mass)
    return BelinfanteResult(
        T=TB.value,
        X=X.value,
        divergence=TB.divergence(0),
        trace=complex(np.trace(TB.value)),
        improvement_residual=float(np.abs(improved - TB.value).max()),
        maxwell_residual=float(np.abs(TB.value - maxwell_emt(s.F)).max()),
        generator_residual=float(np.abs(belinfante_x_from_generators(pi, s.A) - X.value).max()),
        antisymmetry_residual=float(np.abs(X.value + X.value.transpose(1, 0, 2)).max()),
        symmetry_residual=float(np.abs(TB.value - TB.value.T).max()),
    )


def field_virial_of(pi, A, d: float = 0.5):
    """V_mu from the generator bracket: Pi_ab [d d_am d_br - (Sigma_am)_br] A_r."""
    bracket = d * np.einsum("am,br->abmr", DELTA, DELTA) - LORENTZ_SIGMA.transpose(0, 2, 1, 3)
    if isinstance(pi, Jet):
        return contract("ab,abmr,r->m", pi, bracket, A)
    return np.einsum("ab,abmr,r->m", pi, bracket, A)


@dataclasses.dataclass(frozen=True)
class BelinfanteDilatation:
    V: np.ndarray
    div_V: complex
    div_V_expected: complex
    div_D_belinfante: complex
    div_D_canonical: complex
    virial_forms_residual: float  # bracket form vs (1/2) Pi_{a mu} A_a


def belinfante_dilatation(s: FieldSample, mass: float) -> BelinfanteDilatation:
    A, F = s.A_jet, s.F_jet
    pi = canonical_pi_of(F, A, mass)
    V = field_virial_of(pi, A)
    half = 0.5 * contract("am,a->m", pi, A)
    DB = contract("a,ma->m", s.x_jet, belinfante_emt_of(F, A, mass)) + V
    DC = dilatation_current_jet(s, mass, 0.5)
    K, F2 = cs_density(s.F, s.A), f_squared(s.F)
    return BelinfanteDilatation(
        V=V.value,
        div_V=complex(V.divergence(0)),
        div_V_expected=complex(0.25 * F2 - 0.25 * mass * K),
        div_D_belinfante=complex(DB.divergence(0)),
        div_D_canonical=complex(DC.divergence(0)),
        virial_forms_residual=float(np.abs(V.value - half.value).max()),
    )


# -- dual vector -----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class DualVectorResult:
    dual: np.ndarray
    divergence: complex
    klein_gordon: np.ndarray


def dual_vector(s: FieldSample, mass: float) -> DualVectorResult:
    """F~_mu = (1/2) eps_{mu nu alpha} F_{nu alpha}, its divergence and (d^2 - mu^2) F~."""
    dual = 0.5 * np.einsum("mna,na->m", EPS_E, s.F)
    div = 0.5 * np.einsum("mna,mna->", EPS_E, s.dF)
    # d_k d_k F_{na} = dddA[k,k,n,a] - dddA[k,k,a,n]
    lap_F = np.einsum("kkna->na", s.dddA) - np.einsum("kkan->na", s.dddA)
    kg = 0.5 * np.einsum("mna,na->m", EPS_E, lap_F) - mass ** 2 * dual
    return DualVectorResult(dual, complex(div), kg)


# -- symmetric tensor from the metric form -----------------------------------

def symmetric_emt_with_metric(F: np.ndarray, A: np.ndarray, mass: float, g: np.ndarray) -> np.ndarray:
    """Metric-variation result with indices raised by ``g`` (F and A carry lower indices).

    T_mn = -F_m^a F_na + (mu/4) eps_m^{ab}(2 F_na A_b + F_ab A_n) - g_mn L,
    with L = -(1/4) g^ma g^bs F_ab F_ms + (mu/4) eps_rsb g^rm g^sn g^ba F_mn A_a.
    """
    ginv = np.linalg.inv(g)
    F_up = np.einsum("ms,sa->ma", F, ginv)
    eps_up = np.einsum("mrs,ra,sb->mab", EPS_E, ginv, ginv)
    lag = (-0.25 * np.einsum("ma,bs,ab,ms->", ginv, ginv, F, F)
           + 0.25 * mass * np.einsum("rsb,rm,sn,ba,mn,a->", EPS_E, ginv, ginv, ginv, F, A))
    return (-np.einsum("ma,na->mn", F_up, F)
            + 0.25 * mass * (2 * np.einsum("mab,na,b->mn", eps_up, F, A)
                             + np.einsum("mab,ab,n->mn", eps_up, F, A))
            - g * lag)


def chern_simons_emt(F: np.ndarray, A: np.ndarray, mass: float) -> np.ndarray:
    lhs, rhs = tensor_identity_sides(F, A)
    return 0.25 * mass * (lhs - rhs)


def tensor_identity_sides(F: np.ndarray, A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """eps_{mab}(2 F_na A_b + F_ab A_n) and delta_mn eps_{rsa} F_rs A_a."""
    lhs = 2 * np.einsum("mab,na,b->mn", EPS_E, F, A) + np.einsum("mab,ab,n->mn", EPS_E, F, A)
    return lhs, DELTA * cs_density(F, A)


@dataclasses.dataclass(frozen=True)
class SymmetricTensorChecks:
    identity_residual: float
    cs_emt_residual: float
    metric_form_residual: float


def symmetric_tensor_checks(sample: RandomTensorSample, mass: float) -> SymmetricTensorChecks:
    F, A = sample.F, sample.A
    size = max(1.0, float(np.abs(F).max()) * float(np.abs(A).max()))
    lhs, rhs = tensor_identity_sides(F, A)
    metric = symmetric_emt_with_metric(F, A, mass, np.eye(3))
    scale = max(1.0, float(np.abs(F).max()) ** 2, mass * size)
    return SymmetricTensorChecks(
        identity_residual=float(np.abs(lhs - rhs).max()) / size,
        cs_emt_residual=float(np.abs(chern_simons_emt(F, A, mass)).max()) / size,
        metric_form_residual=float(np.abs(metric - belinfante_emt_of(F, A, mass)).max()) / scale,
    )


def sample_points(rng: np.random.Generator, n: int, box: float = 2.0) -> list[np.ndarray]:
    return [rng.uniform(-box, box, size=3) for _ in range(n)]


def random_sample_from_jets(rng: np.random.Generator) -> FieldSample:
    """Arbitrary (not on-shell) sample: random A, dA, symmetric ddA."""
    def c(*shape):
        return rng.normal(size=shape) + 1j * rng.normal(size=shape)
    dd = c(3, 3, 3)
    dd = dd + dd.transpose(1, 0, 2)
    return FieldSample(rng.uniform(-1, 1, 3), c(3), c(3, 3), dd, np.zeros((3, 3, 3, 3), complex))
