"""Named states that saturate the limits, and the vacuum-plus-one-manifold reduction."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import eta_opt
from .errors import (
    ConstructionError,
    DegenerateError,
    NonOptimalInputError,
    PreconditionError,
    ValidationError,
)
from .fock import PureState, manifold_projection
from .phase import ORTHOGONALITY_TOL, PhaseProfile, Profile, manifold_overlaps

IMAG_TOL = 1e-9
STATIONARY_TOL = 1e-9


class StateKind(str, enum.Enum):
    PHI_N = "phi_N"
    UPSILON_N = "upsilon_N"
    OMEGA_N = "omega_N"
    XI = "xi"
    CUSTOM = "custom"


def _noon_pair(N: int, M: int, theta: float) -> PureState:
    first = (N,) + (0,) * (M - 1)
    last = (0,) * (M - 1) + (N,)
    return PureState(M, {first: 1.0, last: cmath.exp(1j * theta)})


def _check_nm(N: int, M: int, min_modes: int) -> None:
    if int(N) != N or N < 1:
        raise ConstructionError(f"N must be a positive integer, got {N}")
    if int(M) != M or M < min_modes:
        raise ConstructionError(f"need at least {min_modes} modes, got {M}")


def make_phi_N(N: int, M: int = 2, theta: float = 0.0) -> PureState:
    """(|N,0,...,0> + e^{i theta}|0,...,0,N>)/sqrt(2)."""
    _check_nm(N, M, 2)
    return _noon_pair(int(N), int(M), theta).scaled(1 / math.sqrt(2))


def make_upsilon_N(N: int, M: int = 2, theta: float = 0.0) -> PureState:
    """Vacuum plus phi_N weighted so that <N> = N / eta_opt.

    Orthogonal to its shifted copy at phi = arccos(1 - eta_opt)/N with
    lambda = (1, ..., -1), which is the smallest phi for that mean energy.
    """
    _check_nm(N, M, 2)
    eta = eta_opt()
    vac = PureState.vacuum(int(M)).scaled(math.sqrt((eta - 1.0) / eta))
    return vac + _noon_pair(int(N), int(M), theta).scaled(1 / math.sqrt(2 * eta))


def make_omega_N(N: int, M: int = 1) -> PureState:
    """(|0,...,0> + |N,0,...,0>)/sqrt(2), mean photon number N/2."""
    _check_nm(N, M, 1)
    M = int(M)
    return PureState(M, {(0,) * M: 1 / math.sqrt(2), (int(N),) + (0,) * (M - 1): 1 / math.sqrt(2)})


def make_xi() -> PureState:
    """Vacuum in mode 1 times (|0> + |1>)/sqrt(2) in mode 2."""
    return PureState(2, {(0, 0): 1 / math.sqrt(2), (0, 1): 1 / math.sqrt(2)})


@dataclass(frozen=True)
class StateRecipe:
    """Compact description of a named state; text form ``kind:N:M:theta``."""

    kind: StateKind
    N: int = 0
    mode_count: int = 2
    theta: float = 0.0

    def __post_init__(self) -> None:
        kind = StateKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is StateKind.XI:
            if self.mode_count != 2:
                raise ConstructionError("xi is a two-mode state")
            return
        if kind is StateKind.CUSTOM:
            return
        min_modes = 1 if kind is StateKind.OMEGA_N else 2
        _check_nm(self.N, self.mode_count, min_modes)

    @classmethod
    def parse(cls, text: str) -> StateRecipe:
        tokens = text.strip().split(":")
        try:
            kind = StateKind(tokens[0])
        except ValueError:
            raise ValidationError(f"unknown state kind {tokens[0]!r}") from None
        if kind is StateKind.CUSTOM:
            raise ValidationError("custom states have no text form")
        if kind is StateKind.XI:
            if len(tokens) > 1 and any(t for t in tokens[1:]):
                raise ValidationError(f"xi takes no parameters, got {text!r}")
            return cls(kind)
        if not 2 <= len(tokens) <= 4:
            raise ValidationError(f"expected kind:N:M[:theta], got {text!r}")
        names = ["N", "M", "theta"]
        values: list = []
        for name, tok in zip(names, tokens[1:]):
            try:
                values.append(float(tok) if name == "theta" else int(tok))
            except ValueError:
                raise ValidationError(f"bad {name} token {tok!r} in {text!r}") from None
        N = values[0]
        M = values[1] if len(values) > 1 else (1 if kind is StateKind.OMEGA_N else 2)
        theta = values[2] if len(values) > 2 else 0.0
        try:
            return cls(kind, N, M, theta)
        except ConstructionError as exc:
            raise ValidationError(f"{exc} in {text!r}") from None

    def __str__(self) -> str:
        if self.kind is StateKind.XI:
            return "xi"
        return f"{self.kind.value}:{self.N}:{self.mode_count}:{self.theta!r}"

    def build(self) -> PureState:
        if self.kind is StateKind.PHI_N:
            return make_phi_N(self.N, self.mode_count, self.theta)
        if self.kind is StateKind.UPSILON_N:
            return make_upsilon_N(self.N, self.mode_count, self.theta)
        if self.kind is StateKind.OMEGA_N:
            return make_omega_N(self.N, self.mode_count)
        if self.kind is StateKind.XI:
            return make_xi()
        raise ConstructionError("custom recipes carry no constructor")


def _manifold_sigmas(state: PureState, profile: Profile) -> tuple[dict[int, float], dict[int, complex]]:
    terms = manifold_overlaps(state, profile)
    weights = {n: state.manifold_weight(n) for n in terms}
    sigmas = {n: terms[n] / weights[n] for n in terms}
    return weights, sigmas


def reduce_to_vacuum_plus_manifold(
    state: PureState,
    profile: Profile,
    tol: float = ORTHOGONALITY_TOL,
) -> PureState:
    """Collapse a stationary orthogonal state onto vacuum plus one manifold.

    The excited manifold N kept is the one maximizing (1 - sigma_k)/k (smallest
    N on ties). Weight from the other manifolds is moved onto N in proportion
    to (1 - sigma_k)/(1 - sigma_N), which preserves orthogonality and never
    raises the mean photon number.
    """
    if not state.is_normalized():
        raise ValidationError("state must be normalized")
    weights, sigmas = _manifold_sigmas(state, profile)
    overlap = sum(weights[n] * sigmas[n] for n in weights)
    if abs(overlap) > tol:
        raise PreconditionError(f"state is not orthogonal under the profile (|overlap| = {abs(overlap):.3g})")
    worst_imag = max(abs(s.imag) for s in sigmas.values())
    if worst_imag > IMAG_TOL:
        raise NonOptimalInputError(f"manifold phase averages are not real (max |Im| = {worst_imag:.3g})")

    excited = [n for n in weights if n > 0]
    scores = {n: (1.0 - sigmas[n].real) / n for n in excited}
    best = max(scores.values())
    N = min(n for n in excited if scores[n] >= best - 1e-12 * max(1.0, abs(best)))
    gap = 1.0 - sigmas[N].real
    if gap <= 1e-12:
        raise DegenerateError(f"sigma_N = 1 on manifold {N}")

    delta = math.fsum(weights[k] * (1.0 - sigmas[k].real) / gap for k in weights if k != N)
    excited_weight = weights[N] + delta
    if excited_weight > 1.0 + 1e-12:
        raise PreconditionError(
            f"reduction needs weight {excited_weight:.6g} > 1 on manifold {N} (sigma_N = {sigmas[N].real:.6g} > 0)"
        )
    excited_weight = min(excited_weight, 1.0)

    vac_key = (0,) * state.mode_count
    vac_amp = state.amplitude(vac_key)
    vac_phase = vac_amp / abs(vac_amp) if abs(vac_amp) > 0 else 1.0
    component = manifold_projection(state, N).normalize()
    vac = PureState(state.mode_count, {vac_key: vac_phase * math.sqrt(max(0.0, 1.0 - excited_weight))})
    return vac + component.scaled(math.sqrt(excited_weight))


@dataclass(frozen=True)
class StationarityReport:
    """Diagnostics for the Lagrange condition k - alpha + beta * sigma_k = 0."""

    occupied: tuple[int, ...]
    sigmas: dict[int, complex] = field(repr=False)
    max_imag: float
    alpha: float
    beta: float
    residual: float
    trivial: bool

    @property
    def stationary(self) -> bool:
        return self.max_imag < STATIONARY_TOL and self.residual < STATIONARY_TOL


def check_stationarity(state: PureState, profile: Profile) -> StationarityReport:
    if not state.is_normalized():
        raise ValidationError("state must be normalized")
    _, sigmas = _manifold_sigmas(state, profile)
    occupied = tuple(sigmas)
    max_imag = max(abs(s.imag) for s in sigmas.values())
    if len(occupied) <= 1:
        return StationarityReport(occupied, sigmas, max_imag, float("nan"), float("nan"), 0.0, True)
    # unknowns (alpha, beta): -alpha + beta * sigma_k = -k
    A = np.array([[-1.0, sigmas[k].real] for k in occupied])
    b = -np.array(occupied, dtype=float)
    (alpha, beta), *_ = np.linalg.lstsq(A, b, rcond=None)
    residual = float(np.linalg.norm(A @ np.array([alpha, beta]) - b))
    return StationarityReport(occupied, sigmas, max_imag, float(alpha), float(beta), residual, False)


def _symmetric_component(rng: np.random.Generator, N: int, M: int) -> PureState:
    # weights mirror-symmetric under n <-> N - n, so sigma_N is real for lambda = (1, ..., -1)
    pairs = list(range(N // 2 + 1))
    pair_w = rng.dirichlet(np.ones(len(pairs)))
    amps = {}
    for n, w in zip(pairs, pair_w):
        partners = {n, N - n}
        for m in partners:
            key = (m,) + (0,) * (M - 2) + (N - m,)
            amps[key] = math.sqrt(w / len(partners)) * cmath.exp(2j * math.pi * rng.random())
    return PureState(M, amps).normalize()


def extremal_profile(M: int, phi: float) -> PhaseProfile:
    """lambda = (1, 0, ..., 0, -1)."""
    return PhaseProfile((1.0,) + (0.0,) * (M - 2) + (-1.0,), phi)


def sample_feasible_state(
    rng: np.random.Generator,
    n_max: int = 6,
    excited_manifolds: int = 1,
    mode_count: int = 2,
    min_sigma_gap: float = 1e-3,
    max_tries: int = 10_000,
) -> tuple[PureState, PhaseProfile]:
    """Random state orthogonal to its shifted copy, with real manifold averages.

    Excited components are mirror-symmetric two-mode-like states under
    lambda = (1, 0, ..., -1); the vacuum weight is solved from the linear
    orthogonality constraint. With ``excited_manifolds=1`` every sample is
    stationary.
    """
    if not 1 <= excited_manifolds <= n_max:
        raise ValidationError("excited_manifolds must lie in [1, n_max]")
    for _ in range(max_tries):
        ns = sorted(rng.choice(np.arange(1, n_max + 1), size=excited_manifolds, replace=False).tolist())
        phi = float(rng.uniform(0.0, math.pi))
        profile = extremal_profile(mode_count, phi)
        comps = [_symmetric_component(rng, n, mode_count) for n in ns]
        sig = []
        for n, comp in zip(ns, comps):
            (term,) = manifold_overlaps(comp, profile).values()
            sig.append(term.real)
        # weights w_i on excited manifolds with sum w_i (1 - sigma_i) = 1 and sum w_i <= 1
        if excited_manifolds == 1:
            if sig[0] > -min_sigma_gap:
                continue
            w = [1.0 / (1.0 - sig[0])]
        else:
            free = rng.dirichlet(np.ones(excited_manifolds))
            scale = 1.0 / float(np.dot(free, 1.0 - np.array(sig)))
            w = list(free * scale)
        if sum(w) > 1.0 - min_sigma_gap:
            continue
        state = PureState.vacuum(mode_count).scaled(math.sqrt(1.0 - sum(w)))
        for wi, comp in zip(w, comps):
            state = state + comp.scaled(math.sqrt(wi))
        return state.normalize(), profile
    raise ValidationError("no feasible state found; relax min_sigma_gap")
