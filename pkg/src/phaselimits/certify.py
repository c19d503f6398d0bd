"""Seeded brute-force searches that try to beat the closed-form limits.

Every sample draws a phase profile (per ``lambda_scheme``) and a random state
on a random support of the restricted Fock space. A sample is scored by up to
three independent routes:

* direct: scan |<psi|U(phi)|psi>| on the phi grid and refine near-zeros;
* reweighting (fixed photon number only): the smallest phi at which *some*
  weighting of the sampled support is orthogonal, i.e. the origin enters the
  convex hull of the phase factors exp(i phi s_j);
* vacuum knob (free energy, vacuum allowed): treat the vacuum weight as free,
  find phi where the excited part's phase average is real and negative, then
  solve for the vacuum weight that makes the state orthogonal.

The analytic saturating state is injected as an extra candidate, so a correct
limit is always touched and any violation has to come from a random sample.
Chunks of samples use seeds spawned from the SearchSpec seed, so the report does
not depend on the number of workers.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import bounds
from .bounds import BoundKind
from .errors import DimensionError, SpecError
from .fock import PureState, enumerate_manifold, format_state
from .phase import PhaseProfile, overlap_after_shift
from .states import make_omega_N, make_phi_N, make_upsilon_N

SEARCH_TOL = 1e-6
CHUNK_SIZE = 250
LAMBDA_GRID = (-1.0, -0.5, 0.0, 0.5, 1.0)


class LambdaScheme(str, enum.Enum):
    EXTREMAL = "extremal"
    LINEAR = "linear"
    FREE_GRID = "free-grid"


class Objective(str, enum.Enum):
    PHI = "phi"
    PHITOT = "phitot"


@dataclass(frozen=True)
class SearchSpec:
    """Search over states with photon numbers in ``manifolds``.

    With ``exact_n`` the space is the single manifold ``photon_cap``; otherwise
    it is ``manifolds`` (default ``0..photon_cap``) and results are reported as
    phi * <N> / ``energy_target``, i.e. rescaled to that mean photon number.
    """

    mode_count: int
    photon_cap: int
    exact_n: bool = True
    manifolds: tuple[int, ...] | None = None
    energy_target: float = 1.0
    phi_min: float = 0.0
    phi_max: float = math.pi
    grid_steps: int = 4096
    lambda_scheme: LambdaScheme = LambdaScheme.EXTREMAL
    sample_count: int = 1000
    seed: int = 0
    tol: float = SEARCH_TOL
    same_sign: bool = False
    inject_saturator: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambda_scheme", LambdaScheme(self.lambda_scheme))
        if self.mode_count < 1:
            raise SpecError("mode_count must be >= 1")
        if self.photon_cap < 1:
            raise SpecError("photon_cap must be >= 1")
        if self.phi_min < 0 or not self.phi_max > self.phi_min:
            raise SpecError("phi grid needs 0 <= phi_min < phi_max")
        if self.grid_steps < 2:
            raise SpecError("grid_steps must be >= 2")
        if self.sample_count < 1:
            raise SpecError("sample_count must be >= 1")
        if not self.tol > 0:
            raise SpecError("tol must be positive")
        if not self.energy_target > 0:
            raise SpecError("energy_target must be positive")
        if self.workers < 1:
            raise SpecError("workers must be >= 1")
        if self.manifolds is not None:
            ms = tuple(sorted(set(int(n) for n in self.manifolds)))
            if not ms or ms[0] < 0 or ms[-1] > self.photon_cap:
                raise SpecError("manifolds must lie in [0, photon_cap]")
            object.__setattr__(self, "manifolds", ms)

    @property
    def space_manifolds(self) -> tuple[int, ...]:
        if self.exact_n:
            return (self.photon_cap,)
        if self.manifolds is not None:
            return self.manifolds
        return tuple(range(self.photon_cap + 1))

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(self.phi_min, self.phi_max, self.grid_steps)

    @property
    def grid_step(self) -> float:
        return (self.phi_max - self.phi_min) / (self.grid_steps - 1)


@dataclass(frozen=True)
class CertificateReport:
    bound_kind: str
    analytic_value: float
    best_found_phi: float | None
    best_state_digest: str
    violation: bool
    samples: int
    seed: int
    metric: str
    energy: float
    tolerance: float
    violation_tol: float
    grid_step: float
    saturator_phi: float | None
    best_sampled_phi: float | None

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ScanRecord:
    phi: float
    overlap_re: float
    overlap_im: float
    overlap_abs: float


# --------------------------------------------------------------------------
# vectorized kernels over (weights p_j, exponents s_j)


def _overlap_on_grid(p: np.ndarray, s: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """sum_j p_j exp(i phi s_j) for a batch: p, s shaped (B, J); result (B, G).

    Weights are binned by distinct exponent first; batches drawn from a
    lambda grid share only a few exponents, so this is one small matmul.
    """
    values, inverse = np.unique(s, return_inverse=True)
    inverse = inverse.reshape(s.shape)
    binned = np.zeros((s.shape[0], values.size))
    np.add.at(binned, (np.arange(s.shape[0])[:, None], inverse), p)
    return binned @ np.exp(1j * np.outer(values, grid))


def _overlap_at(p: np.ndarray, s: np.ndarray, phi: float) -> complex:
    return complex(np.sum(p * np.exp(1j * phi * s)))


def _first_direct_zero(p: np.ndarray, s: np.ndarray, grid: np.ndarray, mags: np.ndarray, tol: float) -> float | None:
    """Smallest phi > 0 with |overlap| <= tol, refined between grid points."""
    # |d overlap / d phi| <= lip, so a zero inside a grid cell forces a small value at its ends
    lip = float(np.sum(p * np.abs(s)))
    step = grid[1] - grid[0]
    cand = np.flatnonzero(mags <= lip * step + tol)
    for i in cand:
        if grid[i] <= 0.0 and mags[i] > tol:
            continue
        lo = grid[max(i - 1, 0)]
        hi = grid[min(i + 1, len(grid) - 1)]
        if mags[i] <= tol and grid[i] > 0.0:
            best_phi, best_val = grid[i], mags[i]
        else:
            best_phi, best_val = None, np.inf
        if hi > lo:
            res = minimize_scalar(
                lambda x: abs(_overlap_at(p, s, x)),
                bounds=(lo, hi),
                method="bounded",
                options={"xatol": 1e-13},
            )
            if res.fun <= tol and res.x > 0.0 and (best_phi is None or res.x < best_phi):
                best_phi, best_val = float(res.x), float(res.fun)
        if best_phi is not None and best_phi > 0.0:
            return float(best_phi)
    return None


def _hull_contains_origin(s: np.ndarray, phis: np.ndarray) -> np.ndarray:
    """For each phi, whether 0 lies in the convex hull of exp(i phi s_j).

    Points on the unit circle enclose the origin iff no circular gap between
    consecutive points exceeds pi.
    """
    ang = np.mod(np.outer(phis, s), 2 * math.pi)
    ang.sort(axis=1)
    gaps = np.diff(ang, axis=1)
    wrap = 2 * math.pi - (ang[:, -1] - ang[:, 0])
    max_gap = np.maximum(gaps.max(axis=1, initial=0.0), wrap)
    return max_gap <= math.pi + 1e-12


def min_hull_phase(s: Sequence[float], grid: np.ndarray) -> float | None:
    """Smallest phi in the grid's range at which some weighting of kets with
    exponents ``s`` becomes orthogonal to its shifted copy.

    Below pi/span all phases sit on an arc shorter than pi, and at pi/span the
    extreme pair is antipodal, so that is the answer whenever it falls inside
    the grid. Otherwise the grid is scanned and the first hit bisected.
    """
    s = np.unique(np.asarray(s, dtype=float))
    if s.size < 2:
        return None
    lo_edge, hi_edge = float(grid[0]), float(grid[-1])
    exact = math.pi / float(s[-1] - s[0])
    if exact > hi_edge:
        return None
    if exact >= lo_edge:
        return exact
    inside = _hull_contains_origin(s, grid)
    inside[grid <= 0.0] = False
    hits = np.flatnonzero(inside)
    if hits.size == 0:
        return None
    i = int(hits[0])
    if i == 0:
        return float(grid[0])
    lo, hi = float(grid[i - 1]), float(grid[i])
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if _hull_contains_origin(s, np.array([mid]))[0]:
            hi = mid
        else:
            lo = mid
    return hi


def _antipodal_witness(s: np.ndarray, phi: float) -> tuple[int, int]:
    """Indices of the two exponents whose phases bound the largest gap at ``phi``."""
    ang = np.mod(phi * s, 2 * math.pi)
    order = np.argsort(ang)
    a = ang[order]
    gaps = np.append(np.diff(a), 2 * math.pi - (a[-1] - a[0]))
    k = int(np.argmax(gaps))
    return int(order[k]), int(order[(k + 1) % len(order)])


def overlap_scan(state: PureState, lambdas: Sequence[float], phi_grid: tuple[float, float, int]) -> list[ScanRecord]:
    """Overlap between ``state`` and its phase-shifted copy along a phi grid."""
    phi_min, phi_max, steps = phi_grid
    if steps < 2 or phi_min < 0 or not phi_max > phi_min:
        raise SpecError("phi grid needs steps >= 2 and 0 <= phi_min < phi_max")
    profile = PhaseProfile(lambdas, 0.0)
    if profile.mode_count != state.mode_count:
        raise DimensionError(f"{profile.mode_count} lambdas for a {state.mode_count}-mode state")
    coeffs = np.array(profile.mode_coefficients())
    kets = sorted(state.amplitudes)
    p = np.array([abs(state.amplitudes[k]) ** 2 for k in kets])[None, :]
    s = (np.array(kets, dtype=float) @ coeffs)[None, :]
    grid = np.linspace(phi_min, phi_max, int(steps))
    ov = _overlap_on_grid(p, s, grid)[0]
    return [ScanRecord(float(g), float(o.real), float(o.imag), float(abs(o))) for g, o in zip(grid, ov)]


# --------------------------------------------------------------------------
# search


@dataclass
class _Candidate:
    value: float
    index: int
    digest: str

    def key(self) -> tuple[float, int]:
        return (self.value, self.index)


def _bound_kind(spec: SearchSpec, objective: Objective) -> BoundKind:
    if spec.exact_n:
        return BoundKind.NPHOTON_PHI if objective is Objective.PHI else BoundKind.NPHOTON_PHITOT
    if spec.mode_count == 1:
        return BoundKind.SINGLE_MODE_PHI if objective is Objective.PHI else BoundKind.SINGLE_MODE_PHITOT
    return BoundKind.GENERAL_PHI if objective is Objective.PHI else BoundKind.GENERAL_PHITOT


def _draw_lambdas(rng: np.random.Generator, spec: SearchSpec, objective: Objective) -> np.ndarray:
    M = spec.mode_count
    grid = np.array([x for x in LAMBDA_GRID if x >= 0.0] if spec.same_sign else LAMBDA_GRID)
    scheme = spec.lambda_scheme
    if scheme is LambdaScheme.LINEAR:
        return np.arange(1, M + 1, dtype=float) / M
    if scheme is LambdaScheme.EXTREMAL:
        lam = rng.choice(grid, size=M)
        lam[0] = 1.0
        if M > 1:
            lam[-1] = 0.0 if spec.same_sign else -1.0
        return lam
    lam = rng.choice(grid, size=M)
    if not np.any(lam):
        lam[rng.integers(M)] = 1.0
    return lam


def _digest(kets: np.ndarray, amps: np.ndarray, lam: np.ndarray, phi: float, tag: str) -> str:
    state = PureState(kets.shape[1], {tuple(int(x) for x in k): complex(a) for k, a in zip(kets, amps)})
    lam_txt = ",".join(f"{x:g}" for x in lam)
    return f"{tag}: {format_state(state.normalize())} | lambdas=({lam_txt}) phi={phi:.12g}"


class _Search:
    def __init__(self, spec: SearchSpec, objective: Objective):
        self.spec = spec
        self.objective = objective
        kets = [k for n in spec.space_manifolds for k in enumerate_manifold(spec.mode_count, n)]
        if len(kets) < 2:
            raise SpecError(
                f"search space has {len(kets)} ket(s); no phase shift can make a single ket orthogonal"
            )
        self.kets = np.array(kets, dtype=np.int64)
        self.totals = self.kets.sum(axis=1)
        self.vac_index = np.flatnonzero(self.totals == 0)
        self.grid = spec.grid
        self.grid_pos = self.grid[self.grid > 0.0]
        # exponent set -> min_hull_phase; values are deterministic, so sharing across threads is safe
        self.hull_cache: dict = {}

    def metric(self, phi: float, lam: np.ndarray, mean_n: float) -> float:
        value = phi
        if self.objective is Objective.PHITOT:
            value = phi * float(np.sum(np.abs(lam)))
        if not self.spec.exact_n:
            value = value * mean_n / self.spec.energy_target
        return value

    # routes ---------------------------------------------------------------

    def direct(self, idx: np.ndarray, p: np.ndarray, s: np.ndarray) -> list[tuple[float, int]]:
        """(phi, sample row) for rows where the sampled state itself hits a zero."""
        mags = np.abs(_overlap_on_grid(p, s, self.grid))
        out = []
        for b in range(len(idx)):
            phi = _first_direct_zero(p[b], s[b], self.grid, mags[b], self.spec.tol)
            if phi is not None:
                out.append((phi, b))
        return out

    def reweighted(self, support: np.ndarray, lam: np.ndarray) -> tuple[float, np.ndarray] | None:
        s = self.kets[support] @ lam
        key = tuple(np.round(np.unique(s), 12))
        if key not in self.hull_cache:
            self.hull_cache[key] = min_hull_phase(s, self.grid)
        phi = self.hull_cache[key]
        if phi is None:
            return None
        i, j = _antipodal_witness(s, phi)
        amps = np.zeros(len(support), dtype=complex)
        amps[[i, j]] = 1.0 / math.sqrt(2)
        # witness must really be orthogonal; the hull test alone is not trusted
        if abs(_overlap_at(np.abs(amps) ** 2, s, phi)) > self.spec.tol:
            return None
        return phi, amps

    def vacuum_knob(self, p_exc: np.ndarray, s_exc: np.ndarray, n_exc: np.ndarray, lam: np.ndarray):
        """Best (metric, phi, vacuum weight) over phi where the vacuum weight can be tuned to orthogonality."""
        sig = _overlap_on_grid(p_exc[None, :], s_exc[None, :], self.grid_pos)[0]
        im = sig.imag
        re = sig.real
        mean_exc = float(np.dot(p_exc, n_exc))
        best = None
        cross = np.flatnonzero((np.sign(im[:-1]) != np.sign(im[1:])) | (im[:-1] == 0.0))
        for i in cross:
            if re[i] >= 0.0 and re[i + 1] >= 0.0:
                continue
            f = lambda x: _overlap_at(p_exc, s_exc, x).imag
            a, b = float(self.grid_pos[i]), float(self.grid_pos[i + 1])
            if f(a) == 0.0:
                phi = a
            elif np.sign(f(a)) == np.sign(f(b)):
                continue
            else:
                phi = brentq(f, a, b, xtol=1e-14, rtol=4 * np.finfo(float).eps)
            sigma = _overlap_at(p_exc, s_exc, phi).real
            if sigma >= 0.0:
                continue
            vac_w = -sigma / (1.0 - sigma)
            mean_n = (1.0 - vac_w) * mean_exc
            value = self.metric(phi, lam, mean_n)
            if best is None or value < best[0]:
                best = (value, phi, vac_w)
        return best

    # chunk driver --------------------------------------------------------

    def run_chunk(self, seed_seq: np.random.SeedSequence, start: int, count: int) -> _Candidate | None:
        rng = np.random.default_rng(seed_seq)
        K = len(self.kets)
        best: _Candidate | None = None

        def offer(value: float, index: int, digest_fn) -> None:
            nonlocal best
            if best is None or (value, index) < best.key():
                best = _Candidate(value, index, digest_fn())

        lams, supports, weights, phases = [], [], [], []
        for _ in range(count):
            lams.append(_draw_lambdas(rng, self.spec, self.objective))
            size = int(rng.integers(1, K + 1))
            supports.append(np.sort(rng.choice(K, size=size, replace=False)))
            weights.append(rng.dirichlet(np.ones(size)))
            phases.append(rng.uniform(0.0, 2 * math.pi, size=size))

        # direct route, padded to a rectangular batch (zero weight pads are inert)
        J = max(len(sp) for sp in supports)
        P = np.zeros((count, J))
        S = np.zeros((count, J))
        for b in range(count):
            n = len(supports[b])
            P[b, :n] = weights[b]
            S[b, :n] = self.kets[supports[b]] @ lams[b]
        for phi, b in self.direct(np.arange(count), P, S):
            sp = supports[b]
            mean_n = float(np.dot(weights[b], self.totals[sp]))
            amps = np.sqrt(weights[b]) * np.exp(1j * phases[b])
            offer(
                self.metric(phi, lams[b], mean_n),
                start + b,
                lambda sp=sp, amps=amps, b=b, phi=phi: _digest(self.kets[sp], amps, lams[b], phi, f"sample {start + b}"),
            )

        for b in range(count):
            sp, lam = supports[b], lams[b]
            if self.spec.exact_n:
                hit = self.reweighted(sp, lam)
                if hit is not None:
                    phi, amps = hit
                    offer(
                        self.metric(phi, lam, float(self.spec.photon_cap)),
                        start + b,
                        lambda sp=sp, amps=amps, lam=lam, phi=phi: _digest(
                            self.kets[sp], amps, lam, phi, f"sample {start + b} reweighted"
                        ),
                    )
            elif self.vac_index.size:
                exc = sp[self.totals[sp] > 0]
                if exc.size == 0:
                    continue
                w = weights[b][self.totals[sp] > 0]
                w = w / w.sum()
                s_exc = self.kets[exc] @ lam
                found = self.vacuum_knob(w, s_exc, self.totals[exc].astype(float), lam)
                if found is not None:
                    value, phi, vac_w = found
                    ph = phases[b][self.totals[sp] > 0]

                    def digest(exc=exc, w=w, ph=ph, vac_w=vac_w, lam=lam, phi=phi, b=b):
                        kets = np.vstack([self.kets[self.vac_index], self.kets[exc]])
                        amps = np.concatenate(
                            [[math.sqrt(vac_w)], np.sqrt((1 - vac_w) * w) * np.exp(1j * ph)]
                        )
                        return _digest(kets, amps, lam, phi, f"sample {start + b} vacuum-tuned")

                    offer(value, start + b, digest)
        return best

    def saturator(self) -> tuple[float, str] | None:
        """Scan the analytic optimum through the direct route."""
        spec, M = self.spec, self.spec.mode_count
        ms = spec.space_manifolds
        if spec.exact_n:
            N = spec.photon_cap
            if M < 2:
                return None
            state = make_phi_N(N, M)
            if self.objective is Objective.PHITOT and spec.same_sign:
                lam = np.array([1.0] + [0.0] * (M - 1))
            else:
                lam = np.array([1.0] + [0.0] * (M - 2) + [-1.0])
        else:
            positive = [n for n in ms if n > 0]
            if 0 not in ms or not positive:
                return None
            N = positive[0]
            if self.objective is Objective.PHI and M >= 2:
                state = make_upsilon_N(N, M)
                lam = np.array([1.0] + [0.0] * (M - 2) + [-1.0])
            else:
                state = make_omega_N(N, M)
                lam = np.array([1.0] + [0.0] * (M - 1))
        kets = sorted(state.amplitudes)
        p = np.array([abs(state.amplitudes[k]) ** 2 for k in kets])
        s = np.array(kets, dtype=float) @ lam
        mags = np.abs(_overlap_on_grid(p[None, :], s[None, :], self.grid)[0])
        phi = _first_direct_zero(p, s, self.grid, mags, spec.tol)
        if phi is None:
            return None
        # cross-check with the sparse-state code path
        if abs(overlap_after_shift(state, PhaseProfile(lam, phi))) > spec.tol:
            return None
        mean_n = float(np.dot(p, np.array(kets).sum(axis=1)))
        amps = np.array([state.amplitudes[k] for k in kets])
        return self.metric(phi, lam, mean_n), _digest(np.array(kets), amps, lam, phi, "injected saturator")


def _run(spec: SearchSpec, objective: Objective) -> CertificateReport:
    search = _Search(spec, objective)
    kind = _bound_kind(spec, objective)
    energy = float(spec.photon_cap) if spec.exact_n else float(spec.energy_target)
    analytic = bounds.bound_report(kind, energy).value

    n_chunks = math.ceil(spec.sample_count / CHUNK_SIZE)
    seeds = np.random.SeedSequence(spec.seed).spawn(n_chunks)
    jobs = [
        (seeds[c], c * CHUNK_SIZE, min(CHUNK_SIZE, spec.sample_count - c * CHUNK_SIZE))
        for c in range(n_chunks)
    ]
    if spec.workers > 1:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(lambda job: search.run_chunk(*job), jobs))
    else:
        results = [search.run_chunk(*job) for job in jobs]
    sampled = [r for r in results if r is not None]
    best_sample = min(sampled, key=_Candidate.key) if sampled else None

    sat = search.saturator() if spec.inject_saturator else None
    candidates = list(sampled)
    if sat is not None:
        candidates.append(_Candidate(sat[0], -1, sat[1]))
    best = min(candidates, key=_Candidate.key) if candidates else None

    violation_tol = spec.grid_step
    return CertificateReport(
        bound_kind=kind.value,
        analytic_value=analytic,
        best_found_phi=None if best is None else best.value,
        best_state_digest="" if best is None else best.digest,
        violation=best_sample is not None and best_sample.value < analytic - violation_tol,
        samples=spec.sample_count,
        seed=spec.seed,
        metric=("phi" if objective is Objective.PHI else "phi_tot")
        + ("" if spec.exact_n else "*mean_n/energy"),
        energy=energy,
        tolerance=spec.tol,
        violation_tol=violation_tol,
        grid_step=spec.grid_step,
        saturator_phi=None if sat is None else sat[0],
        best_sampled_phi=None if best_sample is None else best_sample.value,
    )


def min_phi_search(spec: SearchSpec) -> CertificateReport:
    """Smallest detectable phi over sampled states; flags any value below the limit."""
    return _run(spec, Objective.PHI)


def min_phitot_search(spec: SearchSpec) -> CertificateReport:
    """Same as :func:`min_phi_search` but scoring phi_tot = phi * sum |lambda_m|."""
    return _run(spec, Objective.PHITOT)


@dataclass(frozen=True)
class LinearProfileComparison:
    mode_count: int
    photon_number: int
    linear_min_phi: float
    largest_relative_shift: float
    two_mode_min_relative_shift: float
    two_mode_equivalent_phi: float
    ratio: float


def linear_profile_demo(M: int, N: int, grid_steps: int = 8192) -> LinearProfileComparison:
    """Linear profile phi_m = m * phi versus a two-mode interferometer.

    (a) the smallest phi for which some N-photon state in M modes becomes
    orthogonal under phi_m = m * phi; (b) the smallest relative shift a two-mode
    interferometer needs, divided by M - 1 so that both use the same largest
    relative shift. Their ratio is 1: the apparent (M - 1)-fold gain comes from
    the larger relative shift, not from the extra modes.
    """
    if M < 2 or N < 1:
        raise SpecError("need M >= 2 and N >= 1")
    grid = np.linspace(0.0, 2 * math.pi, grid_steps)
    # lambda_m = m/M keeps |lambda| <= 1; phi = M * (linear-profile phi)
    kets = np.array(enumerate_manifold(M, N), dtype=float)
    phi_scaled = min_hull_phase(kets @ (np.arange(1, M + 1) / M), grid)
    linear_phi = phi_scaled / M
    two = np.array(enumerate_manifold(2, N), dtype=float)
    rel = min_hull_phase(two @ np.array([1.0, 0.0]), grid)
    equiv = rel / (M - 1)
    return LinearProfileComparison(M, N, linear_phi, (M - 1) * linear_phi, rel, equiv, linear_phi / equiv)


__all__ = [
    "CertificateReport",
    "LambdaScheme",
    "LinearProfileComparison",
    "ScanRecord",
    "SearchSpec",
    "linear_profile_demo",
    "min_hull_phase",
    "min_phi_search",
    "min_phitot_search",
    "overlap_scan",
]
