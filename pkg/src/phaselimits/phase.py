"""Phase-shift unitaries exp(i phi sum_m lambda_m n_m) and orthogonality tests."""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DimensionError, UndefinedManifoldError, ValidationError
from .fock import PureState, inner_product, total

ORTHOGONALITY_TOL = 1e-10
_LAMBDA_SLACK = 1e-12


def _sort_desc(values: Sequence[float]) -> tuple[tuple[float, ...], tuple[int, ...]]:
    perm = tuple(sorted(range(len(values)), key=lambda i: -values[i]))
    return tuple(values[i] for i in perm), perm


def _unsort(sorted_values: Sequence[float], perm: Sequence[int]) -> tuple[float, ...]:
    out = [0.0] * len(perm)
    for pos, mode in enumerate(perm):
        out[mode] = sorted_values[pos]
    return tuple(out)


@dataclass(frozen=True, init=False)
class PhaseProfile:
    """Per-mode phase shifts phi_m = lambda_m * phi with -1 <= lambda_m <= 1.

    ``lambdas`` is stored sorted non-increasing; ``permutation[i]`` is the
    original mode index of ``lambdas[i]``. Use :meth:`mode_coefficients` to get
    the coefficients back in the caller's mode order.
    """

    lambdas: tuple[float, ...]
    phi: float
    permutation: tuple[int, ...]

    def __init__(self, lambdas: Sequence[float], phi: float):
        lam = [float(x) for x in lambdas]
        if not lam:
            raise ValidationError("a phase profile needs at least one mode")
        for x in lam:
            if not math.isfinite(x) or abs(x) > 1.0 + _LAMBDA_SLACK:
                raise ValidationError(f"lambda coefficients must lie in [-1, 1], got {x}")
        phi = float(phi)
        if not math.isfinite(phi) or phi < 0.0:
            raise ValidationError(f"phi must be a finite nonnegative number, got {phi}")
        lam = [min(1.0, max(-1.0, x)) for x in lam]
        sorted_lam, perm = _sort_desc(lam)
        object.__setattr__(self, "lambdas", sorted_lam)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "permutation", perm)

    @classmethod
    def from_phases(cls, phases: Sequence[float]) -> PhaseProfile:
        """Build from raw per-mode shifts, factoring out phi = max |phi_m|."""
        phases = [float(p) for p in phases]
        phi = max(abs(p) for p in phases)
        if phi == 0.0:
            return cls([0.0] * len(phases), 0.0)
        return cls([p / phi for p in phases], phi)

    @property
    def mode_count(self) -> int:
        return len(self.lambdas)

    def mode_coefficients(self) -> tuple[float, ...]:
        """lambda_m in the original mode order."""
        return _unsort(self.lambdas, self.permutation)

    def mode_phases(self) -> tuple[float, ...]:
        return tuple(x * self.phi for x in self.mode_coefficients())

    def with_phi(self, phi: float) -> PhaseProfile:
        return PhaseProfile(self.mode_coefficients(), phi)


@dataclass(frozen=True)
class ReducedProfile:
    """Nonnegative coefficients mu_m = lambda_m - lambda_M, with mu_M = 0."""

    mus: tuple[float, ...]
    phi: float
    permutation: tuple[int, ...]

    @property
    def mode_count(self) -> int:
        return len(self.mus)

    def mode_coefficients(self) -> tuple[float, ...]:
        return _unsort(self.mus, self.permutation)


Profile = PhaseProfile | ReducedProfile


def _check_modes(state: PureState, profile: Profile) -> None:
    if state.mode_count != profile.mode_count:
        raise DimensionError(
            f"state has {state.mode_count} modes, profile has {profile.mode_count}"
        )


def phase_exponent(counts: Sequence[int], coefficients: Sequence[float]) -> float:
    """sum_m coefficient_m * n_m for one ket."""
    return math.fsum(c * n for c, n in zip(coefficients, counts))


def apply_phase_shift(state: PureState, profile: Profile) -> PureState:
    _check_modes(state, profile)
    coeffs = profile.mode_coefficients()
    phi = profile.phi
    return PureState(
        state.mode_count,
        {k: a * cmath.exp(1j * phi * phase_exponent(k, coeffs)) for k, a in state.amplitudes.items()},
    )


def overlap_after_shift(state: PureState, profile: Profile) -> complex:
    """<psi| U(profile) |psi>; zero means the shift is detectable with certainty."""
    return inner_product(state, apply_phase_shift(state, profile))


def manifold_overlaps(state: PureState, profile: Profile) -> dict[int, complex]:
    """<psi| 1_N U |psi> for every occupied photon number N.

    These are the unnormalized terms r_N^2 sigma_N; they sum to the full overlap.
    """
    _check_modes(state, profile)
    coeffs = profile.mode_coefficients()
    out: dict[int, complex] = {}
    for k, a in sorted(state.amplitudes.items()):
        n = total(k)
        term = abs(a) ** 2 * cmath.exp(1j * profile.phi * phase_exponent(k, coeffs))
        out[n] = out.get(n, 0j) + term
    return dict(sorted(out.items()))


def sigma_of_manifold(state: PureState, profile: Profile, photon_number: int) -> complex:
    """Weight-averaged phase factor of the manifold with ``photon_number`` photons."""
    weight = state.manifold_weight(photon_number)
    if weight <= 0.0:
        raise UndefinedManifoldError(f"state has no weight on manifold N = {photon_number}")
    terms = manifold_overlaps(state, profile)
    return terms[photon_number] / weight


def total_phase(profile: Profile) -> float:
    """phi_tot = sum_m |phi_m|."""
    coeffs = profile.lambdas if isinstance(profile, PhaseProfile) else profile.mus
    return math.fsum(abs(c) for c in coeffs) * profile.phi


def reduce_profile(profile: PhaseProfile) -> ReducedProfile:
    """Shift all coefficients by -lambda_M.

    On a fixed-photon-number state this only removes the global phase
    exp(i phi lambda_M N). Across several manifolds it changes their relative
    phases, so the reduced profile must not stand in for the original there.
    """
    floor = profile.lambdas[-1]
    mus = tuple(x - floor for x in profile.lambdas)
    return ReducedProfile(mus, profile.phi, profile.permutation)


def is_distinguishable(state: PureState, profile: Profile, tol: float = ORTHOGONALITY_TOL) -> bool:
    if tol <= 0:
        raise ValidationError("tol must be positive")
    return abs(overlap_after_shift(state, profile)) <= tol


def is_manifoldwise_distinguishable(
    state: PureState, profile: Profile, tol: float = ORTHOGONALITY_TOL
) -> bool:
    """Orthogonality inside every occupied photon-number manifold.

    This is what a detector that also resolves total photon number needs.
    One common phi is used for all manifolds.
    """
    if tol <= 0:
        raise ValidationError("tol must be positive")
    return all(abs(term) <= tol for term in manifold_overlaps(state, profile).values())
