"""Closed-form lower limits on perfectly distinguishable phase shifts.

All limits scale as 1/<N>: the product of the limit and the mean photon
number is a constant that depends only on the kind of limit.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

from .errors import NoBoundError, ValidationError

ATTAINABLE_TOL = 1e-9


def eta_residual(eta: float) -> float:
    """arccos(1 - eta) - sqrt(eta / (2 - eta)); strictly decreasing on (1, 2)."""
    return math.acos(1.0 - eta) - math.sqrt(eta / (2.0 - eta))


def eta_stationarity(eta: float) -> float:
    """Bracketed part of d(phi)/d(eta), up to the positive factor 1/(eta <N>)."""
    return 1.0 / math.sqrt(1.0 - (1.0 - eta) ** 2) - math.acos(1.0 - eta) / eta


def solve_eta_opt(tolerance: float = 1e-12) -> float:
    """Optimal photon-number ratio eta = N/<N> for vacuum-plus-manifold states.

    Bisection on (1, 2). The residual is positive at 1 (pi/2 - 1) and diverges
    to -inf at 2, so the right endpoint is never evaluated.
    """
    if not 0.0 < tolerance <= 1e-6:
        raise ValidationError(f"tolerance must lie in (0, 1e-6], got {tolerance}")
    lo, hi = 1.0, 2.0
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if eta_residual(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@functools.cache
def eta_opt() -> float:
    """Memoized eta_opt at full double precision."""
    return solve_eta_opt(1e-16)


def general_phi_constant() -> float:
    """arccos(1 - eta_opt) / eta_opt, about 1.38005."""
    eta = eta_opt()
    return math.acos(1.0 - eta) / eta


def _positive_energy(mean_photons: float) -> float:
    mean_photons = float(mean_photons)
    if not math.isfinite(mean_photons) or mean_photons <= 0.0:
        raise NoBoundError(f"mean photon number must be positive, got {mean_photons}")
    return mean_photons


def _positive_count(n: int, name: str = "N") -> int:
    if int(n) != n:
        raise ValidationError(f"{name} must be an integer, got {n}")
    n = int(n)
    if n < 1:
        raise NoBoundError(f"{name} must be >= 1 (the vacuum cannot be made orthogonal), got {n}")
    return n


def nphoton_phi_bound(N: int) -> float:
    """Smallest phi detectable with certainty by an N-photon state: pi/2N."""
    return math.pi / (2 * _positive_count(N))


def nphoton_phitot_bound(N: int) -> float:
    """Smallest total phase sum |phi_m| for an N-photon state: pi/N."""
    return math.pi / _positive_count(N)


def general_phi_bound(mean_photons: float) -> float:
    """Smallest phi for any state of mean photon number <N>, about 1.38005/<N>."""
    return general_phi_constant() / _positive_energy(mean_photons)


def general_phitot_bound(mean_photons: float) -> float:
    """Margolus-Levitin limit on total phase: pi/(2<N>)."""
    return math.pi / (2.0 * _positive_energy(mean_photons))


def manifold_bounds(n_max: int) -> tuple[float, float]:
    """(phi, phi_tot) limits when every occupied manifold must be made orthogonal.

    Set by the highest occupied photon number, not by the mean.
    """
    n_max = _positive_count(n_max, "n_max")
    return math.pi / (2 * n_max), math.pi / n_max


def de_broglie_wavelength(optical_wavelength: float, N: int) -> float:
    if not optical_wavelength > 0:
        raise ValidationError(f"optical wavelength must be positive, got {optical_wavelength}")
    return optical_wavelength / _positive_count(N)


class BoundKind(str, enum.Enum):
    NPHOTON_PHI = "nphoton_phi"
    NPHOTON_PHITOT = "nphoton_phitot"
    GENERAL_PHI = "general_phi"
    GENERAL_PHITOT = "general_phitot"
    SINGLE_MODE_PHI = "single_mode_phi"
    SINGLE_MODE_PHITOT = "single_mode_phitot"
    MANIFOLD_MAX = "manifold_max"


def bound_constant(kind: BoundKind) -> float:
    """value * energy for each kind (energy = n_max for MANIFOLD_MAX, phi part)."""
    return {
        BoundKind.NPHOTON_PHI: math.pi / 2,
        BoundKind.NPHOTON_PHITOT: math.pi,
        BoundKind.GENERAL_PHI: general_phi_constant(),
        BoundKind.GENERAL_PHITOT: math.pi / 2,
        BoundKind.SINGLE_MODE_PHI: math.pi / 2,
        BoundKind.SINGLE_MODE_PHITOT: math.pi / 2,
        BoundKind.MANIFOLD_MAX: math.pi / 2,
    }[BoundKind(kind)]


_RECIPES = {
    BoundKind.NPHOTON_PHI: "phi_N with lambda = (1, ..., -1)",
    BoundKind.NPHOTON_PHITOT: "phi_N with phi_1 = pi/2N, phi_M = -pi/2N",
    BoundKind.GENERAL_PHI: "upsilon_N with lambda = (1, ..., -1), <N> = N/eta_opt",
    BoundKind.GENERAL_PHITOT: "omega_N with phi_1 = pi/N only",
    BoundKind.SINGLE_MODE_PHI: "omega_N in one mode",
    BoundKind.SINGLE_MODE_PHITOT: "omega_N in one mode",
    BoundKind.MANIFOLD_MAX: "phi_N on the highest occupied manifold",
}


@dataclass(frozen=True)
class BoundReport:
    bound_kind: BoundKind
    value: float
    energy: float
    recipe: str
    attainable: bool = True

    def as_dict(self) -> dict:
        return {
            "bound_kind": self.bound_kind.value,
            "value": self.value,
            "energy": self.energy,
            "recipe": self.recipe,
            "attainable": self.attainable,
        }


def _is_integer(x: float) -> bool:
    return x >= 1.0 - ATTAINABLE_TOL and abs(x - round(x)) <= ATTAINABLE_TOL


def bound_report(kind: BoundKind, energy: float) -> BoundReport:
    """Evaluate one kind of limit at mean photon number ``energy``.

    The N-photon kinds only make physical sense at integer energies; they are
    still evaluated elsewhere and flagged ``attainable=False``.
    """
    kind = BoundKind(kind)
    energy = _positive_energy(energy)
    value = bound_constant(kind) / energy
    if kind is BoundKind.GENERAL_PHI:
        attainable = _is_integer(energy * eta_opt())
    elif kind in (BoundKind.NPHOTON_PHI, BoundKind.NPHOTON_PHITOT, BoundKind.MANIFOLD_MAX):
        attainable = _is_integer(energy)
    elif kind is BoundKind.GENERAL_PHITOT:
        attainable = _is_integer(2.0 * energy)
    else:
        attainable = True
    return BoundReport(kind, value, energy, _RECIPES[kind], attainable)


@dataclass(frozen=True)
class TableEntry:
    """One cell of the limits table; ``report`` is None for not-applicable cells."""

    states: str
    entity: str
    modes: str
    report: BoundReport | None
    reason: str = ""

    @property
    def applicable(self) -> bool:
        return self.report is not None


_NA_REASON = "single-mode photon number states cannot be made orthogonal by a phase shift"

_TABLE_LAYOUT = [
    ("arbitrary", "phi", "one", BoundKind.SINGLE_MODE_PHI),
    ("arbitrary", "phi", "two_or_more", BoundKind.GENERAL_PHI),
    ("arbitrary", "phi_tot", "one", BoundKind.SINGLE_MODE_PHITOT),
    ("arbitrary", "phi_tot", "two_or_more", BoundKind.GENERAL_PHITOT),
    ("n_photon", "phi", "one", None),
    ("n_photon", "phi", "two_or_more", BoundKind.NPHOTON_PHI),
    ("n_photon", "phi_tot", "one", None),
    ("n_photon", "phi_tot", "two_or_more", BoundKind.NPHOTON_PHITOT),
]


def limits_table(energy: float = 1.0) -> list[TableEntry]:
    """All eight cells of the limits table evaluated at mean photon number ``energy``."""
    energy = _positive_energy(energy)
    rows = []
    for states, entity, modes, kind in _TABLE_LAYOUT:
        if kind is None:
            rows.append(TableEntry(states, entity, modes, None, _NA_REASON))
        else:
            rows.append(TableEntry(states, entity, modes, bound_report(kind, energy)))
    return rows
