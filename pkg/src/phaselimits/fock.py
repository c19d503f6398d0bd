"""Sparse multimode pure states in the Fock (photon-number) basis.

A basis ket |n_1, ..., n_M> is an :data:`OccupationVector`, a plain tuple of
nonnegative ints. A :class:`PureState` maps such tuples to complex
amplitudes; only nonzero amplitudes are stored, since every state of interest
here has a handful of occupied kets even when the manifold dimension is large.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import DimensionError, ValidationError

OccupationVector = tuple[int, ...]

PRUNE_THRESHOLD = 1e-15
NORM_TOLERANCE = 1e-9


def total(counts: OccupationVector) -> int:
    """Total photon number of a basis ket."""
    return sum(counts)


def _compositions(n: int, parts: int) -> Iterator[OccupationVector]:
    if parts == 1:
        yield (n,)
        return
    for head in range(n, -1, -1):
        for tail in _compositions(n - head, parts - 1):
            yield (head,) + tail


def enumerate_manifold(mode_count: int, photon_number: int) -> list[OccupationVector]:
    """All kets with ``photon_number`` photons in ``mode_count`` modes.

    Ordered descending-lexicographically, so ``(N, 0, ..., 0)`` comes first and
    ``(0, ..., 0, N)`` last. The length is ``comb(N + M - 1, M - 1)``.
    """
    if mode_count < 1:
        raise ValidationError(f"mode_count must be >= 1, got {mode_count}")
    if photon_number < 0:
        raise ValidationError(f"photon_number must be >= 0, got {photon_number}")
    return list(_compositions(int(photon_number), int(mode_count)))


def _check_key(key: Iterable[int], mode_count: int) -> OccupationVector:
    counts = tuple(int(n) for n in key)
    if len(counts) != mode_count:
        raise DimensionError(f"ket {counts} has {len(counts)} modes, expected {mode_count}")
    if any(n < 0 for n in counts):
        raise ValidationError(f"negative photon count in ket {counts}")
    return counts


@dataclass(frozen=True)
class PureState:
    """Immutable sparse pure state.

    Amplitudes with modulus below :data:`PRUNE_THRESHOLD` are dropped at
    construction. Global phases live inside the complex amplitudes.
    """

    mode_count: int
    amplitudes: Mapping[OccupationVector, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.mode_count < 1:
            raise ValidationError(f"mode_count must be >= 1, got {self.mode_count}")
        clean: dict[OccupationVector, complex] = {}
        for key, amp in self.amplitudes.items():
            counts = _check_key(key, self.mode_count)
            amp = complex(amp)
            if abs(amp) >= PRUNE_THRESHOLD:
                clean[counts] = clean.get(counts, 0j) + amp
        object.__setattr__(self, "amplitudes", MappingProxyType(clean))

    @classmethod
    def basis(cls, counts: Iterable[int]) -> PureState:
        counts = tuple(counts)
        return cls(len(counts), {counts: 1.0})

    @classmethod
    def vacuum(cls, mode_count: int) -> PureState:
        return cls(mode_count, {(0,) * mode_count: 1.0})

    def __len__(self) -> int:
        return len(self.amplitudes)

    def amplitude(self, counts: Iterable[int]) -> complex:
        return self.amplitudes.get(tuple(counts), 0j)

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def normalize(self) -> PureState:
        nrm = self.norm()
        if nrm == 0.0:
            raise ValidationError("cannot normalize the zero state")
        return PureState(self.mode_count, {k: a / nrm for k, a in self.amplitudes.items()})

    def is_normalized(self, tol: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def manifolds(self) -> list[int]:
        """Sorted photon numbers carrying nonzero amplitude."""
        return sorted({total(k) for k in self.amplitudes})

    def manifold_weight(self, photon_number: int) -> float:
        return sum(abs(a) ** 2 for k, a in self.amplitudes.items() if total(k) == photon_number)

    def scaled(self, factor: complex) -> PureState:
        return PureState(self.mode_count, {k: factor * a for k, a in self.amplitudes.items()})

    def __add__(self, other: PureState) -> PureState:
        if not isinstance(other, PureState):
            return NotImplemented
        if other.mode_count != self.mode_count:
            raise DimensionError(f"mode counts differ: {self.mode_count} vs {other.mode_count}")
        merged = dict(self.amplitudes)
        for k, a in other.amplitudes.items():
            merged[k] = merged.get(k, 0j) + a
        return PureState(self.mode_count, merged)

    def __str__(self) -> str:
        return format_state(self)


def format_state(state: PureState, digits: int = 6) -> str:
    """Human-readable ket expansion, kets in descending-lexicographic order."""
    if not state.amplitudes:
        return "0"
    terms = []
    for counts in sorted(state.amplitudes, key=lambda k: (total(k), tuple(-n for n in k))):
        a = state.amplitudes[counts]
        if abs(a.imag) < 10 ** -(digits + 2):
            coeff = f"{a.real:.{digits}f}"
        else:
            coeff = f"({a.real:.{digits}f}{a.imag:+.{digits}f}j)"
        terms.append(f"{coeff}|{','.join(map(str, counts))}>")
    return " + ".join(terms)


def _require_normalized(state: PureState) -> None:
    if not state.is_normalized():
        raise ValidationError(f"state is not normalized (norm = {state.norm():.12g})")


def mean_photon_number(state: PureState) -> float:
    """Average total photon number of a normalized state."""
    _require_normalized(state)
    return sum(abs(a) ** 2 * total(k) for k, a in state.amplitudes.items())


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b>, antilinear in the first argument."""
    if a.mode_count != b.mode_count:
        raise DimensionError(f"mode counts differ: {a.mode_count} vs {b.mode_count}")
    # Sorted common support: fixes the summation order, so <a|b> == conj(<b|a>) bit for bit.
    common = sorted(a.amplitudes.keys() & b.amplitudes.keys())
    return sum((a.amplitudes[k].conjugate() * b.amplitudes[k] for k in common), 0j)


def manifold_projection(state: PureState, photon_number: int) -> PureState:
    """Component of ``state`` with exactly ``photon_number`` photons (not renormalized)."""
    if photon_number < 0:
        raise ValidationError(f"photon_number must be >= 0, got {photon_number}")
    return PureState(
        state.mode_count,
        {k: a for k, a in state.amplitudes.items() if total(k) == photon_number},
    )
