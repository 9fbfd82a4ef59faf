"""Certified lower bounds for the homological order of the projection maps
attached to a positive unicolored braid word: per-pattern counts over
zone-emptiness patterns, their min-max combination, the sharp 1-colored
bound, and convergence reports for eventually-periodic specs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .braid import ColoredBraid, InfiniteBraidSpec, is_complete, partial_braid
from .diagonals import DiagonalDecomposition, find_diagonals, zone_census

DEFAULT_ENUMERATION_CAP = 22

NO_FULL_TWIST = "no full twist target"


class EnumerationCapError(RuntimeError):
    """Candidate zone set too large for exact subset enumeration.

    A partial search would only give an upper bound on the minimum, which is
    unsound as a certificate, so no value is reported.
    """

    def __init__(self, size: int, cap: int):
        super().__init__(f"{size} candidate zones exceed the enumeration cap of {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class ZonePattern:
    """A zone-emptiness pattern: which of the zones 0..nz are non-empty."""

    nz: int
    nonempty: frozenset[int]
    candidates: frozenset[int]

    def __post_init__(self):
        if not self.nonempty <= self.candidates:
            raise ValueError("nonempty zones must be candidate zones")
        for zone in self.candidates:
            if not 0 <= zone <= self.nz:
                raise ValueError(f"zone {zone} outside [0, {self.nz}]")


@dataclass(frozen=True)
class BoundOutcome:
    value: int | float
    note: str | None = None


@dataclass(frozen=True)
class BoundReport:
    ell: int
    y: int
    z: int
    bound_F: int | float
    bound_g: int | float | None
    note_F: str | None = None

    def to_dict(self) -> dict:
        enc = lambda v: ("inf" if v == math.inf else v)
        out = {
            "ell": self.ell,
            "y": self.y,
            "z": self.z,
            "bound_F": enc(self.bound_F),
            "bound_g": None if self.bound_g is None else enc(self.bound_g),
        }
        if self.note_F:
            out["note_F"] = self.note_F
        return out


@dataclass(frozen=True)
class CauchyReport:
    reports: tuple[BoundReport, ...]
    y_nondecreasing: bool
    y_growing: bool  # strictly larger at the last sampled length than the first

    def to_dict(self) -> dict:
        return {
            "reports": [r.to_dict() for r in self.reports],
            "y_nondecreasing": self.y_nondecreasing,
            "y_growing": self.y_growing,
        }


def b1(pattern: ZonePattern) -> int:
    """Number of non-empty zones, omitting the zone above the first diagonal."""
    return len(pattern.nonempty - {0})


def b2(pattern: ZonePattern, n: int) -> int:
    """Empty-zoned full twists below the non-empty zones: for each non-empty
    zone j the run of diagonals down to the next non-empty zone (or the
    bottom) has length d_j, contributing floor(d_j / n)."""
    total = 0
    ordered = sorted(pattern.nonempty)
    for idx, j in enumerate(ordered):
        below = ordered[idx + 1] if idx + 1 < len(ordered) else pattern.nz
        total += (below - j) // n
    return total


def b3(pattern: ZonePattern, n: int) -> int:
    """Empty-zoned full twists above the non-empty zones; pulling upward
    spends one diagonal before twists count, so each run of d' diagonals
    contributes floor((d'-1)/n), clamped at 0."""
    total = 0
    ordered = sorted(pattern.nonempty)
    for idx, j in enumerate(ordered):
        above = ordered[idx - 1] if idx > 0 else 0
        d_prime = j - above
        total += max(0, (d_prime - 1) // n)
    return total


def pattern_bound(pattern: ZonePattern, n: int) -> int:
    return max(b1(pattern), 2 * (n - 1) * b2(pattern, n), 2 * (n - 1) * b3(pattern, n))


def cone_bound(
    n: int,
    nz: int,
    candidates: frozenset[int] | set[int],
    cap: int = DEFAULT_ENUMERATION_CAP,
    forced: int | None = None,
) -> int | float:
    """Minimum over nonempty subsets S of the candidate zones of
    max(b1, 2(n-1)b2, 2(n-1)b3); +inf when there are no candidates.

    With ``forced`` set, only subsets containing that zone are considered.
    Enumeration is exact; when the candidate set exceeds ``cap`` an
    :class:`EnumerationCapError` is raised rather than reporting a heuristic
    value.
    """
    cand = frozenset(candidates)
    if forced is not None:
        cand |= {forced}
    if not cand:
        return math.inf
    if len(cand) > cap:
        raise EnumerationCapError(len(cand), cap)
    free = sorted(cand - {forced} if forced is not None else cand)
    base = frozenset() if forced is None else frozenset({forced})
    best: int | float = math.inf
    for size in range(0, len(free) + 1):
        if forced is None and size == 0:
            continue
        for combo in combinations(free, size):
            pattern = ZonePattern(nz=nz, nonempty=base | frozenset(combo), candidates=cand)
            best = min(best, pattern_bound(pattern, n))
            if best == 0:
                return 0
    return best


def _candidate_zones(braid: ColoredBraid, dec: DiagonalDecomposition) -> frozenset[int]:
    return frozenset(z for z, count in zone_census(dec).items() if count)


def bound_F(
    braid: ColoredBraid,
    dec: DiagonalDecomposition | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> BoundOutcome:
    """Certified lower bound for the order of the projection resolving all
    non-diagonal crossings.

    In the 1-colored case the bound is the diagonal count y, at any level.
    Otherwise it is the min-max over zone-emptiness patterns; with no full
    twist in range (z = 0) the bound degenerates to 0.
    """
    if not braid.is_positive():
        raise ValueError("bounds require a positive braid")
    if dec is None:
        dec = find_diagonals(braid)
    if braid.m == 1:
        return BoundOutcome(value=dec.y)
    if dec.z == 0 and len(braid.word) > 0:
        return BoundOutcome(value=0, note=NO_FULL_TWIST)
    value = cone_bound(braid.n, dec.used_count, _candidate_zones(braid, dec), cap)
    return BoundOutcome(value=value)


def bound_g(
    braid: ColoredBraid,
    dec: DiagonalDecomposition | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> BoundOutcome:
    """Bound for the projection resolving only the final crossing: the cone
    analysis forces the final crossing's zone to be non-empty.

    When the final crossing belongs to a used diagonal, diagonals are
    recomputed on the word without it so the crossing can be treated as
    non-diagonal.
    """
    if not braid.is_positive():
        raise ValueError("bounds require a positive braid")
    if not braid.word:
        raise ValueError("bound_g needs a nonempty word")
    if dec is None:
        dec = find_diagonals(braid)
    last = len(braid.word)
    gen = braid.word[-1][0]
    if any(last in diag for diag in dec.used):
        shortened = ColoredBraid(
            n=braid.n, word=braid.word[:-1], m=braid.m, level=braid.level
        )
        dec = find_diagonals(shortened)
        forced = sum(1 for d in dec.used if last > d[gen - 1])
        candidates = _candidate_zones(shortened, dec) | {forced}
    else:
        forced = dec.zone_of[last]
        candidates = _candidate_zones(braid, dec)
    value = cone_bound(braid.n, dec.used_count, candidates, cap, forced=forced)
    return BoundOutcome(value=value)


def twist_projection_bound(n: int, y: int) -> int:
    """Certified order bound for dropping one fractional twist from a stack
    of y+1: the bound is y itself."""
    if n < 1 or y < 0:
        raise ValueError("need n >= 1 and y >= 0")
    return y


def cauchy_report(
    spec: InfiniteBraidSpec,
    ells: list[int] | tuple[int, ...],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> CauchyReport:
    """Per-length bound report for a complete positive spec, with the
    monotonicity evidence for the diagonal count."""
    if not spec.is_positive():
        raise ValueError("not positive")
    if not is_complete(spec):
        raise ValueError("not complete")
    reports = []
    for ell in ells:
        braid = partial_braid(spec, ell)
        dec = find_diagonals(braid)
        outcome_F = bound_F(braid, dec, cap)
        outcome_g = bound_g(braid, dec, cap) if braid.word else None
        reports.append(
            BoundReport(
                ell=ell,
                y=dec.y,
                z=dec.z,
                bound_F=outcome_F.value,
                bound_g=None if outcome_g is None else outcome_g.value,
                note_F=outcome_F.note,
            )
        )
    ys = [r.y for r in reports]
    nondecreasing = all(a <= b for a, b in zip(ys, ys[1:]))
    growing = bool(ys) and ys[-1] > ys[0]
    return CauchyReport(
        reports=tuple(reports), y_nondecreasing=nondecreasing, y_growing=growing
    )
