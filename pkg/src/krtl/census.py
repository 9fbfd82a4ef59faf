"""Crossing complexes as graded term lists, with zero-web truncation, cone
splitting, and multiplicative resolution censuses of whole braids."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import ColoredBraid
from .diagonals import DiagonalDecomposition
from .laurent import GradingShift, LaurentPoly

DEFAULT_RESOLUTION_CAP = 2**20


class ResolutionSizeError(RuntimeError):
    """Raised when a census would enumerate more resolutions than the cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} resolutions exceed the cap of {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class CrossingTerm:
    """One term of a crossing complex: the rung width and its grading shift."""

    rung: int
    shift: GradingShift


@dataclass(frozen=True)
class ConeSplit:
    """A crossing complex split as a mapping cone of an identity-resolution
    part against the ladder subcomplex.  ``connecting`` is the extra shift
    carried by ``shifted_part`` inside the cone."""

    resolution: CrossingTerm
    ladder: tuple[CrossingTerm, ...]
    connecting: GradingShift
    shifted_part: str  # "ladder" for positive crossings, "resolution" for negative


@dataclass(frozen=True)
class ResolutionCensus:
    """Term lists per crossing plus the derived object count and Poincaré
    polynomial of the fully expanded complex."""

    terms: tuple[tuple[CrossingTerm, ...], ...]
    object_count: int
    poincare: LaurentPoly


def crossing_complex(
    i: int, j: int, sign: int, N: int | float = math.inf
) -> tuple[CrossingTerm, ...]:
    """Terms of the complex of a crossing of colors (i, j), in homological
    order.  Rungs run over [0, min(i,j)]; a term survives iff
    max(i,j) + rung <= N.  Positive crossings carry t^r q^r on the rung-r
    term, negative ones t^(min-r) q^(min-r).
    """
    if i < 1 or j < 1:
        raise ValueError("crossing colors must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    lo, hi = min(i, j), max(i, j)
    rungs = [r for r in range(lo + 1) if hi + r <= N]
    if sign == 1:
        return tuple(CrossingTerm(r, GradingShift(r, r)) for r in rungs)
    return tuple(CrossingTerm(r, GradingShift(lo - r, lo - r)) for r in reversed(rungs))


def cone_split(i: int, j: int, sign: int, N: int | float = math.inf) -> ConeSplit:
    """Split a unicolored crossing complex into identity resolution plus
    ladder subcomplex.

    Positive: cone of (identity -> t^-1 * ladder part).  Negative: cone of
    (ladder part -> t^(m-1) q^m * identity).
    """
    if i != j:
        raise ValueError("cone splitting is defined for unicolored crossings")
    m = i
    terms = crossing_complex(i, j, sign, N)
    identity = [t for t in terms if t.rung == 0]
    ladder = tuple(t for t in terms if t.rung >= 1)
    if not identity:
        raise ValueError("identity resolution was truncated away")
    if sign == 1:
        return ConeSplit(
            resolution=identity[0],
            ladder=ladder,
            connecting=GradingShift(t_exp=-1),
            shifted_part="ladder",
        )
    # Inside the cone the ladder terms keep their natural shifts
    # t^(m-r) q^(m-r); the identity carries t^(m-1) q^m.
    return ConeSplit(
        resolution=CrossingTerm(0, GradingShift()),
        ladder=ladder,
        connecting=GradingShift(t_exp=m - 1, q_exp=m),
        shifted_part="resolution",
    )


def braid_census(braid: ColoredBraid) -> ResolutionCensus:
    """Expand every crossing of a unicolored braid into its term list."""
    terms = tuple(
        crossing_complex(braid.m, braid.m, sign, braid.level) for _, sign in braid.word
    )
    count = 1
    poincare = LaurentPoly.one()
    for term_list in terms:
        count *= len(term_list)
        poincare = poincare * _term_sum(term_list)
    return ResolutionCensus(terms=terms, object_count=count, poincare=poincare)


def census_poincare(braid: ColoredBraid) -> LaurentPoly:
    """Product over crossings of the term-shift sums; multiplicative over
    word concatenation."""
    return braid_census(braid).poincare


def _term_sum(terms: tuple[CrossingTerm, ...]) -> LaurentPoly:
    out = LaurentPoly.zero()
    for term in terms:
        out = out + term.shift.to_poly()
    return out


def resolve_nondiagonals(
    braid: ColoredBraid,
    dec: DiagonalDecomposition,
    cap: int = DEFAULT_RESOLUTION_CAP,
) -> dict[frozenset[int], int]:
    """Count resolutions of the non-diagonal crossings by zone-emptiness
    pattern.

    Each non-diagonal crossing is resolved to one of its surviving rungs; a
    zone is non-empty in a resolution iff some crossing assigned to it has
    rung >= 1.  The all-rung-0 resolution contributes to the all-empty
    pattern.  Raises :class:`ResolutionSizeError` (with the exact count) if
    the number of resolutions exceeds ``cap``.
    """
    if not braid.is_positive():
        raise ValueError("resolution census requires a positive braid")
    choices = {
        pos: len(crossing_complex(braid.m, braid.m, 1, braid.level))
        for pos in dec.zone_of
    }
    total = 1
    for k in choices.values():
        total *= k
    if total > cap:
        raise ResolutionSizeError(total, cap)

    per_zone: dict[int, int] = {}
    for pos, k in choices.items():
        zone = dec.zone_of[pos]
        per_zone[zone] = per_zone.get(zone, 1) * k

    zones = sorted(per_zone)
    patterns: dict[frozenset[int], int] = {frozenset(): 1}
    for zone in zones:
        nonempty_ways = per_zone[zone] - 1
        new: dict[frozenset[int], int] = {}
        for pattern, count in patterns.items():
            new[pattern] = new.get(pattern, 0) + count  # zone stays empty
            if nonempty_ways:
                enlarged = pattern | {zone}
                new[enlarged] = new.get(enlarged, 0) + count * nonempty_ways
        patterns = new
    return patterns
