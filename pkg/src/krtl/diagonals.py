"""Greedy diagonal decomposition of a positive braid word.

A diagonal is a subsequence of crossings realizing one fractional twist
sigma_1 sigma_2 ... sigma_(n-1), found top-down; diagonals below the last
complete full twist are erased, and the remaining crossings are assigned to
the zones cut out by the used diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import ColoredBraid


@dataclass(frozen=True)
class DiagonalDecomposition:
    """Greedy diagonal structure of a positive word.

    ``diagonals`` lists every completed diagonal (used or erased) as a tuple
    of 1-based word positions carrying generators 1, ..., n-1 in order.
    ``zone_of`` maps each non-diagonal position (skipped crossings plus the
    crossings of erased diagonals) to its zone index in [0, n*z].
    """

    n: int
    length: int
    diagonals: tuple[tuple[int, ...], ...]
    y: int
    z: int
    used_count: int
    zone_of: dict[int, int]
    skipped: frozenset[int]

    @property
    def used(self) -> tuple[tuple[int, ...], ...]:
        return self.diagonals[: self.used_count]

    @property
    def erased(self) -> tuple[tuple[int, ...], ...]:
        return self.diagonals[self.used_count :]

    def nondiagonal_positions(self) -> tuple[int, ...]:
        return tuple(sorted(self.zone_of))

    def to_dict(self) -> dict:
        return {
            "y": self.y,
            "z": self.z,
            "used": self.used_count,
            "diagonals": [list(d) for d in self.diagonals],
            "skipped": sorted(self.skipped),
            "zones": {str(z): c for z, c in sorted(zone_census(self).items())},
        }


def find_diagonals(braid: ColoredBraid) -> DiagonalDecomposition:
    """Greedy top-down construction.

    Scanning downward, each diagonal collects the first occurrence of
    sigma_1, then sigma_2 below it, and so on up to sigma_(n-1).  After a
    diagonal completes we backtrack upward from its sigma_(n-1): at each step
    take the latest occurrence of the next-lower generator above the current
    position; the next diagonal starts at the first sigma_1 strictly below the
    backtracked sigma_1.  Diagonals beyond the first n*z are erased.
    """
    if not braid.is_positive():
        raise ValueError("diagonal decomposition requires a positive braid")
    n = braid.n
    gens = braid.generators()
    length = len(gens)
    occurrences: dict[int, list[int]] = {g: [] for g in range(1, n)}
    for pos, g in enumerate(gens, start=1):
        occurrences[g].append(pos)

    diagonals: list[tuple[int, ...]] = []
    start = 0  # next diagonal's sigma_1 must lie strictly below this position
    while True:
        positions: list[int] = []
        cursor = start
        ok = True
        for g in range(1, n):
            nxt = _first_after(occurrences[g], cursor)
            if nxt is None:
                ok = False
                break
            positions.append(nxt)
            cursor = nxt
        if not ok:
            break
        diagonals.append(tuple(positions))
        # Backtrack from the sigma_(n-1) of this diagonal up through the
        # latest sigma_(n-2), ..., sigma_1 occurrences above it.
        cursor = positions[-1]
        for g in range(n - 2, 0, -1):
            prev = _last_before(occurrences[g], cursor)
            if prev is None:  # cannot happen: the diagonal's own entry is above
                prev = positions[g - 1]
            cursor = prev
        start = cursor

    y = len(diagonals)
    z = y // n
    used_count = n * z
    used = diagonals[:used_count]

    diagonal_positions = {p for d in diagonals for p in d}
    skipped = frozenset(p for p in range(1, length + 1) if p not in diagonal_positions)
    used_positions = {p for d in used for p in d}

    zone_of: dict[int, int] = {}
    for pos in range(1, length + 1):
        if pos in used_positions:
            continue
        g = gens[pos - 1]
        zone_of[pos] = sum(1 for d in used if pos > d[g - 1])

    return DiagonalDecomposition(
        n=n,
        length=length,
        diagonals=tuple(diagonals),
        y=y,
        z=z,
        used_count=used_count,
        zone_of=zone_of,
        skipped=skipped,
    )


def zone_census(dec: DiagonalDecomposition) -> dict[int, int]:
    """Number of non-diagonal crossings in each zone 0..n*z (all indices present)."""
    census = {zone: 0 for zone in range(dec.used_count + 1)}
    for zone in dec.zone_of.values():
        census[zone] += 1
    return census


def _first_after(sorted_positions: list[int], cursor: int) -> int | None:
    lo, hi = 0, len(sorted_positions)
    while lo < hi:
        mid = (lo + hi) // 2
        if sorted_positions[mid] > cursor:
            hi = mid
        else:
            lo = mid + 1
    return sorted_positions[lo] if lo < len(sorted_positions) else None


def _last_before(sorted_positions: list[int], cursor: int) -> int | None:
    lo, hi = 0, len(sorted_positions)
    while lo < hi:
        mid = (lo + hi) // 2
        if sorted_positions[mid] < cursor:
            lo = mid + 1
        else:
            hi = mid
    return sorted_positions[lo - 1] if lo > 0 else None
