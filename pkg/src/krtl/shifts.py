"""Closed-form grading shifts for fork and ladder moves and for braid-like
Reidemeister moves, plus the aggregate homological shift of an isotopy.

The same formulas serve the finite-level and untruncated modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import GradingShift


@dataclass(frozen=True)
class Crossing:
    """A crossing between strands colored i and j; color 0 encodes a strand
    that is not actually present."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("colors must be >= 0")

    @property
    def min(self) -> int:
        return min(self.i, self.j)


def crossing_min(i: int, j: int) -> int:
    """Minimum of the two colors at a crossing."""
    if i < 0 or j < 0:
        raise ValueError("colors must be >= 0")
    return min(i, j)


def fork_slide_shift(i: int, j: int, k: int, variant: str = "T1") -> GradingShift:
    """Shift for sliding a fork with prong colors i, j past a strand colored k.

    The T1-type slide carries (tq)^(min(i,k)+min(j,k)-min(i+j,k)); the
    exponent is always >= 0, strictly positive when i = j = k.  The T2-type
    slide is shift-free.
    """
    if min(i, j, k) < 0:
        raise ValueError("colors must be >= 0")
    if variant == "T2":
        return GradingShift()
    if variant != "T1":
        raise ValueError(f"unknown fork slide variant {variant!r}")
    e = min(i, k) + min(j, k) - min(i + j, k)
    return GradingShift(t_exp=e, q_exp=e)


def fork_twist_shift(i: int, j: int, variant: str) -> GradingShift:
    """Kink added at a fork with prong colors i, j.

    T3: t^min(i,j) q^(ij+min(i,j)); T4: q^(-ij).
    """
    if min(i, j) < 0:
        raise ValueError("colors must be >= 0")
    if variant == "T3":
        e = min(i, j)
        return GradingShift(t_exp=e, q_exp=i * j + e)
    if variant == "T4":
        return GradingShift(t_exp=0, q_exp=-i * j)
    raise ValueError(f"unknown fork twist variant {variant!r}")


def ladder_slide_shift(i: int, j: int, k: int, ell: int) -> GradingShift:
    """Slide a rung of width k (taken off the j strand, deposited on the i
    strand) past a strand colored ell:
    (tq)^(min(i,ell)+min(j,ell)-min(i+k,ell)-min(j-k,ell)).
    """
    if min(i, j, ell) < 0 or not 0 <= k <= j:
        raise ValueError("need i, j, ell >= 0 and 0 <= k <= j")
    e = min(i, ell) + min(j, ell) - min(i + k, ell) - min(j - k, ell)
    return GradingShift(t_exp=e, q_exp=e)


def ladder_twist_shift(i: int, j: int, k: int) -> GradingShift:
    """Pull a rung of width k through a crossing of strands colored i and j,
    twisting it: t^e q^(e+(i-j-k)k) with e = min(i-k, j-k) - min(i, k).
    """
    _check_twist_args(i, j, k)
    e = min(i - k, j - k) - min(i, k)
    return GradingShift(t_exp=e, q_exp=e + (i - j - k) * k)


def ladder_twist_proof_composition(i: int, j: int, k: int) -> GradingShift:
    """The same move assembled from its four constituent fork moves:
    an inverse fork slide, a fork untwist, a fork twist, and a fork slide.

    Factors: (qt)^(min(i-k,j+k)-min(k,i-k)-min(j,i-k))
           * (qt)^min(i-k,k) q^((i-k)k)
           * (qt)^(-min(j,k)) q^(-jk)
           * (qt)^(min(j,k)+min(j,i-k)-min(i,j)).
    """
    _check_twist_args(i, j, k)
    qt1 = min(i - k, j + k) - min(k, i - k) - min(j, i - k)
    qt2 = min(i - k, k)
    q2 = (i - k) * k
    qt3 = -min(j, k)
    q3 = -j * k
    qt4 = min(j, k) + min(j, i - k) - min(i, j)
    e = qt1 + qt2 + qt3 + qt4
    return GradingShift(t_exp=e, q_exp=e + q2 + q3)


def _check_twist_args(i: int, j: int, k: int):
    # k = 0 is rejected: the formula returns a nonzero shift for a vacuous move.
    if not 1 <= k <= min(i, j):
        raise ValueError(f"ladder twists need 1 <= k <= min(i, j), got ({i}, {j}, {k})")


def isotopy_alpha(
    before: Sequence[Crossing | tuple[int, int]],
    after: Sequence[Crossing | tuple[int, int]],
) -> int:
    """Aggregate homological shift of a braid-like isotopy: the sum of
    crossing color minima before minus the same sum after."""
    return _min_sum(before) - _min_sum(after)


def _min_sum(crossings: Iterable[Crossing | tuple[int, int]]) -> int:
    total = 0
    for c in crossings:
        if isinstance(c, Crossing):
            total += c.min
        else:
            total += crossing_min(*c)
    return total


def reidemeister_shift(move: str, i: int, N: int | float = math.inf) -> GradingShift:
    """Shift incurred by a braid-like Reidemeister move on an i-colored strand.

    R2 is t^i q^i; the two kink removals depend on the finite level N:
    R1pos is q^(i(i-N)) and R1neg is t^i q^(i(N-i+1)).
    """
    if i < 0:
        raise ValueError("color must be >= 0")
    if move == "R2":
        return GradingShift(t_exp=i, q_exp=i)
    if move in ("R1pos", "R1neg"):
        if N == math.inf:
            raise ValueError("R1 shifts need a finite level")
        if move == "R1pos":
            return GradingShift(t_exp=0, q_exp=i * (i - int(N)))
        return GradingShift(t_exp=i, q_exp=i * (int(N) - i + 1))
    raise ValueError(f"unknown Reidemeister move {move!r}")
