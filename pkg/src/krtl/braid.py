"""Unicolored braid words, eventually-periodic infinite braid specifications,
their text format, and the structural reports derived from them."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .laurent import GradingShift

Crossing = tuple[int, int]  # (generator index, sign in {+1, -1})

INFINITE = math.inf


class BraidParseError(ValueError):
    """Syntax or consistency error in a braid file, with location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _check_level(m: int, level: int | float, n: int):
    if m < 1:
        raise ValueError(f"color m={m} must be >= 1")
    if level != INFINITE:
        if not isinstance(level, int) or level < 1:
            raise ValueError(f"level N={level} must be a positive integer or infinity")
        if m > level:
            raise ValueError(f"color m={m} exceeds level N={level}")
        if m == level:
            warnings.warn(
                f"color m={m} equals level N: every crossing complex truncates "
                "to its identity term",
                stacklevel=3,
            )
    if n < 1:
        raise ValueError(f"strand count n={n} must be >= 1")


@dataclass(frozen=True)
class ColoredBraid:
    """A finite braid word on n strands, every strand colored m, at level N.

    ``level`` is a positive integer or ``math.inf`` for the untruncated mode.
    """

    n: int
    word: tuple[Crossing, ...]
    m: int = 1
    level: int | float = INFINITE

    def __post_init__(self):
        _check_level(self.m, self.level, self.n)
        for pos, (gen, sign) in enumerate(self.word, start=1):
            if not 1 <= gen <= self.n - 1:
                raise ValueError(
                    f"crossing {pos}: generator index {gen} outside [1, {self.n - 1}]"
                )
            if sign not in (1, -1):
                raise ValueError(f"crossing {pos}: sign must be +1 or -1, got {sign}")

    def __len__(self) -> int:
        return len(self.word)

    def is_positive(self) -> bool:
        return all(sign == 1 for _, sign in self.word)

    def writhe(self) -> int:
        return sum(sign for _, sign in self.word)

    def generators(self) -> tuple[int, ...]:
        return tuple(gen for gen, _ in self.word)

    def to_text(self) -> str:
        header = f"n={self.n} m={self.m} N={'inf' if self.level == INFINITE else self.level}"
        body = " ".join(str(gen * sign) for gen, sign in self.word)
        return header + "\n" + body + ("\n" if body else "")


@dataclass(frozen=True)
class InfiniteBraidSpec:
    """Eventually-periodic (semi-)infinite braid: a finite prefix followed by
    a repeated positive tail.  A bi-infinite braid carries a second
    (prefix, tail) pair describing the backward direction.
    """

    n: int
    m: int
    level: int | float
    prefix: tuple[Crossing, ...] = ()
    tail: tuple[int, ...] = ()
    back_prefix: tuple[Crossing, ...] | None = None
    back_tail: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        _check_level(self.m, self.level, self.n)
        if not self.tail:
            raise ValueError("tail must be nonempty")
        for tails in (self.tail, self.back_tail or ()):
            for gen in tails:
                if not 1 <= gen <= self.n - 1:
                    raise ValueError(f"tail generator {gen} outside [1, {self.n - 1}]")
        for prefix in (self.prefix, self.back_prefix or ()):
            for pos, (gen, sign) in enumerate(prefix, start=1):
                if not 1 <= gen <= self.n - 1:
                    raise ValueError(
                        f"prefix crossing {pos}: generator {gen} outside [1, {self.n - 1}]"
                    )
                if sign not in (1, -1):
                    raise ValueError(f"prefix crossing {pos}: bad sign {sign}")
        if (self.back_prefix is None) != (self.back_tail is None):
            raise ValueError("backward prefix and tail must be given together")

    @property
    def bi_infinite(self) -> bool:
        return self.back_tail is not None

    def is_positive(self) -> bool:
        prefixes = self.prefix + (self.back_prefix or ())
        return all(sign == 1 for _, sign in prefixes)

    def negative_count(self) -> int:
        prefixes = self.prefix + (self.back_prefix or ())
        return sum(1 for _, sign in prefixes if sign == -1)

    def to_text(self) -> str:
        header = f"n={self.n} m={self.m} N={'inf' if self.level == INFINITE else self.level}"
        tail_line = "tail=" + " ".join(str(g) for g in self.tail)
        body = " ".join(str(gen * sign) for gen, sign in self.prefix)
        lines = [header, tail_line]
        if body:
            lines.append(body)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class StructureReport:
    """Outcome of splitting a non-complete spec at its last finitely-occurring
    generator: block widths across the idle strand positions, and the cut r."""

    r: int
    blocks: tuple[int, ...]
    gamma_complement: tuple[int, ...]
    text: str


# ---------------------------------------------------------------------------
# parsing


def _parse_header(line: str, lineno: int) -> dict[str, int | float]:
    out: dict[str, int | float] = {}
    col = 1
    for token in line.split():
        col = line.index(token, col - 1) + 1
        if "=" not in token:
            raise BraidParseError(f"expected key=value, got {token!r}", lineno, col)
        key, _, value = token.partition("=")
        if key not in ("n", "m", "N"):
            raise BraidParseError(f"unknown header key {key!r}", lineno, col)
        if key == "N" and value == "inf":
            out[key] = INFINITE
        else:
            try:
                out[key] = int(value)
            except ValueError:
                raise BraidParseError(f"bad integer {value!r}", lineno, col) from None
        col += len(token)
    for key in ("n", "m", "N"):
        if key not in out:
            raise BraidParseError(f"header is missing {key}=", lineno, 1)
    return out


def _parse_ints(line: str, lineno: int) -> list[tuple[int, int, int]]:
    """Signed integers with their columns."""
    out = []
    col = 0
    for token in line.split():
        col = line.index(token, col) + 1
        try:
            value = int(token)
        except ValueError:
            raise BraidParseError(f"expected a signed integer, got {token!r}", lineno, col) from None
        out.append((value, lineno, col))
        col += len(token) - 1
    return out


def parse_braid(text: str) -> ColoredBraid | InfiniteBraidSpec:
    """Parse the braid file format.

    Header line ``n=<int> m=<int> N=<int|inf>``; an optional second header
    ``tail=<space-separated ints>`` turns the result into an
    :class:`InfiniteBraidSpec` whose body is the prefix.  The body is a
    whitespace-separated list of signed generator indices.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise BraidParseError("empty input, expected a header line", 1, 1)
    header = _parse_header(lines[0], 1)
    n = int(header["n"])
    m = int(header["m"])
    level = header["N"]

    tail: tuple[int, ...] | None = None
    body_start = 1
    if len(lines) > 1 and lines[1].lstrip().startswith("tail="):
        tail_line = lines[1]
        payload = tail_line.split("=", 1)[1]
        entries = _parse_ints(payload, 2)
        tail_vals = []
        for value, lineno, col in entries:
            if value < 0:
                raise BraidParseError("tail crossings must be positive", lineno, col)
            tail_vals.append(value)
        if not tail_vals:
            raise BraidParseError("tail must be nonempty", 2, 1)
        tail = tuple(tail_vals)
        body_start = 2

    word: list[Crossing] = []
    for lineno in range(body_start, len(lines)):
        for value, ln, col in _parse_ints(lines[lineno], lineno + 1):
            if value == 0:
                raise BraidParseError("generator index 0 is not allowed", ln, col)
            gen, sign = abs(value), (1 if value > 0 else -1)
            if not 1 <= gen <= n - 1:
                raise BraidParseError(
                    f"generator index {gen} outside [1, {n - 1}]", ln, col
                )
            word.append((gen, sign))

    try:
        if tail is not None:
            return InfiniteBraidSpec(n=n, m=m, level=level, prefix=tuple(word), tail=tail)
        return ColoredBraid(n=n, word=tuple(word), m=m, level=level)
    except ValueError as exc:
        raise BraidParseError(str(exc), 1, 1) from None


# ---------------------------------------------------------------------------
# operations on infinite specs


def partial_braid(spec: InfiniteBraidSpec, ell: int) -> ColoredBraid:
    """First ``ell`` crossings of prefix followed by the repeated tail."""
    if spec.bi_infinite:
        raise ValueError("partial braids are defined for semi-infinite specs only")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    word: list[Crossing] = list(spec.prefix[:ell])
    i = len(word)
    while i < ell:
        word.append((spec.tail[(i - len(spec.prefix)) % len(spec.tail)], 1))
        i += 1
    return ColoredBraid(n=spec.n, word=tuple(word), m=spec.m, level=spec.level)


def _infinite_generators(spec: InfiniteBraidSpec) -> frozenset[int]:
    gens = frozenset(spec.tail)
    if spec.back_tail is not None:
        gens |= frozenset(spec.back_tail)
    return gens


def is_complete(spec: InfiniteBraidSpec) -> bool:
    """True iff every generator occurs infinitely often, i.e. appears in a tail."""
    return _infinite_generators(spec) == frozenset(range(1, spec.n))


def gamma_sets(spec: InfiniteBraidSpec) -> tuple[frozenset[int], frozenset[int]]:
    """(γ, γᶜ): the infinitely-occurring generator indices and the complement
    inside {0, ..., n}; the complement always contains 0 and n."""
    gamma = _infinite_generators(spec)
    complement = frozenset(range(0, spec.n + 1)) - gamma
    return gamma, complement


def decompose_noncomplete(spec: InfiniteBraidSpec) -> StructureReport:
    """Split a positive semi-infinite spec along its idle strand positions.

    Returns the last word position ``r`` at which any finitely-occurring
    generator appears (0 if none) and the block widths between consecutive
    elements of γᶜ.  The rendered text names the per-block projector symbols;
    they are labels only.
    """
    if spec.bi_infinite:
        raise ValueError("decomposition is defined for semi-infinite specs only")
    if not spec.is_positive():
        raise ValueError("decomposition requires a positive spec")
    gamma, complement = gamma_sets(spec)
    finite_gens = complement - {0, spec.n}
    r = 0
    for pos, (gen, _) in enumerate(spec.prefix, start=1):
        if gen in finite_gens:
            r = pos
    cuts = sorted(complement)
    blocks = tuple(b - a for a, b in zip(cuts, cuts[1:]) if b - a > 0)
    pieces = " ⊔ ".join(f"P_{w}" for w in blocks)
    text = f"({pieces}) ⊗ C(B_{r})"
    return StructureReport(r=r, blocks=blocks, gamma_complement=tuple(cuts), text=text)


def negative_shift(spec: InfiniteBraidSpec) -> GradingShift:
    """Grading shift (tq)^(m*a) contributed by the a negative crossings of a
    complete spec whose tail is positive."""
    if not is_complete(spec):
        raise ValueError("negative shift requires a complete spec")
    a = spec.negative_count()
    return GradingShift(t_exp=spec.m * a, q_exp=spec.m * a, a_exp=0)
