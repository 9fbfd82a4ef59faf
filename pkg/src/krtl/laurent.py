"""Exact sparse Laurent polynomials in three formal variables, and the
quantum integers / factorials / binomials built on them.

The default variable names are ``t`` (homological), ``q`` (quantum) and
``a`` (Hochschild).  The same class doubles as the coefficient ring for the
two-variable link polynomial, where the exponent slots are read as
``(a, z, delta)`` instead; only rendering changes, the arithmetic does not.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

Exponents = tuple[int, int, int]

# Canonical term order: lexicographic in (t, a, q) ascending, i.e. slots
# (0, 2, 1) of the exponent triple.
_CANONICAL_ORDER = (0, 2, 1)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    Terms are stored as a map from exponent triples to nonzero coefficients;
    zero coefficients are never kept, so equal polynomials compare equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[Exponents, int] | None = None):
        clean: dict[Exponents, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[(int(exps[0]), int(exps[1]), int(exps[2]))] = coeff
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({(0, 0, 0): 1})

    @staticmethod
    def constant(c: int) -> "LaurentPoly":
        return LaurentPoly({(0, 0, 0): c})

    @staticmethod
    def monomial(e0: int = 0, e1: int = 0, e2: int = 0, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({(e0, e1, e2): coeff})

    @staticmethod
    def var_t(exp: int = 1) -> "LaurentPoly":
        return LaurentPoly.monomial(exp, 0, 0)

    @staticmethod
    def var_q(exp: int = 1) -> "LaurentPoly":
        return LaurentPoly.monomial(0, exp, 0)

    @staticmethod
    def var_a(exp: int = 1) -> "LaurentPoly":
        return LaurentPoly.monomial(0, 0, exp)

    # -- basic protocol ----------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = out.get(exps, 0) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                new = out.get(exps, 0) + c1 * c2
                if new:
                    out[exps] = new
                else:
                    out.pop(exps, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- queries and substitution ------------------------------------------

    def coefficient(self, e0: int, e1: int, e2: int) -> int:
        return self._terms.get((e0, e1, e2), 0)

    def min_exponent(self, slot: int) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(e[slot] for e in self._terms)

    def max_exponent(self, slot: int) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(e[slot] for e in self._terms)

    def evaluate(self, v0: int = 1, v1: int = 1, v2: int = 1) -> int:
        """Evaluate at integer points; exponents must be nonnegative where
        the value is 0, and any integer elsewhere (inverses only for ±1)."""
        total = 0
        for (a, b, c), coeff in self._terms.items():
            total += coeff * _int_pow(v0, a) * _int_pow(v1, b) * _int_pow(v2, c)
        return total

    def substitute_slot(self, slot: int, value: "LaurentPoly") -> "LaurentPoly":
        """Replace one variable by a polynomial.  Exponents of that variable
        must be nonnegative."""
        out = LaurentPoly.zero()
        for exps, coeff in self._terms.items():
            e = exps[slot]
            if e < 0:
                raise ValueError("cannot substitute into a negative exponent")
            rest = list(exps)
            rest[slot] = 0
            out = out + LaurentPoly({tuple(rest): coeff}) * value**e
        return out

    def shift(self, d0: int, d1: int, d2: int) -> "LaurentPoly":
        return LaurentPoly({(e[0] + d0, e[1] + d1, e[2] + d2): c for e, c in self._terms.items()})

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        key = lambda item: tuple(item[0][i] for i in _CANONICAL_ORDER)
        return sorted(self._terms.items(), key=key)

    # -- text form ----------------------------------------------------------

    def to_text(self, names: tuple[str, str, str] = ("t", "q", "a")) -> str:
        """Canonical serialization: ``c*t^i*q^j*a^k`` terms, zero exponents
        omitted, sorted lexicographically in (t, a, q) ascending."""
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [str(coeff)]
            for slot, name in enumerate(names):
                if exps[slot]:
                    factors.append(f"{name}^{exps[slot]}")
            parts.append("*".join(factors))
        text = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                text += " - " + part[1:]
            else:
                text += " + " + part
        return text

    @staticmethod
    def from_text(text: str, names: tuple[str, str, str] = ("t", "q", "a")) -> "LaurentPoly":
        """Parse the output of :meth:`to_text` (lossless round trip)."""
        text = text.strip()
        if text == "0":
            return LaurentPoly.zero()
        slot_of = {name: i for i, name in enumerate(names)}
        chunks = re.split(r"\s+([+-])\s+", text)
        out: dict[Exponents, int] = {}
        rest = chunks[1:]
        items = [(1, chunks[0])] + [
            (1 if rest[i] == "+" else -1, rest[i + 1]) for i in range(0, len(rest), 2)
        ]
        for sign, chunk in items:
            exps = [0, 0, 0]
            coeff = None
            factors = chunk.split("*")
            for factor in factors:
                factor = factor.strip()
                m = re.fullmatch(rf"({'|'.join(map(re.escape, names))})\^(-?\d+)", factor)
                if m:
                    exps[slot_of[m.group(1)]] += int(m.group(2))
                    continue
                m = re.fullmatch(r"-?\d+", factor)
                if m is None:
                    raise ValueError(f"cannot parse polynomial factor {factor!r}")
                coeff = int(factor)
            if coeff is None:
                raise ValueError(f"term {chunk!r} is missing a coefficient")
            key = (exps[0], exps[1], exps[2])
            out[key] = out.get(key, 0) + sign * coeff
        return LaurentPoly(out)

    def pretty(
        self,
        names: tuple[str, str, str] = ("t", "q", "a"),
        order: tuple[int, int, int] = _CANONICAL_ORDER,
    ) -> str:
        """Human-friendly rendering: unit coefficients and ``^1`` omitted,
        e.g. ``2a^2 - a^4 + a^2z^2``."""
        if not self._terms:
            return "0"
        key = lambda item: tuple(item[0][i] for i in order)
        parts = []
        for exps, coeff in sorted(self._terms.items(), key=key):
            mono = "".join(
                name + (f"^{exps[slot]}" if exps[slot] != 1 else "")
                for slot, name in enumerate(names)
                if exps[slot]
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}{mono}"
            parts.append((coeff < 0, body))
        neg, body = parts[0]
        text = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            text += (" - " if neg else " + ") + body
        return text


def _int_pow(base: int, exp: int) -> int:
    if exp >= 0:
        return base**exp
    if base in (1, -1):
        return base**(-exp % 2) if base == -1 else 1
    raise ValueError("negative exponent at a non-unit integer")


@dataclass(frozen=True)
class GradingShift:
    """A monomial grading shift t^i q^j a^k; composition adds exponents."""

    t_exp: int = 0
    q_exp: int = 0
    a_exp: int = 0

    def compose(self, other: "GradingShift") -> "GradingShift":
        return GradingShift(
            self.t_exp + other.t_exp,
            self.q_exp + other.q_exp,
            self.a_exp + other.a_exp,
        )

    def __mul__(self, other: "GradingShift") -> "GradingShift":
        return self.compose(other)

    def inverse(self) -> "GradingShift":
        return GradingShift(-self.t_exp, -self.q_exp, -self.a_exp)

    def is_identity(self) -> bool:
        return self == IDENTITY_SHIFT

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.t_exp, self.q_exp, self.a_exp)

    def monomial_text(self) -> str:
        if self.is_identity():
            return "1"
        out = ""
        for name, exp in (("t", self.t_exp), ("q", self.q_exp), ("a", self.a_exp)):
            if exp == 1:
                out += name
            elif exp:
                out += f"{name}^{exp}"
        return out


IDENTITY_SHIFT = GradingShift(0, 0, 0)


@functools.lru_cache(maxsize=None)
def quantum_int(n: int) -> LaurentPoly:
    """[n] = 1 + q^2 + ... + q^(2n-2); the empty sum for n = 0."""
    if n < 0:
        raise ValueError("quantum integers need n >= 0")
    return LaurentPoly({(0, 2 * j, 0): 1 for j in range(n)})


@functools.lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    """[n]! = [n][n-1]...[1]; the empty product for n = 0."""
    if n < 0:
        raise ValueError("quantum factorials need n >= 0")
    out = LaurentPoly.one()
    for k in range(1, n + 1):
        out = out * quantum_int(k)
    return out


@functools.lru_cache(maxsize=None)
def quantum_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial in q^2, computed by the q-Pascal recursion
    qbinom(n,k) = qbinom(n-1,k-1) + q^(2k) * qbinom(n-1,k).

    Division-free, so coefficients stay exact nonnegative integers.
    Returns 0 outside 0 <= k <= n.
    """
    if n < 0:
        raise ValueError("quantum binomials need n >= 0")
    if k < 0 or k > n:
        return LaurentPoly.zero()
    if k == 0 or k == n:
        return LaurentPoly.one()
    return quantum_binomial(n - 1, k - 1) + LaurentPoly.var_q(2 * k) * quantum_binomial(n - 1, k)
