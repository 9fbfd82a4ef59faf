"""The stable triply graded algebra of the infinite torus braid, its
truncations, and a Hecke-algebra trace oracle for the two-variable link
polynomial used in decategorified stabilization checks.

Polynomial values on the oracle side live in exponent slots (a, z, delta),
where delta is the closed-unknot factor subject to delta * z = a - a^(-1);
canonical form never keeps delta and z in the same monomial.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .braid import ColoredBraid
from .diagonals import find_diagonals
from .laurent import LaurentPoly

AZD = ("a", "z", "delta")
_AZD_ORDER = (1, 0, 2)  # sort printed terms by (z, a, delta)

# ---------------------------------------------------------------------------
# the stable algebra and its truncations


@dataclass(frozen=True)
class Generator:
    name: str
    t_deg: int
    q_deg: int
    a_deg: int
    odd: bool


@dataclass(frozen=True)
class TrigradedTable:
    """Finitely supported dimension table over (t, q, a) degrees."""

    dims: dict[tuple[int, int, int], int]
    n: int
    y: int
    q_min: int

    def rows(self) -> list[tuple[int, int, int, int]]:
        ordered = sorted(self.dims.items(), key=lambda kv: (kv[0][0], kv[0][2], kv[0][1]))
        return [(t, q, a, d) for (t, q, a), d in ordered]

    def to_tsv(self) -> str:
        lines = ["t\tq\ta\tdim"]
        lines += [f"{t}\t{q}\t{a}\t{d}" for t, q, a, d in self.rows()]
        return "\n".join(lines) + "\n"

    def total(self) -> int:
        return sum(self.dims.values())


def an_generators(n: int) -> list[Generator]:
    """The 2n generators of the stable algebra: even u_k of tridegree
    (2k-2, -2k, 0) and odd xi_k of tridegree (2k-2, 4-2k, 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    gens = []
    for k in range(1, n + 1):
        gens.append(Generator(f"u{k}", 2 * k - 2, -2 * k, 0, odd=False))
        gens.append(Generator(f"xi{k}", 2 * k - 2, 4 - 2 * k, 1, odd=True))
    return gens


def an_truncated_dims(n: int, y: int, q_min: int) -> TrigradedTable:
    """Dimensions of the span of monomials u^a xi^b (a_i >= 0, b_i in {0,1})
    with total t-degree sum (2i-2)(a_i+b_i) < y, restricted to q >= q_min.

    The q-support is unbounded below (u_1 has q-degree -2), hence the cap.
    """
    if y < 0:
        raise ValueError("y must be >= 0")
    dims: dict[tuple[int, int, int], int] = {}

    def rec(k: int, t: int, q: int, a: int):
        if k > n:
            if q >= q_min:
                dims[(t, q, a)] = dims.get((t, q, a), 0) + 1
            return
        step_t = 2 * k - 2
        for b in (0, 1):
            t_b = t + step_t * b
            if t_b >= y:
                continue
            q_b = q + (4 - 2 * k) * b
            # Once the xi choice at this stage is made, no later generator
            # can raise q, so dropping below the cap prunes the subtree.
            e = 0
            while True:
                t_e = t_b + step_t * e
                if t_e >= y:
                    break
                q_e = q_b - 2 * k * e
                if q_e < q_min:
                    break
                rec(k + 1, t_e, q_e, a + b)
                e += 1

    rec(1, 0, 0, 0)
    return TrigradedTable(dims=dims, n=n, y=y, q_min=q_min)


def an_truncated_dims_bruteforce(n: int, y: int, q_min: int) -> TrigradedTable:
    """Independent enumerator used as a test oracle: iterates the odd part as
    bitmasks and the even exponents as explicit nested ranges."""
    dims: dict[tuple[int, int, int], int] = {}

    def even_loop(i: int, t: int, q: int, a: int):
        if i > n:
            if q >= q_min:
                dims[(t, q, a)] = dims.get((t, q, a), 0) + 1
            return
        step_t, step_q = 2 * i - 2, -2 * i
        e = 0
        while True:
            t_new, q_new = t + step_t * e, q + step_q * e
            if t_new >= y or q_new < q_min:
                break
            even_loop(i + 1, t_new, q_new, a)
            e += 1

    for mask in range(2**n):
        bits = [(mask >> (i - 1)) & 1 for i in range(1, n + 1)]
        t0 = sum((2 * i - 2) * b for i, b in zip(range(1, n + 1), bits))
        q0 = sum((4 - 2 * i) * b for i, b in zip(range(1, n + 1), bits))
        if t0 >= y:
            continue
        even_loop(1, t0, q0, sum(bits))
    return TrigradedTable(dims=dims, n=n, y=y, q_min=q_min)


@dataclass(frozen=True)
class LinkEstimateReport:
    n: int
    ell: int
    y: int
    q_min: int
    table: TrigradedTable
    statement: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "y": self.y,
            "q_min": self.q_min,
            "statement": self.statement,
            "dims": [
                {"t": t, "q": q, "a": a, "dim": d} for t, q, a, d in self.table.rows()
            ],
        }


def link_estimate_report(braid: ColoredBraid, q_min: int = -20) -> LinkEstimateReport:
    """For a positive 1-colored braid word: the diagonal count y certifies
    that below homological degree y, the closure's homology agrees with the
    stable-algebra truncation tabulated here."""
    if braid.m != 1:
        raise ValueError("the estimate applies to 1-colored braids")
    if not braid.is_positive():
        raise ValueError("the estimate applies to positive braids")
    dec = find_diagonals(braid)
    table = an_truncated_dims(braid.n, dec.y, q_min)
    if dec.y == 0:
        statement = "no diagonals found; the certified range is empty"
    else:
        statement = (
            f"homology of the closure in homological degrees < {dec.y} matches "
            f"the stable truncation below (q-support capped at {q_min})"
        )
    return LinkEstimateReport(
        n=braid.n, ell=len(braid.word), y=dec.y, q_min=q_min, table=table,
        statement=statement,
    )


# ---------------------------------------------------------------------------
# Hecke algebra oracle

Perm = tuple[int, ...]  # one-line notation, images of 1..n
HeckeElement = dict[Perm, LaurentPoly]


def _identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def hecke_identity(n: int) -> HeckeElement:
    return {_identity_perm(n): LaurentPoly.one()}


def _z() -> LaurentPoly:
    return LaurentPoly.monomial(0, 1, 0)  # slot layout (a, z, delta)


def hecke_multiply(elt: HeckeElement, i: int, sign: int = 1) -> HeckeElement:
    """Right-multiply a basis-word combination by a generator (or its
    inverse, via inverse = generator - z).

    Basis multiplication: T_w T_i = T_(w s_i) when the length increases,
    else T_(w s_i) + z T_w.
    """
    if not elt:
        return {}
    n = len(next(iter(elt)))
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} outside [1, {n - 1}]")
    out: HeckeElement = {}

    def add(w: Perm, c: LaurentPoly):
        cur = out.get(w)
        new = c if cur is None else cur + c
        if new.is_zero():
            out.pop(w, None)
        else:
            out[w] = new

    for w, coeff in elt.items():
        ws = list(w)
        ws[i - 1], ws[i] = ws[i], ws[i - 1]
        ws = tuple(ws)
        lengthens = w[i - 1] < w[i]
        if sign == 1:
            if lengthens:
                add(ws, coeff)
            else:
                add(ws, coeff)
                add(w, coeff * _z())
        elif sign == -1:
            # T_w (T_i - z)
            if lengthens:
                add(ws, coeff)
            else:
                add(ws, coeff)
                add(w, coeff * _z())
            add(w, -(coeff * _z()))
        else:
            raise ValueError("sign must be +1 or -1")
    return out


@functools.lru_cache(maxsize=None)
def _trace_word(w: Perm) -> LaurentPoly:
    """Markov trace of a basis word, as a polynomial in z and the peel
    weight; the weight is tracked in the delta slot and substituted later.

    Peeling: with j the position of the top strand value n, the basis word
    factors through one top-strand generator, and the trace recurses into
    the algebra on n-1 strands.
    """
    n = len(w)
    if n <= 1:
        return LaurentPoly.one()
    if w[n - 1] == n:
        return _trace_word(w[: n - 1])
    j = w.index(n) + 1
    # strip the chain: u = w s_j s_(j+1) ... s_(n-1) fixes n
    u = list(w)
    for pos in range(j, n):
        u[pos - 1], u[pos] = u[pos], u[pos - 1]
    u_perm = tuple(u[: n - 1])
    # T_w = T_u T_(n-1) T_(n-2) ... T_j, so the trace peels one factor of the
    # weight and multiplies the remaining chain back into H_(n-1).
    elt: HeckeElement = {u_perm: LaurentPoly.one()}
    for gen in range(n - 2, j - 1, -1):
        elt = hecke_multiply(elt, gen, 1)
    total = LaurentPoly.zero()
    weight = LaurentPoly.monomial(0, 0, 1)  # one peel
    for word, coeff in elt.items():
        total = total + coeff * _trace_word(word)
    return weight * total


def markov_trace(elt: HeckeElement, n: int) -> LaurentPoly:
    total = LaurentPoly.zero()
    for w, coeff in elt.items():
        if len(w) != n:
            raise ValueError("mixed strand counts in one element")
        total = total + coeff * _trace_word(w)
    return total


def reduce_delta(poly: LaurentPoly) -> LaurentPoly:
    """Canonicalize the closed-unknot symbol: delta * z = a - a^(-1); no
    monomial keeps both delta and z."""
    out = LaurentPoly.zero()
    rewrite = LaurentPoly.monomial(1, 0, 0) - LaurentPoly.monomial(-1, 0, 0)  # a - 1/a
    for (a_e, z_e, d_e), coeff in poly.terms.items():
        k = min(z_e, d_e)
        term = LaurentPoly.monomial(a_e, z_e - k, d_e - k, coeff) * rewrite**k
        out = out + term
    if any(e[1] > 0 and e[2] > 0 for e in out.terms):
        return reduce_delta(out)
    return out


def homfly_polynomial(braid: ColoredBraid) -> LaurentPoly:
    """Two-variable polynomial of the braid closure via the Hecke trace,
    normalized so the unknot gives 1 and a*P(pos) - a^(-1)*P(neg) = z*P(cut)
    at every crossing.

    The value lives in exponent slots (a, z, delta); closures with several
    components keep positive delta powers (the 2-component unlink is exactly
    delta).
    """
    if braid.m != 1:
        raise ValueError("the trace oracle is defined for 1-colored braids")
    n = braid.n
    elt = hecke_identity(n)
    for gen, sign in braid.word:
        elt = hecke_multiply(elt, gen, sign)
    trace = markov_trace(elt, n)
    writhe = braid.writhe()
    # Each peel carries weight a / delta; stabilization invariance forces the
    # writhe factor a^(-writhe) and the global delta^(n-1).
    out = LaurentPoly.zero()
    for (a_e, z_e, peels), coeff in trace.terms.items():
        assert a_e == 0
        out = out + LaurentPoly.monomial(peels - writhe, z_e, n - 1 - peels, coeff)
    return reduce_delta(out)


# ---------------------------------------------------------------------------
# stabilization of torus braids


@dataclass(frozen=True)
class StabilityReport:
    n: int
    ks: tuple[int, ...]
    polynomials: tuple[LaurentPoly, ...]
    agreements: tuple[float, ...]  # per consecutive pair; math.inf = identical
    nondecreasing: bool

    def to_dict(self) -> dict:
        enc = lambda v: ("inf" if v == math.inf else v)
        return {
            "n": self.n,
            "k": list(self.ks),
            "polynomials": [p.pretty(AZD, _AZD_ORDER) for p in self.polynomials],
            "agreements": [enc(a) for a in self.agreements],
            "nondecreasing": self.nondecreasing,
        }


def torus_braid(n: int, k: int, m: int = 1, level: int | float = math.inf) -> ColoredBraid:
    word = tuple((g, 1) for _ in range(k) for g in range(1, n))
    return ColoredBraid(n=n, word=word, m=m, level=level)


def _q_profile(poly: LaurentPoly) -> dict[int, LaurentPoly] | None:
    """Substitute z -> q - q^(-1) and divide by the leading monomial (top
    q-degree, smallest a-power there), so the top term becomes constant.
    Returns a map from (nonpositive) q-degree to its coefficient in a, or
    None when the polynomial still carries the multi-component symbol."""
    if poly.is_zero():
        return {}
    if any(e[2] for e in poly.terms):
        return None
    z_sub = LaurentPoly.monomial(0, 1, 0) - LaurentPoly.monomial(0, -1, 0)
    in_q = poly.substitute_slot(1, z_sub)  # slots now (a, q, 0)
    q_max = in_q.max_exponent(1)
    a_ref = min(a for (a, q, _) in in_q.terms if q == q_max)
    shifted = in_q.shift(-a_ref, -q_max, 0)
    profile: dict[int, LaurentPoly] = {}
    for (a_e, q_e, _), coeff in shifted.terms.items():
        cur = profile.get(q_e, LaurentPoly.zero())
        profile[q_e] = cur + LaurentPoly.monomial(a_e, 0, 0, coeff)
    return profile


def _agreement(p: LaurentPoly, q: LaurentPoly) -> float:
    """Number of leading q-levels (descending from the renormalized top) on
    which the two one-variable profiles agree; inf when identical."""
    if p == q:
        return math.inf
    prof_p, prof_q = _q_profile(p), _q_profile(q)
    if prof_p is None or prof_q is None:
        raise ValueError(
            "stabilization comparison needs single-component closures "
            "(distinct multi-component values are not comparable)"
        )
    floor = min(min(prof_p, default=0), min(prof_q, default=0))
    for depth in range(-floor + 1):
        cp = prof_p.get(-depth, LaurentPoly.zero())
        cq = prof_q.get(-depth, LaurentPoly.zero())
        if cp != cq:
            return depth
    return math.inf


def stability_check(
    n: int, ks: list[int] | tuple[int, ...], max_crossings: int = 200
) -> StabilityReport:
    """Evaluate the oracle on the torus braids (sigma_1...sigma_(n-1))^k,
    renormalize by a monomial, and report how many leading coefficients each
    consecutive pair shares.

    The trace cost grows with n! and the word length, so oversized requests
    are rejected up front via ``max_crossings``.
    """
    if not ks or any(k < 1 for k in ks):
        raise ValueError("k values must be >= 1")
    if any(b < a for a, b in zip(ks, ks[1:])):
        raise ValueError("k values must be nondecreasing")
    if (n - 1) * max(ks) > max_crossings:
        raise ValueError(
            f"torus braid with {(n - 1) * max(ks)} crossings exceeds the "
            f"resource cap of {max_crossings}"
        )
    polys = tuple(homfly_polynomial(torus_braid(n, k)) for k in ks)
    agreements = tuple(_agreement(p, q) for p, q in zip(polys, polys[1:]))
    nondec = all(a <= b for a, b in zip(agreements, agreements[1:]))
    return StabilityReport(
        n=n, ks=tuple(ks), polynomials=polys, agreements=agreements, nondecreasing=nondec
    )
