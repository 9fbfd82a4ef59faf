"""Best-effort evaluation of closed unicolored webs to Laurent polynomials
in q, plus the level-2 bracket cross-check for braid closures.

Closed webs arrive in a compact annular form: n columns of labeled strands
with a cyclic bottom-to-top sequence of rungs transferring color between
neighbouring columns.  Evaluation rewrites the underlying trivalent graph by
zero-edge deletion, digon collapse, a restricted square switch, and circle
removal.  The rule set is not complete for every web; the Irreducible
outcome is a first-class result, never a crash.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .braid import ColoredBraid
from .census import crossing_complex
from .laurent import LaurentPoly, quantum_binomial


class IrreducibleWebError(RuntimeError):
    """No rewriting rule applies and the web is not a union of circles."""


@dataclass(frozen=True)
class ClosedWeb:
    """Annular closed web: ``base`` strand labels over n columns plus a cyclic
    rung sequence.

    Each rung ``(column, amount)`` transfers ``amount`` of color from that
    column to the next one (leftward for negative amounts).  Zero amounts are
    legal and denote an absent rung.
    """

    n: int
    base: tuple[int, ...]
    rungs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.base) != self.n:
            raise ValueError("base must carry one label per column")
        if any(b < 0 for b in self.base):
            raise ValueError("labels must be >= 0")
        for col, _amount in self.rungs:
            if not 1 <= col <= self.n - 1:
                raise ValueError(f"rung column {col} outside [1, {self.n - 1}]")
        self.column_profile()

    def column_profile(self) -> list[tuple[int, ...]]:
        """Column labels at each height, bottom to top; raises if a transfer
        drives a label negative or the sequence fails to close up."""
        labels = list(self.base)
        profile = [tuple(labels)]
        for col, amount in self.rungs:
            labels[col - 1] -= amount
            labels[col] += amount
            if labels[col - 1] < 0 or labels[col] < 0:
                raise ValueError("rung sequence drives a label negative")
            profile.append(tuple(labels))
        if tuple(labels) != self.base:
            raise ValueError("rung sequence does not close up the annulus")
        return profile


WEB_TEXT = re.compile(
    r"n=(?P<n>\d+)\s+m=(?P<m>\d+)\s+N=(?P<N>\d+|inf)\s+rungs=\((?P<rungs>[^)]*)\)"
)


def parse_web(text: str) -> tuple[ClosedWeb, int | float]:
    """Parse ``n=<int> m=<int> N=<int|inf> rungs=(col:amount,...)``."""
    m = WEB_TEXT.fullmatch(text.strip())
    if m is None:
        raise ValueError("expected 'n=<int> m=<int> N=<int|inf> rungs=(col:amount,...)'")
    n = int(m.group("n"))
    color = int(m.group("m"))
    level = math.inf if m.group("N") == "inf" else int(m.group("N"))
    rungs = []
    payload = m.group("rungs").strip()
    if payload:
        for item in payload.split(","):
            col, sep, amount = item.strip().partition(":")
            if not sep:
                raise ValueError(f"bad rung {item!r}, expected col:amount")
            rungs.append((int(col), int(amount)))
    return ClosedWeb(n=n, base=(color,) * n, rungs=tuple(rungs)), level


def closure_web(braid: ColoredBraid, rungs: tuple[int, ...]) -> ClosedWeb:
    """Annular closure of a braid resolution; each crossing resolved to rung
    width ``r`` contributes a transfer of r rightward then r back."""
    if len(rungs) != len(braid.word):
        raise ValueError("one rung width per crossing required")
    web_rungs: list[tuple[int, int]] = []
    for (gen, _sign), r in zip(braid.word, rungs):
        if r:
            web_rungs.append((gen, r))
            web_rungs.append((gen, -r))
    return ClosedWeb(n=braid.n, base=(braid.m,) * braid.n, rungs=tuple(web_rungs))


# ---------------------------------------------------------------------------
# graph form: merges (two in, one out), splits (one in, two out), directed
# labeled edges; vertex-free loops live in ``circles``.


@dataclass
class _Graph:
    labels: dict[int, int] = field(default_factory=dict)
    tails: dict[int, int | None] = field(default_factory=dict)
    heads: dict[int, int | None] = field(default_factory=dict)
    kinds: dict[int, str] = field(default_factory=dict)
    circles: list[int] = field(default_factory=list)
    next_edge: int = 0
    next_vertex: int = 0

    def copy(self) -> "_Graph":
        return _Graph(
            dict(self.labels),
            dict(self.tails),
            dict(self.heads),
            dict(self.kinds),
            list(self.circles),
            self.next_edge,
            self.next_vertex,
        )

    def new_edge(self, label: int, tail: int | None = None, head: int | None = None) -> int:
        eid = self.next_edge
        self.next_edge += 1
        self.labels[eid] = label
        self.tails[eid] = tail
        self.heads[eid] = head
        return eid

    def new_vertex(self, kind: str) -> int:
        vid = self.next_vertex
        self.next_vertex += 1
        self.kinds[vid] = kind
        return vid

    def edges_at(self, vid: int) -> tuple[list[int], list[int]]:
        ins = sorted(e for e, h in self.heads.items() if h == vid)
        outs = sorted(e for e, t in self.tails.items() if t == vid)
        return ins, outs

    def drop_edge(self, eid: int):
        del self.labels[eid], self.tails[eid], self.heads[eid]

    def drop_vertex(self, vid: int):
        del self.kinds[vid]


def web_graph(web: ClosedWeb) -> _Graph:
    graph = _Graph()
    profile = web.column_profile()
    open_edge = [graph.new_edge(b) if b > 0 else None for b in web.base]
    first_edge = list(open_edge)

    def fresh(vid: int, label: int) -> int | None:
        return graph.new_edge(label, tail=vid) if label > 0 else None

    for idx, (col, amount) in enumerate(web.rungs):
        if amount == 0:
            continue
        below = profile[idx]
        if amount > 0:
            give, take, width = col - 1, col, amount
        else:
            give, take, width = col, col - 1, -amount
        split = graph.new_vertex("split")
        giver_edge = open_edge[give]
        if giver_edge is None:
            raise ValueError("rung takes color off an absent strand")
        graph.heads[giver_edge] = split
        rung = graph.new_edge(width, tail=split)
        open_edge[give] = fresh(split, below[give] - width)
        merge = graph.new_vertex("merge")
        taker_edge = open_edge[take]
        if taker_edge is not None:
            graph.heads[taker_edge] = merge
        graph.heads[rung] = merge
        open_edge[take] = fresh(merge, below[take] + width)

    for col in range(web.n):
        top, first = open_edge[col], first_edge[col]
        if top is None and first is None:
            continue
        if top is None or first is None:
            raise ValueError("column does not close up")
        if top == first:
            graph.circles.append(graph.labels[top])
            graph.drop_edge(top)
            continue
        if graph.labels[top] != graph.labels[first]:
            raise ValueError("column labels do not match around the annulus")
        graph.tails[first] = graph.tails[top]
        graph.drop_edge(top)
    return graph


def normalize_zero_edges(web: "ClosedWeb | _Graph") -> _Graph:
    """Delete 0-labeled edges and smooth the 2-valent vertices this leaves."""
    graph = web_graph(web) if isinstance(web, ClosedWeb) else web.copy()
    _cleanup(graph)
    return graph


def _cleanup(graph: _Graph):
    changed = True
    while changed:
        changed = False
        for eid in sorted(graph.labels):
            if graph.labels[eid] == 0:
                graph.drop_edge(eid)
                changed = True
        for vid in sorted(graph.kinds):
            ins, outs = graph.edges_at(vid)
            degree = len(ins) + len(outs)
            if degree == 3:
                continue
            if degree == 0:
                graph.drop_vertex(vid)
                changed = True
            elif len(ins) == 1 and len(outs) == 1:
                e_in, e_out = ins[0], outs[0]
                if graph.labels[e_in] != graph.labels[e_out]:
                    raise ValueError("cannot smooth a vertex between unequal labels")
                if e_in == e_out:
                    graph.circles.append(graph.labels[e_in])
                    graph.drop_edge(e_in)
                else:
                    graph.heads[e_in] = graph.heads[e_out]
                    graph.drop_edge(e_out)
                graph.drop_vertex(vid)
                changed = True
            else:
                raise ValueError(f"web vertex with degree {degree} after deletion")


def _splice(graph: _Graph, pairs: list[tuple[int, int]]):
    """Join dangling edge ends: for each (e_from, e_to), the head of e_from
    continues into the tail of e_to.  Handles chains and closed loops."""
    pending = dict(pairs)
    while pending:
        e_from = min(pending)
        e_to = pending.pop(e_from)
        if e_from == e_to:
            graph.circles.append(graph.labels[e_from])
            graph.drop_edge(e_from)
            continue
        if graph.labels[e_from] != graph.labels[e_to]:
            raise ValueError("splice label mismatch")
        if e_to in pending:
            nxt = pending.pop(e_to)
            graph.drop_edge(e_to)
            pending[e_from] = e_from if nxt == e_to else nxt
        else:
            graph.heads[e_from] = graph.heads[e_to]
            graph.drop_edge(e_to)


# ---------------------------------------------------------------------------
# evaluation


def eval_closed_web(web: "ClosedWeb | _Graph", N: int | float) -> LaurentPoly:
    """Evaluate a closed web at finite level N.

    Rules, in order: zero-web test (any label > N gives 0), zero-edge
    deletion, circle removal with factor qbinom(N, label), digon collapse
    with factor qbinom(i+j, i), and a square switch restricted to squares
    whose rung-preserving term is a zero web (so every surviving term is
    strictly smaller, which guarantees termination).  Raises
    :class:`IrreducibleWebError` when no rule applies.
    """
    if N == math.inf or int(N) < 1:
        raise ValueError("web evaluation needs a finite level N >= 1")
    graph = normalize_zero_edges(web)
    return _eval_graph(graph, int(N))


def _eval_graph(graph: _Graph, N: int) -> LaurentPoly:
    _cleanup(graph)
    # labels outside [0, N] mark the zero web
    if any(label > N or label < 0 for label in graph.labels.values()):
        return LaurentPoly.zero()
    if any(label > N or label < 0 for label in graph.circles):
        return LaurentPoly.zero()

    if not graph.labels:
        out = LaurentPoly.one()
        for label in graph.circles:
            out = out * quantum_binomial(N, label)
        return out

    digon = _find_digon(graph)
    if digon is not None:
        split, merge, e1, e2 = digon
        factor = quantum_binomial(
            graph.labels[e1] + graph.labels[e2], graph.labels[e1]
        )
        _collapse_digon(graph, split, merge, e1, e2)
        return factor * _eval_graph(graph, N)

    square = _find_square(graph, N)
    if square is not None:
        total = LaurentPoly.zero()
        for coeff, branch in _switch_square(graph, square):
            total = total + coeff * _eval_graph(branch, N)
        return total

    raise IrreducibleWebError(
        f"no digon, circle or switchable square in a web with "
        f"{len(graph.labels)} edges and {len(graph.kinds)} vertices"
    )


def _find_digon(graph: _Graph):
    """A split whose two outputs are parallel edges into one merge."""
    for vid in sorted(graph.kinds):
        if graph.kinds[vid] != "split":
            continue
        _, outs = graph.edges_at(vid)
        if len(outs) != 2:
            continue
        h1, h2 = graph.heads[outs[0]], graph.heads[outs[1]]
        if h1 is not None and h1 == h2 and graph.kinds.get(h1) == "merge":
            return vid, h1, outs[0], outs[1]
    return None


def _collapse_digon(graph: _Graph, split: int, merge: int, e1: int, e2: int):
    ins, _ = graph.edges_at(split)
    _, outs = graph.edges_at(merge)
    (e_in,) = ins
    (e_out,) = outs
    graph.drop_edge(e1)
    graph.drop_edge(e2)
    graph.drop_vertex(split)
    graph.drop_vertex(merge)
    _splice(graph, [(e_in, e_out)])


@dataclass(frozen=True)
class _Square:
    """Two opposite rungs joined by single vertical edges.

    Bottom rung ``lower`` transfers b from the in-strand labeled x to the
    in-strand labeled y; the upper rung transfers a back.
    """

    v_bl: int  # split, tail of lower rung
    v_br: int  # merge, head of lower rung
    v_tl: int  # merge, head of upper rung
    v_tr: int  # split, tail of upper rung
    lower: int
    upper: int
    left: int  # vertical edge v_bl -> v_tl
    right: int  # vertical edge v_br -> v_tr
    x: int
    y: int
    a: int
    b: int


def _find_square(graph: _Graph, N: int) -> _Square | None:
    for lower in sorted(graph.labels):
        u, w = graph.tails[lower], graph.heads[lower]
        if u is None or w is None or u == w:
            continue
        if graph.kinds.get(u) != "split" or graph.kinds.get(w) != "merge":
            continue
        u_ins, u_outs = graph.edges_at(u)
        w_ins, w_outs = graph.edges_at(w)
        if len(u_ins) != 1 or len(u_outs) != 2 or len(w_ins) != 2 or len(w_outs) != 1:
            continue
        left = next(e for e in u_outs if e != lower)
        (right,) = w_outs
        v_tl, v_tr = graph.heads[left], graph.heads[right]
        if v_tl is None or v_tr is None or v_tl == v_tr or v_tl in (u, w) or v_tr in (u, w):
            continue
        if graph.kinds.get(v_tl) != "merge" or graph.kinds.get(v_tr) != "split":
            continue
        upper = next(
            (
                e
                for e in sorted(graph.labels)
                if graph.tails[e] == v_tr and graph.heads[e] == v_tl
            ),
            None,
        )
        if upper is None:
            continue
        x = graph.labels[u_ins[0]]
        y = graph.labels[next(e for e in w_ins if e != lower)]
        square = _Square(
            v_bl=u, v_br=w, v_tl=v_tl, v_tr=v_tr,
            lower=lower, upper=upper, left=left, right=right,
            x=x, y=y, a=graph.labels[upper], b=graph.labels[lower],
        )
        if _switch_applies(square, N):
            return square
    return None


def _switch_applies(sq: _Square, N: int) -> bool:
    # Switching is sound only in the direction with nonnegative binomial top;
    # we apply it only when the rung-preserving term is a zero web, so every
    # produced term has strictly fewer rungs.
    top = (sq.a - sq.b) + (sq.x - sq.y)
    if top < 0:
        return False
    return sq.x + sq.a > N or sq.y - sq.a < 0


def _switch_square(graph: _Graph, sq: _Square):
    """Yield (coefficient, branch graph) for the surviving switch terms: the
    square with rung widths (b, a) is replaced by the reversed pair with
    widths (a-s, b-s) and coefficient qbinom(a-b+x-y, s), s >= 1."""
    top = (sq.a - sq.b) + (sq.x - sq.y)
    for s in range(1, min(sq.a, sq.b) + 1):
        coeff = quantum_binomial(top, s)
        if coeff.is_zero() or sq.a - s > sq.y:
            # coefficient zero, or the first new rung would over-drain the
            # y-strand: either way the term is the zero web
            continue
        branch = graph.copy()
        _install_switched(branch, sq, sq.a - s, sq.b - s)
        yield coeff, branch


def _install_switched(graph: _Graph, sq: _Square, first_width: int, second_width: int):
    """Replace the square: first a rung of ``first_width`` from the y-strand
    to the x-strand, then ``second_width`` back."""
    u_ins, _ = graph.edges_at(sq.v_bl)
    w_ins, _ = graph.edges_at(sq.v_br)
    _, tl_outs = graph.edges_at(sq.v_tl)
    _, tr_outs = graph.edges_at(sq.v_tr)
    e_x_in = u_ins[0]
    e_y_in = next(e for e in w_ins if e != sq.lower)
    (e_x_out,) = tl_outs
    e_y_out = next(e for e in tr_outs if e != sq.upper)

    for eid in (sq.lower, sq.upper, sq.left, sq.right):
        graph.drop_edge(eid)
    for vid in (sq.v_bl, sq.v_br, sq.v_tl, sq.v_tr):
        graph.drop_vertex(vid)

    cur_x, cur_y = e_x_in, e_y_in
    for width, toward_x in ((first_width, True), (second_width, False)):
        if width == 0:
            continue
        split = graph.new_vertex("split")
        merge = graph.new_vertex("merge")
        rung = graph.new_edge(width, tail=split, head=merge)
        if toward_x:
            graph.heads[cur_y] = split
            cur_y = graph.new_edge(graph.labels[cur_y] - width, tail=split)
            graph.heads[cur_x] = merge
            cur_x = graph.new_edge(graph.labels[cur_x] + width, tail=merge)
        else:
            graph.heads[cur_x] = split
            cur_x = graph.new_edge(graph.labels[cur_x] - width, tail=split)
            graph.heads[cur_y] = merge
            cur_y = graph.new_edge(graph.labels[cur_y] + width, tail=merge)

    _splice(graph, [(cur_x, e_x_out), (cur_y, e_y_out)])
    _cleanup(graph)


# ---------------------------------------------------------------------------
# level-2 bracket for braid closures


def sl2_bracket(braid: ColoredBraid) -> LaurentPoly:
    """Sum over census resolutions of (grading shift) * (closure web value)
    at level 2, for a 1-colored braid.

    Propagates :class:`IrreducibleWebError` if some resolution's closure is
    outside the evaluator's reach (cannot happen on two strands).
    """
    if braid.m != 1 or braid.level != 2:
        raise ValueError("the bracket is defined for m=1 braids at level 2")
    term_lists = [crossing_complex(1, 1, sign, 2) for _, sign in braid.word]
    total = LaurentPoly.zero()
    value_cache: dict[tuple[int, ...], LaurentPoly] = {}

    def rec(pos: int, rungs: tuple[int, ...], shift_poly: LaurentPoly):
        nonlocal total
        if pos == len(term_lists):
            if rungs not in value_cache:
                value_cache[rungs] = eval_closed_web(closure_web(braid, rungs), 2)
            total = total + shift_poly * value_cache[rungs]
            return
        for term in term_lists[pos]:
            rec(pos + 1, rungs + (term.rung,), shift_poly * term.shift.to_poly())

    rec(0, (), LaurentPoly.one())
    return total
