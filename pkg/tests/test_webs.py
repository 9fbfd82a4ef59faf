import itertools
import math
import random

import pytest

from krtl.braid import ColoredBraid
from krtl.laurent import LaurentPoly, quantum_binomial, quantum_int
from krtl.webs import (
    ClosedWeb,
    IrreducibleWebError,
    closure_web,
    eval_closed_web,
    normalize_zero_edges,
    parse_web,
    sl2_bracket,
)

from .oracles import at_minus_one, tl_state_sum

Q = LaurentPoly.var_q


# ---------------------------------------------------------------------------
# normalization and direct evaluation


def test_normalize_rung_zero_gives_parallel_strands():
    web = ClosedWeb(n=2, base=(1, 1), rungs=((1, 0),))
    graph = normalize_zero_edges(web)
    assert not graph.labels and sorted(graph.circles) == [1, 1]


def test_normalize_full_rung_gives_barbell():
    web = ClosedWeb(n=2, base=(1, 1), rungs=((1, 1), (1, -1)))
    graph = normalize_zero_edges(web)
    # barbell closure: two vertices joined by the doubled strand and a 2-edge
    assert len(graph.kinds) == 2
    assert sorted(graph.labels.values()) == [1, 1, 2]


def test_normalize_untouched_web_unchanged():
    web = ClosedWeb(n=2, base=(2, 3), rungs=((1, 1), (1, -1)))
    graph = normalize_zero_edges(web)
    assert len(graph.kinds) == 4
    # column edges 2, 1 and 3, 4 plus the two width-1 rungs
    assert sorted(graph.labels.values()) == [1, 1, 1, 2, 3, 4]


def test_circle_values():
    web = ClosedWeb(n=1, base=(1,), rungs=())
    assert eval_closed_web(web, 2) == Q(2) + 1
    for N in range(1, 6):
        for i in range(1, N + 1):
            assert eval_closed_web(ClosedWeb(n=1, base=(i,), rungs=()), N) == (
                quantum_binomial(N, i)
            )


def test_zero_web_value():
    web = ClosedWeb(n=1, base=(3,), rungs=())
    assert eval_closed_web(web, 2) == LaurentPoly.zero()


def test_theta():
    web = ClosedWeb(n=2, base=(1, 1), rungs=((1, 1), (1, -1)))
    assert eval_closed_web(web, 2) == Q(2) + 1


def test_barbell_chains():
    for N in range(2, 6):
        for b in range(1, 7):
            web = ClosedWeb(n=2, base=(1, 1), rungs=((1, 1), (1, -1)) * b)
            expected = quantum_int(2) ** b * quantum_binomial(N, 2)
            assert eval_closed_web(web, N) == expected


def test_digon_order_independent():
    # rotating the rung sequence changes the digon collapse order
    base = ((1, 1), (1, -1)) * 3
    values = set()
    for rot in range(len(base)):
        web = ClosedWeb(n=2, base=(1, 1), rungs=base[rot:] + base[:rot])
        values.add(eval_closed_web(web, 3))
    assert len(values) == 1


def test_specialization_counts_colorings():
    for c in range(1, 4):
        for N in (2, 3):
            web = ClosedWeb(n=c, base=(1,) * c, rungs=())
            assert eval_closed_web(web, N).evaluate() == N**c


def test_irreducible_is_reported():
    # at level 4 the partial-width block admits no switchable square
    web = ClosedWeb(n=2, base=(2, 2), rungs=((1, 1), (1, -1)))
    with pytest.raises(IrreducibleWebError):
        eval_closed_web(web, 4)


def test_square_switch_handles_tight_blocks():
    # at level 3 the same block rewrites through the wrap-around square:
    # one switch term, coefficient [2], leaving circles labeled 3 and 1
    web = ClosedWeb(n=2, base=(2, 2), rungs=((1, 1), (1, -1)))
    value = eval_closed_web(web, 3)
    assert value == quantum_int(2) * quantum_binomial(3, 1)


def moy_coloring_count(web: ClosedWeb, N: int) -> int:
    """Independent q=1 oracle: count edge colorings by subsets of {1..N}
    (rung subsets move between columns, disjointness enforced)."""
    counts = 0
    base_choices = [
        list(itertools.combinations(range(N), b)) for b in web.base
    ]
    for assignment in itertools.product(*base_choices):
        state = [frozenset(s) for s in assignment]
        stack = [(0, state)]
        while stack:
            idx, current = stack.pop()
            if idx == len(web.rungs):
                if current == [frozenset(s) for s in assignment]:
                    counts += 1
                continue
            col, amount = web.rungs[idx]
            if amount >= 0:
                give, take, width = col - 1, col, amount
            else:
                give, take, width = col, col - 1, -amount
            for moved in itertools.combinations(sorted(current[give]), width):
                moved_set = frozenset(moved)
                if moved_set & current[take]:
                    continue
                nxt = list(current)
                nxt[give] = current[give] - moved_set
                nxt[take] = current[take] | moved_set
                stack.append((idx + 1, nxt))
    return counts


def test_switch_value_matches_coloring_count():
    cases = [
        (ClosedWeb(n=2, base=(2, 2), rungs=((1, 1), (1, -1))), 3),
        (ClosedWeb(n=2, base=(1, 1), rungs=((1, 1), (1, -1)) * 2), 2),
        (ClosedWeb(n=2, base=(1, 2), rungs=((1, 1), (1, -1))), 3),
        (ClosedWeb(n=3, base=(1, 1, 1), rungs=((1, 1), (1, -1), (2, 1), (2, -1))), 2),
        # unequal rung widths exercise the divided-power switch coefficients
        (ClosedWeb(n=2, base=(2, 2), rungs=((1, 1), (1, -2), (1, 1))), 3),
        (ClosedWeb(n=2, base=(4, 1), rungs=((1, 3), (1, -3))), 6),
    ]
    for web, N in cases:
        try:
            value = eval_closed_web(web, N)
        except IrreducibleWebError:
            continue
        assert value.evaluate() == moy_coloring_count(web, N), (web, N)


def test_random_webs_match_coloring_counts():
    rng = random.Random(411)
    checked = 0
    for _ in range(250):
        n = rng.randint(1, 3)
        base = tuple(rng.randint(1, 3) for _ in range(n))
        rungs = []
        state = list(base)
        for _ in range(rng.randint(0, 5)):
            if n == 1:
                break
            col = rng.randint(1, n - 1)
            amount = rng.choice((-2, -1, 1, 2))
            give, take = (col - 1, col) if amount > 0 else (col, col - 1)
            if state[give] < abs(amount):
                continue
            state[give] -= abs(amount)
            state[take] += abs(amount)
            rungs.append((col, amount))
        closing = [
            (col, -net)
            for col in range(1, n)
            if (net := sum(a for c, a in rungs if c == col))
        ]
        try:
            web = ClosedWeb(n=n, base=base, rungs=tuple(rungs + closing))
        except ValueError:
            continue
        N = rng.randint(max(base), max(base) + 3)
        try:
            value = eval_closed_web(web, N)
        except IrreducibleWebError:
            continue
        checked += 1
        assert value.evaluate() == moy_coloring_count(web, N), (web, N)
    assert checked > 100


def test_closure_web_from_resolution():
    braid = ColoredBraid(n=3, word=((1, 1), (2, -1)), m=2, level=5)
    web = closure_web(braid, (2, 0))
    assert web.rungs == ((1, 2), (1, -2))
    assert web.base == (2, 2, 2)
    with pytest.raises(ValueError, match="per crossing"):
        closure_web(braid, (1,))


def test_parse_web_round_trip():
    web, level = parse_web("n=2 m=1 N=2 rungs=(1:1,1:-1)")
    assert web == ClosedWeb(n=2, base=(1, 1), rungs=((1, 1), (1, -1)))
    assert level == 2
    web, level = parse_web("n=3 m=2 N=inf rungs=()")
    assert web.n == 3 and level == math.inf


# ---------------------------------------------------------------------------
# the level-2 bracket


def test_bracket_unknot():
    braid = ColoredBraid(n=1, word=(), m=1, level=2)
    assert sl2_bracket(braid) == Q(2) + 1


def test_bracket_two_strand_identity():
    braid = ColoredBraid(n=2, word=(), m=1, level=2)
    assert sl2_bracket(braid) == (Q(2) + 1) ** 2


def test_bracket_matches_state_sum_oracle_on_two_strands():
    for k in range(0, 5):
        for signs in itertools.product((1, -1), repeat=min(k, 3)):
            word = tuple((1, signs[i % max(len(signs), 1)] if signs else 1) for i in range(k))
            braid = ColoredBraid(n=2, word=word, m=1, level=2)
            assert at_minus_one(sl2_bracket(braid)) == tl_state_sum(braid)


def test_bracket_trefoil_against_independent_oracle():
    braid = ColoredBraid(n=2, word=((1, 1),) * 3, m=1, level=2)
    got = at_minus_one(sl2_bracket(braid))
    # writhe-normalizing the state sum undoes three kink shifts of q^(1*(1-2))
    # each, so the bracket equals q^(3*(1-2)) times the normalized oracle
    oracle_invariant = Q(3) * tl_state_sum(braid)
    assert got == Q(-3) * oracle_invariant


def test_bracket_matches_state_sum_on_more_strands():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 4)
        word = tuple(
            (rng.randint(1, n - 1), rng.choice((1, -1)))
            for _ in range(rng.randint(0, 6))
        )
        braid = ColoredBraid(n=n, word=word, m=1, level=2)
        assert at_minus_one(sl2_bracket(braid)) == tl_state_sum(braid)


def test_bracket_multiplicative_under_disjoint_union():
    left = ColoredBraid(n=2, word=((1, 1), (1, 1)), m=1, level=2)
    right = ColoredBraid(n=2, word=((1, -1),), m=1, level=2)
    union = ColoredBraid(
        n=4, word=((1, 1), (1, 1), (3, -1)), m=1, level=2
    )
    assert sl2_bracket(union) == sl2_bracket(left) * sl2_bracket(right)


@pytest.mark.xfail(
    strict=True,
    reason="with one-sided circle and digon values the alternating sum is not "
    "invariant under the second Reidemeister shift; see the decisions log",
)
def test_bracket_r2_shift():
    pair = ColoredBraid(n=2, word=((1, 1), (1, -1)), m=1, level=2)
    flat = ColoredBraid(n=2, word=(), m=1, level=2)
    minus_q = LaurentPoly.monomial(0, 1, 0, -1)
    assert at_minus_one(sl2_bracket(pair)) == minus_q * at_minus_one(sl2_bracket(flat))
