import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krtl.braid import ColoredBraid
from krtl.diagonals import find_diagonals, zone_census
from krtl.stable import torus_braid


@st.composite
def positive_words(draw, max_n=6, max_len=60):
    n = draw(st.integers(min_value=2, max_value=max_n))
    length = draw(st.integers(min_value=0, max_value=max_len))
    word = tuple(
        (draw(st.integers(min_value=1, max_value=n - 1)), 1) for _ in range(length)
    )
    return ColoredBraid(n=n, word=word, m=1)


def test_torus_words():
    for n in range(2, 6):
        for k in range(0, 21):
            dec = find_diagonals(torus_braid(n, k))
            assert dec.y == k
            assert dec.z == k // n
            assert dec.skipped == frozenset()


def test_two_strand_powers():
    for k in range(0, 12):
        braid = ColoredBraid(n=2, word=((1, 1),) * k, m=1)
        dec = find_diagonals(braid)
        assert dec.y == k and dec.z == k // 2
        assert all(len(d) == 1 for d in dec.diagonals)


def test_interleaved_example():
    braid = ColoredBraid(n=3, word=((2, 1), (1, 1), (2, 1), (1, 1), (2, 1)), m=1)
    dec = find_diagonals(braid)
    assert dec.diagonals == ((2, 3), (4, 5))
    assert dec.skipped == frozenset({1})
    assert dec.y == 2 and dec.z == 0


def test_rejects_negative_words():
    braid = ColoredBraid(n=2, word=((1, -1),), m=1)
    with pytest.raises(ValueError, match="positive"):
        find_diagonals(braid)


def test_zone_census_torus():
    dec = find_diagonals(torus_braid(3, 6))
    assert all(count == 0 for count in zone_census(dec).values())


def test_zone_census_two_strand_seven():
    braid = ColoredBraid(n=2, word=((1, 1),) * 7, m=1)
    dec = find_diagonals(braid)
    assert (dec.y, dec.z, dec.used_count) == (7, 3, 6)
    census = zone_census(dec)
    assert census[6] == 1
    assert all(census[z] == 0 for z in range(6))


def test_zone_census_eight_has_no_nondiagonals():
    braid = ColoredBraid(n=2, word=((1, 1),) * 8, m=1)
    dec = find_diagonals(braid)
    assert (dec.y, dec.z, dec.used_count) == (8, 4, 8)
    assert dec.zone_of == {}


def test_inserted_crossing_zone():
    # (s2 s1)-style torus word with one extra sigma_1 inserted after position 3
    word = [(1, 1), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1)]
    word.insert(3, (1, 1))
    braid = ColoredBraid(n=3, word=tuple(word), m=1)
    dec = find_diagonals(braid)
    extra = (set(range(1, len(word) + 1)) - {p for d in dec.used for p in d}) - dec.skipped
    for pos in sorted(dec.zone_of):
        gen = braid.word[pos - 1][0]
        expected = sum(1 for d in dec.used if pos > d[gen - 1])
        assert dec.zone_of[pos] == expected


@given(positive_words())
@settings(max_examples=200, deadline=None)
def test_structural_invariants(braid):
    dec = find_diagonals(braid)
    seen = set()
    for diag in dec.diagonals:
        # generator sequence 1..n-1 at strictly increasing positions
        assert list(braid.word[p - 1][0] for p in diag) == list(range(1, braid.n))
        assert all(a < b for a, b in zip(diag, diag[1:]))
        assert seen.isdisjoint(diag)
        seen.update(diag)
    assert seen | dec.skipped == set(range(1, len(braid.word) + 1))
    assert dec.z == dec.y // braid.n
    assert dec.used_count == braid.n * dec.z
    # zone arithmetic
    for pos, zone in dec.zone_of.items():
        gen = braid.word[pos - 1][0]
        assert zone == sum(1 for d in dec.used if pos > d[gen - 1])
        assert 0 <= zone <= dec.used_count
    # greedy minimality: first diagonal starts at the first sigma_1
    firsts = [p for p, (g, _) in enumerate(braid.word, start=1) if g == 1]
    if dec.diagonals:
        assert dec.diagonals[0][0] == firsts[0]


@given(st.integers(min_value=1, max_value=6))
def test_diagonal_count_grows_along_tail_multiples(reps):
    from krtl.braid import InfiniteBraidSpec, partial_braid

    import math

    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1, 2, 1, 2))
    ys = []
    for r in range(1, reps + 1):
        braid = partial_braid(spec, 4 * r)
        ys.append(find_diagonals(braid).y)
    assert all(a < b for a, b in zip(ys, ys[1:]))
