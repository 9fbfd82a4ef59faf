import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krtl.bounds import (
    EnumerationCapError,
    ZonePattern,
    b1,
    b2,
    b3,
    bound_F,
    bound_g,
    cauchy_report,
    cone_bound,
    pattern_bound,
    twist_projection_bound,
)
from krtl.braid import ColoredBraid, InfiniteBraidSpec
from krtl.diagonals import find_diagonals
from krtl.stable import torus_braid


def pat(nz, nonempty, candidates=None):
    ne = frozenset(nonempty)
    return ZonePattern(nz=nz, nonempty=ne, candidates=frozenset(candidates or ne))


def test_b1():
    assert b1(pat(4, ())) == 0
    assert b1(pat(4, {0})) == 0
    assert b1(pat(6, {1, 3})) == 2


def test_b2():
    assert b2(pat(4, {4}), 2) == 0
    assert b2(pat(4, {0}), 2) == 2
    assert b2(pat(6, {1, 3}), 3) == 1


def test_b3():
    assert b3(pat(6, {0}), 2) == 0
    assert b3(pat(6, {5}), 2) == 2
    assert b3(pat(6, {2, 5}), 2) == 1


def test_pattern_requires_nonempty_subset_of_candidates():
    with pytest.raises(ValueError):
        ZonePattern(nz=3, nonempty=frozenset({1}), candidates=frozenset({2}))


def test_cone_bound_examples():
    assert cone_bound(2, 6, frozenset()) == math.inf
    assert cone_bound(2, 6, {6}) == 4
    assert cone_bound(2, 4, {2}) == 2


def test_cone_bound_cap():
    with pytest.raises(EnumerationCapError):
        cone_bound(2, 30, set(range(25)), cap=22)


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_cone_bound_monotone_in_candidates(data):
    n = data.draw(st.integers(min_value=2, max_value=4))
    nz = data.draw(st.integers(min_value=0, max_value=8))
    zones = st.integers(min_value=0, max_value=nz)
    small = frozenset(data.draw(st.sets(zones, max_size=4)))
    extra = frozenset(data.draw(st.sets(zones, max_size=3)))
    large = small | extra
    if small:
        assert cone_bound(n, nz, large) <= cone_bound(n, nz, small)


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_pattern_bound_positive_off_zone_zero(data):
    n = data.draw(st.integers(min_value=2, max_value=5))
    nz = data.draw(st.integers(min_value=1, max_value=10))
    nonempty = frozenset(
        data.draw(st.sets(st.integers(min_value=0, max_value=nz), min_size=1, max_size=5))
    )
    if not nonempty <= {0}:
        assert pattern_bound(pat(nz, nonempty), n) >= 1


def test_bound_F_one_colored_is_y():
    braid = torus_braid(3, 6)
    assert bound_F(braid).value == 6


def test_bound_F_colored():
    braid = ColoredBraid(n=2, word=((1, 1),) * 7, m=2, level=5)
    assert bound_F(braid).value == 4


def test_bound_F_no_full_twist():
    braid = ColoredBraid(n=3, word=((1, 1), (2, 1)), m=2, level=5)
    outcome = bound_F(braid)
    assert outcome.value == 0
    assert outcome.note == "no full twist target"


def test_bound_F_pure_torus_colored_is_infinite():
    braid = torus_braid(2, 8, m=2, level=5)
    assert bound_F(braid).value == math.inf


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_bound_F_matches_y_on_random_positive_words(data):
    n = data.draw(st.integers(min_value=2, max_value=5))
    word = tuple(
        (data.draw(st.integers(min_value=1, max_value=n - 1)), 1)
        for _ in range(data.draw(st.integers(min_value=0, max_value=25)))
    )
    braid = ColoredBraid(n=n, word=word, m=1)
    assert bound_F(braid).value == find_diagonals(braid).y


def test_bound_g_examples():
    seven = ColoredBraid(n=2, word=((1, 1),) * 7, m=2, level=5)
    assert bound_g(seven).value == 4
    single = ColoredBraid(n=2, word=((1, 1),), m=2, level=5)
    assert bound_g(single).value == 0
    # last crossing inside a used diagonal: recompute on the shortened word
    eight = ColoredBraid(n=2, word=((1, 1),) * 8, m=2, level=5)
    assert bound_g(eight).value == 4


def test_twist_projection_bound():
    assert twist_projection_bound(2, 0) == 0
    assert twist_projection_bound(3, 5) == 5
    assert twist_projection_bound(4, 12) == 12


def test_cauchy_two_strand():
    spec = InfiniteBraidSpec(n=2, m=1, level=2, tail=(1,))
    report = cauchy_report(spec, [2, 4, 6, 8])
    assert [r.y for r in report.reports] == [2, 4, 6, 8]
    assert [r.bound_F for r in report.reports] == [2, 4, 6, 8]
    assert report.y_nondecreasing and report.y_growing


def test_cauchy_three_strand():
    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1, 2))
    report = cauchy_report(spec, [6, 12])
    assert [r.y for r in report.reports] == [3, 6]


def test_cauchy_rejects_noncomplete():
    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1,))
    with pytest.raises(ValueError, match="not complete"):
        cauchy_report(spec, [2])


def test_cauchy_rejects_negative_prefix():
    spec = InfiniteBraidSpec(
        n=2, m=1, level=math.inf, prefix=((1, -1),), tail=(1,)
    )
    with pytest.raises(ValueError, match="not positive"):
        cauchy_report(spec, [2])


def test_cauchy_unbounded_growth_sample():
    specs = [
        InfiniteBraidSpec(n=2, m=1, level=math.inf, tail=(1,)),
        InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1, 2)),
        InfiniteBraidSpec(n=4, m=1, level=math.inf, tail=(1, 3, 2, 1, 2, 3)),
    ]
    for spec in specs:
        period = len(spec.tail)
        ells = [period * r for r in range(1, 61) if period * r <= 60]
        report = cauchy_report(spec, ells)
        ys = [r.y for r in report.reports]
        assert all(a < b for a, b in zip(ys, ys[1:]))
        assert report.y_growing
