import math
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krtl.braid import (
    BraidParseError,
    ColoredBraid,
    InfiniteBraidSpec,
    decompose_noncomplete,
    gamma_sets,
    is_complete,
    negative_shift,
    parse_braid,
    partial_braid,
)
from krtl.laurent import GradingShift


@st.composite
def braids(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    length = draw(st.integers(min_value=0, max_value=12))
    word = tuple(
        (draw(st.integers(min_value=1, max_value=n - 1)), draw(st.sampled_from((1, -1))))
        for _ in range(length)
    )
    m = draw(st.integers(min_value=1, max_value=3))
    level = draw(st.sampled_from([math.inf, m + 1, m + 3]))
    return ColoredBraid(n=n, word=word, m=m, level=level)


def test_parse_simple():
    b = parse_braid("n=2 m=1 N=2\n1 1 1")
    assert b == ColoredBraid(n=2, word=((1, 1),) * 3, m=1, level=2)


def test_parse_mixed_signs_and_inf():
    b = parse_braid("n=3 m=2 N=inf\n1 2 -1")
    assert b.word == ((1, 1), (2, 1), (1, -1))
    assert b.level == math.inf


def test_parse_color_exceeds_level():
    with pytest.raises(BraidParseError, match="exceeds"):
        parse_braid("n=2 m=3 N=2\n1")


def test_parse_reports_location():
    with pytest.raises(BraidParseError) as err:
        parse_braid("n=3 m=1 N=2\n1 2 x")
    assert err.value.line == 2
    assert err.value.column == 5


def test_parse_index_out_of_range():
    with pytest.raises(BraidParseError, match="outside"):
        parse_braid("n=3 m=1 N=2\n3")


def test_color_equal_to_level_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        parse_braid("n=2 m=2 N=2\n1")
    assert any("equals level" in str(w.message) for w in caught)


@given(braids())
@settings(max_examples=150)
def test_serialize_round_trip(braid):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert parse_braid(braid.to_text()) == braid


def test_spec_round_trip():
    spec = InfiniteBraidSpec(
        n=3, m=1, level=math.inf, prefix=((2, -1), (1, 1)), tail=(1, 2)
    )
    assert parse_braid(spec.to_text()) == spec


def test_partial_braid_examples():
    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1, 2))
    assert partial_braid(spec, 0).word == ()
    assert partial_braid(spec, 3).word == ((1, 1), (2, 1), (1, 1))
    spec2 = InfiniteBraidSpec(n=2, m=1, level=math.inf, prefix=((1, -1),), tail=(1,))
    assert partial_braid(spec2, 2).word == ((1, -1), (1, 1))


@given(st.integers(min_value=0, max_value=30))
def test_partial_braid_prefix_property(ell):
    spec = InfiniteBraidSpec(
        n=4, m=1, level=math.inf, prefix=((2, 1), (3, -1)), tail=(1, 3, 2)
    )
    shorter = partial_braid(spec, ell).word
    longer = partial_braid(spec, ell + 1).word
    assert longer[:ell] == shorter


def test_is_complete():
    assert is_complete(InfiniteBraidSpec(n=4, m=1, level=math.inf, tail=(1, 2, 3)))
    assert not is_complete(
        InfiniteBraidSpec(n=3, m=1, level=math.inf, prefix=((2, 1), (2, 1)), tail=(1,))
    )
    assert is_complete(InfiniteBraidSpec(n=2, m=1, level=math.inf, tail=(1,)))


def test_gamma_sets():
    complete = InfiniteBraidSpec(n=4, m=1, level=math.inf, tail=(1, 2, 3))
    gamma, comp = gamma_sets(complete)
    assert gamma == frozenset({1, 2, 3})
    assert comp == frozenset({0, 4})

    partial = InfiniteBraidSpec(n=4, m=1, level=math.inf, tail=(1,))
    _, comp = gamma_sets(partial)
    assert comp == frozenset({0, 2, 3, 4})


def five_strand_noncomplete():
    # sigma_3 appears only finitely often, last at word position 7
    return InfiniteBraidSpec(
        n=5,
        m=1,
        level=math.inf,
        prefix=((3, 1), (1, 1), (4, 1), (2, 1), (3, 1), (1, 1), (3, 1)),
        tail=(1, 2, 4),
    )


def test_gamma_sets_five_strand():
    _, comp = gamma_sets(five_strand_noncomplete())
    assert sorted(comp) == [0, 3, 5]


def test_decompose_noncomplete():
    report = decompose_noncomplete(five_strand_noncomplete())
    assert report.r == 7
    assert report.blocks == (3, 2)
    assert "P_3" in report.text and "P_2" in report.text and "B_7" in report.text


def test_decompose_complete_spec():
    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1, 2))
    report = decompose_noncomplete(spec)
    assert report.r == 0
    assert report.blocks == (3,)


def test_decompose_width_one_block():
    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(2,))
    report = decompose_noncomplete(spec)
    assert report.blocks == (1, 2)


def test_decompose_rejects_negative_prefix():
    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, prefix=((1, -1),), tail=(1,))
    with pytest.raises(ValueError, match="positive"):
        decompose_noncomplete(spec)


def test_negative_shift():
    base = InfiniteBraidSpec(n=2, m=3, level=math.inf, tail=(1,))
    assert negative_shift(base) == GradingShift(0, 0, 0)
    two_neg = InfiniteBraidSpec(
        n=2, m=3, level=math.inf, prefix=((1, -1), (1, -1)), tail=(1,)
    )
    assert negative_shift(two_neg) == GradingShift(6, 6, 0)
    one_neg = InfiniteBraidSpec(n=2, m=5, level=math.inf, prefix=((1, -1),), tail=(1,))
    assert negative_shift(one_neg) == GradingShift(5, 5, 0)


def test_negative_shift_requires_completeness():
    spec = InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1,))
    with pytest.raises(ValueError, match="complete"):
        negative_shift(spec)


def test_bi_infinite_flags():
    spec = InfiniteBraidSpec(
        n=2,
        m=1,
        level=math.inf,
        prefix=((1, -1),),
        tail=(1,),
        back_prefix=(),
        back_tail=(1,),
    )
    assert spec.bi_infinite
    assert is_complete(spec)
    assert negative_shift(spec) == GradingShift(1, 1, 0)
    with pytest.raises(ValueError, match="semi-infinite"):
        partial_braid(spec, 2)
    with pytest.raises(ValueError, match="semi-infinite"):
        decompose_noncomplete(spec)
