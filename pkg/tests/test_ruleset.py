import itertools

import pytest
from hypothesis import given, strategies as st

from cutkit.errors import (
    CutTooLarge,
    EmptyRuleset,
    InfiniteRuleset,
    MalformedText,
    NonPositiveCut,
    TailOverlap,
)
from cutkit.ruleset import (
    Family,
    RulesetSpec,
    Tail,
    TailKind,
    TakeBreakCode,
    classify,
    from_take_and_break,
    materialize_cuts,
    parse_ruleset,
    to_take_and_break,
)


@pytest.mark.parametrize(
    "text, base, tail",
    [
        ("1,2", (1, 2), None),
        ("1,odd>=3", (1,), Tail(TailKind.ODD, 3)),
        ("2,1", (1, 2), None),
        (" 3 , 1 ,3", (1, 3), None),
        ("all>=4", (), Tail(TailKind.ALL, 4)),
        ("2,all>=5", (2,), Tail(TailKind.ALL, 5)),
    ],
)
def test_parse(text, base, tail):
    spec = parse_ruleset(text)
    assert spec.base == base
    assert spec.tail == tail


@pytest.mark.parametrize(
    "text, error",
    [
        ("", EmptyRuleset),
        ("0,1", NonPositiveCut),
        ("-2", NonPositiveCut),
        ("1,x", MalformedText),
        ("odd>=3,1", MalformedText),
        ("1,5,odd>=3", TailOverlap),
        ("2000000", CutTooLarge),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse_ruleset(text)


def test_str_round_trip():
    for text in ["1,2", "1,odd>=3", "all>=4", "2,3,all>=7"]:
        assert str(parse_ruleset(text)) == text
        assert parse_ruleset(str(parse_ruleset(text))) == parse_ruleset(text)


def test_max_cut_of_tail_is_undefined():
    with pytest.raises(InfiniteRuleset):
        parse_ruleset("1,all>=4").max_cut


@pytest.mark.parametrize(
    "text, n, expected",
    [
        ("1,2", 2, [1]),
        ("1,odd>=3", 6, [1, 3, 5]),
        ("1,2", 1, []),
        ("all>=4", 1, []),
        ("2,all>=5", 8, [2, 5, 6, 7]),
        ("odd>=4", 10, [5, 7, 9]),
    ],
)
def test_materialize_cuts(text, n, expected):
    assert materialize_cuts(parse_ruleset(text), n) == expected


_specs = st.one_of(
    st.frozensets(st.integers(1, 12), min_size=1).map(RulesetSpec.of),
    st.builds(
        lambda base, kind, gap: RulesetSpec.of(base, Tail(kind, (max(base) if base else 0) + gap)),
        st.frozensets(st.integers(1, 8)),
        st.sampled_from(TailKind),
        st.integers(1, 5),
    ),
)


@given(_specs, st.integers(1, 40))
def test_materialize_cuts_is_monotone(spec, n):
    small, big = materialize_cuts(spec, n), materialize_cuts(spec, n + 1)
    assert set(small) <= set(big)
    assert all(1 <= c <= n - 1 for c in small)
    assert all(c in spec for c in big)


@pytest.mark.parametrize(
    "text, tag, param",
    [
        ("1,3,5", Family.ALL_ODD_WITH_ONE, None),
        ("1,odd>=3", Family.ALL_ODD_WITH_ONE, None),
        ("1", Family.ALL_ODD_WITH_ONE, None),
        ("2,7", Family.MIN_AT_LEAST_TWO, 2),
        ("all>=4", Family.MIN_AT_LEAST_TWO, 4),
        ("1,3,6", Family.ONE_THREE_TWO_K, 3),
        ("1,2,3", Family.CONTAINS_ONE_TWO_THREE, None),
        ("1,2,3,all>=4", Family.CONTAINS_ONE_TWO_THREE, None),
        ("1,4", Family.ONE_EVEN_C, 4),
        ("1,2,5", Family.GENERAL, None),
        ("1,2", Family.GENERAL, None),
        ("1,6,odd>=7", Family.GENERAL, None),
    ],
)
def test_classify(text, tag, param):
    family = classify(parse_ruleset(text))
    assert family.tag is tag
    assert family.param == param


@given(_specs)
def test_classify_is_total(spec):
    assert classify(spec) == classify(spec)


@pytest.mark.parametrize(
    "text, code, hexa",
    [
        ("1,2", "0.7,15", "0.7F"),
        ("1", "0.7", "0.7"),
        ("3", "0.0,0,31", None),
    ],
)
def test_to_take_and_break(text, code, hexa):
    out = to_take_and_break(parse_ruleset(text))
    assert str(out) == code
    assert out.hexadecimal() == hexa


def test_take_and_break_needs_finite_ruleset():
    with pytest.raises(InfiniteRuleset):
        to_take_and_break(parse_ruleset("1,odd>=3"))


def test_take_and_break_is_injective_with_nonzero_digits_exactly_on_cuts():
    seen = {}
    for r in range(1, 7):
        for cuts in itertools.combinations(range(1, 7), r):
            spec = RulesetSpec.of(cuts)
            code = to_take_and_break(spec)
            assert code.d0 == 0
            assert [c for c, d in enumerate(code.digits, 1) if d] == list(cuts)
            assert str(code) not in seen
            seen[str(code)] = spec
            assert from_take_and_break(TakeBreakCode.parse(str(code))) == spec


@pytest.mark.parametrize("text", ["0.7,14", "1.7", "0.7,0", "0.", "7", "0.x"])
def test_from_take_and_break_rejects_foreign_codes(text):
    with pytest.raises(MalformedText):
        from_take_and_break(TakeBreakCode.parse(text))
