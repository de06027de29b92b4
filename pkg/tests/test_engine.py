import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cutkit import (
    ValueSet,
    brute_grundy,
    compute_table,
    mex,
    nim_sum,
    parse_ruleset,
    reachable,
    residue_distinctness,
)
from cutkit.engine import iter_options, partitions, reach2plus
from cutkit.errors import (
    CapacityExceeded,
    NotApplicable,
    OracleScaleExceeded,
    OutOfRange,
)
from cutkit.ruleset import RulesetSpec, Tail, TailKind


@pytest.mark.parametrize("values, expected", [(set(), 0), ({0, 1, 3}, 2), ({1, 2}, 0)])
def test_mex_examples(values, expected):
    assert mex(values) == expected


@given(st.frozensets(st.integers(0, 200)))
def test_mex_contract(values):
    m = mex(values)
    assert m not in values
    assert all(v in values for v in range(m))
    assert ValueSet(values).mex() == m


@pytest.mark.parametrize("values, expected", [([9, 9], 0), ([1, 2], 3), ([5, 3], 6), ([], 0)])
def test_nim_sum_examples(values, expected):
    assert nim_sum(values) == expected


def test_value_set_behaves_like_a_set():
    a = ValueSet({0, 5, 64, 130})
    assert list(a) == [0, 5, 64, 130]
    assert len(a) == 4 and 64 in a and 63 not in a
    assert a == {0, 5, 64, 130}
    assert (a | ValueSet({1})) == {0, 1, 5, 64, 130}
    assert ValueSet.from_words(np.array([0b1011, 1], dtype=np.uint64)) == {0, 1, 3, 64}


@pytest.mark.parametrize(
    "text, N, expected",
    [
        ("1,2", 10, [0, 1, 2, 3, 1, 4, 3, 2, 4, 5]),
        ("2", 6, [0, 0, 1, 1, 2, 2]),
        ("1,2,3", 5, [0, 1, 2, 3, 4]),
        ("1,odd>=3", 6, [0, 1, 0, 1, 0, 1]),
        ("4", 4, [0, 0, 0, 0]),
        ("1,4", 8, [0, 1, 0, 1, 2, 3, 2, 3]),
    ],
)
def test_compute_table_examples(text, N, expected):
    assert compute_table(parse_ruleset(text), N).sequence() == expected


def test_brute_force_example():
    assert brute_grundy(parse_ruleset("1,2"), 5).sequence() == [0, 1, 2, 3, 1]


def _oracle_specs():
    for r in range(1, 4):
        for base in itertools.combinations(range(1, 6), r):
            yield RulesetSpec.of(base)
    for base in [(), (1,), (2,), (1, 2), (1, 3), (2, 3)]:
        for kind in TailKind:
            start = (max(base) if base else 0) + 1
            for t in (start, start + 2):
                yield RulesetSpec.of(base, Tail(kind, t))


@pytest.mark.parametrize("spec", list(_oracle_specs()), ids=str)
def test_dp_matches_brute_force_including_tails(spec):
    N = 26
    fast = compute_table(spec, N)
    slow = brute_grundy(spec, N)
    assert fast.sequence() == slow.sequence()
    for n in range(1, N + 1):
        assert reach2plus(fast, n) == reach2plus(slow, n)
        for c in spec.base:
            assert reachable(fast, n, c) == reachable(slow, n, c)


@pytest.mark.parametrize("text", ["1,2", "1,4", "2,3", "1,odd>=3"])
def test_parity_law_over_all_options(text):
    spec = parse_ruleset(text)
    table = brute_grundy(spec, 22)
    g = table.values
    for n in range(1, 23):
        for _c, parts in iter_options(spec, n):
            vals = [int(g[p]) for p in parts]
            assert nim_sum(vals) % 2 == sum(vals) % 2
            assert nim_sum(vals) <= sum(vals)


@given(
    st.frozensets(st.integers(1, 9), min_size=1).map(RulesetSpec.of),
    st.integers(1, 60),
)
def test_terminal_heaps(spec, N):
    g = compute_table(spec, N).values
    assert g[1] == 0
    for n in range(1, min(N, spec.min_cut) + 1):
        assert g[n] == 0


@given(st.frozensets(st.integers(1, 9), min_size=1).map(RulesetSpec.of))
def test_grundy_value_never_exceeds_heap_minus_one(spec):
    g = compute_table(spec, 80).values
    assert all(g[n] <= n - 1 for n in range(1, 81))


@pytest.mark.parametrize("text", ["1,2", "1,2,7", "2,all>=5", "1,odd>=3"])
def test_thread_count_does_not_change_the_table(text):
    spec = parse_ruleset(text)
    one = compute_table(spec, 600, threads=1)
    four = compute_table(spec, 600, threads=4)
    assert np.array_equal(one.values, four.values)
    for key in one.rows:
        assert np.array_equal(one.rows[key], four.rows[key])


def test_reachable_examples():
    t = compute_table(parse_ruleset("1,2"), 10)
    assert reachable(t, 4, 1) == {0, 2}
    assert reachable(t, 2, 1) == {0}
    assert reachable(t, 3, 3) == set()


def test_reachable_out_of_range():
    t = compute_table(parse_ruleset("1,2"), 10)
    with pytest.raises(OutOfRange):
        reachable(t, 11, 1)
    with pytest.raises(OutOfRange):
        reachable(t, 0, 1)


def test_exact_rows_extend_lazily_past_the_largest_cut():
    t = compute_table(parse_ruleset("1,2"), 30)
    b = brute_grundy(parse_ruleset("1,2"), 30)
    for n in range(1, 31):
        expected = set()
        for parts in partitions(n, 4):
            expected.add(nim_sum(int(b.values[p]) for p in parts))
        assert reachable(t, n, 3) == expected


@pytest.mark.parametrize("text, N", [("2", 100), ("1,2", 1500), ("1,4", 400), ("2,all>=5", 300)])
def test_residue_distinctness_holds(text, N):
    report = residue_distinctness(compute_table(parse_ruleset(text), N))
    assert report.holds, report.violations[:5]


def test_residue_distinctness_reports_the_even_cut():
    assert residue_distinctness(compute_table(parse_ruleset("1,4,6"), 50)).even_cut == 4
    assert residue_distinctness(compute_table(parse_ruleset("1,all>=3"), 50)).even_cut == 4


def test_residue_distinctness_needs_an_even_cut():
    with pytest.raises(NotApplicable):
        residue_distinctness(compute_table(parse_ruleset("1,3"), 20))


def test_limits():
    with pytest.raises(CapacityExceeded):
        compute_table(parse_ruleset("1"), 10**9)
    with pytest.raises(OracleScaleExceeded):
        brute_grundy(parse_ruleset("1"), 1000)
    with pytest.raises(ValueError):
        compute_table(parse_ruleset("1"), 0)
    with pytest.raises(ValueError):
        compute_table(parse_ruleset("1"), 5, threads=0)


def test_table_is_read_only():
    t = compute_table(parse_ruleset("1,2"), 20)
    with pytest.raises(ValueError):
        t.values[3] = 7


def test_backends_agree_on_a_long_table():
    from cutkit.kernels import compiled_available

    if not compiled_available():
        pytest.skip("compiled extension not built")
    spec = parse_ruleset("1,2,7")
    a = compute_table(spec, 800, backend="python")
    b = compute_table(spec, 800, backend="compiled")
    assert np.array_equal(a.values, b.values)
