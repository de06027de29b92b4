"""Both kernel backends against a plain set-based reference."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cutkit import kernels

BACKENDS = ["python"] + (["compiled"] if kernels.compiled_available() else [])


def _to_words(sets, words):
    out = np.zeros((len(sets), words), dtype=np.uint64)
    for i, s in enumerate(sets):
        for v in s:
            out[i, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    return out


def _from_words(row):
    return {64 * w + b for w in range(len(row)) for b in range(64) if int(row[w]) >> b & 1}


@st.composite
def _problem(draw):
    words = draw(st.sampled_from([1, 2, 4]))
    top = 64 * words
    m = draw(st.integers(2, 30))
    values = np.array([0] + draw(st.lists(st.integers(0, top - 1), min_size=m, max_size=m)), dtype=np.int64)
    rows = [draw(st.frozensets(st.integers(0, top - 1), max_size=12)) for _ in range(m + 1)]
    a_max = draw(st.integers(0, m - 1))
    return words, m, values, rows, a_max


@pytest.mark.parametrize("name", BACKENDS)
@settings(max_examples=150, deadline=None)
@given(problem=_problem(), threads=st.sampled_from([1, 3]))
def test_xor_union_matches_sets(name, problem, threads):
    words, m, values, rows, a_max = problem
    kern = kernels.load(name)
    out = np.zeros(words, dtype=np.uint64)
    kern.xor_union(_to_words(rows, words), values, m, a_max, out, threads)
    expected = {int(values[a]) ^ v for a in range(1, a_max + 1) for v in rows[m - a]}
    assert _from_words(out) == expected


@pytest.mark.parametrize("name", BACKENDS)
@settings(max_examples=100, deadline=None)
@given(problem=_problem())
def test_pair_union_matches_sets(name, problem):
    words, m, values, _rows, _a = problem
    kern = kernels.load(name)
    out = np.zeros(words, dtype=np.uint64)
    kern.pair_union(values, m, out)
    expected = {int(values[a]) ^ int(values[m - a]) for a in range(1, m)}
    assert _from_words(out) == expected


def test_union_keeps_existing_bits():
    for name in BACKENDS:
        kern = kernels.load(name)
        out = np.array([1 << 40], dtype=np.uint64)
        kern.pair_union(np.array([0, 0, 1, 2], dtype=np.int64), 3, out)
        assert _from_words(out) == {40, 1}


def test_pure_flag_selects_the_numpy_backend(monkeypatch):
    monkeypatch.setenv("CUTKIT_PURE", "1")
    assert kernels.load().BACKEND == "python"
