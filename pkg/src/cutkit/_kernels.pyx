# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reachable-set kernels.

Value sets are rows of 64-bit words; bit ``v`` of a row is set when value
``v`` is reachable.  Translating a set by ``g`` (``v -> v ^ g``) permutes whole
words by ``g >> 6`` and bits inside each word by ``g & 63``; the in-word part
is applied once per distinct ``g & 63`` after OR-accumulating.
"""
from cython.parallel cimport prange
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free

BACKEND = "compiled"


cdef inline uint64_t _xperm(uint64_t x, int lo) noexcept nogil:
    if lo & 1:
        x = ((x & 0x5555555555555555ULL) << 1) | ((x >> 1) & 0x5555555555555555ULL)
    if lo & 2:
        x = ((x & 0x3333333333333333ULL) << 2) | ((x >> 2) & 0x3333333333333333ULL)
    if lo & 4:
        x = ((x & 0x0F0F0F0F0F0F0F0FULL) << 4) | ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL)
    if lo & 8:
        x = ((x & 0x00FF00FF00FF00FFULL) << 8) | ((x >> 8) & 0x00FF00FF00FF00FFULL)
    if lo & 16:
        x = ((x & 0x0000FFFF0000FFFFULL) << 16) | ((x >> 16) & 0x0000FFFF0000FFFFULL)
    if lo & 32:
        x = (x << 32) | (x >> 32)
    return x


cdef void _xor_union_range(
    const uint64_t* rows, Py_ssize_t stride, const int64_t* values,
    Py_ssize_t m, Py_ssize_t a_max, uint64_t* out, uint64_t* scratch,
    Py_ssize_t words, Py_ssize_t j0, Py_ssize_t j1,
) noexcept nogil:
    cdef Py_ssize_t a, j, hi
    cdef int lo
    cdef uint64_t used = 0
    cdef uint64_t* acc
    cdef const uint64_t* src
    for a in range(1, a_max + 1):
        lo = <int>(values[a] & 63)
        hi = <Py_ssize_t>(values[a] >> 6)
        used |= (<uint64_t>1) << lo
        acc = scratch + lo * words
        src = rows + (m - a) * stride
        if hi == 0:
            for j in range(j0, j1):
                acc[j] |= src[j]
        else:
            for j in range(j0, j1):
                acc[j] |= src[j ^ hi]
    for lo in range(64):
        if (used >> lo) & 1:
            acc = scratch + lo * words
            if lo == 0:
                for j in range(j0, j1):
                    out[j] |= acc[j]
            else:
                for j in range(j0, j1):
                    out[j] |= _xperm(acc[j], lo)


def xor_union(
    const uint64_t[:, ::1] rows, const int64_t[::1] values,
    Py_ssize_t m, Py_ssize_t a_max, uint64_t[::1] out, int threads=1,
):
    """OR into ``out`` the sets ``values[a] ^ rows[m - a]`` for ``a = 1..a_max``."""
    cdef Py_ssize_t words = rows.shape[1]
    cdef Py_ssize_t stride = rows.shape[1]
    cdef Py_ssize_t nchunks, chunk, per
    cdef uint64_t* scratch
    if a_max < 1:
        return
    if out.shape[0] < words:
        raise ValueError("output row is narrower than the source rows")
    scratch = <uint64_t*>calloc(64 * words, sizeof(uint64_t))
    if scratch == NULL:
        raise MemoryError()
    nchunks = threads if threads > 1 else 1
    if words < 8 * nchunks:
        nchunks = 1
    try:
        if nchunks == 1:
            with nogil:
                _xor_union_range(&rows[0, 0], stride, &values[0], m, a_max,
                                 &out[0], scratch, words, 0, words)
        else:
            per = (words + nchunks - 1) // nchunks
            for chunk in prange(nchunks, nogil=True, num_threads=nchunks, schedule="static"):
                _xor_union_range(&rows[0, 0], stride, &values[0], m, a_max,
                                 &out[0], scratch, words,
                                 chunk * per, min((chunk + 1) * per, words))
    finally:
        free(scratch)


def pair_union(const int64_t[::1] values, Py_ssize_t m, uint64_t[::1] out):
    """OR into ``out`` the values ``values[a] ^ values[m - a]`` for every split of ``m``."""
    cdef Py_ssize_t a, v
    cdef Py_ssize_t words = out.shape[0]
    with nogil:
        for a in range(1, m // 2 + 1):
            v = values[a] ^ values[m - a]
            out[v >> 6] |= (<uint64_t>1) << (v & 63)
