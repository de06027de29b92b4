"""Pure numpy versions of the reachable-set kernels.

Same contracts as the compiled module; used when the extension is not built
or when ``CUTKIT_PURE=1`` is set.
"""
import numpy as np

BACKEND = "python"

_MASKS = [
    np.uint64(0x5555555555555555),
    np.uint64(0x3333333333333333),
    np.uint64(0x0F0F0F0F0F0F0F0F),
    np.uint64(0x00FF00FF00FF00FF),
    np.uint64(0x0000FFFF0000FFFF),
    np.uint64(0x00000000FFFFFFFF),
]
_SHIFTS = [np.uint64(1 << k) for k in range(6)]


def _xperm_rows(block, lo):
    """Apply ``bit -> bit ^ lo[i]`` inside every word of row ``i``."""
    for k in range(6):
        sel = (lo >> k) & 1 == 1
        if not sel.any():
            continue
        x = block[sel]
        mask, sh = _MASKS[k], _SHIFTS[k]
        block[sel] = ((x & mask) << sh) | ((x >> sh) & mask)
    return block


def xor_union(rows, values, m, a_max, out, threads=1):
    """OR into ``out`` the sets ``values[a] ^ rows[m - a]`` for ``a = 1..a_max``."""
    if a_max < 1:
        return
    words = rows.shape[1]
    a = np.arange(1, a_max + 1)
    g = values[a]
    lo = g & 63
    hi = g >> 6
    cols = np.arange(words)[None, :] ^ hi[:, None]
    src = rows[(m - a)[:, None], cols]
    order = np.argsort(lo, kind="stable")
    lo_sorted = lo[order]
    starts = np.flatnonzero(np.r_[True, lo_sorted[1:] != lo_sorted[:-1]])
    grouped = np.bitwise_or.reduceat(src[order], starts, axis=0)
    grouped = _xperm_rows(grouped, lo_sorted[starts])
    out[:words] |= np.bitwise_or.reduce(grouped, axis=0)


def pair_union(values, m, out):
    """OR into ``out`` the values ``values[a] ^ values[m - a]`` for every split of ``m``."""
    if m < 2:
        return
    a = np.arange(1, m // 2 + 1)
    v = np.unique(values[a] ^ values[m - a])
    np.bitwise_or.at(out, v >> 6, np.uint64(1) << (v & 63).astype(np.uint64))
