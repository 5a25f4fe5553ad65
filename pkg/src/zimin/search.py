"""Searching Zimin patterns inside words.

Both entry points restart the online Zimin-type recurrence at every start
position, which gives O(n^2) time and O(n) scratch space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .borders import encode
from .core import apply_morphism, decompose, zimin_word

__all__ = ["Occurrence", "search_zimin", "max_factor_ztype"]


@dataclass(frozen=True)
class Occurrence:
    """Factor ``w[start..end]`` (1-based, inclusive) that is an image of ``Z_rank``."""

    start: int
    end: int
    rank: int
    witness: dict

    def factor(self, w: Sequence) -> Sequence:
        return w[self.start - 1 : self.end]

    def image(self) -> Sequence:
        return apply_morphism(zimin_word(self.rank), self.witness)

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "end": self.end,
            "rank": self.rank,
            "morphism": {f"x{v}": str(img) for v, img in self.witness.items()},
        }


@njit(cache=True, nogil=True)
def _suffix_types(x, start, B, Z, stop_at):
    """Zimin types of the prefixes of ``x[start:]`` written into Z[1..].

    Returns the first prefix length whose type reaches `stop_at` (or the
    suffix length if none does).  B and Z are caller-owned scratch space.
    """
    m = x.shape[0] - start
    B[0] = -1
    Z[0] = 0
    if m == 0:
        return 0
    B[1] = 0
    Z[1] = 1
    if stop_at <= 1:
        return 1
    t = 0
    s = 0
    for i in range(2, m + 1):
        c = x[start + i - 1]
        while t >= 0 and x[start + t] != c:
            t = B[t]
        t += 1
        B[i] = t
        while s >= 0 and (2 * s + 2 >= i or x[start + s] != c):
            s = B[s]
        s += 1
        Z[i] = Z[s] + 1
        if Z[i] >= stop_at:
            return i
    return m


@njit(cache=True, nogil=True)
def _search_kernel(x, k):
    n = x.shape[0]
    B = np.empty(n + 1, np.int32)
    Z = np.empty(n + 1, np.int32)
    for start in range(n):
        # a factor of length m has type at most floor(log2(m + 1))
        if (1 << k) - 1 > n - start:
            break
        end = _suffix_types(x, start, B, Z, k)
        if end > 0 and Z[end] >= k:
            return start, end
    return -1, -1


@njit(cache=True, nogil=True)
def _max_kernel(x):
    n = x.shape[0]
    B = np.empty(n + 1, np.int32)
    Z = np.empty(n + 1, np.int32)
    best = 0
    best_start = -1
    best_len = -1
    for start in range(n):
        m = n - start
        cap = 0
        while (1 << (cap + 1)) - 1 <= m:
            cap += 1
        if cap <= best:
            break
        _suffix_types(x, start, B, Z, 1 << 30)
        for i in range(1, m + 1):
            if Z[i] > best:
                best = Z[i]
                best_start = start
                best_len = i
    return best, best_start, best_len


def _occurrence(w: Sequence, start0: int, length: int, rank: int) -> Occurrence:
    factor = w[start0 : start0 + length]
    return Occurrence(start0 + 1, start0 + length, rank, decompose(factor, rank))


def search_zimin(w: Sequence, k: int) -> Occurrence | None:
    """Find a factor of `w` that is an image of ``Z_k``.

    Returns the occurrence with the smallest start and, among those, the
    smallest end; ``None`` when ``Z_k`` does not embed in `w`.
    """
    if k < 1:
        raise ValueError(f"rank must be >= 1, got {k}")
    if k > 62:
        return None
    start, length = _search_kernel(encode(w), k)
    if start < 0:
        return None
    return _occurrence(w, int(start), int(length), k)


def max_factor_ztype(w: Sequence) -> tuple[int, Occurrence | None]:
    """Largest Zimin type over all factors of `w`, with one witness.

    The witness follows the same order as :func:`search_zimin`: smallest
    start, then smallest end.
    """
    rank, start, length = _max_kernel(encode(w))
    if rank == 0:
        return 0, None
    return int(rank), _occurrence(w, int(start), int(length), int(rank))
