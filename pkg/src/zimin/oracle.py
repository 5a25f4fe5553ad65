"""Brute-force reference answers, kept independent of the border machinery.

Nothing here uses border arrays or the longest-short-border shortcut; the
Zimin type is taken straight from its definition by trying every
decomposition ``w = z v z`` with ``v`` non-empty.  These routines are slow by
design and capped to desk-sized inputs.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .exceptions import ResourceCapError

__all__ = ["ztype_brute", "embeds_zimin_brute", "pattern_embeds_brute"]


class _FactorTypes:
    # memo on (start, end) factors of one word
    def __init__(self, w: Sequence):
        self.w = w
        self.memo: dict[tuple[int, int], int] = {}

    def __call__(self, start: int, end: int) -> int:
        if end == start:
            return 0
        key = (start, end)
        memo = self.memo
        if key in memo:
            return memo[key]
        w = self.w
        length = end - start
        best = 0
        for z in range(1, (length + 1) // 2):
            if 2 * z < length and w[start : start + z] == w[end - z : end]:
                best = max(best, self(start, start + z))
        memo[key] = best + 1
        return best + 1


def ztype_brute(w: Sequence, cap: int = 64) -> int:
    """Zimin type by exhaustive search over all ``w = z v z`` decompositions."""
    if len(w) > cap:
        raise ResourceCapError(f"word length {len(w)} exceeds oracle cap {cap}")
    return _FactorTypes(w)(0, len(w))


def embeds_zimin_brute(w: Sequence, k: int, cap: int = 40) -> bool:
    """True iff some factor of `w` has brute-force Zimin type >= k."""
    if len(w) > cap:
        raise ResourceCapError(f"word length {len(w)} exceeds oracle cap {cap}")
    types = _FactorTypes(w)
    n = len(w)
    return any(
        types(i, j) >= k for i in range(n) for j in range(i + 1, n + 1)
    )


def _length_tuples(nvars: int, total: int):
    # compositions of `total` into `nvars` positive parts, lexicographic
    for head in range(1, total - nvars + 2):
        if nvars == 1:
            if head == total:
                yield (head,)
            continue
        for tail in _length_tuples(nvars - 1, total - head):
            yield (head,) + tail


def pattern_embeds_brute(
    p: Sequence[Hashable],
    w: Sequence,
    factor: bool = True,
    max_word: int = 30,
    max_pattern: int = 15,
) -> dict | None:
    """Find a non-erasing morphism h with ``h(p)`` a factor of `w`.

    Image-length assignments are tried by non-decreasing total image length
    (sum over distinct variables), ties in lexicographic order of the length
    tuple, and for each assignment the start positions left to right.  With
    ``factor=False`` the image must equal the whole of `w`.
    """
    if len(w) > max_word or len(p) > max_pattern:
        raise ResourceCapError("pattern embedding oracle is limited to tiny inputs")
    if len(p) == 0:
        raise ValueError("empty pattern")
    variables = list(dict.fromkeys(p))
    counts = [sum(1 for s in p if s == v) for v in variables]
    n = len(w)
    for total in range(len(variables), n + 1):
        for lengths in _length_tuples(len(variables), total):
            span = sum(c * l for c, l in zip(counts, lengths))
            if span > n or (not factor and span != n):
                continue
            size = dict(zip(variables, lengths))
            starts = range(n - span + 1) if factor else (0,)
            for start in starts:
                h: dict = {}
                pos = start
                ok = True
                for v in p:
                    piece = w[pos : pos + size[v]]
                    if v in h:
                        if h[v] != piece:
                            ok = False
                            break
                    else:
                        h[v] = piece
                    pos += size[v]
                if ok:
                    return {v: h[v] for v in variables}
    return None
