"""How long a word must be before a Zimin pattern is forced into it.

``f(n, k)`` is the least length L such that every word of length L over k
letters has a factor of Zimin type >= n, and ``m(n, k)`` counts the k-ary
*minimal* words of type n (type n, every proper factor of smaller type).
Words are counted over the fixed alphabet ``a, b, c, ...``; ``aba`` and
``bab`` are different words.

Small cells come from an exhaustive depth-first search over the words that
avoid type-n factors; larger ones from closed forms and the recursion
``f(n+1, k) <= (f(n, k) + 1) * m(n, k) + f(n, k)``.
"""

from __future__ import annotations

import math
import string
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_CEILING, Decimal, localcontext
from typing import Callable

from .core import ztype
from .exceptions import ResourceCapError
from .search import max_factor_ztype

__all__ = [
    "ALPHABET",
    "AvoidanceStats",
    "is_minimal",
    "enumerate_minimal",
    "f_exact",
    "f2_closed",
    "m2_formula",
    "f_upper_bound",
    "f3_general_bound",
    "table_cell",
    "DEFAULT_LEN_CAP",
    "DEFAULT_NODE_CAP",
]

ALPHABET = string.ascii_lowercase
DEFAULT_LEN_CAP = 64
DEFAULT_NODE_CAP = 10**9
DEFAULT_SPLIT_DEPTH = 8


@dataclass
class AvoidanceStats:
    """One cell of the f(n, k) table.

    `exact` is False when `f_value` is only an upper bound.  `witness`, when
    known, is a longest word avoiding rank-n factors (length ``f_value - 1``).
    """

    n: int
    k: int
    f_value: int
    exact: bool = True
    m_value: int | None = None
    witness: str | None = None
    method: str = "exact"
    nodes: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"n": self.n, "k": self.k, "f": self.f_value, "exact": self.exact}
        if self.m_value is not None:
            out["m"] = self.m_value
        if self.witness is not None:
            out["witness"] = self.witness
        out["method"] = self.method
        out.update(self.extra)
        return out


def is_minimal(w: str, n: int) -> bool:
    """True iff `w` has Zimin type >= n and no proper factor does."""
    if len(w) == 0 or ztype(w) < n:
        return False
    return max_factor_ztype(w[:-1])[0] < n and max_factor_ztype(w[1:])[0] < n


@dataclass
class _Result:
    nodes: int = 0
    longest: str = ""
    minimal: list[str] = field(default_factory=list)
    frontier: list[str] = field(default_factory=list)


class _AvoidSearch:
    """DFS over words with no factor of Zimin type >= n.

    For every start s the border, short-border and type tables of
    ``w[s..]`` are kept in row s.  Appending a letter fills one new column
    of each row; backtracking just lets later writes overwrite it.
    """

    def __init__(self, n: int, k: int, len_cap: int, node_cap: int, split_depth=None):
        self.n, self.k = n, k
        self.len_cap, self.node_cap = len_cap, node_cap
        self.split_depth = split_depth
        width = len_cap + 2
        self.W = [0] * width
        self.B = [[-1] + [0] * width for _ in range(width)]
        self.SB = [[0] * (width + 1) for _ in range(width)]
        self.Z = [[0] * (width + 1) for _ in range(width)]
        self.res = _Result()

    def _append(self, L: int, c: int) -> int:
        """Place `c` at 0-based position L; return the largest start of a
        factor ending there with type >= n, or -1."""
        W = self.W
        W[L] = c
        n = self.n
        hit = -1
        for s in range(L + 1):
            m = L - s + 1
            Bs, SBs, Zs = self.B[s], self.SB[s], self.Z[s]
            if m == 1:
                Bs[1] = 0
                SBs[1] = 0
                Zs[1] = z = 1
            else:
                t = Bs[m - 1]
                while t >= 0 and W[s + t] != c:
                    t = Bs[t]
                t += 1
                Bs[m] = t
                sb = SBs[m - 1]
                while sb >= 0 and (2 * sb + 2 >= m or W[s + sb] != c):
                    sb = Bs[sb]
                sb += 1
                SBs[m] = sb
                Zs[m] = z = Zs[sb] + 1
            if z >= n:
                hit = s
        return hit

    def _word(self, length: int) -> str:
        return "".join(ALPHABET[c] for c in self.W[:length])

    def _visit(self, L: int) -> None:
        res = self.res
        res.nodes += 1
        if res.nodes > self.node_cap:
            raise ResourceCapError(f"node cap {self.node_cap} exceeded")
        if L > len(res.longest):
            res.longest = self._word(L)
        if self.split_depth is not None and L == self.split_depth:
            res.frontier.append(self._word(L))
            return
        if L >= self.len_cap:
            raise ResourceCapError(
                f"avoiding words reach the length cap {self.len_cap}"
            )
        for c in range(self.k):
            hit = self._append(L, c)
            if hit < 0:
                self._visit(L + 1)
            elif hit == 0:
                res.minimal.append(self._word(L + 1))

    def run(self, prefix: str = "") -> _Result:
        codes = [ALPHABET.index(ch) for ch in prefix]
        for L, c in enumerate(codes):
            if self._append(L, c) >= 0:
                raise ValueError(f"prefix {prefix!r} already contains a type-{self.n} factor")
        limit = sys.getrecursionlimit()
        if limit < self.len_cap + 100:
            sys.setrecursionlimit(self.len_cap + 100)
        self._visit(len(codes))
        return self.res


def _subtree(args) -> _Result:
    n, k, prefix, len_cap, node_cap = args
    return _AvoidSearch(n, k, len_cap, node_cap).run(prefix)


def _search(n: int, k: int, len_cap: int, node_cap: int, workers: int, split_depth: int) -> _Result:
    if n < 1 or k < 1:
        raise ValueError("rank and alphabet size must be >= 1")
    if k > len(ALPHABET):
        raise ValueError(f"alphabet size is limited to {len(ALPHABET)}")
    if workers <= 1:
        return _AvoidSearch(n, k, len_cap, node_cap).run()

    top = _AvoidSearch(n, k, len_cap, node_cap, split_depth=split_depth).run()
    merged = _Result(nodes=top.nodes - len(top.frontier), longest=top.longest,
                     minimal=list(top.minimal))
    tasks = [(n, k, p, len_cap, node_cap) for p in top.frontier]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_subtree, tasks):
            merged.nodes += part.nodes
            merged.minimal.extend(part.minimal)
            if len(part.longest) > len(merged.longest) or (
                len(part.longest) == len(merged.longest) and part.longest < merged.longest
            ):
                merged.longest = part.longest
    if merged.nodes > node_cap:
        raise ResourceCapError(f"node cap {node_cap} exceeded")
    # no minimal word is a prefix of another, so sorting restores DFS order
    merged.minimal.sort()
    return merged


def enumerate_minimal(
    n: int,
    k: int,
    emit: Callable[[str], None] | None = None,
    len_cap: int = DEFAULT_LEN_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> int:
    """Count the k-ary minimal words of Zimin type n, in lexicographic order.

    Each word is passed to `emit` once the whole search has finished, so a
    cap failure emits nothing.
    """
    res = _search(n, k, len_cap, node_cap, workers, split_depth)
    if emit is not None:
        for w in res.minimal:
            emit(w)
    return len(res.minimal)


def f_exact(
    n: int,
    k: int,
    len_cap: int = DEFAULT_LEN_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> AvoidanceStats:
    """Exact f(n, k) by exhaustive search.

    Also reports m(n, k) from the same traversal and the lexicographically
    least longest avoiding word as witness.
    """
    res = _search(n, k, len_cap, node_cap, workers, split_depth)
    return AvoidanceStats(
        n=n,
        k=k,
        f_value=len(res.longest) + 1,
        exact=True,
        m_value=len(res.minimal),
        witness=res.longest,
        method="exact",
        nodes=res.nodes,
    )


def m2_formula(k: int) -> int:
    """m(2, k) = k! * sum_{i<k} 2^(k-1-i) / i!, in exact integer arithmetic."""
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    fact_k = math.factorial(k)
    return sum((fact_k // math.factorial(i)) << (k - 1 - i) for i in range(k))


def f2_closed(k: int) -> AvoidanceStats:
    """f(2, k) = 2k + 1, witnessed by ``aabb...`` (each of the k letters twice)."""
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    if k > len(ALPHABET):
        raise ValueError(f"alphabet size is limited to {len(ALPHABET)}")
    witness = "".join(ch * 2 for ch in ALPHABET[:k])
    return AvoidanceStats(2, k, 2 * k + 1, True, m2_formula(k), witness, "formula")


def f_upper_bound(n_next: int, f_prev: int, m_prev: int) -> int:
    """Right-hand side of ``f(n_next, k) <= (f + 1) * m + f`` with f, m at rank n_next - 1."""
    if n_next < 3:
        raise ValueError(f"the recursion bounds ranks >= 3, got {n_next}")
    if f_prev < 1 or m_prev < 1:
        raise ValueError("f and m must be positive")
    return (f_prev + 1) * m_prev + f_prev


def f3_general_bound(r: int) -> int:
    """``ceil(sqrt(e) * 2^r * (r+1)! + 2r + 1)``, the closed bound on f(3, r)."""
    if r < 2:
        raise ValueError(f"alphabet size must be >= 2, got {r}")
    with localcontext() as ctx:
        ctx.prec = 60 + 2 * r
        value = Decimal("0.5").exp() * (Decimal(2) ** r) * math.factorial(r + 1)
        value += 2 * r + 1
        return int(value.to_integral_value(rounding=ROUND_CEILING))


def table_cell(
    n: int,
    k: int,
    len_cap: int = DEFAULT_LEN_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
    workers: int = 1,
) -> AvoidanceStats:
    """Best available value of f(n, k): exact, closed form or recursion bound."""
    if n < 1 or k < 1:
        raise ValueError("rank and alphabet size must be >= 1")
    if n == 1:
        return AvoidanceStats(1, k, 1, True, k, "", "formula")
    if k == 1:
        # the unary word a^(2^n - 2) has type n - 1
        return AvoidanceStats(n, 1, 2**n - 1, True, 1, "a" * (2**n - 2), "formula")
    if n == 2:
        return f2_closed(k)
    if n == 3 and k == 2:
        return f_exact(3, 2, len_cap, node_cap, workers)
    if n == 3:
        bound = f_upper_bound(3, 2 * k + 1, m2_formula(k))
        return AvoidanceStats(
            3, k, bound, False, None, None, "recursion",
            extra={"formula_bound": f3_general_bound(k)},
        )
    if n == 4 and k == 2:
        base = f_exact(3, 2, len_cap, node_cap, workers)
        bound = f_upper_bound(4, base.f_value, base.m_value)
        return AvoidanceStats(
            4, 2, bound, False, None, None, "recursion",
            extra={"f_prev": base.f_value, "m_prev": base.m_value},
        )
    raise ValueError(f"no method available for f({n},{k})")
