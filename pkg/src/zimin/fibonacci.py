"""Fibonacci words and Zimin types of their prefixes via Zeckendorf digits.

Conventions: ``F_{-1} = b``, ``F_0 = a``, ``F_n = F_{n-1} F_{n-2}`` and
``Phi_n = |F_n|`` (so ``Phi_{-1} = Phi_0 = 1``, ``Phi_1 = 2``, ``Phi_2 = 3``).
A Fibonacci representation is written most significant digit first, with the
last digit weighing ``Phi_0``: ``28 = Phi_6 + Phi_3 + Phi_1 = (1001010)``.

Integer queries work on unsigned 64-bit inputs and never build the word.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .exceptions import BudgetExceeded

__all__ = [
    "OpCount",
    "FibRep",
    "FibWordRef",
    "FibEmbedding",
    "fib_number",
    "fib_word",
    "fib_prefix",
    "zeckendorf",
    "from_fib",
    "psi",
    "zfib",
    "sb_fib",
    "zfib_array",
    "fib_embedding",
    "fib_ratio",
    "DEFAULT_BUDGET",
    "U64_MAX",
]

U64_MAX = 2**64 - 1
DEFAULT_BUDGET = 2**28
GOLDEN = (1 + math.sqrt(5)) / 2

_VALID_DIGITS = re.compile(r"1(0+1)*0*")


class OpCount:
    """Tally of elementary loop steps, for checking logarithmic cost."""

    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0

    def __repr__(self) -> str:
        return f"OpCount(ops={self.ops})"


def _check_u64(n: int, what: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n}")
    if n > U64_MAX:
        raise OverflowError(f"{what} = {n} does not fit in 64 unsigned bits")


def fib_number(k: int) -> int:
    """``Phi_k = |F_k|`` for ``k >= -1``."""
    if k < -1:
        raise ValueError(f"Fibonacci index must be >= -1, got {k}")
    a, b = 1, 1  # Phi_{-1}, Phi_0
    for _ in range(k + 1):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class FibRep:
    """Zeckendorf digits of `value`, most significant first."""

    digits: str
    value: int

    def __post_init__(self):
        if not _VALID_DIGITS.fullmatch(self.digits):
            raise ValueError(f"not a Fibonacci representation: {self.digits!r}")

    def __str__(self) -> str:
        return self.digits


@dataclass(frozen=True)
class FibWordRef:
    """Reference to the finite Fibonacci word ``F_index`` without building it."""

    index: int

    @property
    def length(self) -> int:
        return fib_number(self.index)

    def word(self, budget: int = DEFAULT_BUDGET) -> str:
        return fib_word(self.index, budget)

    def __str__(self) -> str:
        return f"F{self.index}"


def fib_word(k: int, budget: int = DEFAULT_BUDGET) -> str:
    if k < -1:
        raise ValueError(f"Fibonacci index must be >= -1, got {k}")
    if k == -1:
        return "b"
    if fib_number(k) > budget:
        raise BudgetExceeded(f"F_{k} has length {fib_number(k)} > budget {budget}")
    prev, cur = "b", "a"
    for _ in range(k):
        prev, cur = cur, cur + prev
    return cur


def fib_prefix(length: int, budget: int = DEFAULT_BUDGET) -> str:
    """``F_inf[1..length]``.

    >>> fib_prefix(8)
    'abaababa'
    """
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length > budget:
        raise BudgetExceeded(f"prefix length {length} exceeds budget {budget}")
    prev, cur = "b", "a"
    while len(cur) < length:
        prev, cur = cur, cur + prev
    return cur[:length]


def zeckendorf(n: int, counter: OpCount | None = None) -> FibRep:
    """Fibonacci representation of `n`, computed greedily from the top digit.

    Only two consecutive Fibonacci numbers are kept at any time: they are
    generated upwards until one exceeds `n`, then walked back down.

    >>> zeckendorf(28).digits
    '1001010'
    """
    _check_u64(n)
    ops = 0
    lo, hi = 1, 2  # Phi_0, Phi_1
    top = 0
    while hi <= n:
        lo, hi = hi, lo + hi
        top += 1
        ops += 1
    digits = []
    rest = n
    # lo == Phi_top, hi == Phi_{top+1}
    for _ in range(top + 1):
        if lo <= rest:
            digits.append("1")
            rest -= lo
        else:
            digits.append("0")
        lo, hi = hi - lo, lo
        ops += 1
    if counter is not None:
        counter.ops += ops
    return FibRep("".join(digits), n)


def from_fib(rep: FibRep | str) -> int:
    """Value of a Zeckendorf digit string; rejects adjacent 1s and leading 0s."""
    digits = rep.digits if isinstance(rep, FibRep) else rep
    if not _VALID_DIGITS.fullmatch(digits) or "11" in digits:
        raise ValueError(f"not a Fibonacci representation: {digits!r}")
    total = 0
    weight, nxt = 1, 2  # Phi_0, Phi_1
    for d in reversed(digits):
        if d == "1":
            total += weight
        weight, nxt = nxt, weight + nxt
    return total


def _digits_of(rep: FibRep | str | int) -> str:
    if isinstance(rep, FibRep):
        return rep.digits
    if isinstance(rep, int):
        return zeckendorf(rep).digits
    if not _VALID_DIGITS.fullmatch(rep) or "11" in rep:
        raise ValueError(f"not a Fibonacci representation: {rep!r}")
    return rep


def psi(rep: FibRep | str | int, counter: OpCount | None = None) -> int:
    """Number of blocks k in ``digits = 1 . x_1 ... x_{k-1} . z`` with
    ``x_j`` in {00, 001, 01} and z in {'', 0}.

    The parse is greedy and unique; full consumption is asserted.

    >>> psi("1001010")
    3
    """
    w = _digits_of(rep)
    pos, n, k = 1, len(w), 1
    ops = 0
    while pos < n:
        ops += 1
        if w.startswith("01", pos):
            pos += 2
        elif w.startswith("001", pos):
            pos += 3
        elif w.startswith("00", pos):
            pos += 2
        elif pos == n - 1 and w[pos] == "0":
            pos += 1
            continue
        else:
            raise AssertionError(f"unparsable Fibonacci representation {w!r}")
        k += 1
    assert pos == n
    if counter is not None:
        counter.ops += ops
    return k


def zfib(n: int, counter: OpCount | None = None) -> int:
    """Zimin type of ``F_inf[1..n]``, in O(log n) without building the word."""
    return psi(zeckendorf(n, counter), counter)


def sb_fib(n: int) -> int:
    """``|ShortBord(F_inf[1..n])|`` straight from the digits of n.

    Leading ``101``, ``1001`` or ``100`` (the last followed by nothing or a
    0) is replaced by a single ``1``.  ``F_inf[1..1]`` and ``F_inf[1..2]`` have
    no non-empty border, so both give 0.
    """
    w = zeckendorf(n).digits
    if n < 3:
        return 0
    if w.startswith("101"):
        alpha = w[3:]
    elif w.startswith("1001"):
        alpha = w[4:]
    else:
        assert w.startswith("100") and (len(w) == 3 or w[3] == "0")
        alpha = w[3:]
    return from_fib("1" + alpha)


def zfib_array(n: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """``ZFib[1..n]`` (entry j-1 holds ``ZFib[j]``) built from block operations.

    For ``Phi_k <= m < Phi_{k+1}`` the short border of ``F_inf[1..m]`` sits in
    one of three ranges, each a shifted copy of an earlier block:

    ========================  ==================  =====================
    m                         block size          copied from
    ========================  ==================  =====================
    Phi_k + j                 Phi_{k-3}           Phi_{k-2} + j
    Phi_k + Phi_{k-3} + j     Phi_{k-4}           Phi_{k-3} + j
    Phi_k + Phi_{k-2} + j     Phi_{k-3}           Phi_{k-2} + j
    ========================  ==================  =====================

    so every block is "copy, then add one".  The word-packed variant that
    runs in sublinear time is not implemented.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > budget:
        raise BudgetExceeded(f"array length {n} exceeds budget {budget}")
    phi = [1, 1]  # phi[i] = Phi_{i-1}
    while phi[-1] <= n or len(phi) < 6:
        phi.append(phi[-1] + phi[-2])

    def P(k: int) -> int:
        return phi[k + 1]

    size = phi[-1]
    z = np.zeros(size + 1, dtype=np.uint8)
    z[1:5] = (1, 1, 2, 2)
    k = 3
    while P(k) <= n:
        base = P(k)
        blocks = (
            (base, P(k - 3), P(k - 2)),
            (base + P(k - 3), P(k - 4), P(k - 3)),
            (base + P(k - 2), P(k - 3), P(k - 2)),
        )
        for dst, count, src in blocks:
            z[dst : dst + count] = z[src : src + count] + 1
        k += 1
    return z[1 : n + 1].copy()


@dataclass(frozen=True)
class FibEmbedding:
    """Largest Zimin rank embeddable in ``F_inf[1..n]`` and its witness.

    The witness maps each variable to a Fibonacci word reference; the
    image of ``Z_rank`` is ``F_{2(rank-1)}``, a prefix of ``F_inf[1..n]``.
    """

    n: int
    rank: int
    witness: dict[int, FibWordRef]

    def morphism(self, budget: int = DEFAULT_BUDGET) -> dict[int, str]:
        return {v: ref.word(budget) for v, ref in self.witness.items()}

    @property
    def image(self) -> FibWordRef:
        return FibWordRef(2 * (self.rank - 1))


def fib_embedding(n: int, counter: OpCount | None = None) -> FibEmbedding:
    """Rank k with ``Phi_{2(k-1)} <= n < Phi_{2k}`` and its morphism.

    ``x1 -> a``, ``x2 -> b`` and ``x_j -> F_{2j-5}`` for ``j >= 3``.
    """
    _check_u64(n)
    ops = 0
    lo, hi = 1, 2
    top = 0  # Phi_top <= n < Phi_{top+1}
    while hi <= n:
        lo, hi = hi, lo + hi
        top += 1
        ops += 1
    rank = top // 2 + 1
    witness = {1: FibWordRef(0)}
    for j in range(2, rank + 1):
        witness[j] = FibWordRef(2 * j - 5)
        ops += 1
    if counter is not None:
        counter.ops += ops
    return FibEmbedding(n, rank, witness)


def fib_ratio(n: int) -> float:
    """``zfib(n) / log_phi(n)``, where phi is the golden ratio."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return zfib(n) / (math.log(n) / math.log(GOLDEN))
