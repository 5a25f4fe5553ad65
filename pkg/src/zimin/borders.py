"""Border and short-border arrays, computed online or in one batch pass.

Positions are 1-based everywhere a caller can see them: ``B[j]`` is the
length of the longest border of ``w[1..j]`` and ``SB[j]`` the length of its
longest border shorter than ``j/2``.  A border is any word that is both a
proper prefix and a proper suffix.

Two code paths produce the same numbers:

* :class:`BorderTracker` consumes one symbol at a time (pure Python), so it
  can sit behind a stream.
* :func:`scan` runs the identical recurrence over a whole word inside a
  numba kernel; everything that works on complete words goes through it.
"""

from __future__ import annotations

from typing import Any, Hashable, Sequence

import numpy as np
from numba import njit

__all__ = [
    "BorderTracker",
    "new_tracker",
    "scan",
    "encode",
    "border_array",
    "short_border_array",
]


class BorderTracker:
    """Online border / short-border / Zimin-type state for a growing word.

    Attributes
    ----------
    i : int
        Number of symbols consumed so far.
    B : list of int
        ``B[0..i]``, ``B[0] == -1``.
    SB : list of int
        ``SB[0..i]``; ``SB[0]`` is an unused 0 so that ``SB[j]`` lines up
        with position ``j``.
    Ztype : list of int
        ``Ztype[0..i]``, ``Ztype[0] == 0``.
    t, s : int
        Border and short-border cursors (equal to ``B[i]`` and ``SB[i]``
        between pushes).
    increments, decrements : int
        Cursor moves.  A decrement is one ``t := B[t]`` or ``s := B[s]``
        step; over any run ``decrements <= increments <= 2 * i``.

    Not safe for concurrent mutation.
    """

    __slots__ = ("i", "B", "SB", "Ztype", "t", "s", "increments", "decrements", "_x")

    def __init__(self) -> None:
        self.i = 0
        self.B = [-1]
        self.SB = [0]
        self.Ztype = [0]
        self.t = 0
        self.s = 0
        self.increments = 0
        self.decrements = 0
        self._x: list[Hashable] = []

    def push(self, c: Hashable) -> tuple[int, int, int]:
        """Append symbol `c`; return ``(B[i], SB[i], Ztype[i])`` for the new i."""
        x = self._x
        B = self.B
        x.append(c)
        i = self.i = self.i + 1
        if i == 1:
            B.append(0)
            self.SB.append(0)
            self.Ztype.append(1)
            return 0, 0, 1

        t = self.t
        while t >= 0 and x[t] != c:
            t = B[t]
            self.decrements += 1
        t += 1
        B.append(t)

        # a candidate border s extends to s+1, which must stay below i/2
        s = self.s
        while s >= 0 and (2 * s + 2 >= i or x[s] != c):
            s = B[s]
            self.decrements += 1
        s += 1

        self.increments += 2
        self.t, self.s = t, s
        self.SB.append(s)
        z = self.Ztype[s] + 1
        self.Ztype.append(z)
        return t, s, z

    def extend(self, symbols) -> None:
        for c in symbols:
            self.push(c)

    @property
    def ztype(self) -> int:
        return self.Ztype[self.i]

    def __len__(self) -> int:
        return self.i

    def __repr__(self) -> str:
        return f"BorderTracker(i={self.i}, ztype={self.Ztype[self.i]})"


def new_tracker() -> BorderTracker:
    return BorderTracker()


def encode(w: Any) -> np.ndarray:
    """Map a word to a contiguous int32 array of symbol codes.

    Only equality between codes matters.  ``str`` is coded by code point,
    ``bytes`` by byte value, integer arrays are passed through, and any
    other sequence of hashables gets codes in order of first appearance.
    """
    if isinstance(w, str):
        return np.frombuffer(w.encode("utf-32-le"), dtype=np.uint32).astype(np.int32)
    if isinstance(w, (bytes, bytearray, memoryview)):
        return np.frombuffer(bytes(w), dtype=np.uint8).astype(np.int32)
    if isinstance(w, np.ndarray) and w.dtype.kind in "iu":
        return np.ascontiguousarray(w, dtype=np.int32)
    table: dict[Hashable, int] = {}
    return np.fromiter(
        (table.setdefault(c, len(table)) for c in w), dtype=np.int32, count=len(w)
    )


@njit(cache=True, nogil=True)
def _scan_kernel(x):
    n = x.shape[0]
    B = np.empty(n + 1, np.int32)
    SB = np.zeros(n + 1, np.int32)
    Z = np.zeros(n + 1, np.int32)
    B[0] = -1
    dec = 0
    if n == 0:
        return B, SB, Z, dec
    B[1] = 0
    Z[1] = 1
    t = 0
    s = 0
    for i in range(2, n + 1):
        c = x[i - 1]
        while t >= 0 and x[t] != c:
            t = B[t]
            dec += 1
        t += 1
        B[i] = t
        while s >= 0 and (2 * s + 2 >= i or x[s] != c):
            s = B[s]
            dec += 1
        s += 1
        SB[i] = s
        Z[i] = Z[s] + 1
    return B, SB, Z, dec


def scan(w: Any) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Batch pass over `w`.

    Returns ``(B, SB, Ztype, decrements)``; each array has length
    ``len(w) + 1`` and is indexed by prefix length (``SB[0]`` is 0).
    """
    x = w if isinstance(w, np.ndarray) and w.dtype == np.int32 else encode(w)
    B, SB, Z, dec = _scan_kernel(x)
    return B, SB, Z, int(dec)


def border_array(w: Sequence) -> np.ndarray:
    """``B[0..|w|]`` with ``B[0] = -1`` (the Morris-Pratt failure table).

    >>> border_array("aaaa").tolist()
    [-1, 0, 1, 2, 3]
    """
    return scan(w)[0]


def short_border_array(w: Sequence) -> np.ndarray:
    """``SB[1..|w|]`` as an array of length ``|w|`` (entry ``j-1`` is ``SB[j]``).

    >>> short_border_array("ab").tolist()
    [0, 0]
    """
    return scan(w)[1][1:]
