"""Zimin types of words, Zimin patterns and their morphic images.

The Zimin pattern of rank k is ``Z_1 = x1`` and ``Z_k = Z_{k-1} x_k Z_{k-1}``.
The Zimin type of a word is the largest k for which the word is the image of
``Z_k`` under a non-erasing morphism (0 for the empty word).  It obeys
``Ztype(w) = 1 + Ztype(ShortBord(w))`` for non-empty ``w``, which is how
everything here computes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Mapping, Sequence

import numpy as np

from .borders import scan

__all__ = [
    "ZiminPattern",
    "ztype",
    "ztype_prefixes",
    "zimin_word",
    "decompose",
    "apply_morphism",
    "max_sequence_value",
    "iterate_morphism",
    "short_border_chain",
]


@dataclass(frozen=True)
class ZiminPattern:
    """The rank-`rank` Zimin pattern over variables ``1..rank``."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"Zimin pattern rank must be >= 1, got {self.rank}")

    @cached_property
    def symbols(self) -> tuple[int, ...]:
        # x_j sits at every position p (1-based) whose 2-adic valuation is j-1
        return tuple(((p & -p).bit_length()) for p in range(1, 2**self.rank))

    def __len__(self) -> int:
        return 2**self.rank - 1

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, idx):
        return self.symbols[idx]

    def __str__(self) -> str:
        return "".join(f"x{v}" for v in self.symbols)


def zimin_word(k: int) -> ZiminPattern:
    """Rank-k Zimin pattern; ``str(zimin_word(3)) == 'x1x2x1x3x1x2x1'``."""
    return ZiminPattern(k)


def ztype(w: Sequence) -> int:
    """Zimin type of `w` in O(|w|).

    >>> ztype("adbadccccadbad")
    3
    """
    if len(w) == 0:
        return 0
    return int(scan(w)[2][-1])


def ztype_prefixes(w: Sequence) -> np.ndarray:
    """``Ztype[0..|w|]``: the Zimin type of every prefix, in one pass."""
    return scan(w)[2]


def short_border_chain(w: Sequence, depth: int | None = None) -> list[int]:
    """Lengths ``|w| = L0 > L1 > ...`` with ``L_{j+1} = SB[L_j]``, ending at 0.

    With `depth` the chain is cut after that many steps.
    """
    SB = scan(w)[1]
    chain = [len(w)]
    while chain[-1] > 0 and (depth is None or len(chain) <= depth):
        chain.append(int(SB[chain[-1]]))
    return chain


def decompose(w: Sequence, k: int) -> dict[int, Sequence]:
    """A morphism h with ``h(Z_k) = w``, read off the short-border chain.

    At each level the longest short border is used.  Variable ``x_k`` maps to
    the middle of `w` left by its short border, ``x_{k-1}`` to the middle of
    that border, and so on; ``x_1`` takes the whole border reached after
    ``k - 1`` steps.

    >>> decompose("adbadccccadbad", 3)
    {1: 'ad', 2: 'b', 3: 'cccc'}
    """
    if k < 1:
        raise ValueError(f"rank must be >= 1, got {k}")
    if len(w) == 0:
        raise ValueError("the empty word has Zimin type 0")
    chain = short_border_chain(w, depth=k)
    # chain[j] > 0 for j < k iff ztype(w) >= k
    if len(chain) <= k - 1 or chain[k - 1] == 0:
        raise ValueError(f"rank {k} exceeds the Zimin type of the word")
    h: dict[int, Sequence] = {}
    for level in range(k - 1):
        outer, inner = chain[level], chain[level + 1]
        h[k - level] = w[inner : outer - inner]
    h[1] = w[: chain[k - 1]]
    return dict(sorted(h.items()))


def apply_morphism(p: ZiminPattern | Sequence[Hashable], h: Mapping) -> Sequence:
    """Concatenate ``h[v]`` for the variables `v` of pattern `p`, in order."""
    try:
        images = [h[v] for v in p]
    except KeyError as exc:
        raise KeyError(f"morphism has no image for variable {exc.args[0]!r}") from None
    if not images:
        return ""
    if all(isinstance(im, str) for im in images):
        return "".join(images)
    out = images[0][:0]
    for im in images:
        out = out + im
    return out


def max_sequence_value(i: int) -> int:
    """Term i of ``1^2 2^4 3^8 ...``: the n with ``2^n - 1 <= i <= 2^(n+1) - 2``.

    This bounds the Zimin type of any word of length i, since ``|Z_n| = 2^n - 1``.
    """
    if i < 1:
        raise ValueError(f"position must be >= 1, got {i}")
    return (i + 1).bit_length() - 1


def iterate_morphism(rules: Mapping[str, str], seed: str, length: int) -> str:
    """Length-`length` prefix of the fixed point of `rules` starting at `seed`.

    >>> iterate_morphism({"a": "abaa", "b": "abab"}, "a", 8)
    'abaaabab'
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if any(len(img) == 0 for img in rules.values()):
        raise ValueError("erasing rule: every image must be non-empty")
    start = rules.get(seed)
    if start is None or len(start) < 2 or start[0] != seed:
        raise ValueError(f"rules are not prolongable on {seed!r}")
    word = seed
    while len(word) < length:
        # images of a prefix extend the prefix, so only the first
        # `length` letters are ever needed
        word = "".join(rules[c] for c in word[:length])
    return word[:length]
