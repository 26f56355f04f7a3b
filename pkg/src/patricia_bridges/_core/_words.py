from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING

import numpy as np

from .._errors import DepthCapExceeded, IncomparabilityViolated, MalformedTree

if TYPE_CHECKING:
    from ._measures import SourceMeasure

type Word = str
"""A finite binary word, written over the characters ``"0"`` and ``"1"``."""

DEPTH_CAP = 4096
"""Default number of bits pulled from streams before giving up."""

_BLOCK = 64


class PrefixRelation(Enum):
    """Outcome of comparing two words under the strict-prefix order."""

    LT = "LT"
    """The first word is a strict prefix of the second."""
    GT = "GT"
    """The second word is a strict prefix of the first."""
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


def parse_word(text: str, /) -> Word:
    """
    Parse a word from its CLI spelling.

    Parameters
    ----------
    text : str
        A string over ``{0, 1}``; ``"e"`` denotes the empty word.

    Returns
    -------
    Word
        The word.

    Example
    -------
    >>> parse_word("e")
    ''
    >>> parse_word("0110")
    '0110'

    """
    if text == "e":
        return ""
    if text.strip("01"):
        raise MalformedTree(f"Not a binary word: {text=}")
    return text


def shortlex_key(w: Word, /) -> tuple[int, Word]:
    """Sort key of the shortlex order (length first, then lexicographic)."""
    return (len(w), w)


def sibling(v: Word, /) -> Word:
    """
    The word with the last bit flipped.

    Example
    -------
    >>> sibling("010")
    '011'

    """
    if not v:
        raise MalformedTree("The empty word has no sibling.")
    return v[:-1] + ("1" if v[-1] == "0" else "0")


def prefix_rel(u: Word, v: Word, /) -> PrefixRelation:
    """
    Compare two words under the strict-prefix order.

    Parameters
    ----------
    u : Word
        The first word.
    v : Word
        The second word.

    Returns
    -------
    PrefixRelation
        ``LT`` iff u is a strict prefix of v, ``GT`` iff v is a strict
        prefix of u, ``EQ`` iff they are identical.

    Example
    -------
    >>> prefix_rel("", "01").name
    'LT'
    >>> prefix_rel("00", "01").name
    'INCOMPARABLE'

    """
    if u == v:
        return PrefixRelation.EQ
    if v.startswith(u):
        return PrefixRelation.LT
    if u.startswith(v):
        return PrefixRelation.GT
    return PrefixRelation.INCOMPARABLE


def lex_compare(u: Word, v: Word, /) -> int:
    """
    Lexicographic comparison of prefix-incomparable words.

    Parameters
    ----------
    u : Word
        The first word.
    v : Word
        The second word.

    Returns
    -------
    int
        -1, 0 or 1, usable with :func:`functools.cmp_to_key`.

    Raises
    ------
    IncomparabilityViolated
        If one word is a strict prefix of the other.

    Example
    -------
    >>> lex_compare("000", "001"), lex_compare("01", "1"), lex_compare("1", "1")
    (-1, -1, 0)

    """
    rel = prefix_rel(u, v)
    if rel is PrefixRelation.EQ:
        return 0
    if rel is not PrefixRelation.INCOMPARABLE:
        raise IncomparabilityViolated(
            f"Lexicographic order is only defined on incomparable words: {u=}, {v=}"
        )
    return -1 if u < v else 1


class WordStream:
    """
    An infinite binary word whose bits are produced on demand.

    The first ``len(head)`` bits are the given head; every later bit ``k``
    (0-based) is drawn from coordinate ``k + 1`` of the measure using a
    PCG64 generator seeded with ``seed``. Bits are cached, so repeated reads
    agree, and :meth:`clone` restarts from the seed with the same result.

    """

    __slots__ = ("_cache", "_rng", "head", "measure", "seed")

    def __init__(self, measure: SourceMeasure, seed: int, *, head: Word = "") -> None:
        self.measure = measure
        self.seed = seed
        self.head = head
        self._cache = head
        self._rng: np.random.Generator | None = None

    def _extend(self, k: int) -> None:
        if self._rng is None:
            self._rng = np.random.default_rng(self.seed)
        while len(self._cache) <= k:
            start = len(self._cache)
            probs = self.measure.prob_one_array(start + 1, start + 1 + _BLOCK)
            draws = self._rng.random(_BLOCK) < probs
            self._cache += "".join("1" if b else "0" for b in draws)

    def bit(self, k: int, /) -> str:
        """The k-th bit (0-based)."""
        if k >= len(self._cache):
            self._extend(k)
        return self._cache[k]

    def prefix(self, k: int, /) -> Word:
        """The first k bits."""
        if k > len(self._cache):
            self._extend(k - 1)
        return self._cache[:k]

    def clone(self) -> WordStream:
        """A fresh stream restarting from the same seed and head."""
        return WordStream(self.measure, self.seed, head=self.head)

    def __repr__(self) -> str:
        return f"WordStream({self._cache[:16]}..., seed={self.seed})"


def meet(
    u: Word | WordStream, v: Word | WordStream, /, *, depth_cap: int = DEPTH_CAP
) -> Word:
    """
    The longest common prefix of two finite or infinite words.

    Parameters
    ----------
    u : Word | WordStream
        The first word.
    v : Word | WordStream
        The second word.
    depth_cap : int, optional
        The maximum number of bits pulled from streams, by default 4096.

    Returns
    -------
    Word
        The meet ``u ∧ v``.

    Raises
    ------
    DepthCapExceeded
        If two streams agree on their first ``depth_cap`` bits.

    Example
    -------
    >>> meet("010", "011")
    '01'
    >>> meet("0110", "0110")
    '0110'

    """
    if depth_cap < 0:
        raise ValueError(f"depth_cap must be non-negative, got {depth_cap=}")
    if isinstance(u, str) and isinstance(v, str):
        k = 0
        for a, b in zip(u, v, strict=False):
            if a != b:
                break
            k += 1
        return u[:k]
    limit = depth_cap
    for w in (u, v):
        if isinstance(w, str):
            limit = min(limit, len(w))
    k = 0
    while k < limit:
        a = u[k] if isinstance(u, str) else u.bit(k)
        b = v[k] if isinstance(v, str) else v.bit(k)
        if a != b:
            break
        k += 1
    else:
        if isinstance(u, WordStream) and isinstance(v, WordStream):
            raise DepthCapExceeded(
                f"Streams agree on their first {depth_cap=} bits: {u!r}, {v!r}"
            )
    return u[:k] if isinstance(u, str) else u.prefix(k)
