r"""
Rooted ℝ-tree models that generate exchangeable didendritic systems.

A model samples i.i.d. points $\xi_i$ of a rooted tree together with uniform
marks $\vartheta_i$; two label pairs are equivalent when their points branch
at the same place, and the function ``W`` decides which label goes left.

"""

from abc import ABC, abstractmethod
from collections.abc import Hashable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ._core._measures import FairCoin, SourceMeasure, parse_measure
from ._core._words import DEPTH_CAP, Word, WordStream, meet
from ._didendritic import Turn
from ._errors import MeasureSpecError


class RTreeModel[P, M: Hashable](ABC):
    """
    A rooted tree with a sampling measure and a left/right rule.

    ``P`` is the type of sampled points, ``M`` the type of branch points
    returned by :meth:`meet`.

    """

    name: str

    @abstractmethod
    def sample_point(self, rng: np.random.Generator, /) -> tuple[P, float]:
        """A point and its uniform mark."""

    @abstractmethod
    def meet(self, x: P, y: P, /) -> M:
        """The point where the root paths of ``x`` and ``y`` separate."""

    @abstractmethod
    def precedes(self, x: M, y: M | P, /) -> bool:
        """Whether ``x`` lies strictly between the root and ``y``."""

    @abstractmethod
    def W(self, x: P, s: float, y: P, t: float, /) -> Turn:  # noqa: N802
        """``↷`` when ``x`` lies on the left below the meet of ``x`` and ``y``."""

    def reaches(self, m: M, x: P, /) -> bool:
        """Whether the branch point ``m`` lies on the root path of ``x``."""
        return m == x or self.precedes(m, x)


@dataclass(frozen=True)
class IntervalZigZag(RTreeModel[float, float]):
    r"""
    The segment $[0, \frac{1}{2}]$ rooted at 0 with the uniform measure.

    Every pair branches at its smaller point, so the generated trees are
    zig-zag caterpillars; the mark of the smaller point picks the side.

    """

    name: str = "interval"

    def sample_point(self, rng: np.random.Generator, /) -> tuple[float, float]:
        return float(rng.random()) / 2, float(rng.random())

    def meet(self, x: float, y: float, /) -> float:
        return min(x, y)

    def precedes(self, x: float, y: float, /) -> bool:
        return x < y

    def W(self, x: float, s: float, y: float, t: float, /) -> Turn:  # noqa: N802
        if x < y:
            return Turn.RIGHT if s < 0.5 else Turn.LEFT
        if y < x:
            return Turn.RIGHT if t > 0.5 else Turn.LEFT
        return Turn.LEFT


@dataclass(frozen=True)
class BinaryCompletion(RTreeModel[WordStream, Word]):
    """
    The complete binary tree with its infinite ends, sampled from a source measure.

    Branch points are finite words and the left/right rule reads the first
    bit where the two ends differ; the marks are not used.

    """

    measure: SourceMeasure = field(default_factory=FairCoin)
    depth_cap: int = DEPTH_CAP

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"binary:{self.measure.spec}"

    def sample_point(self, rng: np.random.Generator, /) -> tuple[WordStream, float]:
        stream = self.measure.sample(int(rng.integers(2**63)))
        return stream, float(rng.random())

    def meet(self, x: WordStream, y: WordStream, /) -> Word:
        return meet(x, y, depth_cap=self.depth_cap)

    def precedes(self, x: Word, y: Word | WordStream, /) -> bool:
        if isinstance(y, WordStream):
            return y.prefix(len(x)) == x
        return len(x) < len(y) and y.startswith(x)

    def W(  # noqa: N802
        self, x: WordStream, s: float, y: WordStream, t: float, /
    ) -> Turn:
        k = len(self.meet(x, y))
        return Turn.RIGHT if x.bit(k) == "0" else Turn.LEFT


def parse_model(text: str, /, *, depth_cap: int = DEPTH_CAP) -> RTreeModel[Any, Any]:
    """
    Parse ``interval`` or ``binary[:<measure>]``.

    Example
    -------
    >>> parse_model("binary:harmonic").name
    'binary:harmonic'

    """
    kind, sep, rest = text.strip().partition(":")
    if kind == "interval" and not sep:
        return IntervalZigZag()
    if kind == "binary":
        return BinaryCompletion(parse_measure(rest) if sep else FairCoin(), depth_cap)
    raise MeasureSpecError(f"Unknown model {text=}; expected interval or binary")
