from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.typing import NDArray

from .._errors import MeasureSpecError, NotDiffuse, ZeroMassLeaf
from ._words import Word, WordStream, parse_word

type Probability = Fraction | float


class SourceMeasure(ABC):
    r"""
    A product probability measure on the infinite binary words.

    Every measure of this family is determined by its coordinate
    success probabilities $p_j = \nu\{z : z_j = 1\}$, $j \ge 1$, so

    $$
    \nu(\tau(y)) = \prod_{j=1}^{|y|} p_j^{y_j} (1 - p_j)^{1 - y_j}.
    $$

    """

    @abstractmethod
    def prob_one(self, j: int, /) -> Probability:
        """Probability that coordinate ``j`` (1-based) equals 1."""

    @property
    @abstractmethod
    def spec(self) -> str:
        """The measure written in the CLI mini-language."""

    def prob_one_array(self, start: int, stop: int, /) -> NDArray[np.float64]:
        """Coordinate probabilities for ``start <= j < stop`` as floats."""
        return np.asarray(
            [float(self.prob_one(j)) for j in range(start, stop)], dtype=np.float64
        )

    def cylinder_prob(self, y: Word, /) -> Probability:
        """
        The probability of the set of infinite extensions of ``y``.

        Exact when every coordinate probability is a ``Fraction``.

        Example
        -------
        >>> from patricia_bridges import FairCoin
        >>> FairCoin().cylinder_prob("011")
        Fraction(1, 8)

        """
        result: Probability = Fraction(1)
        for j, b in enumerate(y, start=1):
            p = self.prob_one(j)
            result *= p if b == "1" else 1 - p
        return result

    def sample(self, seed: int, /) -> WordStream:
        """An unconditioned stream."""
        return WordStream(self, seed)

    def conditional_sample(self, y: Word, seed: int, /) -> WordStream:
        """
        A stream distributed as the measure conditioned on starting with ``y``.

        Raises
        ------
        ZeroMassLeaf
            If the cylinder of ``y`` has probability zero.

        """
        if self.cylinder_prob(y) == 0:
            raise ZeroMassLeaf(f"Cannot condition {self.spec} on {y=}")
        return WordStream(self, seed, head=y)


@dataclass(frozen=True)
class FairCoin(SourceMeasure):
    """The fair coin-tossing measure, $p_j \\equiv 1/2$."""

    def prob_one(self, j: int, /) -> Probability:
        return Fraction(1, 2)

    def prob_one_array(self, start: int, stop: int, /) -> NDArray[np.float64]:
        return np.full(stop - start, 0.5)

    @property
    def spec(self) -> str:
        return "fair"


@dataclass(frozen=True)
class ConstantRule:
    p: Probability

    def __call__(self, j: int) -> Probability:
        return self.p

    def __str__(self) -> str:
        return f"bernoulli:{self.p}"


@dataclass(frozen=True)
class HarmonicRule:
    r"""$p_j = 1 / (j + 1)$."""

    def __call__(self, j: int) -> Probability:
        return Fraction(1, j + 1)

    def __str__(self) -> str:
        return "harmonic"


@dataclass(frozen=True)
class ProductBernoulli(SourceMeasure):
    """
    Independent coordinates with success probabilities ``rule(j)``.

    ``rule`` must be picklable so that trials can run in worker processes.

    """

    rule: ConstantRule | HarmonicRule

    @classmethod
    def constant(cls, p: Probability) -> ProductBernoulli:
        """Every coordinate is a Bernoulli(p) variable."""
        if not 0 < p < 1:
            raise NotDiffuse(f"Success probability must lie in (0, 1), got {p=}")
        return cls(ConstantRule(p))

    @classmethod
    def harmonic(cls) -> ProductBernoulli:
        """Coordinate ``j`` is a Bernoulli(1/(j+1)) variable."""
        return cls(HarmonicRule())

    def prob_one(self, j: int, /) -> Probability:
        p = self.rule(j)
        if not 0 < p < 1:
            raise NotDiffuse(f"Coordinate {j=} has success probability {p=}")
        return p

    def prob_one_array(self, start: int, stop: int, /) -> NDArray[np.float64]:
        if isinstance(self.rule, HarmonicRule):
            return 1 / (np.arange(start, stop, dtype=np.float64) + 1)
        return np.full(stop - start, float(self.rule.p))

    @property
    def spec(self) -> str:
        return str(self.rule)


@dataclass(frozen=True)
class Prefixed(SourceMeasure):
    """The words ``prefix + z`` with ``z`` drawn from ``inner``."""

    prefix: Word
    inner: SourceMeasure

    def prob_one(self, j: int, /) -> Probability:
        if j <= len(self.prefix):
            return Fraction(int(self.prefix[j - 1]))
        return self.inner.prob_one(j - len(self.prefix))

    @property
    def spec(self) -> str:
        return f"prefix:{self.prefix or 'e'},{self.inner.spec}"


def parse_measure(text: str, /) -> SourceMeasure:
    """
    Parse the measure mini-language.

    Parameters
    ----------
    text : str
        One of ``fair``, ``bernoulli:<p>``, ``harmonic`` or
        ``prefix:<bits>,<inner>``. ``p`` is read as an exact fraction.

    Returns
    -------
    SourceMeasure
        The measure.

    Raises
    ------
    MeasureSpecError
        If the text is not in the language.

    Example
    -------
    >>> parse_measure("prefix:01,bernoulli:0.25").spec
    'prefix:01,bernoulli:1/4'

    """
    kind, _, rest = text.strip().partition(":")
    try:
        if kind == "fair" and not rest:
            return FairCoin()
        if kind == "harmonic" and not rest:
            return ProductBernoulli.harmonic()
        if kind == "bernoulli":
            return ProductBernoulli.constant(Fraction(rest))
        if kind == "prefix":
            bits, sep, inner = rest.partition(",")
            if not sep:
                raise MeasureSpecError(f"prefix needs '<bits>,<inner>': {text=}")
            return Prefixed(parse_word(bits), parse_measure(inner))
    except (ValueError, ZeroDivisionError) as e:
        if isinstance(e, MeasureSpecError):
            raise
        e.add_note(f"while parsing measure {text=}")
        raise MeasureSpecError(f"Invalid measure specification: {text=}") from e
    raise MeasureSpecError(f"Unknown measure specification: {text=}")
