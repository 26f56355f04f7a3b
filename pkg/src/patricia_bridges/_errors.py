from typing import ClassVar


class PatriciaBridgesError(ValueError):
    """Base class of every domain error raised by this package."""

    code: ClassVar[str] = "error"
    """Machine-readable identifier, stable across releases."""


class DepthCapExceeded(PatriciaBridgesError):
    """Two streams agreed on every bit up to the depth cap."""

    code = "depth-cap-exceeded"


class IncomparabilityViolated(PatriciaBridgesError):
    """A lexicographic comparison was asked for prefix-comparable words."""

    code = "incomparability-violated"


class EmptyInput(PatriciaBridgesError):
    code = "empty-input"


class MalformedTree(PatriciaBridgesError):
    """The vertex set is not a prefix-closed set of binary words."""

    code = "malformed-tree"


class NotRadixShaped(PatriciaBridgesError):
    """Some leaf of the tree has no sibling vertex."""

    code = "not-radix-shaped"


class NotFull(PatriciaBridgesError):
    """Some vertex of the tree has exactly one child."""

    code = "not-full"


class NotALeaf(PatriciaBridgesError):
    code = "not-a-leaf"


class TooLarge(PatriciaBridgesError):
    """An exhaustive operation was asked for more than its guard allows."""

    code = "too-large"


class BadLabelSet(PatriciaBridgesError):
    code = "bad-label-set"


class AxiomViolation(PatriciaBridgesError):
    """A candidate didendritic system fails one of its axioms."""

    code = "axiom-violation"

    def __init__(self, axiom: str, message: str) -> None:
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom


class SeedAxiomViolation(PatriciaBridgesError):
    """A left/right seed fails one of its axioms."""

    code = "seed-axiom-violation"

    def __init__(self, axiom: str, message: str) -> None:
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom


class EmptySubset(PatriciaBridgesError):
    code = "empty-subset"


class DegenerateSample(PatriciaBridgesError):
    """Two continuous samples coincided exactly."""

    code = "degenerate-sample"


class PropertyTViolated(PatriciaBridgesError):
    code = "property-t-violated"


class PropertyLRViolated(PatriciaBridgesError):
    code = "property-lr-violated"


class ZeroMassLeaf(PatriciaBridgesError):
    """A leaf's cylinder has probability zero under the source measure."""

    code = "zero-mass-leaf"


class WrongLeafCount(PatriciaBridgesError):
    code = "wrong-leaf-count"


class MeasureSpecError(PatriciaBridgesError):
    """A measure or chain specification string could not be parsed."""

    code = "bad-spec"


class NotDiffuse(PatriciaBridgesError):
    """A product coordinate has success probability outside (0, 1)."""

    code = "not-diffuse"
