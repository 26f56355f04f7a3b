from dataclasses import dataclass
from typing import Any

from ._bridges import finite_bridge, rtree_labeled_bridge, zigzag_bridge
from ._core._measures import FairCoin, SourceMeasure, parse_measure
from ._core._serialize import TreeLike, from_newick, to_newick
from ._core._trees import FullBinaryTree, LabeledTree
from ._core._words import DEPTH_CAP
from ._errors import EmptyInput, MeasureSpecError
from ._kernels import patricia_chain, radix_trajectory, remy_chain
from ._models import RTreeModel, parse_model


@dataclass(frozen=True)
class ChainSpec:
    """A parsed chain specification; see :func:`parse_chain`."""

    kind: str
    """One of patricia, radix, remy, zigzag-bridge, bridge-from and rtree."""
    text: str
    measure: SourceMeasure | None = None
    endpoint: FullBinaryTree | None = None
    model: RTreeModel[Any, Any] | None = None
    depth_cap: int = DEPTH_CAP

    @property
    def record_name(self) -> str:
        """
        The ``chain`` field of trajectory records.

        Bridges are named ``bridge:<name>``.

        Example
        -------
        >>> parse_chain("patricia").record_name
        'patricia:fair'
        >>> parse_chain("zigzag-bridge").record_name
        'bridge:zigzag'

        """
        match self.kind:
            case "patricia" | "radix" if self.measure is not None:
                return f"{self.kind}:{self.measure.spec}"
            case "zigzag-bridge":
                return "bridge:zigzag"
            case "bridge-from" if self.endpoint is not None:
                return f"bridge:{to_newick(self.endpoint)}"
            case "rtree":
                return f"bridge:{self.text}"
        return self.kind


def parse_chain(
    text: str,
    /,
    *,
    measure: SourceMeasure | None = None,
    depth_cap: int = DEPTH_CAP,
) -> ChainSpec:
    """
    Parse a chain specification.

    Parameters
    ----------
    text : str
        ``patricia[:<measure>]``, ``radix[:<measure>]``, ``remy``,
        ``zigzag-bridge``, ``bridge-from:<newick>`` or ``rtree:<model>``
        with ``<model>`` one of ``interval`` and ``binary[:<measure>]``.
    measure : SourceMeasure | None, optional
        The measure of ``patricia`` and ``radix`` when the text names none,
        by default the fair coin.
    depth_cap : int, optional
        Passed on to the radix sort and the binary model.

    Returns
    -------
    ChainSpec
        The parsed specification.

    Raises
    ------
    MeasureSpecError
        If the text is not a chain specification.

    Example
    -------
    >>> parse_chain("patricia:bernoulli:1/3").measure.spec
    'bernoulli:1/3'
    >>> parse_chain("bridge-from:((*,*),*)").endpoint.leaves
    ('00', '01', '1')

    """
    text = text.strip()
    kind, sep, rest = text.partition(":")
    if kind in ("patricia", "radix"):
        nu = parse_measure(rest) if sep else (measure or FairCoin())
        return ChainSpec(kind, text, measure=nu, depth_cap=depth_cap)
    if kind in ("remy", "zigzag-bridge") and not sep:
        return ChainSpec(kind, text, depth_cap=depth_cap)
    if kind == "bridge-from" and sep:
        endpoint = from_newick(rest)
        if isinstance(endpoint, LabeledTree):
            endpoint = endpoint.strip()
        return ChainSpec("bridge-from", text, endpoint=endpoint, depth_cap=depth_cap)
    if kind == "rtree" and sep:
        model = parse_model(rest, depth_cap=depth_cap)
        return ChainSpec("rtree", text, model=model, depth_cap=depth_cap)
    raise MeasureSpecError(f"Unknown chain specification {text=}")


def simulate(spec: ChainSpec, n_max: int, seed: int, /) -> list[TreeLike]:
    """
    One trajectory of the chain, ``t_1, ..., t_{n_max}``.

    ``bridge-from`` trajectories always end at their endpoint and ignore
    ``n_max``; ``rtree`` trajectories are labeled.

    Example
    -------
    >>> [t.n_leaves for t in simulate(parse_chain("remy"), 3, 0)]
    [1, 2, 3]

    """
    if n_max < 1:
        raise EmptyInput(f"{n_max=} must be at least 1")
    match spec.kind:
        case "patricia" | "radix" if spec.measure is not None:
            run = patricia_chain if spec.kind == "patricia" else radix_trajectory
            states = run(spec.measure, n_max, seed, depth_cap=spec.depth_cap)
            return [s.tree for s in states]
        case "remy":
            return [s.tree for s in remy_chain(n_max, seed)]
        case "zigzag-bridge":
            return list(zigzag_bridge(n_max, seed))
        case "bridge-from" if spec.endpoint is not None:
            return list(finite_bridge(spec.endpoint, seed))
        case "rtree" if spec.model is not None:
            return list(rtree_labeled_bridge(spec.model, n_max, seed))
    raise MeasureSpecError(f"Incomplete chain specification {spec.text=}")
