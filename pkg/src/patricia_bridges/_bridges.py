import bisect
from collections.abc import Iterator, Sequence
from itertools import combinations, permutations
from typing import Any

from ._core._random import make_rng
from ._core._trees import FullBinaryTree, LabeledTree, uniform_labeling
from ._core._words import Word
from ._didendritic import (
    FiniteDDS,
    Turn,
    dds_to_tree,
    left_right_extend,
    seed_from_meets,
)
from ._errors import (
    DegenerateSample,
    EmptyInput,
    PropertyLRViolated,
    PropertyTViolated,
)
from ._kernels import backward_sample, labeled_backward_step
from ._models import RTreeModel


def finite_bridge(endpoint: FullBinaryTree, seed: int, /) -> list[FullBinaryTree]:
    """
    A trajectory ``t_1, ..., t_m`` of the chain conditioned on ``t_m = endpoint``.

    Simulated backwards from the endpoint with :func:`backward_sample`.

    Example
    -------
    >>> from patricia_bridges import CHERRY
    >>> [t.leaves for t in finite_bridge(CHERRY, 0)]
    [('',), ('0', '1')]

    """
    rng = make_rng(seed)
    path = [endpoint]
    while path[-1].n_leaves > 1:
        path.append(backward_sample(path[-1], rng))
    return path[::-1]


def labeled_bridge(endpoint: FullBinaryTree, seed: int, /) -> list[LabeledTree]:
    """
    A labeled finite bridge.

    The endpoint gets a uniform labeling by 1..m and every earlier step is
    the deterministic :func:`labeled_backward_step`; the unlabeled shapes
    have the law of :func:`finite_bridge`.

    """
    path = [uniform_labeling(endpoint, make_rng(seed))]
    while path[-1].tree.n_leaves > 1:
        path.append(labeled_backward_step(path[-1]))
    return path[::-1]


def caterpillar(turns: Word, /) -> FullBinaryTree:
    """
    The full tree whose internal vertices are the strict prefixes of ``turns``.

    Example
    -------
    >>> caterpillar("01").leaves
    ('00', '01', '1')

    """
    vertices = {""}
    for j in range(1, len(turns) + 1):
        vertices.add(turns[:j])
        vertices.add(turns[: j - 1] + ("1" if turns[j - 1] == "0" else "0"))
    return FullBinaryTree._unchecked(vertices)


def zigzag_spines(n_max: int, seed: int, /) -> Iterator[Word]:
    """
    The spines of :func:`zigzag_bridge`, one word per step.

    The spine at step ``n`` has length ``n - 1``; its caterpillar is the
    tree of the bridge at that step.

    """
    if n_max < 1:
        raise EmptyInput(f"{n_max=} must be at least 1")
    rng = make_rng(seed)
    ordered: list[tuple[float, str]] = []
    yield ""
    for _ in range(2, n_max + 1):
        y = float(rng.random())
        eta = "1" if rng.random() < 0.5 else "0"
        k = bisect.bisect_left(ordered, (y, ""))
        if k < len(ordered) and ordered[k][0] == y:
            raise DegenerateSample(f"Tied uniforms in zigzag_bridge({seed=})")
        ordered.insert(k, (y, eta))
        yield "".join(e for _, e in ordered)


def zigzag_bridge(n_max: int, seed: int, /) -> list[FullBinaryTree]:
    """
    The zig-zag bridge, built pathwise.

    Inputs ``(Y_k, η_k)``, ``k >= 2``, are i.i.d. uniform times fair bits.
    At step ``n`` the bits of ``Y_2, ..., Y_n`` read in increasing order of
    the ``Y``'s spell the spine of a caterpillar with ``n`` leaves.

    Raises
    ------
    DegenerateSample
        If two ``Y``'s coincide.

    Example
    -------
    >>> [len(t.leaves) for t in zigzag_bridge(4, 0)]
    [1, 2, 3, 4]

    """
    return [caterpillar(s) for s in zigzag_spines(n_max, seed)]


def _draw_points(
    model: RTreeModel[Any, Any], n: int, seed: int
) -> list[tuple[Any, float]]:
    rng = make_rng(seed)
    return [model.sample_point(rng) for _ in range(n)]


def check_model_sample(
    model: RTreeModel[Any, Any], points: Sequence[tuple[Any, float]], /
) -> None:
    """
    Check the triple and antisymmetry properties on a drawn sample.

    Raises
    ------
    DegenerateSample
        If two points coincide.
    PropertyTViolated
        If some triple of points does not branch in exactly one pattern.
    PropertyLRViolated
        If ``W`` is not antisymmetric on some pair.

    """
    for (x, _), (y, _) in combinations(points, 2):
        if x is y or x == y:
            raise DegenerateSample(f"Model {model.name} drew a repeated point")
    for a, b, c in combinations(range(len(points)), 3):
        x, y, z = points[a][0], points[b][0], points[c][0]
        mxy, mxz, myz = model.meet(x, y), model.meet(x, z), model.meet(y, z)
        holds = [
            mxy == mxz and model.precedes(mxy, myz),
            mxy == myz and model.precedes(mxy, mxz),
            mxz == myz and model.precedes(mxz, mxy),
        ]
        if sum(holds) != 1:
            raise PropertyTViolated(
                f"Model {model.name}: {sum(holds)} branching patterns for {(a, b, c)}"
            )
    for (x, s), (y, t) in permutations(points, 2):
        if model.W(x, s, y, t) == model.W(y, t, x, s):
            raise PropertyLRViolated(f"Model {model.name}: W is not antisymmetric")


def _dds_from_points(
    model: RTreeModel[Any, Any], points: Sequence[tuple[Any, float]]
) -> FiniteDDS:
    def _point(i: int) -> Any:
        return points[i - 1][0]

    def _w(i: int, j: int) -> Turn:
        (x, s), (y, t) = points[i - 1], points[j - 1]
        return model.W(x, s, y, t)

    return left_right_extend(
        seed_from_meets(
            range(1, len(points) + 1),
            meet_of=lambda i, j: model.meet(_point(i), _point(j)),
            precedes=model.precedes,
            reaches=lambda m, k: model.reaches(m, _point(k)),
            w=_w,
        )
    )


def rtree_dds(model: RTreeModel[Any, Any], n: int, seed: int, /) -> FiniteDDS:
    """
    The random system on 1..n generated by ``model``.

    The i-th point does not depend on ``n``, so restricting the system for
    ``n + 1`` to 1..n gives the system for ``n``.

    """
    if n < 1:
        raise EmptyInput(f"{n=} must be at least 1")
    points = _draw_points(model, n, seed)
    check_model_sample(model, points)
    return _dds_from_points(model, points)


def rtree_labeled_bridge(
    model: RTreeModel[Any, Any], n_max: int, seed: int, /
) -> list[LabeledTree]:
    """The labeled trees of :func:`rtree_bridge`."""
    if n_max < 1:
        raise EmptyInput(f"{n_max=} must be at least 1")
    points = _draw_points(model, n_max, seed)
    check_model_sample(model, points)
    return [
        dds_to_tree(_dds_from_points(model, points[:n])) for n in range(1, n_max + 1)
    ]


def rtree_bridge(
    model: RTreeModel[Any, Any], n_max: int, seed: int, /
) -> list[FullBinaryTree]:
    """
    The infinite bridge generated by an ℝ-tree model.

    Points are drawn once; step ``n`` is the unlabeled tree of the system on
    the first ``n`` points.

    Example
    -------
    >>> from patricia_bridges import IntervalZigZag
    >>> [t.n_leaves for t in rtree_bridge(IntervalZigZag(), 3, 0)]
    [1, 2, 3]

    """
    return [lt.strip() for lt in rtree_labeled_bridge(model, n_max, seed)]
