r"""
Forward dynamics of the radix, PATRICIA and Rémy chains and their backward operators.

All three chains share the backward transition of the PATRICIA chain:
from a full tree with $n + 1$ leaves, delete a uniformly chosen leaf together
with its sibling and close the gap.

"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from ._core._measures import SourceMeasure
from ._core._random import make_rng, spawn_seeds
from ._core._trees import (
    TRIVIAL,
    BinaryTree,
    FullBinaryTree,
    LabeledTree,
    is_radix_shaped,
    patricia_contract,
)
from ._core._words import DEPTH_CAP, Word, WordStream, sibling
from ._errors import (
    BadLabelSet,
    DepthCapExceeded,
    EmptyInput,
    NotALeaf,
    NotRadixShaped,
)


@dataclass(frozen=True)
class ChainState:
    """One step of a tree-valued chain."""

    tree: BinaryTree
    n: int
    """The step index, equal to the leaf count."""
    leaf_sources: Mapping[Word, WordStream] | None = field(default=None, compare=False)
    """For radix chains, the input stream that ended in each leaf."""


def _shortlex_leaves(t: BinaryTree) -> list[Word]:
    return [v for v in t.sorted_vertices if t.is_leaf(v)]


def _check_steppable(t: BinaryTree, v: Word) -> None:
    if t.vertices == {""}:
        raise EmptyInput("The trivial tree has no predecessor")
    if not t.is_leaf(v):
        raise NotALeaf(f"{v=} is not a leaf of {t!r}")


def kappa(t: BinaryTree, v: Word, /) -> BinaryTree:
    """
    Remove the input that ended in leaf ``v`` from a radix sort tree.

    Parameters
    ----------
    t : BinaryTree
        A radix-shaped tree with at least two leaves.
    v : Word
        A leaf of ``t``.

    Returns
    -------
    BinaryTree
        The radix sort tree of the remaining inputs.

    Raises
    ------
    NotALeaf
        If ``v`` is not a leaf.
    NotRadixShaped
        If ``t`` is not radix-shaped.

    Example
    -------
    >>> from patricia_bridges import span_tree
    >>> kappa(span_tree(["000", "001", "1"]), "001").leaves
    ('0', '1')
    >>> kappa(span_tree(["00", "01", "1"]), "1").leaves
    ('00', '01')

    """
    if not is_radix_shaped(t):
        raise NotRadixShaped(f"{t!r} is not radix-shaped")
    _check_steppable(t, v)
    s = sibling(v)
    if not t.is_leaf(s):
        return BinaryTree._unchecked(t.vertices - {v})
    m = len(v)
    ell = next(
        (
            k
            for k in range(m - 1, 0, -1)
            if v[:k] in t.vertices and sibling(v[:k]) in t.vertices
        ),
        0,
    )
    removed = {v, s} | {v[:p] for p in range(ell + 1, m)}
    return BinaryTree._unchecked(t.vertices - removed)


def kappa_bar(t: BinaryTree, v: Word, /) -> FullBinaryTree:
    r"""
    Delete leaf ``v`` and its sibling from a full tree and close the gap.

    With $v = v_1 \ldots v_m$, every strict descendant of $v_1 \ldots v_{m-1}$
    is removed and every vertex that had the sibling of $v$ as a prefix is
    re-inserted with bit $m$ deleted.

    Parameters
    ----------
    t : BinaryTree
        A full tree with at least two leaves.
    v : Word
        A leaf of ``t``.

    Returns
    -------
    FullBinaryTree
        A full tree with one leaf fewer.

    Raises
    ------
    NotALeaf
        If ``v`` is not a leaf.
    NotFull
        If ``t`` is not full.

    Example
    -------
    >>> from patricia_bridges import FullBinaryTree
    >>> t = FullBinaryTree.from_words(["", "0", "1", "00", "01", "000", "001"])
    >>> kappa_bar(t, "000").leaves
    ('00', '01', '1')
    >>> kappa_bar(t, "1").leaves
    ('00', '01', '1')

    """
    if not isinstance(t, FullBinaryTree):
        t = FullBinaryTree(t.vertices)
    _check_steppable(t, v)
    parent = v[:-1]
    s = sibling(v)
    kept = {w for w in t.vertices if len(w) <= len(parent) or not w.startswith(parent)}
    moved = {parent + w[len(s) :] for w in t.vertices if w.startswith(s)}
    return FullBinaryTree._unchecked(kept | moved)


def backward_sample(t: BinaryTree, rng: np.random.Generator, /) -> FullBinaryTree:
    """
    One backward step: ``kappa_bar`` at a uniformly chosen leaf.

    The leaf is picked by index into the shortlex order of the leaves.

    """
    leaves = _shortlex_leaves(t)
    return kappa_bar(t, leaves[int(rng.integers(len(leaves)))])


def radix_backward_sample(t: BinaryTree, rng: np.random.Generator, /) -> BinaryTree:
    """One backward step of the radix chain: ``kappa`` at a uniform leaf."""
    leaves = _shortlex_leaves(t)
    return kappa(t, leaves[int(rng.integers(len(leaves)))])


def remy_step(t: BinaryTree, rng: np.random.Generator, /) -> FullBinaryTree:
    """
    One step of the Rémy chain.

    A vertex ``v`` is chosen uniformly (by index into the shortlex order),
    the subtree rooted at ``v`` is cut, a cherry is grafted at ``v`` and the
    subtree is re-attached at a uniformly chosen leaf of the cherry.

    Parameters
    ----------
    t : BinaryTree
        A full tree.
    rng : np.random.Generator
        The generator.

    Returns
    -------
    FullBinaryTree
        A full tree with one more leaf.

    """
    vertices = t.sorted_vertices
    v = vertices[int(rng.integers(len(vertices)))]
    side = "1" if rng.integers(2) else "0"
    other = "0" if side == "1" else "1"
    kept = {w for w in vertices if not w.startswith(v)}
    moved = {v + side + w[len(v) :] for w in vertices if w.startswith(v)}
    return FullBinaryTree._unchecked(kept | moved | {v, v + other})


def remy_chain(n_max: int, seed: int, /) -> list[ChainState]:
    """The Rémy trajectory from the trivial tree up to ``n_max`` leaves."""
    if n_max < 1:
        raise EmptyInput(f"{n_max=} must be at least 1")
    rng = make_rng(seed)
    t: FullBinaryTree = TRIVIAL
    states = [ChainState(t, 1)]
    for n in range(2, n_max + 1):
        t = remy_step(t, rng)
        states.append(ChainState(t, n))
    return states


def remy_heights(
    n_list: Sequence[int], rng: np.random.Generator, /
) -> dict[int, int]:
    """
    Heights of one Rémy trajectory at the requested leaf counts.

    Uses a pointer representation, so a trajectory to ``n`` leaves costs
    ``O(n)`` per recorded height instead of rebuilding vertex sets. The law
    is that of :func:`remy_chain`; the individual draws are not.

    """
    targets = sorted(set(n_list))
    parent = [-1]
    left = [-1]
    right = [-1]
    root = 0
    result = {}
    n_leaves = 1
    for target in targets:
        while n_leaves < target:
            v = int(rng.integers(len(parent)))
            x, y = len(parent), len(parent) + 1
            p = parent[v]
            if p < 0:
                root = x
            elif left[p] == v:
                left[p] = x
            else:
                right[p] = x
            parent += [p, x]
            if rng.integers(2):
                left += [y, -1]
                right += [v, -1]
            else:
                left += [v, -1]
                right += [y, -1]
            parent[v] = x
            n_leaves += 1
        depth, frontier = 0, [root]
        while True:
            nxt = [c for u in frontier for c in (left[u], right[u]) if c >= 0]
            if not nxt:
                break
            depth, frontier = depth + 1, nxt
        result[target] = depth
    return result


class RadixSortTree:
    """
    Incremental radix sort tree.

    Each inserted stream descends through the internal vertices; at a vacant
    child it becomes a leaf, at an occupied leaf both streams are extended
    bit by bit until they differ.

    """

    def __init__(self, *, depth_cap: int = DEPTH_CAP) -> None:
        self.depth_cap = depth_cap
        self._vertices: set[Word] = set()
        self._source: dict[Word, WordStream] = {}

    def __len__(self) -> int:
        return len(self._source)

    def insert(self, z: WordStream, /) -> Word:
        """Insert a stream and return the leaf it ends in."""
        if not self._vertices:
            self._vertices.add("")
            self._source[""] = z
            return ""
        w = ""
        while w in self._vertices and w not in self._source:
            if len(w) >= self.depth_cap:
                raise DepthCapExceeded(f"Stream {z!r} exceeded {self.depth_cap=}")
            w += z.bit(len(w))
        if w not in self._vertices:
            self._vertices.add(w)
            self._source[w] = z
            return w
        other = self._source.pop(w)
        while True:
            if len(w) >= self.depth_cap:
                raise DepthCapExceeded(
                    f"Streams {z!r} and {other!r} agree up to {self.depth_cap=}"
                )
            a, b = z.bit(len(w)), other.bit(len(w))
            if a != b:
                self._vertices |= {w + a, w + b}
                self._source[w + a] = z
                self._source[w + b] = other
                return w + a
            w += a
            self._vertices.add(w)

    def tree(self) -> BinaryTree:
        if not self._vertices:
            raise EmptyInput("No stream has been inserted")
        return BinaryTree._unchecked(self._vertices)

    def leaf_sources(self) -> dict[Word, WordStream]:
        return dict(self._source)


def radix_sort_tree(
    zs: Sequence[WordStream], /, *, depth_cap: int = DEPTH_CAP
) -> tuple[BinaryTree, list[Word]]:
    """
    The radix sort tree of distinct infinite words.

    Parameters
    ----------
    zs : Sequence[WordStream]
        The inputs.
    depth_cap : int, optional
        The maximum depth explored, by default 4096.

    Returns
    -------
    tuple[BinaryTree, list[Word]]
        The tree and, for each input, the leaf it ends in (its shortest
        prefix not shared with any other input).

    Raises
    ------
    EmptyInput
        If ``zs`` is empty.
    DepthCapExceeded
        If two inputs agree on their first ``depth_cap`` bits.

    """
    if not zs:
        raise EmptyInput("radix_sort_tree needs at least one input")
    builder = RadixSortTree(depth_cap=depth_cap)
    for z in zs:
        builder.insert(z)
    leaf_of = {id(z): leaf for leaf, z in builder.leaf_sources().items()}
    return builder.tree(), [leaf_of[id(z)] for z in zs]


def sample_inputs(nu: SourceMeasure, n: int, seed: int, /) -> list[WordStream]:
    """``n`` i.i.d. streams from ``nu``; the first ``k`` do not depend on ``n``."""
    return [nu.sample(s) for s in spawn_seeds(seed, n)]


def radix_trajectory(
    nu: SourceMeasure, n_max: int, seed: int, /, *, depth_cap: int = DEPTH_CAP
) -> list[ChainState]:
    """The radix chain ``R(Z_1, ..., Z_n)`` for ``n = 1, ..., n_max``."""
    if n_max < 1:
        raise EmptyInput(f"{n_max=} must be at least 1")
    builder = RadixSortTree(depth_cap=depth_cap)
    states = []
    for n, z in enumerate(sample_inputs(nu, n_max, seed), start=1):
        builder.insert(z)
        states.append(ChainState(builder.tree(), n, builder.leaf_sources()))
    return states


def patricia_chain(
    nu: SourceMeasure, n_max: int, seed: int, /, *, depth_cap: int = DEPTH_CAP
) -> list[ChainState]:
    """
    The PATRICIA chain driven by i.i.d. inputs from ``nu``.

    Each state is the contraction of the corresponding state of
    :func:`radix_trajectory` with the same arguments, so the radix
    trajectory is retrieved by calling that function with the same seed.

    Example
    -------
    >>> from patricia_bridges import FairCoin
    >>> [s.tree.n_leaves for s in patricia_chain(FairCoin(), 3, 0)]
    [1, 2, 3]

    """
    return [
        ChainState(patricia_contract(s.tree), s.n)
        for s in radix_trajectory(nu, n_max, seed, depth_cap=depth_cap)
    ]


def labeled_backward_step(lt: LabeledTree, /) -> LabeledTree:
    """
    Delete the leaf with the largest label together with its sibling.

    If the sibling is a leaf its label moves to the common parent, otherwise
    the sibling's subtree is grafted at the parent.

    Parameters
    ----------
    lt : LabeledTree
        A tree labeled by 1..n+1 with n >= 1.

    Returns
    -------
    LabeledTree
        The tree labeled by 1..n; its shape is ``kappa_bar`` at the removed leaf.

    Raises
    ------
    BadLabelSet
        If the labels are not exactly 1..n+1.

    Example
    -------
    >>> from patricia_bridges import CHERRY, LabeledTree
    >>> labeled_backward_step(LabeledTree.from_mapping(CHERRY, {"0": 1, "1": 2}))
    LabeledTree(tree=FullBinaryTree(leaves=['']), labels=(('', 1),))

    """
    top = len(lt.labels)
    if lt.label_set != frozenset(range(1, top + 1)):
        raise BadLabelSet(f"Labels must be 1..{top}, got {sorted(lt.label_set)}")
    v = lt.leaf_of[top]
    shape = kappa_bar(lt.tree, v)
    parent, s = v[:-1], sibling(v)
    labels = {
        (parent + w[len(s) :] if w.startswith(s) else w): label
        for w, label in lt.labels
        if label != top
    }
    return LabeledTree.from_mapping(shape, labels)
