from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cache, cached_property
from itertools import permutations
from math import comb
from typing import Self

import numpy as np

from .._errors import (
    BadLabelSet,
    EmptyInput,
    MalformedTree,
    NotFull,
    NotRadixShaped,
    TooLarge,
)
from ._words import Word, shortlex_key, sibling

MAX_ENUMERATION_LEAVES = 12
MAX_LABELED_ENUMERATION_LEAVES = 6

type Label = int


@dataclass(frozen=True)
class BinaryTree:
    """
    A finite rooted binary tree, stored as its prefix-closed vertex set.

    The root is the empty word, the children of ``v`` are ``v + "0"`` (left)
    and ``v + "1"`` (right).

    """

    vertices: frozenset[Word]

    def __post_init__(self) -> None:
        if "" not in self.vertices:
            raise MalformedTree(f"The root is missing from {sorted(self.vertices)=}")
        for v in self.vertices:
            if v.strip("01"):
                raise MalformedTree(f"Not a binary word: {v=}")
            if v and v[:-1] not in self.vertices:
                raise MalformedTree(f"Parent of {v=} is missing")

    @classmethod
    def from_words(cls, words: Iterable[Word], /) -> Self:
        """Build a tree from its complete vertex set."""
        return cls(frozenset(words))

    @classmethod
    def _unchecked(cls, vertices: Iterable[Word], /) -> Self:
        tree = object.__new__(cls)
        object.__setattr__(tree, "vertices", frozenset(vertices))
        return tree

    @cached_property
    def sorted_vertices(self) -> tuple[Word, ...]:
        """The vertices in shortlex order."""
        return tuple(sorted(self.vertices, key=shortlex_key))

    @cached_property
    def leaves(self) -> tuple[Word, ...]:
        """The leaves in lexicographic (depth-first) order."""
        return tuple(
            sorted(
                v
                for v in self.vertices
                if v + "0" not in self.vertices and v + "1" not in self.vertices
            )
        )

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    def is_leaf(self, v: Word, /) -> bool:
        return (
            v in self.vertices
            and v + "0" not in self.vertices
            and v + "1" not in self.vertices
        )

    def children(self, v: Word, /) -> tuple[Word, ...]:
        """The children of ``v``, left first."""
        return tuple(c for c in (v + "0", v + "1") if c in self.vertices)

    def subtree(self, v: Word, /) -> frozenset[Word]:
        """The words ``w`` with ``v + w`` a vertex."""
        return frozenset(u[len(v) :] for u in self.vertices if u.startswith(v))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(leaves={list(self.leaves)})"


@dataclass(frozen=True, repr=False)
class FullBinaryTree(BinaryTree):
    """A binary tree in which every vertex has zero or two children."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for v in self.vertices:
            if (v + "0" in self.vertices) != (v + "1" in self.vertices):
                raise NotFull(f"Vertex {v=} has exactly one child")


TRIVIAL = FullBinaryTree(frozenset({""}))
"""The one-vertex tree."""
CHERRY = FullBinaryTree(frozenset({"", "0", "1"}))
"""The two-leaf tree."""


@dataclass(frozen=True)
class LabeledTree:
    """
    A full binary tree with a bijective labeling of its leaves.

    ``labels`` holds ``(leaf, label)`` pairs in lexicographic leaf order.

    """

    tree: FullBinaryTree
    labels: tuple[tuple[Word, Label], ...]

    def __post_init__(self) -> None:
        leaves = tuple(leaf for leaf, _ in self.labels)
        if leaves != self.tree.leaves:
            raise BadLabelSet(
                f"Labels must cover the leaves exactly: {leaves=}, {self.tree.leaves=}"
            )
        if len({label for _, label in self.labels}) != len(self.labels):
            raise BadLabelSet(f"Labels must be distinct: {self.labels=}")

    @classmethod
    def from_mapping(cls, tree: FullBinaryTree, labels: Mapping[Word, Label]) -> Self:
        """
        Attach labels to the leaves of ``tree``.

        Example
        -------
        >>> LabeledTree.from_mapping(CHERRY, {"1": 2, "0": 1}).labels
        (('0', 1), ('1', 2))

        """
        return cls(tree, tuple(sorted(labels.items())))

    @cached_property
    def label_of(self) -> dict[Word, Label]:
        return dict(self.labels)

    @cached_property
    def leaf_of(self) -> dict[Label, Word]:
        return {label: leaf for leaf, label in self.labels}

    @property
    def label_set(self) -> frozenset[Label]:
        return frozenset(self.leaf_of)

    def relabel(self, sigma: Mapping[Label, Label], /) -> LabeledTree:
        """Replace every label ``i`` by ``sigma[i]``."""
        return LabeledTree(
            self.tree, tuple((leaf, sigma[label]) for leaf, label in self.labels)
        )

    def strip(self) -> FullBinaryTree:
        """Forget the labels."""
        return self.tree


def span_tree(ys: Iterable[Word], /) -> BinaryTree:
    """
    The smallest tree containing every given word.

    Parameters
    ----------
    ys : Iterable[Word]
        Non-empty collection of words.

    Returns
    -------
    BinaryTree
        The union of all prefixes of the words.

    Example
    -------
    >>> span_tree(["000", "001", "1"]).sorted_vertices
    ('', '0', '1', '00', '000', '001')

    """
    ys = list(ys)
    if not ys:
        raise EmptyInput("span_tree needs at least one word")
    return BinaryTree._unchecked({y[:k] for y in ys for k in range(len(y) + 1)})


def is_radix_shaped(t: BinaryTree, /) -> bool:
    """Whether ``t`` is trivial, or has two or more leaves each with a sibling."""
    if t.vertices == {""}:
        return True
    return t.n_leaves >= 2 and all(sibling(v) in t.vertices for v in t.leaves)


def patricia_contract(s: BinaryTree, /) -> FullBinaryTree:
    """
    Contract every vertex with a single child (the PATRICIA map).

    Parameters
    ----------
    s : BinaryTree
        A radix-shaped tree.

    Returns
    -------
    FullBinaryTree
        The full tree with the same branching structure and leaf count.

    Raises
    ------
    NotRadixShaped
        If ``s`` has a leaf without a sibling, or a single leaf below the root.

    Example
    -------
    >>> patricia_contract(span_tree(["000", "001", "1"])).leaves
    ('00', '01', '1')

    """
    if not is_radix_shaped(s):
        raise NotRadixShaped(f"{s!r} has a leaf whose sibling is not a vertex")
    vertices = s.vertices
    result = {""}
    stack = [("", "")]
    while stack:
        v, w = stack.pop()
        while True:
            has0 = v + "0" in vertices
            has1 = v + "1" in vertices
            if has0 == has1:
                break
            v += "0" if has0 else "1"
        if has0:
            for b in "01":
                result.add(w + b)
                stack.append((v + b, w + b))
    return FullBinaryTree._unchecked(result)


def catalan(m: int, /) -> int:
    """
    The m-th Catalan number, the count of full binary trees with m + 1 leaves.

    Example
    -------
    >>> [catalan(m) for m in range(6)]
    [1, 1, 2, 5, 14, 42]

    """
    return comb(2 * m, m) // (m + 1)


@cache
def _full_tree_vertex_sets(n: int) -> tuple[frozenset[Word], ...]:
    if n == 1:
        return (frozenset({""}),)
    result = []
    for k in range(1, n):
        for left in _full_tree_vertex_sets(k):
            for right in _full_tree_vertex_sets(n - k):
                result.append(
                    frozenset(
                        {""} | {"0" + w for w in left} | {"1" + w for w in right}
                    )
                )
    return tuple(result)


def enumerate_full_trees(n: int, /) -> list[FullBinaryTree]:
    """
    All full binary trees with ``n`` leaves.

    Ordered by the leaf count of the left subtree, then recursively by the
    orders of the left and right subtrees.

    Parameters
    ----------
    n : int
        The leaf count, at most 12.

    Returns
    -------
    list[FullBinaryTree]
        ``catalan(n - 1)`` distinct trees.

    Example
    -------
    >>> [t.leaves for t in enumerate_full_trees(3)]
    [('0', '10', '11'), ('00', '01', '1')]

    """
    if n < 1:
        raise EmptyInput(f"A tree has at least one leaf, got {n=}")
    if n > MAX_ENUMERATION_LEAVES:
        raise TooLarge(f"Refusing to enumerate {n=} > {MAX_ENUMERATION_LEAVES} leaves")
    return [FullBinaryTree._unchecked(v) for v in _full_tree_vertex_sets(n)]


def enumerate_labeled_trees(n: int, /) -> Iterator[LabeledTree]:
    """All full binary trees with ``n`` leaves labeled bijectively by 1..n."""
    if n > MAX_LABELED_ENUMERATION_LEAVES:
        raise TooLarge(
            f"Refusing to enumerate labelings of {n=} > "
            f"{MAX_LABELED_ENUMERATION_LEAVES} leaves"
        )
    for t in enumerate_full_trees(n):
        for perm in permutations(range(1, n + 1)):
            yield LabeledTree(t, tuple(zip(t.leaves, perm, strict=True)))


def uniform_labeling(t: FullBinaryTree, rng: np.random.Generator, /) -> LabeledTree:
    """Label the leaves of ``t`` by a uniform random bijection onto 1..n."""
    perm = rng.permutation(t.n_leaves) + 1
    return LabeledTree(t, tuple(zip(t.leaves, map(int, perm), strict=True)))


def height(t: BinaryTree, /) -> int:
    """
    The maximum leaf depth.

    Example
    -------
    >>> height(TRIVIAL), height(CHERRY)
    (0, 1)

    """
    return max(map(len, t.vertices))
