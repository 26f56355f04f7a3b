from collections.abc import Mapping

from hypothesis import strategies as st

from patricia_bridges._core._trees import (
    BinaryTree,
    FullBinaryTree,
    LabeledTree,
    enumerate_full_trees,
    span_tree,
)

words = st.text(alphabet="01", max_size=12)
nonempty_words = st.text(alphabet="01", min_size=1, max_size=12)


@st.composite
def full_trees(draw: st.DrawFn, max_leaves: int = 7) -> FullBinaryTree:
    n = draw(st.integers(1, max_leaves))
    return draw(st.sampled_from(enumerate_full_trees(n)))


@st.composite
def labeled_trees(draw: st.DrawFn, max_leaves: int = 6) -> LabeledTree:
    t = draw(full_trees(max_leaves))
    labels = draw(st.permutations(range(1, t.n_leaves + 1)))
    return LabeledTree.from_mapping(t, dict(zip(t.leaves, labels, strict=True)))


def stretch(
    t: FullBinaryTree, pads: Mapping[str, str]
) -> tuple[BinaryTree, dict[str, str]]:
    """
    Push every internal vertex ``v`` of ``t`` down the unary path ``pads[v]``.

    Returns the radix-shaped tree and the leaf each leaf of ``t`` becomes.

    """
    image: dict[str, str] = {}
    for v in t.sorted_vertices:
        head = "" if v == "" else image[v[:-1]] + v[-1]
        image[v] = head if t.is_leaf(v) else head + pads.get(v, "")
    leaves = {v: image[v] for v in t.leaves}
    return span_tree(leaves.values()), leaves


@st.composite
def stretched_trees(
    draw: st.DrawFn, max_leaves: int = 6
) -> tuple[FullBinaryTree, BinaryTree, dict[str, str]]:
    t = draw(full_trees(max_leaves))
    pads = {v: draw(st.text(alphabet="01", max_size=3)) for v in t.sorted_vertices}
    return t, *stretch(t, pads)
