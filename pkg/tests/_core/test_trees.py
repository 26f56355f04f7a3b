import numpy as np
import pytest
from hypothesis import given

from patricia_bridges._core._trees import (
    CHERRY,
    TRIVIAL,
    BinaryTree,
    FullBinaryTree,
    LabeledTree,
    catalan,
    enumerate_full_trees,
    enumerate_labeled_trees,
    height,
    is_radix_shaped,
    patricia_contract,
    span_tree,
    uniform_labeling,
)
from patricia_bridges._errors import (
    BadLabelSet,
    EmptyInput,
    MalformedTree,
    NotFull,
    NotRadixShaped,
    TooLarge,
)
from tests._strategies import (
    full_trees,
    labeled_trees,
    stretch,
    stretched_trees,
)


@pytest.mark.parametrize(
    "vertices", [set(), {"0"}, {"", "00"}, {"", "0", "2"}, {"", "a"}]
)
def test_malformed(vertices: set[str]) -> None:
    with pytest.raises(MalformedTree):
        BinaryTree(frozenset(vertices))


def test_not_full() -> None:
    with pytest.raises(NotFull):
        FullBinaryTree.from_words(["", "0"])


def test_basic_accessors() -> None:
    t = FullBinaryTree.from_words(["", "0", "1", "10", "11"])
    assert t.leaves == ("0", "10", "11")
    assert t.n_leaves == 3
    assert t.is_leaf("0")
    assert not t.is_leaf("1")
    assert not t.is_leaf("00")
    assert t.children("1") == ("10", "11")
    assert t.children("0") == ()
    assert t.subtree("1") == {"", "0", "1"}
    assert repr(t) == "FullBinaryTree(leaves=['0', '10', '11'])"


@pytest.mark.parametrize("n", range(1, 10))
def test_enumerate_full_trees(n: int) -> None:
    trees = enumerate_full_trees(n)
    assert len(trees) == catalan(n - 1)
    assert len(set(trees)) == len(trees)
    assert all(t.n_leaves == n for t in trees)
    assert all(FullBinaryTree(t.vertices) == t for t in trees)


def test_enumerate_guards() -> None:
    with pytest.raises(EmptyInput):
        enumerate_full_trees(0)
    with pytest.raises(TooLarge):
        enumerate_full_trees(13)
    with pytest.raises(TooLarge):
        next(enumerate_labeled_trees(7))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 12), (4, 120)])
def test_enumerate_labeled_trees(n: int, count: int) -> None:
    trees = list(enumerate_labeled_trees(n))
    assert len(trees) == count
    assert len(set(trees)) == count


def test_labeled_tree_checks() -> None:
    with pytest.raises(BadLabelSet):
        LabeledTree(CHERRY, (("0", 1),))
    with pytest.raises(BadLabelSet):
        LabeledTree(CHERRY, (("0", 1), ("1", 1)))


@given(labeled_trees())
def test_labeled_tree_maps(lt: LabeledTree) -> None:
    assert {lt.leaf_of[lt.label_of[v]] for v in lt.tree.leaves} == set(lt.tree.leaves)
    assert lt.label_set == frozenset(range(1, lt.tree.n_leaves + 1))
    assert lt.strip() is lt.tree
    n = lt.tree.n_leaves
    reverse = {i: n + 1 - i for i in range(1, n + 1)}
    assert lt.relabel(reverse).relabel(reverse) == lt


def test_span_tree() -> None:
    assert span_tree([""]) == BinaryTree(frozenset({""}))
    assert span_tree(["01", "1"]).vertices == {"", "0", "01", "1"}
    with pytest.raises(EmptyInput):
        span_tree([])


@pytest.mark.parametrize(
    "words, expected",
    [
        ([""], True),
        (["0"], False),
        (["0", "1"], True),
        (["01", "1"], False),
        (["000", "001", "1"], True),
    ],
)
def test_is_radix_shaped(words: list[str], expected: bool) -> None:
    assert is_radix_shaped(span_tree(words)) is expected


def test_patricia_contract() -> None:
    s = span_tree(["0100", "0101", "011", "1"])
    assert patricia_contract(s).leaves == ("000", "001", "01", "1")
    with pytest.raises(NotRadixShaped):
        patricia_contract(span_tree(["01", "1"]))


@given(full_trees())
def test_patricia_contract_fixes_full_trees(t: FullBinaryTree) -> None:
    assert patricia_contract(t) == t


def _branching_pattern(s: BinaryTree, leaf: str) -> str:
    return "".join(
        leaf[k]
        for k in range(len(leaf))
        if {leaf[:k] + "0", leaf[:k] + "1"} <= s.vertices
    )


@given(stretched_trees())
def test_patricia_contract_keeps_branching(
    case: tuple[FullBinaryTree, BinaryTree, dict[str, str]],
) -> None:
    t, s, leaves = case
    assert is_radix_shaped(s)
    assert patricia_contract(s) == t
    for v, leaf in leaves.items():
        assert _branching_pattern(s, leaf) == v


def test_patricia_contract_on_all_small_shapes() -> None:
    for n in range(1, 7):
        for t in enumerate_full_trees(n):
            pads = {v: "10"[: len(v) % 3] for v in t.vertices}
            s, leaves = stretch(t, pads)
            assert patricia_contract(s) == t
            assert [_branching_pattern(s, w) for w in leaves.values()] == list(leaves)


def test_height() -> None:
    assert height(TRIVIAL) == 0
    assert height(CHERRY) == 1
    assert height(span_tree(["0110"])) == 4


def test_uniform_labeling(rng: np.random.Generator) -> None:
    t = enumerate_full_trees(4)[0]
    seen = {uniform_labeling(t, rng) for _ in range(2000)}
    assert len(seen) == 24
    assert all(lt.tree == t for lt in seen)
