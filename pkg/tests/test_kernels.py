import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patricia_bridges._core._measures import FairCoin, ProductBernoulli
from patricia_bridges._core._trees import (
    CHERRY,
    TRIVIAL,
    BinaryTree,
    FullBinaryTree,
    LabeledTree,
    enumerate_full_trees,
    height,
    is_radix_shaped,
    patricia_contract,
    span_tree,
)
from patricia_bridges._core._words import WordStream
from patricia_bridges._errors import (
    BadLabelSet,
    DepthCapExceeded,
    EmptyInput,
    NotALeaf,
    NotRadixShaped,
)
from patricia_bridges._kernels import (
    RadixSortTree,
    backward_sample,
    kappa,
    kappa_bar,
    labeled_backward_step,
    patricia_chain,
    radix_backward_sample,
    radix_sort_tree,
    radix_trajectory,
    remy_chain,
    remy_heights,
    remy_step,
    sample_inputs,
)
from tests._strategies import full_trees, labeled_trees, stretched_trees

BALANCED = FullBinaryTree.from_words(["", "0", "1", "00", "01", "10", "11"])


@given(full_trees(max_leaves=8), st.data())
def test_kappa_bar_is_full(t: FullBinaryTree, data: st.DataObject) -> None:
    if t.n_leaves < 2:
        return
    v = data.draw(st.sampled_from(t.leaves))
    s = kappa_bar(t, v)
    assert FullBinaryTree(s.vertices) == s
    assert s.n_leaves == t.n_leaves - 1


@given(full_trees(max_leaves=8), st.data())
def test_kappa_commutes_with_contraction(
    t: FullBinaryTree, data: st.DataObject
) -> None:
    if t.n_leaves < 2:
        return
    v = data.draw(st.sampled_from(t.leaves))
    assert patricia_contract(kappa(t, v)) == kappa_bar(t, v)


@given(stretched_trees(max_leaves=7), st.data())
def test_kappa_commutes_with_contraction_through_unary_paths(
    case: tuple[FullBinaryTree, BinaryTree, dict[str, str]], data: st.DataObject
) -> None:
    t, s, leaves = case
    if t.n_leaves < 2:
        return
    v = data.draw(st.sampled_from(t.leaves))
    smaller = kappa(s, leaves[v])
    assert is_radix_shaped(smaller)
    assert patricia_contract(smaller) == kappa_bar(t, v)


def test_kappa_on_radix_tree() -> None:
    t = span_tree(["0100", "0101", "011", "1"])
    assert kappa(t, "011").vertices == t.vertices - {"011"}
    assert kappa(t, "0101").leaves == ("010", "011", "1")
    assert is_radix_shaped(kappa(t, "0101"))


def test_kappa_errors() -> None:
    with pytest.raises(NotRadixShaped):
        kappa(span_tree(["01", "1"]), "1")
    with pytest.raises(NotALeaf):
        kappa(CHERRY, "")
    with pytest.raises(EmptyInput):
        kappa(TRIVIAL, "")
    with pytest.raises(NotALeaf):
        kappa_bar(CHERRY, "00")


def test_kappa_bar_three_leaves() -> None:
    t = FullBinaryTree.from_words(["", "0", "1", "00", "01", "000", "001"])
    assert {kappa_bar(t, v).leaves for v in t.leaves} == {("00", "01", "1")}


def test_backward_sample_law(rng: np.random.Generator) -> None:
    counts = Counter(backward_sample(BALANCED, rng).leaves for _ in range(4000))
    assert set(counts) == {("0", "10", "11"), ("00", "01", "1")}
    assert abs(counts[("0", "10", "11")] / 4000 - 0.5) < 0.04


def test_radix_backward_sample(rng: np.random.Generator) -> None:
    t = span_tree(["000", "001", "1"])
    seen = Counter(radix_backward_sample(t, rng).leaves for _ in range(3000))
    assert set(seen) == {("0", "1"), ("000", "001")}
    assert abs(seen[("0", "1")] / 3000 - 2 / 3) < 0.04


@given(labeled_trees())
def test_labeled_backward_step(lt: LabeledTree) -> None:
    if lt.tree.n_leaves < 2:
        return
    top = lt.tree.n_leaves
    previous = labeled_backward_step(lt)
    assert previous.tree == kappa_bar(lt.tree, lt.leaf_of[top])
    assert previous.label_set == frozenset(range(1, top))


def test_labeled_backward_step_needs_consecutive_labels() -> None:
    with pytest.raises(BadLabelSet):
        labeled_backward_step(LabeledTree.from_mapping(CHERRY, {"0": 1, "1": 3}))


def test_remy_chain() -> None:
    states = remy_chain(12, 0)
    assert [s.n for s in states] == list(range(1, 13))
    assert states[0].tree == TRIVIAL
    for s in states:
        assert FullBinaryTree(s.tree.vertices) == s.tree
        assert s.tree.n_leaves == s.n
    assert remy_chain(12, 0) == states
    with pytest.raises(EmptyInput):
        remy_chain(0, 0)


def test_remy_step_law(rng: np.random.Generator) -> None:
    counts = Counter(remy_step(CHERRY, rng) for _ in range(4000))
    assert set(counts) == set(enumerate_full_trees(3))
    assert all(abs(c / 4000 - 0.5) < 0.04 for c in counts.values())


def test_remy_heights(rng: np.random.Generator) -> None:
    heights = remy_heights([1, 2, 50, 400], rng)
    assert list(heights) == [1, 2, 50, 400]
    assert heights[1] == 0
    assert heights[2] == 1
    for n, h in heights.items():
        assert math.ceil(math.log2(n)) <= h <= n - 1


def test_radix_sort_tree() -> None:
    zs = sample_inputs(FairCoin(), 20, 0)
    t, leaves = radix_sort_tree(zs)
    assert is_radix_shaped(t)
    assert sorted(leaves) == list(t.leaves)
    for z, leaf in zip(zs, leaves, strict=True):
        assert z.prefix(len(leaf)) == leaf
    with pytest.raises(EmptyInput):
        radix_sort_tree([])


@pytest.mark.parametrize("measure", [FairCoin(), ProductBernoulli.harmonic()])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_radix_leaves_follow_input_order(
    measure: FairCoin | ProductBernoulli, seed: int
) -> None:
    zs = sample_inputs(measure, 30, seed)
    t, leaves = radix_sort_tree(zs)
    depth = max(map(len, leaves))
    order = sorted(range(len(zs)), key=lambda i: zs[i].prefix(depth))
    assert [leaves[i] for i in order] == list(t.leaves)


def test_radix_sort_tree_depth_cap() -> None:
    zs = [WordStream(FairCoin(), 9), WordStream(FairCoin(), 9)]
    with pytest.raises(DepthCapExceeded):
        radix_sort_tree(zs, depth_cap=100)
    with pytest.raises(EmptyInput):
        RadixSortTree().tree()


def test_sample_inputs_are_prefix_stable() -> None:
    long = sample_inputs(FairCoin(), 6, 3)
    short = sample_inputs(FairCoin(), 4, 3)
    assert [z.prefix(32) for z in long[:4]] == [z.prefix(32) for z in short]


@pytest.mark.parametrize("measure", [FairCoin(), ProductBernoulli.harmonic()])
def test_patricia_is_contracted_radix(measure: FairCoin | ProductBernoulli) -> None:
    radix = radix_trajectory(measure, 15, 4)
    patricia = patricia_chain(measure, 15, 4)
    assert [s.n for s in patricia] == list(range(1, 16))
    for r, p in zip(radix, patricia, strict=True):
        assert patricia_contract(r.tree) == p.tree
        assert r.leaf_sources is not None
        assert set(r.leaf_sources) == set(r.tree.leaves)
    for before, after in zip(radix, radix[1:], strict=False):
        assert before.tree.vertices < after.tree.vertices


@settings(max_examples=20)
@given(st.integers(0, 2**32))
def test_radix_trajectory_backward_consistency(seed: int) -> None:
    states = radix_trajectory(FairCoin(), 6, seed)
    last, previous = states[-1], states[-2]
    assert last.leaf_sources is not None
    newest = next(
        leaf
        for leaf, z in last.leaf_sources.items()
        if all(z is not w for w in (previous.leaf_sources or {}).values())
    )
    assert kappa(last.tree, newest) == previous.tree
    assert height(last.tree) >= 3
