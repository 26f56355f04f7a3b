from dataclasses import dataclass
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patricia_bridges._bridges import (
    caterpillar,
    check_model_sample,
    finite_bridge,
    labeled_bridge,
    rtree_bridge,
    rtree_dds,
    rtree_labeled_bridge,
    zigzag_bridge,
    zigzag_spines,
)
from patricia_bridges._core._trees import (
    TRIVIAL,
    FullBinaryTree,
    height,
    is_radix_shaped,
)
from patricia_bridges._didendritic import Turn, check_axioms, restrict
from patricia_bridges._errors import (
    DegenerateSample,
    EmptyInput,
    MeasureSpecError,
    PropertyLRViolated,
    PropertyTViolated,
)
from patricia_bridges._models import BinaryCompletion, IntervalZigZag, parse_model
from patricia_bridges._stats import exact_backward_kernel
from tests._strategies import full_trees

TBAR = FullBinaryTree.from_words(["000", "001", "01", "1", "00", "0", ""])


@settings(max_examples=50)
@given(full_trees(), st.integers(0, 2**32))
def test_finite_bridge_follows_the_kernel(t: FullBinaryTree, seed: int) -> None:
    path = finite_bridge(t, seed)
    assert path[0] == TRIVIAL
    assert path[-1] == t
    assert [s.n_leaves for s in path] == list(range(1, t.n_leaves + 1))
    for before, after in zip(path, path[1:], strict=False):
        assert before in exact_backward_kernel(after).masses


def test_kernel_of_unbalanced_endpoint_is_deterministic() -> None:
    masses = exact_backward_kernel(TBAR).masses
    assert {s.leaves: p for s, p in masses.items()} == {
        ("00", "01", "1"): Fraction(1)
    }
    for seed in range(5):
        assert finite_bridge(TBAR, seed)[2].leaves == ("00", "01", "1")


@given(full_trees(max_leaves=6), st.integers(0, 2**32))
def test_labeled_bridge_shapes(t: FullBinaryTree, seed: int) -> None:
    path = labeled_bridge(t, seed)
    assert path[-1].strip() == t
    for n, lt in enumerate(path, start=1):
        assert lt.label_set == frozenset(range(1, n + 1))
    for before, after in zip(path, path[1:], strict=False):
        assert before.strip() in exact_backward_kernel(after.strip()).masses


@pytest.mark.parametrize(
    ("turns", "leaves"),
    [
        ("", ("",)),
        ("0", ("0", "1")),
        ("01", ("00", "01", "1")),
        ("10", ("0", "10", "11")),
        ("110", ("0", "10", "110", "111")),
    ],
)
def test_caterpillar(turns: str, leaves: tuple[str, ...]) -> None:
    assert caterpillar(turns).leaves == leaves
    assert height(caterpillar(turns)) == len(turns)


@settings(max_examples=30)
@given(st.integers(0, 2**32))
def test_zigzag_bridge(seed: int) -> None:
    spines = list(zigzag_spines(12, seed))
    assert [len(s) for s in spines] == list(range(12))
    path = zigzag_bridge(12, seed)
    assert [height(t) for t in path] == list(range(12))
    assert [t.n_leaves for t in path] == list(range(1, 13))
    assert all(is_radix_shaped(t) for t in path)


def test_zigzag_bridge_rejects_empty() -> None:
    with pytest.raises(EmptyInput):
        zigzag_bridge(0, 0)


@pytest.mark.parametrize("model", [IntervalZigZag(), BinaryCompletion()])
def test_rtree_bridge(model: IntervalZigZag | BinaryCompletion) -> None:
    path = rtree_labeled_bridge(model, 8, 3)
    assert [lt.tree.n_leaves for lt in path] == list(range(1, 9))
    assert [lt.strip() for lt in path] == rtree_bridge(model, 8, 3)
    for before, after in zip(path, path[1:], strict=False):
        assert before.strip() in exact_backward_kernel(after.strip()).masses


def test_interval_model_grows_caterpillars() -> None:
    assert [height(t) for t in rtree_bridge(IntervalZigZag(), 10, 5)] == list(
        range(10)
    )


@settings(max_examples=20)
@given(st.integers(0, 2**32), st.integers(1, 6))
def test_rtree_dds_is_projective(seed: int, n: int) -> None:
    for model in (IntervalZigZag(), parse_model("binary:harmonic")):
        d = rtree_dds(model, n + 1, seed)
        assert check_axioms(d) == []
        assert restrict(d, range(1, n + 1)) == rtree_dds(model, n, seed)


@dataclass(frozen=True)
class _AlwaysLeft(IntervalZigZag):
    def W(self, x: float, s: float, y: float, t: float, /) -> Turn:  # noqa: N802
        return Turn.LEFT


@dataclass(frozen=True)
class _FlatMeet(IntervalZigZag):
    def meet(self, x: float, y: float, /) -> float:
        return 0.0


def test_check_model_sample() -> None:
    points = [(0.1, 0.2), (0.3, 0.9), (0.2, 0.4)]
    check_model_sample(IntervalZigZag(), points)
    with pytest.raises(PropertyLRViolated):
        check_model_sample(_AlwaysLeft(), points)
    with pytest.raises(PropertyTViolated):
        check_model_sample(_FlatMeet(), points)
    with pytest.raises(DegenerateSample):
        check_model_sample(IntervalZigZag(), [(0.1, 0.2), (0.1, 0.3)])


def test_interval_w_is_antisymmetric() -> None:
    model = IntervalZigZag()
    assert model.W(0.1, 0.2, 0.3, 0.9) is Turn.RIGHT
    assert model.W(0.3, 0.9, 0.1, 0.2) is Turn.LEFT


@pytest.mark.parametrize(
    ("text", "name"),
    [
        ("interval", "interval"),
        ("binary", "binary:fair"),
        ("binary:bernoulli:1/3", "binary:bernoulli:1/3"),
    ],
)
def test_parse_model(text: str, name: str) -> None:
    assert parse_model(text).name == name


@pytest.mark.parametrize("text", ["", "interval:x", "tree", "binary:nope"])
def test_parse_model_rejects(text: str) -> None:
    with pytest.raises(MeasureSpecError):
        parse_model(text)
