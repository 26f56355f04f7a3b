import pytest

from patricia_bridges._chains import parse_chain, simulate
from patricia_bridges._core._measures import FairCoin, ProductBernoulli
from patricia_bridges._core._trees import (
    FullBinaryTree,
    LabeledTree,
    is_radix_shaped,
    patricia_contract,
)
from patricia_bridges._errors import EmptyInput, MalformedTree, MeasureSpecError
from patricia_bridges._models import IntervalZigZag


@pytest.mark.parametrize(
    ("text", "kind"),
    [
        ("patricia", "patricia"),
        ("radix:harmonic", "radix"),
        ("remy", "remy"),
        ("zigzag-bridge", "zigzag-bridge"),
        ("bridge-from:(*,(*,*))", "bridge-from"),
        ("rtree:interval", "rtree"),
        (" rtree:binary:bernoulli:1/4 ", "rtree"),
    ],
)
def test_parse_chain(text: str, kind: str) -> None:
    assert parse_chain(text).kind == kind


def test_parse_chain_fields() -> None:
    assert parse_chain("patricia").measure == FairCoin()
    assert parse_chain("radix:harmonic").measure == ProductBernoulli.harmonic()
    harmonic = ProductBernoulli.harmonic()
    assert parse_chain("patricia", measure=harmonic).measure == harmonic
    assert parse_chain("rtree:interval").model == IntervalZigZag()
    assert parse_chain("bridge-from:(1,2)").endpoint == FullBinaryTree.from_words(
        ["", "0", "1"]
    )


@pytest.mark.parametrize(
    "text", ["", "remy:fair", "zigzag", "bridge-from", "rtree", "patricia:coin"]
)
def test_parse_chain_rejects(text: str) -> None:
    with pytest.raises(MeasureSpecError):
        parse_chain(text)


def test_parse_chain_rejects_bad_newick() -> None:
    with pytest.raises(MalformedTree):
        parse_chain("bridge-from:((*,*)")


@pytest.mark.parametrize(
    "text", ["patricia:harmonic", "radix", "remy", "zigzag-bridge", "rtree:interval"]
)
def test_simulate_grows_one_leaf_per_step(text: str) -> None:
    path = simulate(parse_chain(text), 6, 1)
    sizes = [
        t.tree.n_leaves if isinstance(t, LabeledTree) else t.n_leaves for t in path
    ]
    assert sizes == list(range(1, 7))


def test_simulate_is_deterministic() -> None:
    spec = parse_chain("patricia:bernoulli:1/3")
    assert simulate(spec, 10, 7) == simulate(spec, 10, 7)


def test_patricia_contracts_radix() -> None:
    radix = simulate(parse_chain("radix:harmonic"), 8, 2)
    patricia = simulate(parse_chain("patricia:harmonic"), 8, 2)
    assert all(is_radix_shaped(t) for t in radix)
    assert patricia == [patricia_contract(t) for t in radix]


def test_bridge_from_ignores_n_max() -> None:
    path = simulate(parse_chain("bridge-from:((*,*),(*,*))"), 1, 0)
    assert len(path) == 4
    assert path[-1].leaves == ("00", "01", "10", "11")


def test_simulate_rejects_empty() -> None:
    with pytest.raises(EmptyInput):
        simulate(parse_chain("remy"), 0, 0)
