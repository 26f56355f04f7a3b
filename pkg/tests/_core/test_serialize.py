import json

import pytest
from hypothesis import given

from patricia_bridges._core._serialize import (
    dumps_record,
    from_newick,
    to_dot,
    to_newick,
    tree_from_json,
    tree_to_json,
)
from patricia_bridges._core._trees import (
    CHERRY,
    BinaryTree,
    FullBinaryTree,
    LabeledTree,
    span_tree,
)
from patricia_bridges._errors import MalformedTree, NotFull
from tests._strategies import full_trees, labeled_trees


@given(full_trees())
def test_newick(t: FullBinaryTree) -> None:
    text = to_newick(t)
    assert text.endswith(";")
    assert text.count("*") == t.n_leaves
    assert from_newick(text) == t


@given(labeled_trees())
def test_labeled_newick(lt: LabeledTree) -> None:
    assert from_newick(to_newick(lt)) == lt


@given(labeled_trees())
def test_json(lt: LabeledTree) -> None:
    document = json.loads(dumps_record(tree_to_json(lt)))
    assert tree_from_json(document) == lt
    assert tree_from_json(tree_to_json(lt.tree)) == lt.tree


def test_json_types() -> None:
    radix = span_tree(["00", "01", "1"])
    assert type(tree_from_json(tree_to_json(radix))) is BinaryTree
    assert type(tree_from_json(tree_to_json(CHERRY))) is FullBinaryTree
    with pytest.raises(MalformedTree):
        tree_from_json({"leaves": []})
    with pytest.raises(NotFull):
        tree_from_json({"vertices": ["", "0"], "labels": {"0": 1}})


@pytest.mark.parametrize("text", ["(*,*", "(*;*)", "(*,*))", "(a,b)"])
def test_from_newick_rejects(text: str) -> None:
    with pytest.raises(MalformedTree):
        from_newick(text)


def test_to_newick_needs_full_tree() -> None:
    with pytest.raises(NotFull):
        to_newick(span_tree(["00", "01", "1"]))  # type: ignore[arg-type]


def test_to_dot_labels_and_comments() -> None:
    lt = LabeledTree.from_mapping(CHERRY, {"0": 2, "1": 1})
    text = to_dot(lt, comments=["seed=1"])
    assert text.splitlines()[0] == "// seed=1"
    assert '"r0" [shape=box, label="2"];' in text
    assert text.index('"r" -> "r0"') < text.index('"r" -> "r1"')


def test_dumps_record_is_compact() -> None:
    assert dumps_record({"b": 1, "a": [1, 2]}) == '{"b":1,"a":[1,2]}'
