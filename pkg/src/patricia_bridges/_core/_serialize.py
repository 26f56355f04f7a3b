import json
from collections.abc import Iterable, Mapping
from typing import Any

from .._errors import MalformedTree, NotFull
from ._trees import BinaryTree, FullBinaryTree, LabeledTree
from ._words import Word, shortlex_key

type TreeLike = BinaryTree | LabeledTree


def tree_to_json(t: TreeLike, /) -> dict[str, Any]:
    """
    The JSON document of a tree.

    Example
    -------
    >>> from patricia_bridges import CHERRY
    >>> tree_to_json(CHERRY)
    {'vertices': ['', '0', '1']}

    """
    if isinstance(t, LabeledTree):
        return tree_to_json(t.tree) | {"labels": dict(t.labels)}
    return {"vertices": sorted(t.vertices, key=shortlex_key)}


def tree_from_json(obj: Mapping[str, Any], /) -> TreeLike:
    """
    Parse a JSON tree document.

    Returns a ``LabeledTree`` if labels are present, a ``FullBinaryTree`` if
    the vertex set is full and a ``BinaryTree`` otherwise.

    """
    try:
        vertices = frozenset(obj["vertices"])
    except (KeyError, TypeError) as e:
        raise MalformedTree(f"Expected an object with 'vertices': {obj=}") from e
    try:
        tree: BinaryTree = FullBinaryTree(vertices)
    except NotFull:
        tree = BinaryTree(vertices)
    if "labels" in obj:
        if not isinstance(tree, FullBinaryTree):
            raise NotFull("Only full trees carry labels")
        return LabeledTree.from_mapping(
            tree, {k: int(v) for k, v in obj["labels"].items()}
        )
    return tree


def to_newick(t: FullBinaryTree | LabeledTree, /) -> str:
    """
    Newick-like text: a leaf is ``*`` or its label, an internal vertex ``(L,R)``.

    Example
    -------
    >>> from patricia_bridges import enumerate_full_trees
    >>> to_newick(enumerate_full_trees(3)[1])
    '((*,*),*);'

    """
    labels: Mapping[Word, int] = {}
    if isinstance(t, LabeledTree):
        labels, t = t.label_of, t.tree
    if not isinstance(t, FullBinaryTree):
        raise NotFull(f"Newick output needs a full tree, got {t!r}")

    def _node(v: Word) -> str:
        if t.is_leaf(v):
            return str(labels[v]) if labels else "*"
        return f"({_node(v + '0')},{_node(v + '1')})"

    return _node("") + ";"


def from_newick(text: str, /) -> FullBinaryTree | LabeledTree:
    """
    Parse the output of :func:`to_newick`.

    Example
    -------
    >>> from_newick("(1,(3,2));").labels
    (('0', 1), ('10', 3), ('11', 2))

    """
    text = text.strip().removesuffix(";")
    vertices: set[Word] = set()
    labels: dict[Word, int] = {}
    pos = 0

    def _parse(v: Word) -> None:
        nonlocal pos
        vertices.add(v)
        if pos < len(text) and text[pos] == "(":
            pos += 1
            _parse(v + "0")
            _expect(",")
            _parse(v + "1")
            _expect(")")
            return
        end = pos
        while end < len(text) and text[end] not in ",()":
            end += 1
        token = text[pos:end].strip()
        pos = end
        if token not in ("", "*"):
            try:
                labels[v] = int(token)
            except ValueError as e:
                raise MalformedTree(f"Bad leaf label {token=}") from e

    def _expect(char: str) -> None:
        nonlocal pos
        if pos >= len(text) or text[pos] != char:
            raise MalformedTree(f"Expected {char!r} at {pos=} in {text=}")
        pos += 1

    _parse("")
    if pos != len(text):
        raise MalformedTree(f"Trailing characters at {pos=} in {text=}")
    tree = FullBinaryTree(frozenset(vertices))
    if labels:
        return LabeledTree.from_mapping(tree, labels)
    return tree


def to_dot(t: TreeLike, /, *, comments: Iterable[str] = ()) -> str:
    """
    Graphviz DOT text; the left child's edge is emitted before the right one.

    Example
    -------
    >>> from patricia_bridges import CHERRY
    >>> print(to_dot(CHERRY))
    digraph tree {
      node [shape=circle, label=""];
      "r";
      "r0" [shape=point];
      "r1" [shape=point];
      "r" -> "r0" [label="0"];
      "r" -> "r1" [label="1"];
    }

    """
    labels: Mapping[Word, int] = {}
    if isinstance(t, LabeledTree):
        labels, t = t.label_of, t.tree
    lines = [f"// {c}" for c in comments]
    lines += ["digraph tree {", '  node [shape=circle, label=""];']
    for v in t.sorted_vertices:
        if not t.is_leaf(v):
            lines.append(f'  "r{v}";')
        elif v in labels:
            lines.append(f'  "r{v}" [shape=box, label="{labels[v]}"];')
        else:
            lines.append(f'  "r{v}" [shape=point];')
    for v in t.sorted_vertices:
        lines.extend(f'  "r{v}" -> "r{c}" [label="{c[-1]}"];' for c in t.children(v))
    lines.append("}")
    return "\n".join(lines)


def dumps_record(record: Mapping[str, Any], /) -> str:
    """One compact JSON line with a stable key order."""
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)
