r"""
Finite didendritic systems.

A system on a finite label set $\mathcal{N}$ is an equivalence relation on
unordered label pairs, whose classes $\langle i, j \rangle$ are partially
ordered by $<$, split into a left part $<_L$ and a right part $<_R$.
Finite systems are exactly the leaf-labeled full binary trees: the class of
$(i, j)$ is the meet of the leaves labeled $i$ and $j$, and $a <_L b$ means
that $b$ lies in the left subtree of $a$.

"""

from collections.abc import Callable, Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import combinations, permutations
from typing import Any, NamedTuple

import numpy as np

from ._core._random import make_rng
from ._core._trees import FullBinaryTree, Label, LabeledTree
from ._core._words import Word, meet
from ._errors import (
    AxiomViolation,
    BadLabelSet,
    DegenerateSample,
    EmptySubset,
    MalformedTree,
    SeedAxiomViolation,
    TooLarge,
)


MAX_LABELS = 64

type Pair = tuple[Label, Label]
type ClassId = Pair
"""The smallest pair of a class under the label order."""
type Relation = frozenset[tuple[ClassId, ClassId]]


class Turn(StrEnum):
    """Which of two labels lies on the left below their meet."""

    RIGHT = "↷"
    """The first label lies in the left subtree."""
    LEFT = "↶"
    """The first label lies in the right subtree."""

    def flip(self) -> "Turn":
        return Turn.LEFT if self is Turn.RIGHT else Turn.RIGHT


class Violation(NamedTuple):
    """A failed axiom and a description of the offending labels or classes."""

    axiom: str
    message: str


def _pair(i: Label, j: Label) -> Pair:
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class FiniteDDS:
    """A candidate didendritic system; use :func:`check_axioms` to validate."""

    labels: tuple[Label, ...]
    class_of: Mapping[Pair, ClassId] = field(hash=False)
    lt: Relation
    lt_left: Relation
    lt_right: Relation

    def cls(self, i: Label, j: Label, /) -> ClassId:
        """The class of the unordered pair ``{i, j}``."""
        return self.class_of[_pair(i, j)]

    @property
    def classes(self) -> frozenset[ClassId]:
        return frozenset(self.class_of.values())

    def members(self, c: ClassId, /) -> list[Pair]:
        return sorted(p for p, q in self.class_of.items() if q == c)


@dataclass(frozen=True)
class LeftRightSeed:
    """The classes and order of a system plus the left/right choice ``w``."""

    labels: tuple[Label, ...]
    class_of: Mapping[Pair, ClassId] = field(hash=False)
    lt: Relation
    w: Mapping[tuple[Label, Label], Turn] = field(hash=False)

    def cls(self, i: Label, j: Label, /) -> ClassId:
        return self.class_of[_pair(i, j)]


def _guard(labels: tuple[Label, ...]) -> None:
    if len(labels) > MAX_LABELS:
        raise TooLarge(f"Systems are limited to {MAX_LABELS} labels, got {len(labels)}")


def _order_violations(name: str, rel: Relation) -> Iterable[Violation]:
    for a, b in rel:
        if a == b:
            yield Violation("order", f"{name} is not irreflexive at {a}")
    succ: dict[ClassId, set[ClassId]] = {}
    for a, b in rel:
        succ.setdefault(a, set()).add(b)
    for a, b in rel:
        for c in succ.get(b, ()):
            if (a, c) not in rel:
                yield Violation("order", f"{name} is not transitive at {a}, {b}, {c}")


def _class_violations(
    labels: tuple[Label, ...],
    class_of: Mapping[Pair, ClassId],
    relations: Iterable[Relation],
) -> list[Violation]:
    found = []
    if len(set(labels)) != len(labels):
        found.append(Violation("(A)", f"labels are not distinct: {labels=}"))
    for i in labels:
        for j in labels:
            if i <= j and (i, j) not in class_of:
                found.append(Violation("(A)", f"pair {(i, j)} has no class"))
    ids = set(class_of.values())
    for rel in relations:
        for a, b in rel:
            if a not in ids or b not in ids:
                found.append(Violation("(A)", f"unknown class in edge {a}, {b}"))
    return found


def _triplet_violations(
    labels: tuple[Label, ...],
    cls: Callable[[Label, Label], ClassId],
    lt: Relation,
) -> Iterable[Violation]:
    for i, j, k in combinations(labels, 3):
        holds = [
            cls(i, j) == cls(i, k) and (cls(i, j), cls(j, k)) in lt,
            cls(j, i) == cls(j, k) and (cls(j, i), cls(i, k)) in lt,
            cls(k, i) == cls(k, j) and (cls(k, i), cls(i, j)) in lt,
        ]
        if sum(holds) != 1:
            yield Violation(
                "(C)", f"{sum(holds)} of the triplet patterns hold for {(i, j, k)}"
            )


def check_axioms(d: FiniteDDS, /) -> list[Violation]:
    """
    All axiom violations of a candidate system.

    Parameters
    ----------
    d : FiniteDDS
        The candidate.

    Returns
    -------
    list[Violation]
        Empty iff ``d`` is a didendritic system. Structural problems
        (``"(A)"``) are reported alone since the other checks need them fixed.

    Example
    -------
    >>> [v.axiom for v in check_axioms(counterexample_dds())]
    ['(C)']

    """
    _guard(d.labels)
    found = _class_violations(d.labels, d.class_of, (d.lt, d.lt_left, d.lt_right))
    if found:
        return found
    for name, rel in (("<", d.lt), ("<_L", d.lt_left), ("<_R", d.lt_right)):
        found.extend(_order_violations(name, rel))
    for i, j in combinations(d.labels, 2):
        c, ci, cj = d.cls(i, j), d.cls(i, i), d.cls(j, j)
        left_first = (c, ci) in d.lt_left and (c, cj) in d.lt_right
        right_first = (c, ci) in d.lt_right and (c, cj) in d.lt_left
        if left_first == right_first:
            found.append(Violation("(B)", f"pair {(i, j)} is not split left/right"))
    found.extend(_triplet_violations(d.labels, d.cls, d.lt))
    if d.lt_left & d.lt_right:
        found.append(Violation("(D)", "<_L and <_R overlap"))
    if d.lt_left | d.lt_right != d.lt:
        found.append(Violation("(D)", "<_L and <_R do not partition <"))
    succ: dict[ClassId, set[ClassId]] = {}
    for a, b in d.lt:
        succ.setdefault(a, set()).add(b)
    for name, rel in (("<_L", d.lt_left), ("<_R", d.lt_right)):
        for a, b in rel:
            for c in succ.get(b, ()):
                if (a, c) not in rel:
                    found.append(
                        Violation("(E)", f"{a} {name} {b} < {c} but not {a} {name} {c}")
                    )
    return found


def _canonical(
    labels: Iterable[Label], key: Callable[[Label, Label], Hashable]
) -> dict[Pair, ClassId]:
    labels = sorted(labels)
    groups: dict[Hashable, list[Pair]] = {}
    for i in labels:
        for j in labels:
            if i <= j:
                groups.setdefault(key(i, j), []).append((i, j))
    return {p: min(ps) for ps in groups.values() for p in ps}


def dds_from_tree(lt: LabeledTree, /) -> FiniteDDS:
    """
    The system induced by a leaf-labeled full binary tree.

    The class of ``(i, j)`` is the meet of the leaves labeled ``i`` and
    ``j``; class ``a`` precedes class ``b`` when the meet word of ``a`` is a
    strict prefix of that of ``b``, on the left when the next bit is 0.

    Example
    -------
    >>> from patricia_bridges import CHERRY
    >>> d = dds_from_tree(LabeledTree.from_mapping(CHERRY, {"0": 1, "1": 2}))
    >>> sorted(d.classes), sorted(d.lt_left), sorted(d.lt_right)
    ([(1, 1), (1, 2), (2, 2)], [((1, 2), (1, 1))], [((1, 2), (2, 2))])

    """
    labels = tuple(sorted(lt.label_set))
    leaf = lt.leaf_of
    class_of = _canonical(labels, lambda i, j: meet(leaf[i], leaf[j]))
    word_of = {c: meet(leaf[c[0]], leaf[c[1]]) for c in class_of.values()}
    lt_, left, right = set(), set(), set()
    for a, u in word_of.items():
        for b, v in word_of.items():
            if len(u) < len(v) and v.startswith(u):
                lt_.add((a, b))
                (left if v[len(u)] == "0" else right).add((a, b))
    return FiniteDDS(
        labels, class_of, frozenset(lt_), frozenset(left), frozenset(right)
    )


def _root_class(
    labels: list[Label], cls: Callable[[Label, Label], ClassId], lt: Relation
) -> ClassId:
    off = {cls(i, j) for i, j in combinations(labels, 2)}
    roots = [c for c in off if not any((b, c) in lt for b in off)]
    if len(roots) != 1:
        raise AxiomViolation("(C)", f"no unique root class for {labels}: {roots}")
    return roots[0]


def _split(d: FiniteDDS, labels: list[Label]) -> dict[Label, Word]:
    if len(labels) == 1:
        return {labels[0]: ""}
    root = _root_class(labels, d.cls, d.lt)
    left = [g for g in labels if (root, d.cls(g, g)) in d.lt_left]
    right = [g for g in labels if (root, d.cls(g, g)) in d.lt_right]
    if not left or not right or sorted(left + right) != sorted(labels):
        raise AxiomViolation("(B)", f"root class {root} does not split {labels}")
    return {g: "0" + w for g, w in _split(d, left).items()} | {
        g: "1" + w for g, w in _split(d, right).items()
    }


def _tree_from_words(words: Mapping[Label, Word]) -> LabeledTree:
    vertices = {w[:k] for w in words.values() for k in range(len(w) + 1)}
    return LabeledTree.from_mapping(
        FullBinaryTree(frozenset(vertices)), {w: g for g, w in words.items()}
    )


def dds_to_tree(d: FiniteDDS, /) -> LabeledTree:
    """
    The labeled tree whose induced system is ``d``.

    The tree is built top-down: the root class ``⟨a, b⟩`` is the unique
    minimal class, the labels ``g`` with ``⟨a, b⟩ <_L g`` form the left
    subtree and the others the right one, and both sides are built from the
    restricted system.

    Raises
    ------
    AxiomViolation
        Naming the first failed axiom, if ``d`` is not a didendritic system.

    Example
    -------
    >>> try:
    ...     dds_to_tree(counterexample_dds())
    ... except AxiomViolation as e:
    ...     print(e.axiom)
    (C)

    """
    violations = check_axioms(d)
    if violations:
        raise AxiomViolation(*violations[0])
    result = _tree_from_words(_split(d, list(d.labels)))
    if dds_from_tree(result) != d:
        raise AxiomViolation("(E)", "the reconstructed tree induces a different system")
    return result


def seed_from_dds(d: FiniteDDS, /) -> LeftRightSeed:
    """The classes, order and left/right choice ``w`` of a system."""
    w = {
        (i, j): Turn.RIGHT if (d.cls(i, j), d.cls(i, i)) in d.lt_left else Turn.LEFT
        for i, j in permutations(d.labels, 2)
    }
    return LeftRightSeed(d.labels, d.class_of, d.lt, w)


def check_seed_axioms(seed: LeftRightSeed, /) -> list[Violation]:
    """All violations of the axioms a left/right seed must satisfy."""
    _guard(seed.labels)
    found = _class_violations(seed.labels, seed.class_of, (seed.lt,))
    if found:
        return found
    found.extend(_order_violations("<", seed.lt))
    for i, j in permutations(seed.labels, 2):
        c = seed.cls(i, j)
        if (c, seed.cls(i, i)) not in seed.lt:
            found.append(Violation("(B′)", f"{c} does not precede {i}"))
        w_ij, w_ji = seed.w.get((i, j)), seed.w.get((j, i))
        if w_ij is None or w_ji is None or w_ij == w_ji:
            found.append(Violation("(B″)", f"w is not antisymmetric on {(i, j)}"))
    found.extend(_triplet_violations(seed.labels, seed.cls, seed.lt))
    for i, j, k in permutations(seed.labels, 3):
        if (
            seed.cls(i, j) == seed.cls(i, k)
            and (seed.cls(i, j), seed.cls(j, k)) in seed.lt
            and seed.w.get((i, j)) != seed.w.get((i, k))
        ):
            found.append(Violation("(E′)", f"w({i},{j}) != w({i},{k})"))
    return found


def _split_seed(seed: LeftRightSeed, labels: list[Label]) -> dict[Label, Word]:
    if len(labels) == 1:
        return {labels[0]: ""}
    try:
        root = _root_class(labels, seed.cls, seed.lt)
    except AxiomViolation as e:
        raise SeedAxiomViolation(e.axiom, str(e)) from e
    a, b = next((i, j) for i, j in combinations(labels, 2) if seed.cls(i, j) == root)
    if seed.w[(a, b)] is Turn.LEFT:
        a, b = b, a
    left = [g for g in labels if g == a or (g != b and seed.cls(a, g) != root)]
    right = [g for g in labels if g not in left]
    for g in left:
        for h in right:
            if seed.cls(g, h) != root or seed.w[(g, h)] is not Turn.RIGHT:
                raise SeedAxiomViolation("(E′)", f"{g} and {h} disagree with {root}")
    return {g: "0" + w for g, w in _split_seed(seed, left).items()} | {
        g: "1" + w for g, w in _split_seed(seed, right).items()
    }


def left_right_extend(seed: LeftRightSeed, /) -> FiniteDDS:
    """
    Extend a seed to the unique system whose left/right split agrees with ``w``.

    ``⟨i, j⟩ <_L i`` exactly when ``w(i, j)`` is ``↷``.

    Raises
    ------
    SeedAxiomViolation
        Naming the first failed seed axiom.

    Example
    -------
    >>> s = LeftRightSeed(
    ...     (1, 2),
    ...     {(1, 1): (1, 1), (1, 2): (1, 2), (2, 2): (2, 2)},
    ...     frozenset({((1, 2), (1, 1)), ((1, 2), (2, 2))}),
    ...     {(1, 2): Turn.LEFT, (2, 1): Turn.RIGHT},
    ... )
    >>> sorted(left_right_extend(s).lt_left)
    [((1, 2), (2, 2))]

    """
    violations = check_seed_axioms(seed)
    if violations:
        raise SeedAxiomViolation(*violations[0])
    d = dds_from_tree(_tree_from_words(_split_seed(seed, list(seed.labels))))
    if dict(d.class_of) != dict(seed.class_of) or d.lt != seed.lt:
        raise SeedAxiomViolation("(C)", "classes and order are not those of a tree")
    return d


def restrict(d: FiniteDDS, subset: Iterable[Label], /) -> FiniteDDS:
    """
    The system induced on a subset of the labels.

    Example
    -------
    >>> from patricia_bridges import CHERRY
    >>> d = dds_from_tree(LabeledTree.from_mapping(CHERRY, {"0": 1, "1": 2}))
    >>> r = restrict(d, [2])
    >>> r.labels, dict(r.class_of), r.lt
    ((2,), {(2, 2): (2, 2)}, frozenset())

    """
    labels = tuple(sorted(set(subset)))
    if not labels:
        raise EmptySubset("restrict needs a non-empty subset")
    if not set(labels) <= set(d.labels):
        raise BadLabelSet(f"{labels=} is not a subset of {d.labels=}")
    class_of = _canonical(labels, d.cls)
    new_id = {d.class_of[p]: c for p, c in class_of.items()}

    def _map(rel: Relation) -> Relation:
        return frozenset(
            (new_id[a], new_id[b]) for a, b in rel if a in new_id and b in new_id
        )

    return FiniteDDS(labels, class_of, _map(d.lt), _map(d.lt_left), _map(d.lt_right))


def permute(d: FiniteDDS, sigma: Mapping[Label, Label], /) -> FiniteDDS:
    """
    The relabeled system ``D^σ``.

    ``(i, j)`` and ``(k, l)`` are equivalent in ``D^σ`` iff
    ``(σi, σj)`` and ``(σk, σl)`` are equivalent in ``D``; the three orders
    are transported the same way.

    """
    if sorted(sigma) != list(d.labels) or sorted(sigma.values()) != list(d.labels):
        raise BadLabelSet(f"{sigma=} is not a permutation of {d.labels=}")
    class_of = _canonical(d.labels, lambda i, j: d.cls(sigma[i], sigma[j]))
    old_to_new = {d.cls(sigma[i], sigma[j]): c for (i, j), c in class_of.items()}

    def _map(rel: Relation) -> Relation:
        return frozenset((old_to_new[a], old_to_new[b]) for a, b in rel)

    return FiniteDDS(d.labels, class_of, _map(d.lt), _map(d.lt_left), _map(d.lt_right))


def seed_from_meets[K: Hashable](
    labels: Iterable[Label],
    *,
    meet_of: Callable[[Label, Label], K],
    precedes: Callable[[K, K], bool],
    reaches: Callable[[K, Label], bool],
    w: Callable[[Label, Label], Turn],
) -> LeftRightSeed:
    """
    A seed whose classes are keyed by the meet point of each pair.

    Parameters
    ----------
    labels : Iterable[Label]
        The labels.
    meet_of : Callable[[Label, Label], K]
        The meet point of two distinct labels.
    precedes : Callable[[K, K], bool]
        The strict order of meet points.
    reaches : Callable[[K, Label], bool]
        Whether a meet point lies on the path from the root to a label's point.
    w : Callable[[Label, Label], Turn]
        The left/right choice for an ordered pair of distinct labels.

    Returns
    -------
    LeftRightSeed
        The seed; diagonal classes are singletons.

    """
    labels = tuple(sorted(labels))
    keys: dict[Pair, Hashable] = {(i, i): ("leaf", i) for i in labels}
    keys |= {(i, j): ("meet", meet_of(i, j)) for i, j in combinations(labels, 2)}
    class_of = _canonical(labels, lambda i, j: keys[(i, j)])
    point_of = {c: keys[c] for c in class_of.values()}
    lt = set()
    for a, (kind_a, ka) in point_of.items():
        if kind_a != "meet":
            continue
        for b, (kind_b, kb) in point_of.items():
            if kind_b == "meet" and precedes(ka, kb):
                lt.add((a, b))
            elif kind_b == "leaf" and reaches(ka, kb):
                lt.add((a, b))
    w_map = {(i, j): w(i, j) for i, j in permutations(labels, 2)}
    return LeftRightSeed(labels, class_of, frozenset(lt), w_map)


def zigzag_dds(n: int, seed: int, /) -> FiniteDDS:
    r"""
    The exchangeable zig-zag system on 1..n.

    Label ``i`` gets a uniform $U_i$ and a fair turn $\varepsilon_i$. The
    pairs are classed by $\min(U_i, U_j)$, and the label with the smaller
    uniform branches off to the right when its turn is ``↷`` and to the
    left otherwise.

    Raises
    ------
    DegenerateSample
        If two uniforms coincide.

    Example
    -------
    >>> len(zigzag_dds(4, 0).classes)
    7

    """
    if n < 1:
        raise BadLabelSet(f"{n=} must be at least 1")
    rng = make_rng(seed)
    u: dict[Label, float] = {}
    turn: dict[Label, Turn] = {}
    for i in range(1, n + 1):
        u[i] = float(rng.random())
        turn[i] = Turn.RIGHT if rng.random() < 0.5 else Turn.LEFT
    if len(set(u.values())) != n:
        raise DegenerateSample(f"Tied uniforms in zigzag_dds({n=}, {seed=})")

    def _w(i: Label, j: Label) -> Turn:
        return turn[i].flip() if u[i] < u[j] else turn[j]

    return left_right_extend(
        seed_from_meets(
            u,
            meet_of=lambda i, j: min(u[i], u[j]),
            precedes=lambda x, y: x < y,
            reaches=lambda x, k: x <= u[k],
            w=_w,
        )
    )


def counterexample_dds() -> FiniteDDS:
    """
    Three labels with six distinct classes.

    For ``i < j``, ``⟨i, j⟩ <_L i`` and ``⟨i, j⟩ <_R j``.

    Satisfies every axiom except the triplet property.

    """
    labels = (1, 2, 3)
    class_of = {_pair(i, j): _pair(i, j) for i in labels for j in labels}
    left = frozenset(((i, j), (i, i)) for i, j in combinations(labels, 2))
    right = frozenset(((i, j), (j, j)) for i, j in combinations(labels, 2))
    return FiniteDDS(labels, class_of, left | right, left, right)


def _id_text(c: ClassId) -> str:
    return f"({c[0]},{c[1]})"


def dds_to_json(d: FiniteDDS, /) -> dict[str, Any]:
    """The JSON document of a system."""

    def _rel(rel: Relation) -> list[list[str]]:
        return [[_id_text(a), _id_text(b)] for a, b in sorted(rel)]

    return {
        "labels": list(d.labels),
        "classes": [
            {"id": _id_text(c), "pairs": [list(p) for p in d.members(c)]}
            for c in sorted(d.classes)
        ],
        "lt": _rel(d.lt),
        "ltL": _rel(d.lt_left),
        "ltR": _rel(d.lt_right),
    }


def dds_from_json(obj: Mapping[str, Any], /) -> FiniteDDS:
    """
    Parse a system document; class ids are re-canonicalized.

    The result may violate the axioms; it is not checked here.

    """
    try:
        labels = tuple(sorted(int(i) for i in obj["labels"]))
        class_of: dict[Pair, ClassId] = {}
        id_map: dict[str, ClassId] = {}
        for entry in obj["classes"]:
            pairs = [_pair(int(i), int(j)) for i, j in entry["pairs"]]
            if not pairs:
                raise MalformedTree(f"Class {entry['id']} has no pairs")
            canonical = min(pairs)
            id_map[str(entry["id"])] = canonical
            for p in pairs:
                if p in class_of:
                    raise MalformedTree(f"Pair {p} belongs to two classes")
                class_of[p] = canonical

        def _rel(key: str) -> Relation:
            return frozenset(
                (id_map[str(a)], id_map[str(b)]) for a, b in obj.get(key, [])
            )

        return FiniteDDS(labels, class_of, _rel("lt"), _rel("ltL"), _rel("ltR"))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, MalformedTree):
            raise
        raise MalformedTree(f"Not a didendritic system document: {e!r}") from e


def random_corruption(d: FiniteDDS, rng: np.random.Generator, /) -> FiniteDDS:
    """
    Flip one order edge or merge two classes of ``d``.

    Used to probe :func:`check_axioms`.

    """
    classes = sorted(d.classes)
    if rng.random() < 0.5 and len(classes) > 1:
        i, j = rng.choice(len(classes), size=2, replace=False)
        a, b = classes[int(i)], classes[int(j)]
        keep = min(a, b)
        class_of = {p: keep if c in (a, b) else c for p, c in d.class_of.items()}

        def _map(rel: Relation) -> Relation:
            return frozenset(
                (keep if x in (a, b) else x, keep if y in (a, b) else y) for x, y in rel
            )

        return FiniteDDS(
            d.labels, class_of, _map(d.lt), _map(d.lt_left), _map(d.lt_right)
        )
    a, b = (classes[int(k)] for k in rng.integers(len(classes), size=2))
    edge = (a, b)
    flipped = d.lt_left ^ {edge}
    return FiniteDDS(d.labels, d.class_of, d.lt, flipped, d.lt_right)
