import pytest
from hypothesis import given

from patricia_bridges._core._measures import FairCoin, ProductBernoulli
from patricia_bridges._core._words import (
    PrefixRelation,
    WordStream,
    lex_compare,
    meet,
    parse_word,
    prefix_rel,
    sibling,
)
from patricia_bridges._errors import (
    DepthCapExceeded,
    IncomparabilityViolated,
    MalformedTree,
)
from tests._strategies import nonempty_words, words


@pytest.mark.parametrize("text", ["2", "0a1", " 01"])
def test_parse_word_rejects(text: str) -> None:
    with pytest.raises(MalformedTree):
        parse_word(text)


def test_sibling_of_root() -> None:
    with pytest.raises(MalformedTree):
        sibling("")


@given(nonempty_words)
def test_sibling_involution(w: str) -> None:
    assert sibling(sibling(w)) == w
    assert sibling(w) != w
    assert sibling(w)[:-1] == w[:-1]


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ("", "", PrefixRelation.EQ),
        ("", "1", PrefixRelation.LT),
        ("10", "1", PrefixRelation.GT),
        ("10", "11", PrefixRelation.INCOMPARABLE),
        ("0", "1", PrefixRelation.INCOMPARABLE),
    ],
)
def test_prefix_rel(u: str, v: str, expected: PrefixRelation) -> None:
    assert prefix_rel(u, v) is expected


@given(words, words)
def test_prefix_rel_antisymmetric(u: str, v: str) -> None:
    flipped = {
        PrefixRelation.LT: PrefixRelation.GT,
        PrefixRelation.GT: PrefixRelation.LT,
    }
    rel = prefix_rel(u, v)
    assert prefix_rel(v, u) is flipped.get(rel, rel)


def test_lex_compare_rejects_prefixes() -> None:
    with pytest.raises(IncomparabilityViolated):
        lex_compare("0", "01")


@given(words, words)
def test_lex_compare_matches_meet(u: str, v: str) -> None:
    if prefix_rel(u, v) is not PrefixRelation.INCOMPARABLE:
        return
    m = meet(u, v)
    assert lex_compare(u, v) == (-1 if u[len(m)] == "0" else 1)
    assert lex_compare(v, u) == -lex_compare(u, v)


@given(words, words)
def test_meet_is_common_prefix(u: str, v: str) -> None:
    m = meet(u, v)
    assert u.startswith(m)
    assert v.startswith(m)
    if len(m) < min(len(u), len(v)):
        assert u[len(m)] != v[len(m)]


def test_stream_is_reproducible() -> None:
    z = WordStream(FairCoin(), 3)
    first = z.prefix(200)
    assert len(first) == 200
    assert set(first) <= {"0", "1"}
    assert z.prefix(100) == first[:100]
    assert z.clone().prefix(200) == first
    assert WordStream(FairCoin(), 3).bit(150) == first[150]


def test_stream_head() -> None:
    z = WordStream(FairCoin(), 0, head="0110")
    assert z.prefix(4) == "0110"
    assert z.prefix(70)[:4] == "0110"
    assert z.clone().prefix(70) == z.prefix(70)


def test_meet_with_streams() -> None:
    z = WordStream(FairCoin(), 1)
    w = z.prefix(10)
    assert meet(z, w) == w
    assert meet(w, z) == w
    other = WordStream(FairCoin(), 1, head=w + sibling(z.bit(10)))
    assert meet(z, other) == w


def test_meet_depth_cap() -> None:
    z = WordStream(FairCoin(), 5)
    with pytest.raises(DepthCapExceeded):
        meet(z, z.clone(), depth_cap=64)


def test_harmonic_stream_is_mostly_zeros() -> None:
    z = WordStream(ProductBernoulli.harmonic(), 0)
    assert z.prefix(2000).count("1") < 50
