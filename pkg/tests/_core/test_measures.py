import itertools
import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from patricia_bridges._core._measures import (
    FairCoin,
    Prefixed,
    ProductBernoulli,
    SourceMeasure,
    parse_measure,
)
from patricia_bridges._errors import MeasureSpecError, NotDiffuse, ZeroMassLeaf
from tests._strategies import words


@pytest.mark.parametrize(
    "text, expected",
    [
        ("fair", FairCoin()),
        ("harmonic", ProductBernoulli.harmonic()),
        ("bernoulli:1/3", ProductBernoulli.constant(Fraction(1, 3))),
        ("bernoulli:0.5", ProductBernoulli.constant(Fraction(1, 2))),
        ("prefix:e,fair", Prefixed("", FairCoin())),
        ("prefix:10,harmonic", Prefixed("10", ProductBernoulli.harmonic())),
    ],
)
def test_parse_measure(text: str, expected: SourceMeasure) -> None:
    nu = parse_measure(text)
    assert nu == expected
    assert parse_measure(nu.spec) == nu


@pytest.mark.parametrize(
    "text",
    ["", "unfair", "fair:1", "bernoulli:x", "bernoulli:0", "bernoulli:1", "prefix:01"],
)
def test_parse_measure_rejects(text: str) -> None:
    with pytest.raises(MeasureSpecError):
        parse_measure(text)


def test_constant_must_be_diffuse() -> None:
    with pytest.raises(NotDiffuse):
        ProductBernoulli.constant(Fraction(1))


@given(words)
def test_fair_cylinder(y: str) -> None:
    assert FairCoin().cylinder_prob(y) == Fraction(1, 2 ** len(y))


@given(words)
def test_cylinders_split(y: str) -> None:
    nu = ProductBernoulli.harmonic()
    assert nu.cylinder_prob(y) == nu.cylinder_prob(y + "0") + nu.cylinder_prob(
        y + "1"
    )


def test_harmonic_coordinates() -> None:
    nu = ProductBernoulli.harmonic()
    assert [nu.prob_one(j) for j in (1, 2, 3)] == [
        Fraction(1, 2),
        Fraction(1, 3),
        Fraction(1, 4),
    ]
    np.testing.assert_allclose(nu.prob_one_array(1, 4), [1 / 2, 1 / 3, 1 / 4])


def test_prefixed_measure() -> None:
    nu = Prefixed("01", FairCoin())
    assert nu.cylinder_prob("01") == 1
    assert nu.cylinder_prob("1") == 0
    assert nu.sample(0).prefix(2) == "01"


@given(st.integers(0, 2**32))
def test_conditional_sample_starts_with_condition(seed: int) -> None:
    z = ProductBernoulli.harmonic().conditional_sample("0110", seed)
    assert z.prefix(30).startswith("0110")


def test_conditional_sample_zero_mass() -> None:
    with pytest.raises(ZeroMassLeaf):
        Prefixed("0", FairCoin()).conditional_sample("1", 0)


def test_bernoulli_frequency() -> None:
    z = ProductBernoulli.constant(Fraction(1, 4)).sample(0)
    frequency = z.prefix(20_000).count("1") / 20_000
    assert abs(frequency - 0.25) < 0.02


@pytest.mark.parametrize(
    "text", ["fair", "harmonic", "bernoulli:1/3", "prefix:10,harmonic"]
)
@pytest.mark.parametrize("k", [0, 1, 4, 9])
def test_cylinders_sum_to_one(text: str, k: int) -> None:
    nu = parse_measure(text)
    total = sum(
        nu.cylinder_prob("".join(bits)) for bits in itertools.product("01", repeat=k)
    )
    assert total == 1


@pytest.mark.parametrize("ell", range(1, 51))
def test_harmonic_first_one(ell: int) -> None:
    p = ProductBernoulli.harmonic().cylinder_prob("0" * (ell - 1) + "1")
    assert isinstance(p, Fraction)
    assert p == Fraction(1, ell * (ell + 1))


@pytest.mark.parametrize("text", ["fair", "harmonic", "bernoulli:1/3"])
def test_prefix_frequencies(text: str) -> None:
    nu = parse_measure(text)
    trials = 20_000
    counts = Counter(nu.sample(seed).prefix(2) for seed in range(trials))
    for bits in itertools.product("01", repeat=2):
        y = "".join(bits)
        p = float(nu.cylinder_prob(y))
        sigma = math.sqrt(p * (1 - p) / trials)
        assert abs(counts[y] / trials - p) <= 4 * sigma
