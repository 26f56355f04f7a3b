"""Acceptance experiments, one :class:`ExperimentReport` each."""

import logging
import math
from collections import Counter
from collections.abc import Sequence
from functools import partial
from itertools import combinations, pairwise, product

import numpy as np
from scipy.stats import chi2_contingency

from ._bridges import caterpillar, zigzag_spines
from ._chains import ChainSpec, parse_chain, simulate
from ._core._measures import FairCoin
from ._core._random import DEFAULT_SEED, make_rng, trial_seeds
from ._core._serialize import TreeLike, to_newick
from ._core._trees import (
    TRIVIAL,
    BinaryTree,
    FullBinaryTree,
    LabeledTree,
    enumerate_full_trees,
    enumerate_labeled_trees,
    height,
    patricia_contract,
    uniform_labeling,
)
from ._core._words import Word
from ._didendritic import (
    check_axioms,
    counterexample_dds,
    dds_from_tree,
    dds_to_tree,
    left_right_extend,
    permute,
    random_corruption,
    restrict,
    seed_from_dds,
    zigzag_dds,
)
from ._errors import (
    AxiomViolation,
    DegenerateSample,
    PropertyLRViolated,
    PropertyTViolated,
    SeedAxiomViolation,
)
from ._kernels import RadixSortTree, backward_sample, sample_inputs
from ._parallel import run_trials
from ._stats import (
    DYNKIN_EXACT,
    ExperimentReport,
    Statistic,
    dynkin_gap,
    empirical_law,
    exact_backward_kernel,
    kernel_check,
    total_variation,
    tv_tolerance,
    uniformity_test,
)

logger = logging.getLogger(__name__)

BALANCED = FullBinaryTree.from_words(["", "0", "1", "00", "01", "10", "11"])
"""The four-leaf tree whose backward kernel has two atoms of mass 1/2."""
UNIVERSALITY_CHAINS = ("patricia:fair", "patricia:harmonic", "remy")
BRIDGE_SAMPLERS = (
    "zigzag-bridge",
    "rtree:interval",
    "rtree:binary:fair",
    "patricia:fair",
    "bridge-from:(((*,*),*),(*,*))",
)
"""Samplers whose consecutive steps must follow the exact backward kernel."""


def caterpillars(n: int, /) -> list[FullBinaryTree]:
    """
    The ``2 ** (n - 2)`` caterpillars with ``n >= 2`` leaves.

    Example
    -------
    >>> [t.leaves for t in caterpillars(3)]
    [('00', '01', '1'), ('0', '10', '11')]

    """
    if n < 2:
        return [TRIVIAL]
    return [caterpillar("".join(w) + "0") for w in product("01", repeat=n - 2)]


def _uniform(trees: Sequence[BinaryTree]) -> dict[frozenset[Word], float]:
    return {t.vertices: 1 / len(trees) for t in trees}


def _shape(t: TreeLike) -> FullBinaryTree:
    if isinstance(t, LabeledTree):
        return t.tree
    if isinstance(t, FullBinaryTree):
        return t
    return FullBinaryTree(t.vertices)


def _truncate(t: BinaryTree, depth: int) -> FullBinaryTree:
    return FullBinaryTree(frozenset(v for v in t.vertices if len(v) <= depth))


def _consecutive_pairs(
    spec: ChainSpec, n_max: int, seed: int
) -> list[tuple[FullBinaryTree, FullBinaryTree]]:
    try:
        path = [_shape(t) for t in simulate(spec, n_max, seed)]
    except DegenerateSample:
        logger.debug("Discarded a degenerate %s trajectory, %s", spec.text, seed)
        return []
    return list(pairwise(path))


def _final_tree(spec: ChainSpec, n: int, seed: int) -> FullBinaryTree | None:
    try:
        return _shape(simulate(spec, n, seed)[-1])
    except DegenerateSample:
        logger.debug("Discarded a degenerate %s trajectory, %s", spec.text, seed)
    except (PropertyTViolated, PropertyLRViolated) as e:
        logger.warning("Model check failed for %s, %s: %s", spec.text, seed, e)
    return None


def _backward_counts(
    trials: int, item: tuple[FullBinaryTree, int]
) -> Counter[frozenset[Word]]:
    t, seed = item
    rng = make_rng(seed)
    return Counter(backward_sample(t, rng).vertices for _ in range(trials))


def verify_backward_kernel(
    *,
    n_values: Sequence[int] = (2, 3, 4, 5),
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    tv_threshold: float = 0.01,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """Empirical :func:`backward_sample` laws against the exact kernel, per tree."""
    trees = [t for n in n_values for t in enumerate_full_trees(n)]
    items = list(zip(trees, trial_seeds(seed, len(trees)), strict=True))
    counts = run_trials(
        partial(_backward_counts, trials),
        items,
        jobs=jobs,
        desc="backward kernel",
        progress=progress,
    )
    statistics = []
    for t, count in zip(trees, counts, strict=True):
        exact = {s.vertices: p for s, p in exact_backward_kernel(t).masses.items()}
        tv = total_variation({k: c / trials for k, c in count.items()}, exact)
        statistics.append(
            Statistic(
                f"kernel_tv[{to_newick(t)}]",
                tv,
                t.n_leaves,
                upper=tv_tolerance(exact, trials, tv_threshold),
            )
        )
    return ExperimentReport.evaluate(
        "kernel",
        {"n_values": list(n_values), "tv_threshold": tv_threshold},
        trials,
        seed,
        statistics,
    )


def _final_pair(
    spec: ChainSpec, n: int, seed: int
) -> tuple[FullBinaryTree, FullBinaryTree] | None:
    pairs = _consecutive_pairs(spec, n, seed)
    return pairs[-1] if pairs else None


def verify_universality(
    *,
    endpoint: FullBinaryTree = BALANCED,
    chains: Sequence[str] = UNIVERSALITY_CHAINS,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    tv_threshold: float = 0.02,
    min_count: int = 100,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """
    The backward law into ``endpoint`` is the same for every chain.

    Each chain is run to ``endpoint.n_leaves`` leaves and the previous state
    of the trajectories that end at ``endpoint`` is compared with the exact
    kernel.

    """
    n = endpoint.n_leaves
    statistics = []
    for chain, chain_seed in zip(chains, trial_seeds(seed, len(chains)), strict=True):
        pairs = run_trials(
            partial(_final_pair, parse_chain(chain), n),
            trial_seeds(chain_seed, trials),
            jobs=jobs,
            desc=chain,
            progress=progress,
        )
        hits = [p for p in pairs if p is not None and p[1] == endpoint]
        statistics.append(
            Statistic(f"{chain}:conditioned", float(len(hits)), n, lower=min_count)
        )
        statistics += kernel_check(
            hits, name=f"{chain}:kernel_tv", min_count=1, tv_threshold=tv_threshold
        )
    return ExperimentReport.evaluate(
        "universality",
        {
            "endpoint": to_newick(endpoint),
            "chains": list(chains),
            "tv_threshold": tv_threshold,
        },
        trials,
        seed,
        statistics,
    )


def verify_remy_uniform(
    *,
    n: int = 5,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    tv_threshold: float = 0.02,
    alpha: float = 0.001,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """The Rémy chain at step ``n`` against the uniform law."""
    finals = run_trials(
        partial(_final_tree, parse_chain("remy"), n),
        trial_seeds(seed, trials),
        jobs=jobs,
        desc="remy",
        progress=progress,
    )
    return uniformity_test(
        [t for t in finals if t is not None],
        n,
        name="remy-uniform",
        seed=seed,
        tv_threshold=tv_threshold,
        alpha=alpha,
    )


def verify_dynkin(
    *,
    trials: int = 1_000_000,
    seed: int = DEFAULT_SEED,
    tolerance: float = 0.005,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """:func:`dynkin_gap` against its exact targets 1/4 and 3/8."""
    estimates = dynkin_gap(trials, seed, jobs=jobs, progress=progress)
    statistics = []
    for label, estimate, exact in zip(
        ("from_shallow_start", "from_deep_start"), estimates, DYNKIN_EXACT, strict=True
    ):
        p = float(exact)
        band = max(tolerance, 5 * math.sqrt(p * (1 - p) / trials))
        statistics += [
            Statistic(label, estimate, 4, p - band, p + band),
            Statistic(f"{label}_exact", p, 4),
        ]
    return ExperimentReport.evaluate(
        "dynkin", {"tolerance": tolerance}, trials, seed, statistics
    )


def verify_bridge_kernel(
    *,
    samplers: Sequence[str] = BRIDGE_SAMPLERS,
    n_max: int = 5,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    tv_threshold: float = 0.02,
    min_count: int | None = None,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """
    Consecutive steps of every sampler follow the exact backward kernel.

    ``patricia:fair`` is the contracted radix chain, so its entry checks
    that the image of a radix trajectory is again a bridge.

    """
    if min_count is None:
        min_count = max(30, trials // 200)
    statistics = []
    for sampler, s in zip(samplers, trial_seeds(seed, len(samplers)), strict=True):
        per_trial = run_trials(
            partial(_consecutive_pairs, parse_chain(sampler), n_max),
            trial_seeds(s, trials),
            jobs=jobs,
            desc=sampler,
            progress=progress,
        )
        checks = kernel_check(
            (pair for pairs in per_trial for pair in pairs),
            name=f"{sampler}:kernel_tv",
            min_count=min_count,
            tv_threshold=tv_threshold,
        )
        statistics.append(
            Statistic(f"{sampler}:endpoints_checked", float(len(checks)), lower=1)
        )
        statistics += checks
    return ExperimentReport.evaluate(
        "bridge-kernel",
        {
            "samplers": list(samplers),
            "n_max": n_max,
            "min_count": min_count,
            "tv_threshold": tv_threshold,
        },
        trials,
        seed,
        statistics,
    )


def _zigzag_height_error(n_max: int, seed: int) -> int:
    return max(
        abs(height(caterpillar(spine)) - (n - 1))
        for n, spine in enumerate(zigzag_spines(n_max, seed), start=1)
    )


def _zigzag_marginals(
    m: int, n: int, seed: int
) -> tuple[FullBinaryTree, FullBinaryTree, FullBinaryTree]:
    spines = list(zigzag_spines(max(n, 4), seed))
    return (
        caterpillar(spines[2]),
        caterpillar(spines[3]),
        _truncate(caterpillar(spines[n - 1]), m - 1),
    )


def _zigzag_persistence(window: int, m_max: int, seed: int) -> BinaryTree:
    common: frozenset[Word] | None = None
    for n, spine in enumerate(zigzag_spines(window, seed), start=1):
        if n >= m_max:
            vertices = caterpillar(spine).vertices
            common = vertices if common is None else common & vertices
    return BinaryTree._unchecked(common or {""})


def _patricia_persistence(window: int, m_max: int, seed: int) -> BinaryTree:
    builder = RadixSortTree()
    common: frozenset[Word] | None = None
    for n, z in enumerate(sample_inputs(FairCoin(), window, seed), start=1):
        builder.insert(z)
        if n >= m_max:
            vertices = patricia_contract(builder.tree()).vertices
            common = vertices if common is None else common & vertices
    return BinaryTree._unchecked(common or {""})


def _max_internal_per_depth(t: BinaryTree) -> int:
    widths = Counter(len(v) for v in t.vertices if not t.is_leaf(v))
    return max(widths.values(), default=0)


def zigzag_persistence_probability(window: int, m_max: int, /) -> float:
    """
    The exact probability that the zig-zag persistence set exceeds the cherry.

    It is the probability that the first turn of the spine never changes
    between steps ``m_max`` and ``window``.

    Example
    -------
    >>> zigzag_persistence_probability(3, 2)
    0.75

    """
    return math.prod(1 - 1 / (2 * (n - 1)) for n in range(m_max + 1, window + 1))


def verify_zigzag(
    *,
    trials: int = 100,
    n_height: int = 200,
    window: int = 512,
    m_max: int | None = None,
    marginal_trials: int = 100_000,
    restriction: tuple[int, int] = (3, 10),
    seed: int = DEFAULT_SEED,
    tv_threshold: float = 0.02,
    fill_depth: int = 3,
    fill_frequency: float = 0.99,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """
    Exact heights, marginals and persistence of the zig-zag bridge.

    The persistence set over ``[m_max, window]`` is compared with its exact
    law and with the fair PATRICIA chain, whose persistence set fills every
    word of length at most ``fill_depth``.

    """
    if m_max is None:
        m_max = max(3, window // 4)
    m, n = restriction
    height_seed, marginal_seed, persistence_seed, fill_seed = trial_seeds(seed, 4)
    errors = run_trials(
        partial(_zigzag_height_error, n_height),
        trial_seeds(height_seed, trials),
        jobs=jobs,
        desc="zigzag heights",
        progress=progress,
    )
    statistics = [Statistic("max_height_error", float(max(errors)), n_height, 0, 0)]

    marginals = run_trials(
        partial(_zigzag_marginals, m, n),
        trial_seeds(marginal_seed, marginal_trials),
        jobs=jobs,
        desc="zigzag marginals",
        progress=progress,
    )
    for k, (label, size) in enumerate(
        (("marginal_tv", 3), ("marginal_tv", 4), ("restriction_tv", m))
    ):
        law = _uniform(caterpillars(size))
        tv = total_variation(empirical_law(s[k].vertices for s in marginals), law)
        statistics.append(
            Statistic(
                label,
                tv,
                size if k < 2 else n,
                upper=tv_tolerance(law, marginal_trials, tv_threshold),
            )
        )

    persistence = run_trials(
        partial(_zigzag_persistence, window, m_max),
        trial_seeds(persistence_seed, trials),
        jobs=jobs,
        desc="zigzag persistence",
        progress=progress,
    )
    exact = zigzag_persistence_probability(window, m_max)
    band = max(0.05, 5 * math.sqrt(exact * (1 - exact) / trials))
    frequency = sum(len(t.vertices) > 3 for t in persistence) / trials
    statistics += [
        Statistic(
            "persistence_exceeds_cherry", frequency, window, exact - band, exact + band
        ),
        Statistic("persistence_exceeds_cherry_exact", exact, window),
        Statistic(
            "persistence_max_width",
            float(max(map(_max_internal_per_depth, persistence))),
            window,
            upper=1,
        ),
    ]

    full = frozenset(
        "".join(w) for k in range(fill_depth + 1) for w in product("01", repeat=k)
    )
    fills = run_trials(
        partial(_patricia_persistence, window, m_max),
        trial_seeds(fill_seed, trials),
        jobs=jobs,
        desc="patricia persistence",
        progress=progress,
    )
    statistics.append(
        Statistic(
            "patricia_persistence_fills",
            sum(full <= t.vertices for t in fills) / trials,
            window,
            lower=fill_frequency,
        )
    )
    return ExperimentReport.evaluate(
        "zigzag",
        {
            "n_height": n_height,
            "window": window,
            "m_max": m_max,
            "marginal_trials": marginal_trials,
            "restriction": [m, n],
            "fill_depth": fill_depth,
        },
        trials,
        seed,
        statistics,
    )


def verify_rtree(
    *,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    tv_threshold: float = 0.02,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """
    Marginals of the two built-in models.

    The interval model at three leaves is compared with the exact zig-zag
    marginal, the binary model at four leaves with a direct simulation of
    the fair PATRICIA chain. The fraction of draws passing the model checks
    must be 1.

    """
    interval_seed, binary_seed, patricia_seed = trial_seeds(seed, 3)

    def _run(chain: str, n: int, s: int) -> list[FullBinaryTree | None]:
        return run_trials(
            partial(_final_tree, parse_chain(chain), n),
            trial_seeds(s, trials),
            jobs=jobs,
            desc=chain,
            progress=progress,
        )

    interval = _run("rtree:interval", 3, interval_seed)
    binary = _run("rtree:binary:fair", 4, binary_seed)
    patricia = [t for t in _run("patricia:fair", 4, patricia_seed) if t is not None]
    drawn = [t for t in interval + binary if t is not None]
    statistics = [
        Statistic(
            "model_check_pass_fraction",
            len(drawn) / (len(interval) + len(binary)),
            lower=1,
            upper=1,
        )
    ]
    exact = _uniform(caterpillars(3))
    interval_law = empirical_law(t.vertices for t in interval if t is not None)
    statistics.append(
        Statistic(
            "interval_tv",
            total_variation(interval_law, exact),
            3,
            upper=tv_tolerance(exact, trials, tv_threshold),
        )
    )
    binary_trees = [t for t in binary if t is not None]
    reference = empirical_law(t.vertices for t in patricia)
    effective = len(binary_trees) * len(patricia) / (len(binary_trees) + len(patricia))
    statistics.append(
        Statistic(
            "binary_vs_patricia_tv",
            total_variation(empirical_law(t.vertices for t in binary_trees), reference),
            4,
            upper=tv_tolerance(reference, effective, tv_threshold),
        )
    )
    return ExperimentReport.evaluate(
        "rtree", {"tv_threshold": tv_threshold}, trials, seed, statistics
    )


def verify_dds(
    *,
    max_leaves: int = 5,
    corruptions: int = 1_000,
    seed: int = DEFAULT_SEED,
) -> ExperimentReport:
    """
    Exhaustive round trips between labeled trees and systems.

    For every labeled tree with at most ``max_leaves`` leaves, the induced
    system must satisfy the axioms, map back to the tree and be rebuilt by
    :func:`left_right_extend` from its seed. The counterexample must fail
    the triplet property, and every random corruption must be rejected by
    the checker or map back to a different tree.

    """
    statistics = []
    cases = 0
    for n in range(1, max_leaves + 1):
        invalid = round_trip = extension = total = 0
        for lt in enumerate_labeled_trees(n):
            total += 1
            d = dds_from_tree(lt)
            if check_axioms(d):
                invalid += 1
                continue
            try:
                round_trip += dds_to_tree(d) != lt
            except AxiomViolation:
                round_trip += 1
            try:
                extension += left_right_extend(seed_from_dds(d)) != d
            except SeedAxiomViolation:
                extension += 1
        cases += total
        statistics += [
            Statistic("cases", float(total), n),
            Statistic("axiom_failures", float(invalid), n, 0, 0),
            Statistic("round_trip_failures", float(round_trip), n, 0, 0),
            Statistic("extension_failures", float(extension), n, 0, 0),
        ]
    axioms = {v.axiom for v in check_axioms(counterexample_dds())}
    statistics.append(
        Statistic("counterexample_fails_triplet", float("(C)" in axioms), 3, 1, 1)
    )
    rng = make_rng(seed)
    size = min(max_leaves, 4)
    trees = enumerate_full_trees(size)
    rejected = detected = 0
    for _ in range(corruptions):
        lt = uniform_labeling(trees[int(rng.integers(len(trees)))], rng)
        corrupted = random_corruption(dds_from_tree(lt), rng)
        if check_axioms(corrupted):
            rejected += 1
            detected += 1
            continue
        try:
            detected += dds_to_tree(corrupted) != lt
        except AxiomViolation:
            detected += 1
    if corruptions:
        statistics += [
            Statistic("corruption_rejection_rate", rejected / corruptions, size),
            Statistic("corruption_detection_rate", detected / corruptions, size, 1, 1),
        ]
    return ExperimentReport.evaluate(
        "dds",
        {"max_leaves": max_leaves, "corruptions": corruptions},
        cases,
        seed,
        statistics,
    )


def _zigzag_dds_sample(seed: int) -> tuple[LabeledTree, Word, Word] | None:
    three_seed, four_seed = trial_seeds(seed, 2)
    try:
        three = dds_to_tree(zigzag_dds(3, three_seed))
        four = zigzag_dds(4, four_seed)
    except DegenerateSample:
        logger.debug("Discarded a degenerate zig-zag system, %s", seed)
        return None
    return (
        three,
        dds_to_tree(restrict(four, (1, 2))).leaf_of[1],
        dds_to_tree(restrict(four, (3, 4))).leaf_of[3],
    )


def _transport(lt: LabeledTree, sigma: dict[int, int]) -> LabeledTree:
    return dds_to_tree(permute(dds_from_tree(lt), sigma))


def verify_exchangeability(
    *,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    tv_threshold: float = 0.02,
    alpha: float = 0.001,
    jobs: int = 1,
    progress: bool | None = False,
) -> ExperimentReport:
    """
    Exchangeability and independence proxies of the zig-zag system.

    The law of the system on three labels must not change under
    transpositions (it is uniform on the twelve labeled trees), and the
    restrictions of the system on four labels to ``{1, 2}`` and ``{3, 4}``
    must be independent.

    """
    samples = [
        s
        for s in run_trials(
            _zigzag_dds_sample,
            trial_seeds(seed, trials),
            jobs=jobs,
            desc="zigzag systems",
            progress=progress,
        )
        if s is not None
    ]
    law = empirical_law(three for three, _, _ in samples)
    statistics = []
    for i, j in combinations((1, 2, 3), 2):
        sigma = {1: 1, 2: 2, 3: 3} | {i: j, j: i}
        moved: dict[LabeledTree, float] = {}
        for lt, p in law.items():
            key = _transport(lt, sigma)
            moved[key] = moved.get(key, 0.0) + p
        statistics.append(
            Statistic(
                f"transposition_tv[{i}{j}]",
                total_variation(law, moved),
                3,
                upper=tv_tolerance(law, len(samples) / 2, tv_threshold),
            )
        )
    uniform = {lt: 1 / 12 for lt in enumerate_labeled_trees(3)}
    statistics.append(
        Statistic(
            "uniform_tv",
            total_variation(law, uniform),
            3,
            upper=tv_tolerance(uniform, len(samples), tv_threshold),
        )
    )
    table = np.zeros((2, 2), dtype=np.int64)
    for _, a, b in samples:
        table[int(a), int(b)] += 1
    if (table.sum(axis=0) == 0).any() or (table.sum(axis=1) == 0).any():
        logger.warning("Independence table has an empty margin: %s", table.tolist())
        pvalue = 1.0
    else:
        pvalue = float(chi2_contingency(table).pvalue)
    statistics.append(Statistic("independence_pvalue", pvalue, 4, lower=alpha))
    return ExperimentReport.evaluate(
        "exchangeability",
        {"tv_threshold": tv_threshold, "alpha": alpha},
        trials,
        seed,
        statistics,
    )
