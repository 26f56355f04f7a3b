r"""
Exact oracles and Monte Carlo statistics for the tree chains.

Exact quantities (backward kernels, the Dynkin targets, the union bound for
the harmonic height event) are rational or closed-form; every Monte Carlo
estimate is a pure function of its parameters and seed and is wrapped in an
:class:`ExperimentReport` whose statistics carry their own pass bands.

"""

import csv
import io
import logging
import math
from collections import Counter, defaultdict
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Self

import numpy as np
from numpy.typing import NDArray
from scipy.stats import chisquare

from ._bridges import caterpillar, zigzag_spines
from ._chains import ChainSpec, parse_chain
from ._core._measures import FairCoin, ProductBernoulli, SourceMeasure
from ._core._random import make_rng, trial_seeds
from ._core._serialize import to_newick
from ._core._trees import (
    BinaryTree,
    FullBinaryTree,
    enumerate_full_trees,
    height,
    patricia_contract,
    span_tree,
)
from ._core._words import DEPTH_CAP, WordStream
from ._errors import EmptyInput, MeasureSpecError, TooLarge, WrongLeafCount
from ._kernels import (
    RadixSortTree,
    kappa_bar,
    radix_sort_tree,
    remy_heights,
    sample_inputs,
)
from ._parallel import run_trials

logger = logging.getLogger(__name__)

MAX_UNIFORMITY_LEAVES = 8
NOISE_FACTOR = 4.0
"""Total variation tolerances are at least this many expected noise levels."""


def tree_sort_key(t: BinaryTree, /) -> tuple[int, tuple[str, ...]]:
    """Leaf count, then the lexicographic leaf tuple."""
    return t.n_leaves, t.leaves


@dataclass(frozen=True)
class KernelTable:
    """The exact backward transition law out of ``endpoint``."""

    endpoint: FullBinaryTree
    masses: Mapping[FullBinaryTree, Fraction] = field(hash=False)


def exact_backward_kernel(t: BinaryTree, /) -> KernelTable:
    """
    The backward kernel of a full tree, by enumerating its leaves.

    Each leaf carries mass ``1 / n_leaves`` to its ``kappa_bar`` image.

    Parameters
    ----------
    t : BinaryTree
        A full tree with at least two leaves.

    Returns
    -------
    KernelTable
        Exact masses, ordered by :func:`tree_sort_key`.

    Example
    -------
    >>> from patricia_bridges import FullBinaryTree
    >>> balanced = FullBinaryTree.from_words(["", "0", "1", "00", "01", "10", "11"])
    >>> {s.leaves: p for s, p in exact_backward_kernel(balanced).masses.items()}
    {('0', '10', '11'): Fraction(1, 2), ('00', '01', '1'): Fraction(1, 2)}

    """
    if not isinstance(t, FullBinaryTree):
        t = FullBinaryTree(t.vertices)
    if t.n_leaves < 2:
        raise EmptyInput("The trivial tree has no backward kernel")
    counts = Counter(kappa_bar(t, v) for v in t.leaves)
    masses = {
        s: Fraction(counts[s], t.n_leaves) for s in sorted(counts, key=tree_sort_key)
    }
    return KernelTable(t, masses)


def total_variation[K: Hashable](
    p: Mapping[K, float | Fraction], q: Mapping[K, float | Fraction], /
) -> float:
    """
    Half the L1 distance between two laws given as mappings.

    Example
    -------
    >>> total_variation({"a": 0.5, "b": 0.5}, {"a": 1.0})
    0.5

    """
    return 0.5 * math.fsum(
        abs(float(p.get(k, 0)) - float(q.get(k, 0))) for k in p.keys() | q.keys()
    )


def empirical_law[K: Hashable](samples: Iterable[K], /) -> dict[K, float]:
    """Relative frequencies."""
    counts = Counter(samples)
    total = sum(counts.values())
    if not total:
        raise EmptyInput("No samples")
    return {k: c / total for k, c in counts.items()}


def tv_tolerance(
    law: Mapping[Any, float | Fraction], count: float, threshold: float, /
) -> float:
    """
    The larger of ``threshold`` and a multiple of the expected sampling TV.

    The expected total variation between ``law`` and the empirical law of
    ``count`` samples is about ``sqrt(2/pi) / 2 * sum(sqrt(p (1 - p) / count))``.

    """
    noise = math.fsum(math.sqrt(float(p) * (1 - float(p))) for p in law.values())
    expected = 0.5 * math.sqrt(2 / math.pi) * noise / math.sqrt(count)
    return max(threshold, NOISE_FACTOR * expected)


@dataclass(frozen=True)
class Statistic:
    """One reported number with an optional pass band."""

    name: str
    value: float
    n: int | None = None
    """The leaf count the statistic refers to, if any."""
    lower: float | None = None
    upper: float | None = None

    @property
    def ok(self) -> bool:
        if self.lower is not None and not self.value >= self.lower:
            return False
        return self.upper is None or self.value <= self.upper


@dataclass(frozen=True)
class ExperimentReport:
    """
    The outcome of one experiment.

    ``passed`` holds when every statistic lies in its band. Reports marked
    ``heuristic`` check finite-size trends of asymptotic statements.

    """

    name: str
    parameters: Mapping[str, Any] = field(hash=False)
    trials: int
    seed: int | None
    statistics: tuple[Statistic, ...]
    passed: bool
    heuristic: bool = False

    @classmethod
    def evaluate(
        cls,
        name: str,
        parameters: Mapping[str, Any],
        trials: int,
        seed: int | None,
        statistics: Iterable[Statistic],
        *,
        heuristic: bool = False,
    ) -> Self:
        """Build a report, deciding ``passed`` from the statistics' bands."""
        statistics = tuple(statistics)
        failed = [s.name for s in statistics if not s.ok]
        if failed:
            logger.warning("Experiment %s failed on %s", name, ", ".join(failed))
        else:
            logger.info("Experiment %s passed", name)
        return cls(
            name, dict(parameters), trials, seed, statistics, not failed, heuristic
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "parameters": dict(self.parameters),
            "trials": self.trials,
            "seed": self.seed,
            "heuristic": self.heuristic,
            "passed": self.passed,
            "statistics": [asdict(s) for s in self.statistics],
        }

    def to_csv(self) -> str:
        """One row per (n, statistic)."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "statistic", "value", "lower", "upper"])
        for s in self.statistics:
            writer.writerow(
                [
                    "" if s.n is None else s.n,
                    s.name,
                    repr(s.value),
                    "" if s.lower is None else repr(s.lower),
                    "" if s.upper is None else repr(s.upper),
                ]
            )
        return buffer.getvalue()


def uniformity_test(
    samples: Sequence[BinaryTree],
    n: int,
    /,
    *,
    name: str = "uniformity",
    seed: int | None = None,
    tv_threshold: float = 0.02,
    alpha: float = 0.001,
) -> ExperimentReport:
    """
    Compare samples with the uniform law on the full trees with ``n`` leaves.

    Parameters
    ----------
    samples : Sequence[BinaryTree]
        Trees with ``n`` leaves.
    n : int
        The leaf count, at most 8.
    name : str, optional
        The report name.
    seed : int | None, optional
        Recorded in the report.
    tv_threshold : float, optional
        Pass band of the total variation, by default 0.02 (widened when the
        sample is too small to resolve it).
    alpha : float, optional
        Minimum chi-square p-value, by default 0.001.

    Returns
    -------
    ExperimentReport
        Statistics ``tv`` and ``chi2_pvalue``.

    Raises
    ------
    WrongLeafCount
        If a sample does not have ``n`` leaves.
    TooLarge
        If ``n > 8``.

    """
    if n > MAX_UNIFORMITY_LEAVES:
        raise TooLarge(f"Uniformity is tested up to {MAX_UNIFORMITY_LEAVES} leaves")
    if not samples:
        raise EmptyInput("uniformity_test needs at least one sample")
    for t in samples:
        if t.n_leaves != n:
            raise WrongLeafCount(f"Expected {n} leaves, got {t!r}")
    trees = enumerate_full_trees(n)
    counts = Counter(t.vertices for t in samples)
    observed = np.array([counts[t.vertices] for t in trees], dtype=np.float64)
    uniform = {t.vertices: 1 / len(trees) for t in trees}
    tv = total_variation(empirical_law(t.vertices for t in samples), uniform)
    pvalue = float(chisquare(observed).pvalue) if len(trees) > 1 else 1.0
    return ExperimentReport.evaluate(
        name,
        {"n": n, "tv_threshold": tv_threshold, "alpha": alpha},
        len(samples),
        seed,
        [
            Statistic(
                "tv", tv, n, upper=tv_tolerance(uniform, len(samples), tv_threshold)
            ),
            Statistic("chi2_pvalue", pvalue, n, lower=alpha),
        ],
    )


def conditional_resample(
    t: BinaryTree, nu: SourceMeasure, rng: np.random.Generator, /
) -> list[WordStream]:
    """
    Fresh inputs with the given radix sort tree.

    The k-th stream follows ``nu`` conditioned on starting with the k-th
    leaf of ``t`` (in lexicographic order); the streams are independent.

    Raises
    ------
    ZeroMassLeaf
        If some leaf has probability zero under ``nu``.

    Example
    -------
    >>> from patricia_bridges import FairCoin, make_rng, span_tree
    >>> zs = conditional_resample(span_tree(["00", "01", "1"]), FairCoin(), make_rng(0))
    >>> [z.prefix(1) for z in zs]
    ['0', '0', '1']

    """
    seeds = rng.integers(2**63, size=t.n_leaves)
    return [
        nu.conditional_sample(y, int(s)) for y, s in zip(t.leaves, seeds, strict=True)
    ]


DYNKIN_STARTS = (span_tree(["00", "01", "1"]), span_tree(["000", "001", "1"]))
"""The two radix sort trees with three leaves whose forward laws differ."""
DYNKIN_TARGET = FullBinaryTree.from_words(["", "0", "1", "00", "01", "000", "001"])
DYNKIN_EXACT = (Fraction(1, 4), Fraction(3, 8))
"""The exact fair-coin probabilities of reaching the target from each start."""


def _dynkin_trial(seed: int) -> tuple[bool, bool]:
    rng = make_rng(seed)
    nu = FairCoin()
    hits = []
    for start in DYNKIN_STARTS:
        zs = conditional_resample(start, nu, rng)
        zs.append(nu.sample(int(rng.integers(2**63))))
        tree, _ = radix_sort_tree(zs)
        hits.append(patricia_contract(tree) == DYNKIN_TARGET)
    return hits[0], hits[1]


def dynkin_gap(
    trials: int,
    seed: int,
    /,
    *,
    jobs: int = 1,
    progress: bool | None = False,
) -> tuple[float, float]:
    """
    Estimate the next PATRICIA step from two radix states with the same image.

    Both radix sort trees in :data:`DYNKIN_STARTS` contract to the same full
    tree, yet the probability that the next PATRICIA tree is
    :data:`DYNKIN_TARGET` is 1/4 from the first and 3/8 from the second, so
    the PATRICIA image of the fair radix chain is not a function of its
    radix state's image alone.

    Returns
    -------
    tuple[float, float]
        The two estimated probabilities.

    """
    if trials < 1:
        raise EmptyInput(f"{trials=} must be at least 1")
    hits = run_trials(
        _dynkin_trial,
        trial_seeds(seed, trials),
        jobs=jobs,
        desc="dynkin",
        progress=progress,
    )
    first = sum(a for a, _ in hits) / trials
    second = sum(b for _, b in hits) / trials
    return first, second


def neininger_depth(n: int, /) -> int:
    r"""
    $\lfloor \sqrt{2n / \log n} - 1 \rfloor$, the depth probed at ``n`` inputs.

    Example
    -------
    >>> neininger_depth(10_000)
    45

    """
    if n < 2:
        raise EmptyInput(f"{n=} must be at least 2")
    return math.floor(math.sqrt(2 * n / math.log(n)) - 1)


def neininger_bound(n: int, t: int, /) -> float:
    r"""
    The union bound on the miss probability of the harmonic height event.

    $$
    \sum_{\ell=1}^{t} \Bigl(1 - \frac{1}{\ell(\ell+1)}\Bigr)^n
    $$

    Example
    -------
    >>> neininger_bound(3, 1)
    0.125

    """
    return math.fsum((1 - 1 / (ell * (ell + 1))) ** n for ell in range(1, t + 1))


def patricia_height_lower_bound(prefixes: NDArray[np.bool_], /) -> int:
    """
    A lower bound on the PATRICIA height from the first bits of the inputs.

    A vertex shorter than the prefixes branches in the PATRICIA tree when
    both of its children start some prefix; a leaf's depth is at least the
    number of such vertices above it.

    Parameters
    ----------
    prefixes : NDArray[np.bool_]
        One row of leading bits per input.

    Returns
    -------
    int
        The maximum number of branching strict prefixes over the rows.

    Example
    -------
    >>> import numpy as np
    >>> patricia_height_lower_bound(np.array([[0, 0], [0, 1], [1, 0]], dtype=bool))
    2

    """
    n, t = prefixes.shape
    group = np.zeros(n, dtype=np.intp)
    depth = np.zeros(n, dtype=np.intp)
    for d in range(t):
        bit = prefixes[:, d]
        size = int(group.max()) + 1
        has0 = np.zeros(size, dtype=bool)
        has1 = np.zeros(size, dtype=bool)
        has0[group[~bit]] = True
        has1[group[bit]] = True
        depth += (has0 & has1)[group]
        group = np.unique(group * 2 + bit, return_inverse=True)[1].reshape(-1)
    return int(depth.max())


_HARMONIC = ProductBernoulli.harmonic()


def _neininger_trial(n: int, t: int, seed: int) -> tuple[bool, int]:
    rng = make_rng(seed)
    bits = rng.random((n, t)) < _HARMONIC.prob_one_array(1, t + 1)
    has_one = bits.any(axis=1)
    first = bits.argmax(axis=1) + 1
    seen = np.zeros(t + 1, dtype=bool)
    seen[first[has_one]] = True
    if not seen[1:].all():
        return False, 0
    return True, patricia_height_lower_bound(bits)


def neininger_trials(
    n: int,
    t: int,
    trials: int,
    seed: int,
    /,
    *,
    jobs: int = 1,
    progress: bool | None = False,
) -> list[tuple[bool, int]]:
    """
    Per-trial outcomes of the harmonic height event.

    Each trial draws the first ``t`` bits of ``n`` harmonic inputs and
    returns whether, for every ``ell <= t``, some input starts with
    ``ell - 1`` zeros followed by a one, together with
    :func:`patricia_height_lower_bound` of the prefixes on that event
    (0 otherwise).

    """
    if t < 1:
        raise EmptyInput(f"{t=} must be at least 1")
    return run_trials(
        partial(_neininger_trial, n, t),
        trial_seeds(seed, trials),
        jobs=jobs,
        desc=f"event n={n}",
        progress=progress,
    )


def neininger_event(
    n: int,
    t: int,
    trials: int,
    seed: int,
    /,
    *,
    jobs: int = 1,
    progress: bool | None = False,
) -> float:
    """
    Frequency of the harmonic height event over ``trials`` trials.

    Trials on the event whose certified PATRICIA height stays below ``t``
    are logged.

    """
    outcomes = neininger_trials(n, t, trials, seed, jobs=jobs, progress=progress)
    bounds = [b for hit, b in outcomes if hit]
    short = sum(b < t for b in bounds)
    if short:
        logger.warning(
            "%d of %d trials on the event certify a height below %d",
            short,
            len(bounds),
            t,
        )
    return len(bounds) / trials


def persistence_set(trajectory: Sequence[BinaryTree], m: int, /) -> BinaryTree:
    """
    The vertices present in every tree from step ``m`` to the end.

    ``trajectory[k]`` is the tree at step ``k + 1``.

    Example
    -------
    >>> from patricia_bridges import CHERRY, TRIVIAL
    >>> persistence_set([TRIVIAL, CHERRY], 2).vertices == CHERRY.vertices
    True

    """
    if not trajectory:
        raise EmptyInput("persistence_set needs a non-empty trajectory")
    if not 1 <= m <= len(trajectory):
        raise EmptyInput(f"{m=} must lie in 1..{len(trajectory)}")
    common = frozenset.intersection(*(t.vertices for t in trajectory[m - 1 :]))
    return BinaryTree._unchecked(common)


def persistence_union(
    trajectory: Sequence[BinaryTree], m_max: int | None = None, /
) -> BinaryTree:
    """
    The union of :func:`persistence_set` over ``m <= m_max``.

    The sets grow with ``m``, so this is the set at ``m_max``, by default a
    quarter of the window.

    """
    if m_max is None:
        m_max = max(1, len(trajectory) // 4)
    return persistence_set(trajectory, m_max)


def recurrence_set(
    trajectory: Sequence[BinaryTree], m_max: int | None = None, /
) -> BinaryTree:
    """The vertices present in at least one tree from step ``m_max`` on."""
    if not trajectory:
        raise EmptyInput("recurrence_set needs a non-empty trajectory")
    if m_max is None:
        m_max = max(1, len(trajectory) // 4)
    return BinaryTree._unchecked(
        frozenset().union(*(t.vertices for t in trajectory[m_max - 1 :]))
    )


def kernel_check(
    pairs: Iterable[tuple[BinaryTree, BinaryTree]],
    /,
    *,
    name: str = "kernel_tv",
    min_count: int = 100,
    tv_threshold: float = 0.02,
) -> list[Statistic]:
    """
    Compare empirical backward laws with the exact kernel.

    Parameters
    ----------
    pairs : Iterable[tuple[BinaryTree, BinaryTree]]
        Consecutive states ``(t_n, t_{n+1})`` of sampled trajectories.
    name : str, optional
        Prefix of the statistic names.
    min_count : int, optional
        Endpoints seen fewer times are skipped.
    tv_threshold : float, optional
        Pass band of the total variation, widened by :func:`tv_tolerance`.

    Returns
    -------
    list[Statistic]
        One total variation per endpoint ``t_{n+1}``, in
        :func:`tree_sort_key` order.

    """
    groups: defaultdict[FullBinaryTree, Counter[frozenset[str]]] = defaultdict(
        Counter
    )
    for before, after in pairs:
        if after.n_leaves < 2:
            continue
        groups[FullBinaryTree._unchecked(after.vertices)][before.vertices] += 1
    statistics = []
    for endpoint in sorted(groups, key=tree_sort_key):
        counts = groups[endpoint]
        total = sum(counts.values())
        if total < min_count:
            continue
        table = exact_backward_kernel(endpoint)
        exact = {s.vertices: p for s, p in table.masses.items()}
        tv = total_variation({k: c / total for k, c in counts.items()}, exact)
        statistics.append(
            Statistic(
                f"{name}[{to_newick(endpoint)}]",
                tv,
                endpoint.n_leaves,
                upper=tv_tolerance(exact, total, tv_threshold),
            )
        )
    return statistics


def _parse_height_chain(text: str) -> ChainSpec:
    spec = parse_chain(text)
    if spec.kind not in ("patricia", "remy", "zigzag-bridge"):
        raise MeasureSpecError(
            f"Heights are recorded for patricia, remy and zigzag-bridge, not {text=}"
        )
    return spec


def _patricia_heights_trial(
    measure: SourceMeasure, n_list: tuple[int, ...], depth_cap: int, seed: int
) -> list[int]:
    targets = set(n_list)
    builder = RadixSortTree(depth_cap=depth_cap)
    heights: dict[int, int] = {}
    for n, z in enumerate(sample_inputs(measure, max(n_list), seed), start=1):
        builder.insert(z)
        if n in targets:
            heights[n] = height(patricia_contract(builder.tree()))
    return [heights[n] for n in n_list]


def _remy_heights_trial(n_list: tuple[int, ...], seed: int) -> list[int]:
    heights = remy_heights(n_list, make_rng(seed))
    return [heights[n] for n in n_list]


def _zigzag_heights_trial(n_list: tuple[int, ...], seed: int) -> list[int]:
    targets = set(n_list)
    heights: dict[int, int] = {}
    for n, spine in enumerate(zigzag_spines(max(n_list), seed), start=1):
        if n in targets:
            heights[n] = height(caterpillar(spine))
    return [heights[n] for n in n_list]


def _event_statistics(
    n_list: tuple[int, ...], trials: int, seed: int, jobs: int, progress: bool | None
) -> list[Statistic]:
    statistics = []
    for n, s in zip(n_list, trial_seeds(seed, len(n_list)), strict=True):
        t = neininger_depth(n)
        outcomes = neininger_trials(n, t, trials, s, jobs=jobs, progress=progress)
        bounds = [b for hit, b in outcomes if hit]
        statistics += [
            Statistic(
                "event_frequency",
                len(bounds) / trials,
                n,
                lower=1 - math.sqrt(2 / math.log(n)),
            ),
            Statistic("union_bound", neininger_bound(n, t), n),
            Statistic("depth", float(t), n),
        ]
        if bounds:
            statistics.append(
                Statistic("min_certified_height", float(min(bounds)), n, lower=t - 1)
            )
    return statistics


def height_experiment(
    chain: str,
    n_list: Sequence[int],
    trials: int,
    seed: int,
    /,
    *,
    jobs: int = 1,
    depth_cap: int = DEPTH_CAP,
    progress: bool | None = False,
) -> ExperimentReport:
    r"""
    Record tree heights along independent trajectories.

    Parameters
    ----------
    chain : str
        ``patricia[:<measure>]``, ``remy`` or ``zigzag-bridge``.
    n_list : Sequence[int]
        The leaf counts at which heights are recorded.
    trials : int
        The number of trajectories.
    seed : int
        The master seed.
    jobs : int, optional
        Worker processes.
    depth_cap : int, optional
        Passed to the radix sort.
    progress : bool | None, optional
        Progress bar switch, see :func:`run_trials`.

    Returns
    -------
    ExperimentReport
        For the fair PATRICIA chain, the mean height and
        $(\bar h - \log_2 n) / \sqrt{2 \log_2 n}$, banded in $[0.5, 2]$ from
        $n = 1024$ on; for Rémy, the mean of $h / \sqrt{n}$ and consecutive
        ratios banded in $[0.8, 1.25]$; for the zig-zag bridge, the largest
        deviation from $h = n - 1$, which must be 0. For the harmonic measure
        the trees are too deep to build, and the report holds the frequency
        of the event certifying $h \ge t(n)$ instead, banded below by
        $1 - \sqrt{2 / \log n}$.

    """
    spec = _parse_height_chain(chain)
    ns = tuple(sorted(set(n_list)))
    if not ns or ns[0] < 1:
        raise EmptyInput(f"{n_list=} must hold positive leaf counts")
    parameters = {"chain": chain, "n_list": list(ns), "depth_cap": depth_cap}
    seeds = trial_seeds(seed, trials)
    if spec.kind == "patricia" and spec.measure == _HARMONIC:
        return ExperimentReport.evaluate(
            "heights",
            parameters,
            trials,
            seed,
            _event_statistics(ns, trials, seed, jobs, progress),
            heuristic=True,
        )
    if spec.kind == "patricia" and spec.measure is not None:
        worker = partial(_patricia_heights_trial, spec.measure, ns, depth_cap)
    elif spec.kind == "remy":
        worker = partial(_remy_heights_trial, ns)
    else:
        worker = partial(_zigzag_heights_trial, ns)
    rows = run_trials(worker, seeds, jobs=jobs, desc="heights", progress=progress)
    heights = np.asarray(rows, dtype=np.float64).reshape(len(seeds), len(ns))
    statistics = []
    for k, n in enumerate(ns):
        column = heights[:, k]
        statistics.append(Statistic("mean_height", float(column.mean()), n))
        if spec.kind == "patricia" and n >= 2:
            log_n = math.log2(n)
            normalized = (float(column.mean()) - log_n) / math.sqrt(2 * log_n)
            banded = isinstance(spec.measure, FairCoin) and n >= 1024
            statistics.append(
                Statistic(
                    "normalized_height",
                    normalized,
                    n,
                    lower=0.5 if banded else None,
                    upper=2.0 if banded else None,
                )
            )
        elif spec.kind == "remy":
            statistics.append(
                Statistic("mean_height_over_sqrt_n", float(column.mean()) / n**0.5, n)
            )
        elif spec.kind == "zigzag-bridge":
            error = float(np.abs(column - (n - 1)).max())
            statistics.append(Statistic("max_height_error", error, n, 0.0, 0.0))
    if spec.kind == "remy":
        means = [float(heights[:, k].mean()) / n**0.5 for k, n in enumerate(ns)]
        statistics += [
            Statistic("consecutive_ratio", b / a, n, 0.8, 1.25)
            for a, b, n in zip(means, means[1:], ns[1:], strict=False)
        ]
    return ExperimentReport.evaluate(
        "heights",
        parameters,
        trials,
        seed,
        statistics,
        heuristic=spec.kind != "zigzag-bridge",
    )
