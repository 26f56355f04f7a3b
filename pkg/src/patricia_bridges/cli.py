"""
Command-line front end.

Every run is determined by its arguments, which are echoed at the head of
the output. Logs and progress bars go to stderr only.

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 data error.

"""

import json
import logging
import sys
from collections.abc import Callable, Mapping, Sequence
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Annotated, Any, Literal

import cyclopts
from rich.console import Console
from rich.logging import RichHandler

from ._bridges import rtree_dds
from ._chains import parse_chain, simulate
from ._core._measures import parse_measure
from ._core._random import DEFAULT_SEED
from ._core._serialize import (
    dumps_record,
    from_newick,
    to_dot,
    to_newick,
    tree_from_json,
    tree_to_json,
)
from ._core._trees import FullBinaryTree, LabeledTree, enumerate_full_trees
from ._core._words import DEPTH_CAP
from ._didendritic import (
    check_axioms,
    dds_from_json,
    dds_from_tree,
    dds_to_json,
    dds_to_tree,
    zigzag_dds,
)
from ._errors import BadLabelSet, MalformedTree, PatriciaBridgesError
from ._models import parse_model
from ._stats import ExperimentReport, height_experiment
from ._verify import (
    verify_backward_kernel,
    verify_bridge_kernel,
    verify_dds,
    verify_dynkin,
    verify_exchangeability,
    verify_remy_uniform,
    verify_rtree,
    verify_universality,
    verify_zigzag,
)

logger = logging.getLogger(__name__)

TreeFormat = Literal["jsonl", "dot", "newick"]
ReportFormat = Literal["json", "csv"]

app = cyclopts.App(name="patricia-bridges", help=__doc__)
verify_app = cyclopts.App(name="verify", help="Run an acceptance experiment.")
dds_app = cyclopts.App(name="dds", help="Didendritic system tooling.")
app.command(verify_app)
app.command(dds_app)


@dataclass(frozen=True)
class CommandConfig:
    """The arguments that determine the output of a run."""

    subcommand: str
    measure: str | None = None
    chain: str | None = None
    n: int | list[int] | None = None
    trials: int | None = None
    seed: int | None = None
    format: str | None = None
    output: str | None = None
    options: dict[str, Any] | None = None
    """Command-specific settings; worker counts are left out."""

    def to_record(self) -> dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def header(self, fmt: str) -> str:
        """The config as a header line in the comment syntax of ``fmt``."""
        record = dumps_record({"config": self.to_record()})
        match fmt:
            case "dot":
                return f"// {record}"
            case "newick" | "csv":
                return f"# {record}"
        return record


def _write(text: str, output: Path | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _read_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise MalformedTree(f"Cannot read {path=}: {e}") from e
    except json.JSONDecodeError as e:
        raise MalformedTree(f"{path=} is not a JSON document") from e


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True))],
        force=True,
    )


@app.meta.default
def _launcher(
    *tokens: Annotated[str, cyclopts.Parameter(show=False, allow_leading_hyphen=True)],
    verbose: bool = False,
) -> Any:
    """
    Configure logging, then run the command.

    Parameters
    ----------
    verbose : bool, optional
        Log at DEBUG level instead of WARNING.

    """
    _configure_logging(verbose)
    command, bound, _ = app.parse_args(tokens, exit_on_error=False)
    return command(*bound.args, **bound.kwargs)


@app.command(name="simulate")
def simulate_(
    *,
    chain: str = "patricia",
    measure: str = "fair",
    steps: int = 10,
    seed: int = DEFAULT_SEED,
    format: TreeFormat = "jsonl",
    depth_cap: int = DEPTH_CAP,
    output: Path | None = None,
) -> int:
    """
    Simulate one trajectory of a chain.

    Parameters
    ----------
    chain : str
        patricia[:<measure>], radix[:<measure>], remy, zigzag-bridge,
        bridge-from:<newick> or rtree:<interval|binary[:<measure>]>.
    measure : str
        Source measure of patricia and radix chains that name none.
    steps : int
        The number of leaves of the last tree; ignored by bridge-from.
    seed : int
        The seed.
    format : TreeFormat
        One JSON record per step, DOT graphs or Newick lines.
    depth_cap : int
        Largest depth the radix sort may reach.
    output : Path | None
        Write here instead of stdout.

    """
    spec = parse_chain(chain, measure=parse_measure(measure), depth_cap=depth_cap)
    trajectory = simulate(spec, steps, seed)
    config = CommandConfig(
        "simulate",
        measure=measure,
        chain=chain,
        n=steps,
        seed=seed,
        format=format,
        output=None if output is None else str(output),
    )
    lines = [config.header(format)]
    for n, t in enumerate(trajectory, start=1):
        match format:
            case "jsonl":
                record = {"n": n, **tree_to_json(t), "seed": seed}
                record["chain"] = spec.record_name
                lines.append(dumps_record(record))
            case "dot":
                lines.append(to_dot(t, comments=[f"n={n}"]))
            case "newick":
                if not isinstance(t, FullBinaryTree | LabeledTree):
                    t = FullBinaryTree(t.vertices)
                lines.append(to_newick(t))
    _write("\n".join(lines), output)
    return 0


@app.command(name="enumerate")
def enumerate_(
    *,
    n: int,
    format: Literal["newick", "jsonl"] = "newick",
    output: Path | None = None,
) -> int:
    """
    List every full binary tree with ``n`` leaves in canonical order.

    Parameters
    ----------
    n : int
        The number of leaves.
    format : Literal["newick", "jsonl"]
        One Newick line or one JSON record per tree.
    output : Path | None
        Write here instead of stdout.

    """
    config = CommandConfig(
        "enumerate", n=n, format=format, output=None if output is None else str(output)
    )
    lines = [config.header(format)]
    for t in enumerate_full_trees(n):
        lines.append(
            to_newick(t) if format == "newick" else dumps_record(tree_to_json(t))
        )
    _write("\n".join(lines), output)
    return 0


def _emit_report(
    report: ExperimentReport,
    config: CommandConfig,
    fmt: ReportFormat,
    output: Path | None,
) -> int:
    if fmt == "csv":
        _write(f"{config.header('csv')}\n{report.to_csv()}", output)
    else:
        _write(dumps_record({"config": config.to_record()} | report.to_json()), output)
    return 0 if report.passed else 1


def _run_verify(
    name: str,
    fn: Callable[..., ExperimentReport],
    kwargs: Mapping[str, Any],
    *,
    trials: int,
    seed: int,
    fmt: ReportFormat,
    output: Path | None,
) -> int:
    report = fn(trials=trials, seed=seed, progress=None, **kwargs)
    config = CommandConfig(
        f"verify {name}",
        trials=trials,
        seed=seed,
        format=fmt,
        output=None if output is None else str(output),
        options={k: v for k, v in kwargs.items() if k != "jobs"} or None,
    )
    return _emit_report(report, config, fmt, output)


@verify_app.command(name="kernel")
def verify_kernel(
    *,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """Empirical backward kernels against the exact ones, trees with 2 to 5 leaves."""
    return _run_verify(
        "kernel",
        verify_backward_kernel,
        {"jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@verify_app.command(name="universality")
def verify_universality_(
    *,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """The same backward law into the balanced tree for every chain."""
    return _run_verify(
        "universality",
        verify_universality,
        {"jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@verify_app.command(name="remy-uniform")
def verify_remy(
    *,
    n: int = 5,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """The Rémy chain is uniform on full trees with ``n`` leaves."""
    return _run_verify(
        "remy-uniform",
        verify_remy_uniform,
        {"n": n, "jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@verify_app.command(name="dynkin")
def verify_dynkin_(
    *,
    trials: int = 1_000_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """Two radix-shaped trees with the same contraction, different forward laws."""
    return _run_verify(
        "dynkin",
        verify_dynkin,
        {"jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@verify_app.command(name="bridge-kernel")
def verify_bridge(
    *,
    n_max: int = 5,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """Consecutive steps of every bridge sampler follow the backward kernel."""
    return _run_verify(
        "bridge-kernel",
        verify_bridge_kernel,
        {"n_max": n_max, "jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@verify_app.command(name="zigzag")
def verify_zigzag_(
    *,
    trials: int = 100,
    window: int = 512,
    marginal_trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """Heights, marginals and persistence of the zig-zag bridge."""
    return _run_verify(
        "zigzag",
        verify_zigzag,
        {"window": window, "marginal_trials": marginal_trials, "jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@verify_app.command(name="rtree")
def verify_rtree_(
    *,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """Marginals and model checks of the interval and binary models."""
    return _run_verify(
        "rtree",
        verify_rtree,
        {"jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@verify_app.command(name="dds")
def verify_dds_(
    *,
    max_leaves: int = 5,
    corruptions: int = 1_000,
    seed: int = DEFAULT_SEED,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """Exhaustive round trips between labeled trees and didendritic systems."""
    report = verify_dds(max_leaves=max_leaves, corruptions=corruptions, seed=seed)
    config = CommandConfig(
        "verify dds",
        n=max_leaves,
        trials=corruptions,
        seed=seed,
        format=format,
        output=None if output is None else str(output),
    )
    return _emit_report(report, config, format, output)


@verify_app.command(name="exchangeability")
def verify_exchangeability_(
    *,
    trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """Exchangeability and independence proxies of the zig-zag system."""
    return _run_verify(
        "exchangeability",
        verify_exchangeability,
        {"jobs": jobs},
        trials=trials,
        seed=seed,
        fmt=format,
        output=output,
    )


@app.command()
def heights(
    *,
    chain: str = "patricia",
    n_list: list[int],
    trials: int = 100,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    depth_cap: int = DEPTH_CAP,
    format: ReportFormat = "json",
    output: Path | None = None,
) -> int:
    """
    Tree heights along independent trajectories.

    Parameters
    ----------
    chain : str
        patricia[:<measure>], remy or zigzag-bridge.
    n_list : list[int]
        The leaf counts at which heights are recorded.
    trials : int
        The number of trajectories.
    seed : int
        The seed.
    jobs : int
        Worker processes; the output does not depend on it.
    depth_cap : int
        Largest depth the radix sort may reach.
    format : ReportFormat
        JSON report or CSV table.
    output : Path | None
        Write here instead of stdout.

    """
    report = height_experiment(
        chain,
        n_list,
        trials,
        seed,
        jobs=jobs,
        depth_cap=depth_cap,
        progress=None,
    )
    config = CommandConfig(
        "heights",
        chain=chain,
        n=sorted(set(n_list)),
        trials=trials,
        seed=seed,
        format=format,
        output=None if output is None else str(output),
    )
    return _emit_report(report, config, format, output)


@dds_app.command()
def check(path: Path, /) -> int:
    """
    Check the axioms of a system document.

    Prints one JSON record per violation; exits with 1 if there is any.

    """
    found = check_axioms(dds_from_json(_read_json(path)))
    for v in found:
        _write(dumps_record({"axiom": v.axiom, "message": v.message}), None)
    if not found:
        _write(dumps_record({"valid": True}), None)
    return 1 if found else 0


@dds_app.command(name="to-tree")
def to_tree(path: Path, /, *, format: Literal["json", "newick"] = "newick") -> int:
    """Convert a system document to its labeled tree."""
    lt = dds_to_tree(dds_from_json(_read_json(path)))
    text = to_newick(lt) if format == "newick" else dumps_record(tree_to_json(lt))
    _write(text, None)
    return 0


@dds_app.command(name="from-tree")
def from_tree(tree: str, /) -> int:
    """The system of a labeled tree given as Newick text, e.g. ``(1,(2,3))``."""
    lt = from_newick(tree)
    if not isinstance(lt, LabeledTree):
        raise BadLabelSet(f"{tree=} carries no labels")
    _write(dumps_record(dds_to_json(dds_from_tree(lt))), None)
    return 0


@dds_app.command()
def sample(
    *,
    model: str = "zigzag",
    n: int = 4,
    seed: int = DEFAULT_SEED,
) -> int:
    """
    Draw a random system on 1..n.

    Parameters
    ----------
    model : str
        ``zigzag``, or an ℝ-tree model: ``interval`` or ``binary[:<measure>]``.
    n : int
        The number of labels.
    seed : int
        The seed.

    """
    if model == "zigzag":
        d = zigzag_dds(n, seed)
    else:
        d = rtree_dds(parse_model(model), n, seed)
    _write(dumps_record(dds_to_json(d)), None)
    return 0


@app.command()
def export(
    path: Path,
    /,
    *,
    format: Literal["newick", "dot"] = "newick",
    output: Path | None = None,
) -> int:
    """Convert a tree JSON document to Newick or DOT."""
    t = tree_from_json(_read_json(path))
    if format == "dot":
        _write(to_dot(t), output)
        return 0
    if not isinstance(t, FullBinaryTree | LabeledTree):
        raise MalformedTree(f"Newick output needs a full tree, got {t!r}")
    _write(to_newick(t), output)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI and return its exit code.

    Parameters
    ----------
    argv : Sequence[str] | None, optional
        The arguments, by default ``sys.argv[1:]``.

    Returns
    -------
    int
        0 on success, 1 on a failed verification, 2 on a usage error and
        3 on a data error.

    """
    tokens = list(sys.argv[1:] if argv is None else argv)
    try:
        result = app.meta(tokens, exit_on_error=False)
    except cyclopts.CycloptsError:
        return 2
    except PatriciaBridgesError as e:
        logger.debug("Command failed", exc_info=e)
        sys.stderr.write(dumps_record({"error": e.code, "message": str(e)}) + "\n")
        return 3
    return result if isinstance(result, int) else 0
