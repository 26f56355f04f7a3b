import logging
import signal
from collections.abc import Callable, Iterable, Sequence
from multiprocessing import Pool

from tqdm import tqdm

logger = logging.getLogger(__name__)


def _ignore_sigint() -> None:
    signal.signal(signal.SIGINT, signal.SIG_IGN)


def run_trials[S, T](
    fn: Callable[[S], T],
    items: Sequence[S],
    /,
    *,
    jobs: int = 1,
    desc: str | None = None,
    progress: bool | None = False,
) -> list[T]:
    """
    Evaluate ``fn`` at every item, optionally in worker processes.

    Results come back in input order, so the output does not depend on
    ``jobs``. ``fn`` and the items must be picklable when ``jobs > 1``.

    Parameters
    ----------
    fn : Callable[[S], T]
        A module-level function (or a ``functools.partial`` of one).
    items : Sequence[S]
        Usually per-trial seeds.
    jobs : int, optional
        Number of processes, by default 1 (run in this process).
    desc : str | None, optional
        Progress bar label.
    progress : bool | None, optional
        Show a progress bar; ``None`` shows it only on a terminal.

    Returns
    -------
    list[T]
        ``[fn(x) for x in items]``.

    Example
    -------
    >>> run_trials(abs, [-2, 3, -1])
    [2, 3, 1]

    """
    disable = None if progress is None else not progress
    results: Iterable[T]
    if jobs <= 1:
        results = map(fn, items)
        return list(tqdm(results, total=len(items), desc=desc, disable=disable))
    chunksize = max(1, len(items) // (jobs * 16))
    logger.debug("Running %d trials on %d processes", len(items), jobs)
    with Pool(jobs, _ignore_sigint) as pool:
        results = pool.imap(fn, items, chunksize=chunksize)
        return list(tqdm(results, total=len(items), desc=desc, disable=disable))
