import numpy as np

DEFAULT_SEED = 20240601
"""Seed used whenever none is given."""


def make_rng(seed: int, /) -> np.random.Generator:
    """The project-wide generator: PCG64 seeded with ``seed``."""
    return np.random.Generator(np.random.PCG64(seed))


def trial_seeds(seed: int, trials: int, /) -> list[int]:
    """
    Seeds for independent Monte Carlo trials.

    Cheaper than :func:`spawn_seeds` for large trial counts; use that one
    when streams must stay consistent as their number grows.

    """
    return [int(s) for s in make_rng(seed).integers(2**63, size=trials)]


def spawn_seeds(seed: int, n: int, /) -> list[int]:
    """
    ``n`` independent 64-bit seeds derived from ``seed``.

    The i-th seed does not depend on ``n``, so a longer run extends a
    shorter one.

    Example
    -------
    >>> spawn_seeds(7, 3)[:2] == spawn_seeds(7, 2)
    True

    """
    children = np.random.SeedSequence(seed).spawn(n)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]
