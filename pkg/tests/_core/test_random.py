from patricia_bridges._core._random import make_rng, spawn_seeds, trial_seeds


def test_make_rng_is_reproducible() -> None:
    assert make_rng(3).random() == make_rng(3).random()
    assert make_rng(3).random() != make_rng(4).random()


def test_trial_seeds() -> None:
    seeds = trial_seeds(1, 100)
    assert seeds == trial_seeds(1, 100)
    assert len(set(seeds)) == 100
    assert all(0 <= s < 2**63 for s in seeds)


def test_spawn_seeds_extend() -> None:
    assert spawn_seeds(5, 10)[:4] == spawn_seeds(5, 4)
    assert len(set(spawn_seeds(5, 10))) == 10
