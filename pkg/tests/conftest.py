import numpy as np
import pytest

from patricia_bridges._core._random import make_rng


@pytest.fixture()
def rng() -> np.random.Generator:
    return make_rng(0)
