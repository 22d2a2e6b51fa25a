import numpy as np
import pytest

from sidonlab import build_named, make_field


@pytest.fixture(scope="session")
def f3():
    return make_field(3)


@pytest.fixture(scope="session")
def f4():
    return make_field(4)


@pytest.fixture(scope="session")
def f6():
    return make_field(6)


@pytest.fixture(scope="session")
def gold4():
    return build_named("gold", 4, k=1)


def random_tables(n, count, seed):
    """Random truth tables for kernel cross-checks."""
    rng = np.random.default_rng(seed)
    return [rng.integers(0, 1 << n, size=1 << n, dtype=np.int64)
            for _ in range(count)]
