import numpy as np
import pytest

from densediv.integers import sieve_spf


@pytest.fixture(scope="session")
def spf_1e5() -> np.ndarray:
    return sieve_spf(100_000)


@pytest.fixture(scope="session")
def spf_1e4() -> np.ndarray:
    return sieve_spf(10_000)
