import numpy as np
import pytest

from ridgerec.backend import HAVE_NUMBA, use_backend


@pytest.fixture
def rng():
    return np.random.default_rng(20250810)


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    """Run the decorated test under each numeric backend."""
    if request.param == "numba" and not HAVE_NUMBA:
        pytest.skip("numba not installed")
    with use_backend(request.param):
        yield request.param
