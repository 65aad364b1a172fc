import pytest

from hcone.core import HVector


@pytest.fixture
def hv():
    return lambda *xs: HVector(xs)
