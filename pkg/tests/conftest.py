import random

import pytest

from core.fields import GAUSSIAN, GF4
from core.instances import gaussian_instance, gf4_instance
from core.quaternion import QuaternionRing
from core.settings import settings
from core.skewfield import SkewLaurentField


@pytest.fixture(autouse=True)
def reset_settings():
    settings.reset()
    yield
    settings.reset()


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def gf4_ring():
    return SkewLaurentField(GF4)


@pytest.fixture
def gaussian_ring():
    return SkewLaurentField(GAUSSIAN)


@pytest.fixture
def quaternions():
    return QuaternionRing()


@pytest.fixture
def gf4_params():
    return gf4_instance()


@pytest.fixture
def gaussian_params():
    return gaussian_instance()


@pytest.fixture(params=["gf4", "gaussian"])
def params(request):
    return gf4_instance() if request.param == "gf4" else gaussian_instance()
