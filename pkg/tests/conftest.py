import pytest
from hypothesis import settings

from sl2hilb.params import make_params

settings.register_profile("ci", max_examples=200, deadline=None, derandomize=True)
settings.load_profile("ci")

TORIC = [(1, 3, 2), (1, 2, 1), (1, 2, 3), (2, 3, 2)]


@pytest.fixture(params=TORIC, ids=lambda t: "p%dq%dm%d" % t)
def toric(request):
    return make_params(*request.param)


@pytest.fixture
def P132():
    return make_params(1, 3, 2)
