import pytest
from hypothesis import settings

from elimcycle.ring import X, Y, Z, parse_poly
from elimcycle.setup import validate_setup

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def xyz():
    return validate_setup(X, Y, Z)


@pytest.fixture(scope="session")
def curved():
    return validate_setup(parse_poly("x + y^2"), Y, parse_poly("z + x^2"))


@pytest.fixture
def P():
    return parse_poly
