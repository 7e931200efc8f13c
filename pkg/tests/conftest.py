import pytest

from quivergeo.catalog import bundled_spec
from quivergeo.config import Configuration
from quivergeo.graded import ProblemSpec
from quivergeo.linalg import FieldSpec
from quivergeo.poly import parse_poly


@pytest.fixture(scope="session")
def test_configuration():
    """Provides a test configuration."""
    config = Configuration()
    # Override with test values
    config._config["enumeration"]["budget"] = 2_000_000
    config._config["verify"]["sample_size"] = 50
    return config


@pytest.fixture(scope="session")
def rationals():
    return FieldSpec.rationals()


@pytest.fixture(scope="session")
def f2():
    return FieldSpec.prime(2)


@pytest.fixture(scope="session")
def f3():
    return FieldSpec.prime(3)


@pytest.fixture(scope="session")
def f5():
    return FieldSpec.prime(5)


@pytest.fixture(scope="session")
def conic():
    """V(X0*X2 - X1^2) in P^2 over Q."""
    return bundled_spec("conic")


@pytest.fixture(scope="session")
def twisted_cubic():
    return bundled_spec("twisted-cubic")


@pytest.fixture(scope="session")
def p1():
    return bundled_spec("P1")


@pytest.fixture(scope="session")
def p2():
    return bundled_spec("P2")


@pytest.fixture(scope="session")
def empty_x():
    return bundled_spec("empty")


@pytest.fixture(scope="session")
def make_spec():
    """Build a ProblemSpec from polynomial texts."""

    def _make(n, polys=(), field=None, d=None, e=None):
        field = field or FieldSpec.rationals()
        parsed = [parse_poly(text, n, field) for text in polys]
        return ProblemSpec.create(n, field, parsed, d=d, e=e)

    return _make
