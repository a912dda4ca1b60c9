import pytest

from tracezero.counting import CountEngine
from tracezero.gf import make_field
from tracezero.numtheory import prime_power_parts
from tracezero.oracle import OracleBudget


@pytest.fixture(scope="session")
def budget():
    return OracleBudget()


@pytest.fixture(scope="session")
def engine():
    """Lazy per-q engine cache shared by the whole session."""
    cache = {}

    def get(q: int) -> CountEngine:
        if q not in cache:
            p, r = prime_power_parts(q)
            cache[q] = CountEngine(make_field(p, r))
        return cache[q]

    return get
