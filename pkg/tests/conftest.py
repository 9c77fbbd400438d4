import pytest

from sexpansion.census import CensusRequest, enumerate_semigroups


@pytest.fixture(scope="session")
def census():
    """Memoized census access shared across test modules."""
    cache = {}

    def get(order, abelian_only=False, convention="iso"):
        key = (order, abelian_only, convention)
        if key not in cache:
            cache[key] = enumerate_semigroups(CensusRequest(order, abelian_only, convention))
        return cache[key]

    return get
