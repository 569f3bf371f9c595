"""Shared fixtures: generated family corpus, reused across test modules."""

import pytest

from tamesphere import families


@pytest.fixture(scope="session")
def simplex_regions():
    return {n: families.simplex_family(n) for n in (2, 3, 4)}


@pytest.fixture(scope="session")
def family_a_regions():
    return {k: families.family_a(k) for k in (1, 2, 3)}


@pytest.fixture(scope="session")
def family_b_regions():
    return {k: families.family_b(k) for k in (1, 2, 3)}
