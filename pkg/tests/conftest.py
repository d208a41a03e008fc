import pytest

from symbio.games import ISNGame


@pytest.fixture
def g3():
    """Three-firm running example: pair savings 10/4/6, grand coalition 12."""
    return ISNGame.from_values(3, {(0, 1): 10, (0, 2): 4, (1, 2): 6, (0, 1, 2): 12})


@pytest.fixture
def g3_prime():
    """Symmetric empty-core game: every pair worth 10, grand coalition 12."""
    return ISNGame.from_values(3, {(0, 1): 10, (0, 2): 10, (1, 2): 10, (0, 1, 2): 12})
