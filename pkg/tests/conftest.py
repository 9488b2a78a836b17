import pytest

from hpascal.triangle import generate_rows


@pytest.fixture(scope="session")
def rows_q5():
    """Rows 0..15 of the q = 5 triangle, shared across tests."""
    return list(generate_rows(5, 15))
