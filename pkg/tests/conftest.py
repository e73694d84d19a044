import pytest

from helpers import sweep_inputs


@pytest.fixture(scope="session")
def full_sweep():
    return sweep_inputs()
