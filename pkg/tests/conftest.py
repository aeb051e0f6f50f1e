import pytest

from ybetools import FIXTURE_NAMES, load_fixture


@pytest.fixture(scope="session")
def fixtures():
    return {name: load_fixture(name) for name in FIXTURE_NAMES}
