import pytest

from finmonad.fixtures import FixtureCorpus


@pytest.fixture(scope="session")
def cor() -> FixtureCorpus:
    return FixtureCorpus()
