import pytest

from arthurlab import Settings


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    for name in (
        "ARTHURLAB_SEARCH_DEPTH",
        "ARTHURLAB_MAX_STATES",
        "ARTHURLAB_FIXTURES",
        "ARTHURLAB_WORKERS",
    ):
        monkeypatch.delenv(name, raising=False)
