import pytest

from utils.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; environment overrides need a clean cache."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
