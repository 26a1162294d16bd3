import pytest
from pydantic import ValidationError

from core.errors import SizeLimitError
from core.fixtures import gauss_code_fixture
from invariants.brackets import kauffman_bracket
from utils.config import GrkSettings, get_settings


def test_defaults():
    settings = GrkSettings()
    assert settings.state_limit == 20
    assert settings.check_dd


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("GRK_STATE_LIMIT", "2")
    monkeypatch.setenv("GRK_CHECK_DD", "no")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.state_limit == 2
    assert not settings.check_dd
    with pytest.raises(SizeLimitError):
        kauffman_bracket(gauss_code_fixture("TREFOIL"))


def test_limits_are_validated():
    with pytest.raises(ValidationError):
        GrkSettings(state_limit=64)
