import pytest
from pydantic import ValidationError
from tangle_shared.config import Settings
from tangle_shared.schemas.outcome import ToleranceConfig


def test_defaults():
    settings = Settings()
    assert settings.DEFAULT_REL == 1e-10
    assert settings.DEFAULT_ABS_FLOOR == 1e-12
    assert settings.DEFAULT_INVARIANCE_REL == 1e-9
    assert settings.Y_SAMPLING_RADIUS == 5.0


def test_environment_override(monkeypatch):
    monkeypatch.setenv('TANGLE_NORM_TOLERANCE', '1e-6')
    monkeypatch.setenv('TANGLE_LOG_LEVEL', 'DEBUG')
    settings = Settings()
    assert settings.NORM_TOLERANCE == 1e-6
    assert settings.LOG_LEVEL == 'DEBUG'


def test_invalid_log_level(monkeypatch):
    monkeypatch.setenv('TANGLE_LOG_LEVEL', 'LOUD')
    with pytest.raises(ValidationError, match='LOG_LEVEL'):
        Settings()


def test_tolerance_config_defaults():
    tol = ToleranceConfig()
    assert (tol.rel, tol.abs_floor, tol.invariance_rel) == (1e-10, 1e-12, 1e-9)


def test_tolerances_must_be_positive():
    with pytest.raises(ValidationError):
        ToleranceConfig(rel=0.0)
