from app.api.core.config import Settings, get_settings


def test_defaults(monkeypatch):
    monkeypatch.delenv("RIKITAKE_DEFAULT_METHOD", raising=False)
    settings = Settings(_env_file=None)
    assert settings.DEFAULT_METHOD == "rk4"
    assert settings.DEFAULT_BETA == "1"
    assert settings.MIDPOINT_TOL == 1e-14


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("RIKITAKE_DEFAULT_METHOD", "midpoint")
    monkeypatch.setenv("RIKITAKE_DEFAULT_STEPS", "250")
    settings = Settings(_env_file=None)
    assert settings.DEFAULT_METHOD == "midpoint"
    assert settings.DEFAULT_STEPS == 250


def test_settings_are_cached():
    assert get_settings() is get_settings()
