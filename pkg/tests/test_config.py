"""
Test environment-driven configuration
"""
import pytest
from dotenv import load_dotenv

from qgain.config import Config, _env_float, _env_int
from qgain.utils.exceptions import ConfigurationError


def test_env_int(monkeypatch):
    """Test integer settings, their defaults and their minimum"""
    monkeypatch.delenv("QGAIN_TEST_INT", raising=False)
    assert _env_int("QGAIN_TEST_INT", 7) == 7
    monkeypatch.setenv("QGAIN_TEST_INT", "12")
    assert _env_int("QGAIN_TEST_INT", 7) == 12
    monkeypatch.setenv("QGAIN_TEST_INT", "many")
    with pytest.raises(ConfigurationError) as excinfo:
        _env_int("QGAIN_TEST_INT", 7)
    assert excinfo.value.config_key == "QGAIN_TEST_INT"
    monkeypatch.setenv("QGAIN_TEST_INT", "0")
    with pytest.raises(ConfigurationError):
        _env_int("QGAIN_TEST_INT", 7, minimum=1)


def test_env_float(monkeypatch):
    """Test tolerances must be positive numbers"""
    monkeypatch.setenv("QGAIN_TEST_TOL", "1e-6")
    assert _env_float("QGAIN_TEST_TOL", 1e-9) == 1e-6
    monkeypatch.setenv("QGAIN_TEST_TOL", "-1")
    with pytest.raises(ConfigurationError):
        _env_float("QGAIN_TEST_TOL", 1e-9)


def test_dotenv_file_values_are_read(tmp_path, monkeypatch):
    """Test a QGAIN_ key from a .env file is read like an environment variable"""
    env_file = tmp_path / ".env"
    env_file.write_text("QGAIN_TEST_DOTENV=5\n", encoding="utf-8")
    monkeypatch.setenv("QGAIN_TEST_DOTENV", "0")
    monkeypatch.delenv("QGAIN_TEST_DOTENV")
    assert load_dotenv(env_file)
    assert _env_int("QGAIN_TEST_DOTENV", 8) == 5


def test_cors_origins(monkeypatch):
    """Test comma-separated origins are split and trimmed"""
    monkeypatch.setattr(Config, "CORS_ORIGINS", "http://a.test, http://b.test,")
    assert Config.get_cors_origins() == ["http://a.test", "http://b.test"]


if __name__ == "__main__":
    pytest.main([__file__])
