import logging
from fractions import Fraction

import pytest
from pydantic import ValidationError

from descartes_lab.utils.logging import configure_logging, resolve_level
from descartes_lab.utils.settings import LabSettings, load_settings


def test_defaults():
    settings = LabSettings()

    assert settings.max_catalog_degree == 16
    assert settings.oracle_budget == 20000
    assert settings.enclosure_width == Fraction(1, 10**6)
    assert settings.threads >= 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DESCARTES_LAB_THREADS", "3")
    monkeypatch.setenv("DESCARTES_LAB_ENCLOSURE_WIDTH", "1/1000")
    monkeypatch.setenv("DESCARTES_LAB_LOG_LEVEL", "debug")
    monkeypatch.setenv("DESCARTES_LAB_SEED", "")

    settings = load_settings()

    assert settings.threads == 3
    assert settings.enclosure_width == Fraction(1, 1000)
    assert settings.log_level == "DEBUG"
    assert settings.seed == 0


def test_invalid_values_are_rejected():
    with pytest.raises(ValidationError):
        LabSettings(threads=0)
    with pytest.raises(ValidationError):
        LabSettings(enclosure_width="-1/2")
    with pytest.raises(ValidationError):
        LabSettings(log_level="loud")


def test_configure_logging_is_idempotent():
    first = configure_logging("INFO")
    handlers = list(first.handlers)
    second = configure_logging(logging.DEBUG)

    assert first is second
    assert second.handlers == handlers
    assert second.level == logging.DEBUG


def test_resolve_level():
    assert resolve_level("warning") == logging.WARNING
    assert resolve_level(logging.ERROR) == logging.ERROR
    assert resolve_level("INFO", verbose=True) == logging.DEBUG
    with pytest.raises(ValueError):
        resolve_level("chatty")
