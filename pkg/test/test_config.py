"""
Test Suite for Runtime Settings
===============================
"""

import pytest

from app.config import get_settings


def test_defaults():
    settings = get_settings()
    assert settings.enumeration_cap == 12
    assert settings.brace_cap == 8
    assert settings.automorphism_cap == 24
    assert settings.log_level == "WARNING"


def test_individual_caps(monkeypatch):
    monkeypatch.setenv("BRACOID_BRACE_CAP", "6")
    monkeypatch.setenv("BRACOID_WORKERS", "1")
    settings = get_settings()
    assert settings.brace_cap == 6
    assert settings.workers == 1
    assert settings.enumeration_cap == 12


def test_blanket_cap_overrides_everything(monkeypatch):
    monkeypatch.setenv("BRACOID_ORDER_CAP", "5")
    monkeypatch.setenv("BRACOID_BRACE_CAP", "8")
    settings = get_settings()
    assert settings.enumeration_cap == settings.brace_cap == settings.automorphism_cap == 5


def test_empty_values_fall_back(monkeypatch):
    monkeypatch.setenv("BRACOID_ORDER_CAP", "")
    monkeypatch.setenv("BRACOID_ENUMERATION_CAP", " ")
    assert get_settings().enumeration_cap == 12


@pytest.mark.parametrize("value", ["ten", "0", "-3"])
def test_invalid_values(monkeypatch, value):
    monkeypatch.setenv("BRACOID_ENUMERATION_CAP", value)
    with pytest.raises(ValueError):
        get_settings()
