#!/usr/bin/env python3
"""
Configuration tests: .env loading and the memo cache decorator
"""

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from squigonometry.config import cached_computation, load_env, parse_env_file

ENV_TEXT = """\
# quadrature
SQUIG_TOL="1e-10"  # tighter than the default
export SQUIG_MC_WORKERS=3
SQUIG_CACHE_SIZE=64 # small

not a setting
LOG_LEVEL='DEBUG'
"""


def test_parse_env_file(tmp_path):
    env = tmp_path / ".env"
    env.write_text(ENV_TEXT, encoding="utf-8")
    assert parse_env_file(env) == {
        "SQUIG_TOL": "1e-10",
        "SQUIG_MC_WORKERS": "3",
        "SQUIG_CACHE_SIZE": "64",
        "LOG_LEVEL": "DEBUG",
    }


def test_load_env_keeps_existing_values(tmp_path, monkeypatch):
    env = tmp_path / ".env"
    env.write_text(ENV_TEXT, encoding="utf-8")
    for key in ("SQUIG_TOL", "SQUIG_CACHE_SIZE"):
        monkeypatch.setenv(key, "unset")
        monkeypatch.delenv(key)
    monkeypatch.setenv("SQUIG_MC_WORKERS", "7")
    monkeypatch.setenv("LOG_LEVEL", "ERROR")

    assert load_env(env) is True
    assert os.environ["SQUIG_TOL"] == "1e-10"
    assert os.environ["SQUIG_CACHE_SIZE"] == "64"
    assert os.environ["SQUIG_MC_WORKERS"] == "7"
    assert os.environ["LOG_LEVEL"] == "ERROR"


def test_load_env_missing_file(tmp_path):
    assert load_env(tmp_path / "absent.env") is False


def test_cache_keys_are_typed():
    calls = []

    @cached_computation(lambda n: n, maxsize=8)
    def checked(n):
        calls.append(n)
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError(n)
        return n * 2

    assert checked(1) == 2
    assert checked(1) == 2
    assert calls == [1]
    with pytest.raises(TypeError):
        checked(1.0)
    with pytest.raises(TypeError):
        checked(True)
    assert len(checked.cache) == 1

    checked.cache_clear()
    assert len(checked.cache) == 0
