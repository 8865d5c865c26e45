"""Shared fixtures: fresh settings, the classic small tournaments and golden files."""

import hashlib
from pathlib import Path

import pytest
import yaml

from kmajority.config import reset_settings
from kmajority.constructions import paley7
from kmajority.core import Profile, Tournament, condorcet_profile, majority_tournament

DATA_DIR = Path(__file__).parent / 'data'


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
  monkeypatch.delenv('KMAJORITY_CONFIG', raising=False)
  monkeypatch.delenv('KMAJORITY_ORACLE_MEMO', raising=False)
  reset_settings()
  yield
  reset_settings()


@pytest.fixture
def paley() -> Tournament:
  return paley7()


@pytest.fixture
def condorcet() -> Profile:
  return condorcet_profile()


@pytest.fixture
def cycle(condorcet) -> Tournament:
  return majority_tournament(condorcet)


@pytest.fixture
def golden():
  """Check text against a committed file under tests/data and its recorded SHA-256."""
  digests = yaml.safe_load((DATA_DIR / 'digests.yaml').read_text())

  def _check(name: str, text: str) -> None:
    assert hashlib.sha256(text.encode()).hexdigest() == digests[name]
    assert text == (DATA_DIR / name).read_text()

  return _check
