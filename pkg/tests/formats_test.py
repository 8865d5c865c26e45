import pytest
from hypothesis import given

from kmajority.core import majority_tournament
from kmajority.errors import InvalidArgumentError
from kmajority.formats import (
  format_profile,
  format_tournament,
  parse_profile,
  parse_tournament,
  read_profile,
  read_tournament,
  tournament_style,
  write_profile,
  write_tournament,
)

from .strategies import profiles, tournaments

CONDORCET_TEXT = '3 2\n0 1 2\n1 2 0\n2 0 1\n'


def test_profile_text_is_reproduced_exactly(condorcet):
  assert format_profile(condorcet) == CONDORCET_TEXT
  assert parse_profile(CONDORCET_TEXT) == condorcet


@given(profiles(max_n=9))
def test_profile_format_roundtrip(p):
  text = format_profile(p)
  assert parse_profile(text) == p
  assert format_profile(parse_profile(text)) == text


@given(tournaments(min_n=1))
def test_tournament_styles_parse_back_identically(t):
  for style in ('matrix', 'list'):
    text = format_tournament(t, style)
    assert parse_tournament(text) == t
    assert format_tournament(parse_tournament(text), tournament_style(text)) == text


def test_tournament_matrix_and_list_layout(cycle):
  assert format_tournament(cycle, 'matrix') == '3\n010\n001\n100\n'
  assert format_tournament(cycle, 'list') == '3\n1\n2\n0\n'
  assert tournament_style('3\n010\n001\n100\n') == 'matrix'
  assert tournament_style('3\n1\n2\n0\n') == 'list'


@pytest.mark.parametrize(
  'text',
  [
    '',
    '3\n0 1 2\n',
    '3 2\n0 1 2\n1 2 0\n',
    '3 2\n0 1 2\n1 2 0\n2 0 x\n',
    '3 2\n0 1 2\n1 2 0\n2 0\n',
    '3 2\n0 1 2\n1 2 0\n2 2 0\n',
  ],
)
def test_malformed_profiles_are_rejected(text):
  with pytest.raises(InvalidArgumentError):
    parse_profile(text)


@pytest.mark.parametrize('text', ['', '2\n01\n', '2\n01\n01\n', '2\n5\n\n', '2 2\n01\n00\n'])
def test_malformed_tournaments_are_rejected(text):
  with pytest.raises(InvalidArgumentError):
    parse_tournament(text)


def test_profile_files(tmp_path, condorcet):
  path = tmp_path / 'p.txt'
  write_profile(path, condorcet)
  assert path.read_text() == CONDORCET_TEXT
  assert majority_tournament(read_profile(path)) == majority_tournament(condorcet)


@pytest.mark.parametrize('style', ['matrix', 'list'])
def test_tournament_files(tmp_path, paley, style):
  path = tmp_path / f'{style}.txt'
  write_tournament(path, paley, style)
  assert path.read_text() == format_tournament(paley, style)
  assert read_tournament(path) == paley
