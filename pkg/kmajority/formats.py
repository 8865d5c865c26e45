"""Text formats for profiles and tournaments.

Profile: a header line ``n k`` followed by 2k-1 lines, each a space-separated permutation.
Tournament: a header line ``n`` followed by one line per vertex, either a row of n ``0``/``1``
characters (``matrix`` style) or the space-separated out-neighbours (``list`` style).
Writers always end with a newline, so parsing and re-writing in the detected style
reproduces the input bytes.
"""

from pathlib import Path
from typing import Literal

from kmajority.core import Profile, Tournament, VertexSet
from kmajority.errors import InvalidArgumentError

TournamentStyle = Literal['matrix', 'list']


def _lines(text: str) -> list[str]:
  lines = text.split('\n')
  if lines and lines[-1] == '':
    lines.pop()
  return lines


def _ints(line: str, what: str) -> list[int]:
  try:
    return [int(tok) for tok in line.split()]
  except ValueError as e:
    raise InvalidArgumentError(f'malformed {what} line: {line!r}') from e


def format_profile(p: Profile) -> str:
  """Serialise a profile."""
  out = [f'{p.n} {p.k}']
  out.extend(' '.join(str(v) for v in o.seq) for o in p.orders)
  return '\n'.join(out) + '\n'


def parse_profile(text: str) -> Profile:
  """Parse the profile text format."""
  lines = _lines(text)
  if not lines:
    raise InvalidArgumentError('empty profile text')
  header = _ints(lines[0], 'profile header')
  if len(header) != 2:
    raise InvalidArgumentError('profile header must be "n k"')
  n, k = header
  if k < 1:
    raise InvalidArgumentError(f'k must be at least 1, got {k}')
  body = lines[1:]
  if len(body) != 2 * k - 1:
    raise InvalidArgumentError(f'expected {2 * k - 1} order lines, found {len(body)}')
  seqs = [_ints(line, 'order') for line in body]
  for seq in seqs:
    if len(seq) != n:
      raise InvalidArgumentError(f'order {seq} does not have {n} entries')
  return Profile.from_sequences(k, seqs)


def format_tournament(t: Tournament, style: TournamentStyle = 'matrix') -> str:
  """Serialise a tournament in ``matrix`` or ``list`` style."""
  out = [str(t.n)]
  for row in t.rows:
    if style == 'matrix':
      out.append(''.join('1' if (row >> v) & 1 else '0' for v in range(t.n)))
    elif style == 'list':
      out.append(' '.join(str(v) for v in VertexSet(row)))
    else:
      raise InvalidArgumentError(f'unknown tournament style {style!r}')
  return '\n'.join(out) + '\n'


def _is_matrix_row(line: str, n: int) -> bool:
  return len(line) == n and n > 0 and set(line) <= {'0', '1'}


def tournament_style(text: str) -> TournamentStyle:
  """Style a tournament text was written in."""
  lines = _lines(text)
  if len(lines) < 2:
    return 'matrix'
  n = _ints(lines[0], 'tournament header')[0]
  return 'matrix' if all(_is_matrix_row(line, n) for line in lines[1:]) else 'list'


def parse_tournament(text: str) -> Tournament:
  """Parse either tournament style; the style is detected from the rows."""
  lines = _lines(text)
  if not lines:
    raise InvalidArgumentError('empty tournament text')
  header = _ints(lines[0], 'tournament header')
  if len(header) != 1:
    raise InvalidArgumentError('tournament header must be "n"')
  n = header[0]
  body = lines[1:]
  if len(body) != n:
    raise InvalidArgumentError(f'expected {n} vertex lines, found {len(body)}')
  rows = []
  if tournament_style(text) == 'matrix':
    for line in body:
      rows.append(sum(1 << v for v, ch in enumerate(line) if ch == '1'))
  else:
    for line in body:
      neighbours = _ints(line, 'out-neighbour')
      if any(not 0 <= v < n for v in neighbours):
        raise InvalidArgumentError(f'out-neighbour out of range in {line!r}')
      rows.append(VertexSet.of(neighbours).mask)
  return Tournament(tuple(rows))


def read_profile(path: str | Path) -> Profile:
  """Read a profile file."""
  return parse_profile(Path(path).read_text())


def write_profile(path: str | Path, p: Profile) -> None:
  Path(path).write_text(format_profile(p))


def read_tournament(path: str | Path) -> Tournament:
  """Read a tournament file in either style."""
  return parse_tournament(Path(path).read_text())


def write_tournament(path: str | Path, t: Tournament, style: TournamentStyle = 'matrix') -> None:
  Path(path).write_text(format_tournament(t, style))
