"""Input loading, digests and output shared by the command groups."""

import hashlib
import json
from pathlib import Path
from typing import Any, Iterable, Sequence

import click
from rich.table import Table

from kmajority.cli.checks import CheckRecorder
from kmajority.core import Profile, Tournament, majority_tournament
from kmajority.errors import InvalidArgumentError, VerificationError
from kmajority.formats import (
  TournamentStyle,
  format_profile,
  format_tournament,
  parse_profile,
  parse_tournament,
  write_profile,
  write_tournament,
)
from kmajority.log import get_console
from kmajority.models import CommandResult

input_option = click.option(
  '--input',
  'input_path',
  required=True,
  type=click.Path(exists=True, dir_okay=False),
  help='Profile or tournament file',
)
output_option = click.option(
  '--output',
  type=click.Path(dir_okay=False, writable=True),
  default=None,
  help='Write here instead of standard output',
)
seed_option = click.option('--seed', required=True, type=click.IntRange(0, 2**64 - 1), help='Seed')


def digest(text: str) -> str:
  """SHA-256 hex digest of an input file's text."""
  return hashlib.sha256(text.encode()).hexdigest()


def is_verbose() -> bool:
  ctx = click.get_current_context(silent=True)
  return bool(ctx and ctx.find_root().obj and ctx.find_root().obj.get('verbose'))


def command_path() -> str:
  ctx = click.get_current_context()
  return ctx.command_path


def read_input(path: str) -> tuple[str, dict[str, str]]:
  text = Path(path).read_text()
  return text, {Path(path).name: digest(text)}


def is_profile_text(text: str) -> bool:
  """Profiles start with ``n k``, tournaments with ``n``."""
  first = text.split('\n', 1)[0].split()
  return len(first) == 2


def load_profile(path: str) -> tuple[Profile, dict[str, str]]:
  """Profile file and its digest; a tournament file is a usage error."""
  text, digests = read_input(path)
  if not is_profile_text(text):
    raise click.BadParameter(f'{path} is not a profile file', param_hint='--input')
  return parse_profile(text), digests


def load_tournament(path: str) -> tuple[Tournament, Profile | None, dict[str, str]]:
  """Tournament from a tournament file, or the majority tournament of a profile file."""
  text, digests = read_input(path)
  if is_profile_text(text):
    profile = parse_profile(text)
    return majority_tournament(profile), profile, digests
  return parse_tournament(text), None, digests


def write_text(text: str, output: str | None) -> None:
  """Write to ``output`` or, without one, to standard output."""
  if output:
    Path(output).write_text(text)
  else:
    click.echo(text, nl=False)


def write_profile_output(p: Profile, output: str | None) -> None:
  """Profile file at ``output``, or the profile text on standard output."""
  if output:
    write_profile(output, p)
  else:
    write_text(format_profile(p), None)


def write_tournament_output(t: Tournament, style: TournamentStyle, output: str | None) -> None:
  if output:
    write_tournament(output, t, style)
  else:
    write_text(format_tournament(t, style), None)


def emit_json(payload: dict[str, Any]) -> None:
  """Machine-readable output on standard output."""
  click.echo(json.dumps(payload, indent=2, default=str))


def show_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
  """Human-readable table on standard error, only under --verbose."""
  if not is_verbose():
    return
  table = Table(title=title)
  for column in columns:
    table.add_column(column)
  for row in rows:
    table.add_row(*(str(cell) for cell in row))
  get_console().print(table)


def finish(
  recorder: CheckRecorder,
  outputs: dict[str, Any],
  input_digests: dict[str, str] | None = None,
) -> CommandResult:
  """Emit the command result; a failed check is reported and then ends the command.

  Raises:
      VerificationError: any recorded check failed
  """
  result = CommandResult(
    command=command_path(),
    input_digests=input_digests or {},
    outputs=outputs,
    verification=recorder.verification,
    checks=recorder.spans,
    wall_time_s=recorder.elapsed_s,
  )
  emit_json(result.model_dump(mode='json'))
  show_table(
    'checks',
    ['check', 'passed', 'detail', 'ms'],
    ((s.name, s.passed, s.detail, f'{s.duration_ms:.1f}') for s in recorder.spans),
  )
  failure = recorder.first_failure()
  if failure is not None:
    raise VerificationError(failure.name, failure.detail)
  return result


def parse_ids(values: Any, what: str) -> tuple[int, ...]:
  """Vertex ids from a JSON witness field."""
  if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
    raise InvalidArgumentError(f'{what} must be a list of vertex ids')
  return tuple(values)
