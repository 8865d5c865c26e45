"""verify: re-check realizers, witnesses, products and the Paley-7 properties."""

import json
from itertools import combinations
from pathlib import Path

import click
from pydantic import ValidationError

from kmajority.cli.checks import CheckRecorder
from kmajority.cli.common import (
  digest,
  finish,
  load_profile,
  load_tournament,
  parse_ids,
  read_input,
)
from kmajority.constructions import lift_profile, paley7, paley7_profile, power
from kmajority.core import VertexSet, condorcet_profile, is_transitive, majority_tournament
from kmajority.errors import InvalidArgumentError
from kmajority.formats import read_tournament
from kmajority.models import BipartiteWitness, TransitiveWitness
from kmajority.transitive import (
  max_bipartite_transitive_bruteforce,
  max_transitive_bruteforce,
  verify_bipartite_witness,
  verify_transitive_witness,
)


existing_file = click.Path(exists=True, dir_okay=False)


@click.group()
def verify():
  """Re-check objects against the core predicates."""


@verify.command('realizer')
@click.option('--profile', 'profile_path', required=True, type=existing_file)
@click.option('--tournament', 'tournament_path', required=True, type=existing_file)
def realizer(profile_path: str, tournament_path: str):
  """The profile's majority tournament equals the tournament file."""
  profile, digests = load_profile(profile_path)
  _, more = read_input(tournament_path)
  tournament = read_tournament(tournament_path)
  recorder = CheckRecorder()
  with recorder.check('majority_tournament') as outcome:
    outcome['passed'] = majority_tournament(profile) == tournament
  finish(recorder, {'n': tournament.n, 'k': profile.k}, {**digests, **more})


def _load_witness(path: str) -> TransitiveWitness | BipartiteWitness:
  try:
    data = json.loads(Path(path).read_text())
  except json.JSONDecodeError as e:
    raise InvalidArgumentError(f'witness file is not JSON: {e}') from e
  if not isinstance(data, dict):
    raise InvalidArgumentError('witness file must hold a JSON object')
  data = data.get('outputs', data)
  try:
    if 'vertices' in data:
      return TransitiveWitness(vertices=parse_ids(data['vertices'], 'vertices'))
    if 'A' in data and 'B' in data:
      return BipartiteWitness(
        a=parse_ids(data['A'], 'A'),
        b=parse_ids(data['B'], 'B'),
        direction=data.get('direction', 'a->b'),
      )
  except ValidationError as e:
    raise InvalidArgumentError(f'malformed witness: {e}') from e
  raise InvalidArgumentError('witness file needs "vertices" or "A" and "B"')


@verify.command('witness')
@click.option('--tournament', 'tournament_path', required=True, type=existing_file)
@click.option('--witness', 'witness_path', required=True, type=existing_file)
def witness(tournament_path: str, witness_path: str):
  """A transitive or T_{t,t} witness holds in the tournament (or a profile's tournament)."""
  tournament, _, digests = load_tournament(tournament_path)
  found = _load_witness(witness_path)
  digests[Path(witness_path).name] = digest(Path(witness_path).read_text())
  recorder = CheckRecorder()
  if isinstance(found, TransitiveWitness):
    recorder.record('is_transitive', verify_transitive_witness(tournament, found))
    outputs = found.model_dump()
  else:
    recorder.record('is_transitive_bipartite', verify_bipartite_witness(tournament, found))
    outputs = found.dump()
  finish(recorder, outputs, digests)


@verify.command('product')
@click.option(
  '--input',
  'input_path',
  type=click.Path(exists=True, dir_okay=False),
  default=None,
  help='Base profile (default: the Condorcet profile)',
)
@click.option('--r', type=click.IntRange(min=1), default=2, show_default=True)
def product(input_path: str | None, r: int):
  """majority(lift(p, r)) equals power(majority(p), r), edge for edge."""
  if input_path is None:
    base, digests = condorcet_profile(), {}
  else:
    base, digests = load_profile(input_path)
  recorder = CheckRecorder()
  with recorder.check('lift_commutes_with_power') as outcome:
    lifted = majority_tournament(lift_profile(base, r))
    outcome['passed'] = lifted == power(majority_tournament(base), r)
  finish(recorder, {'n': base.n, 'k': base.k, 'r': r, 'vertices': base.n**r}, digests)


@verify.command('paley')
def paley():
  """Regularity, no T_4, no T_{2,2}, and the realizer of Paley-7."""
  t = paley7()
  recorder = CheckRecorder()
  with recorder.check('regular', 'all out-degrees 3') as outcome:
    outcome['passed'] = all(t.out_degree(v) == 3 for v in range(t.n))
  with recorder.check('no_T4', 'all 35 four-sets') as outcome:
    quads = (VertexSet.of(s) for s in combinations(range(7), 4))
    outcome['passed'] = not any(is_transitive(t, s) for s in quads)
  with recorder.check('max_transitive_3') as outcome:
    outcome['passed'] = max_transitive_bruteforce(t).size == 3
  with recorder.check('max_bipartite_1') as outcome:
    outcome['passed'] = max_bipartite_transitive_bruteforce(t).t == 1
  with recorder.check('realizer') as outcome:
    outcome['passed'] = majority_tournament(paley7_profile()) == t
  finish(recorder, {'n': 7, 'out_degree': 3})
