"""find: constructive pairs, partitions and witnesses, each re-verified before it is reported."""

from math import comb

import click

from kmajority.bipartite import (
  coarse_partition,
  consistent_pair_bound,
  find_consistent_pair,
  find_majority_dominating_pair,
  majority_pair_bound,
  stirling_pair_bound,
  type_partition,
)
from kmajority.cli.checks import CheckRecorder
from kmajority.cli.common import finish, input_option, load_profile, load_tournament, show_table
from kmajority.constructions import product_parts, product_refiner
from kmajority.core import VertexSet, bipartite_direction, consistent, majority_dominates
from kmajority.transitive import (
  erdos_moser_floor,
  find_transitive_recursive,
  guided_bipartite_search,
  max_bipartite_transitive_bruteforce,
  max_transitive_bruteforce,
  meets_transitive_bound,
  transitive_lower_bound,
  verify_bipartite_witness,
  verify_transitive_witness,
)


@click.group()
def find():
  """Run the constructions and oracles on an input file."""


def _pair_outputs(a: VertexSet, b: VertexSet, bound: int) -> dict:
  return {'A': list(a), 'B': list(b), 'size': len(a), 'bound': bound}


@find.command('consistent-pair')
@input_option
def consistent_pair(input_path: str):
  """Equal-size pair consistent in every order."""
  profile, digests = load_profile(input_path)
  recorder = CheckRecorder()
  a, b = find_consistent_pair(profile)
  bound = consistent_pair_bound(profile.n, profile.k)
  recorder.require('consistent', consistent(profile, a, b))
  recorder.require('size_bound', len(a) == len(b) and len(a) >= bound, f'{len(a)} >= {bound}')
  finish(recorder, _pair_outputs(a, b, bound), digests)


@find.command('dominating-pair')
@input_option
def dominating_pair(input_path: str):
  """Equal-size pair where A majority dominates B."""
  profile, digests = load_profile(input_path)
  recorder = CheckRecorder()
  a, b = find_majority_dominating_pair(profile)
  bound = majority_pair_bound(profile.n, profile.k)
  recorder.require('majority_dominates', majority_dominates(profile, a, b))
  recorder.require('size_bound', len(a) == len(b) and len(a) >= bound, f'{len(a)} >= {bound}')
  finish(recorder, _pair_outputs(a, b, bound), digests)


@find.command('partition')
@input_option
@click.option(
  '--full', is_flag=True, default=False, help='Report every full type instead of Q-prefixes'
)
def partition(input_path: str, full: bool):
  """Type partition into antipodal majority-dominating pairs."""
  profile, digests = load_profile(input_path)
  recorder = CheckRecorder()
  result = type_partition(profile) if full else coarse_partition(profile)
  covered = 0
  for pair in result.pairs:
    union = (pair.a | pair.b).mask
    recorder.require('disjoint', pair.a.isdisjoint(pair.b) and covered & union == 0)
    covered |= union
    recorder.require('balanced', abs(len(pair.a) - len(pair.b)) <= 1, f'pair {pair.label}')
    if full:
      recorder.require('consistent', consistent(profile, pair.a, pair.b), f'pair {pair.label}')
    else:
      dominates = majority_dominates(profile, pair.a, pair.b)
      recorder.require('majority_dominates', dominates, f'pair {pair.label}')
  recorder.require('covers', covered == VertexSet.full(profile.n).mask)
  if not full:
    want = comb(2 * profile.k, profile.k)
    recorder.require('parts', result.parts == want, f'{result.parts} == {want}')
  show_table(
    'partition',
    ['s', '|A|', '|B|'],
    ((''.join(map(str, p.label)), len(p.a), len(p.b)) for p in result.pairs),
  )
  finish(recorder, result.report().model_dump(by_alias=True), digests)


@find.command('transitive')
@input_option
@click.option(
  '--mode', type=click.Choice(['recursive', 'exact']), default='recursive', show_default=True
)
def transitive(input_path: str, mode: str):
  """Transitive subtournament: recursive construction or exact maximum."""
  tournament, profile, digests = load_tournament(input_path)
  recorder = CheckRecorder()
  if mode == 'recursive':
    if profile is None:
      raise click.UsageError('--mode recursive needs a profile input')
    witness = find_transitive_recursive(profile)
    bound = transitive_lower_bound(profile.n, profile.k)
    recorder.require('is_transitive', verify_transitive_witness(tournament, witness))
    meets = meets_transitive_bound(witness.size, profile.n, profile.k)
    recorder.require('size_bound', meets, f'{witness.size} >= {bound:.4f}')
  else:
    witness = max_transitive_bruteforce(tournament)
    bound = erdos_moser_floor(tournament.n)
    recorder.require('is_transitive', verify_transitive_witness(tournament, witness))
    recorder.require('erdos_moser_floor', witness.size >= bound, f'{witness.size} >= {bound}')
  finish(recorder, {**witness.model_dump(), 'mode': mode, 'bound': bound}, digests)


@find.command('bipartite')
@input_option
@click.option('--mode', type=click.Choice(['exact', 'guided']), default='exact', show_default=True)
@click.option(
  '--base-n',
  type=click.IntRange(min=2),
  default=None,
  help='Guided mode: the input is a power of a tournament on this many vertices',
)
def bipartite(input_path: str, mode: str, base_n: int | None):
  """Largest T_{t,t}: exact search, or guided by the block structure of a power."""
  tournament, _, digests = load_tournament(input_path)
  recorder = CheckRecorder()
  if mode == 'exact':
    witness = max_bipartite_transitive_bruteforce(tournament)
  else:
    if base_n is None or tournament.n % base_n or tournament.n == base_n:
      raise click.UsageError('--mode guided needs --base-n dividing n with n > base-n')
    parts = product_parts(tournament.n // base_n, base_n)
    witness = guided_bipartite_search(tournament, parts, refine=product_refiner(base_n))
  a, b = witness.sets()
  recorder.require('is_transitive_bipartite', verify_bipartite_witness(tournament, witness))
  if a and b:
    recorder.require('direction', bipartite_direction(tournament, a, b) == witness.direction)
  finish(recorder, {**witness.dump(), 'mode': mode}, digests)


@find.command('bounds')
@click.option('--n', type=click.IntRange(min=1), required=True)
@click.option('--k', type=click.IntRange(min=1), required=True)
def bounds(n: int, k: int):
  """Closed-form guarantees for n vertices and 2k-1 orders."""
  recorder = CheckRecorder()
  values = {
    'consistent_pair': consistent_pair_bound(n, k),
    'majority_pair': majority_pair_bound(n, k),
    'stirling_pair': stirling_pair_bound(n, k),
    'transitive': transitive_lower_bound(n, k),
    'erdos_moser': erdos_moser_floor(n),
  }
  recorder.require('stirling_le_majority', values['stirling_pair'] <= values['majority_pair'])
  show_table('bounds', ['bound', 'value'], values.items())
  finish(recorder, values)
