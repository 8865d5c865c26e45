"""experiment: distributions of X(n, k), the Guilbaud estimate, growth tables and pair counts."""

import math
from fractions import Fraction
from typing import Any, Sequence

import click

from kmajority.cli.common import emit_json, output_option, seed_option, show_table, write_text
from kmajority.models import ExperimentConfig, ExperimentResult, Histogram
from kmajority.random_sim import (
  count_pairs,
  count_pattern_avoiders,
  estimate_distribution,
  exact_distribution,
  growth_exponent_experiment,
  guilbaud_experiment,
  transitive_probability,
  write_growth_csv,
)
from kmajority.random_sim.experiments import GUILBAUD_LIMIT

trials_option = click.option(
  '--trials', type=click.IntRange(min=1), required=True, help='Number of samples'
)
workers_option = click.option(
  '--workers',
  type=click.IntRange(min=1),
  default=None,
  help='Worker processes (default from config)',
)
# Accepted by the deterministic commands and echoed in config.
recorded_trials_option = click.option(
  '--trials',
  type=click.IntRange(min=1),
  default=None,
  help='Recorded in config; the run enumerates',
)
recorded_seed_option = click.option(
  '--seed',
  type=click.IntRange(0, 2**64 - 1),
  default=None,
  help='Recorded in config; the run is exact',
)


@click.group()
def experiment():
  """Exact and Monte Carlo experiments on G(n, k)."""


def _config(**values: Any) -> dict[str, Any]:
  return {key: value for key, value in values.items() if value is not None}


def _emit(result: ExperimentResult) -> None:
  emit_json(result.model_dump(mode='json'))


def _emit_histogram(hist: Histogram, config: dict[str, Any]) -> None:
  _emit(hist.result(config))
  show_table(
    f'X({hist.n}, {hist.k})',
    ['x', 'count', 'Pr'],
    ((x, hist.counts[x], f'{float(hist.probability(x)):.6f}') for x in sorted(hist.counts)),
  )


@experiment.command('exact-dist')
@click.option('--n', type=click.IntRange(min=1), required=True)
@click.option('--k', type=click.IntRange(min=1), required=True)
@recorded_trials_option
@recorded_seed_option
def exact_dist(n: int, k: int, trials: int | None, seed: int | None):
  """Exact distribution of X by enumerating every order tuple."""
  hist = exact_distribution(n, k)
  _emit_histogram(hist, _config(n=n, k=k, tuples=hist.trials, trials=trials, master_seed=seed))


@experiment.command('estimate-dist')
@click.option('--n', type=click.IntRange(min=1), required=True)
@click.option('--k', type=click.IntRange(min=1), required=True)
@trials_option
@seed_option
@click.option('--mode', type=click.Choice(['exact', 'lower_bound']), default=None)
@click.option(
  '--statistic',
  type=click.Choice(['distribution', 'mean', 'transitive_probability']),
  default='distribution',
  show_default=True,
  help='Observable reported under outputs',
)
@workers_option
def estimate_dist(
  n: int, k: int, trials: int, seed: int, mode: str | None, statistic: str, workers: int | None
):
  """Monte Carlo distribution of X with standard errors."""
  cfg = ExperimentConfig(n=n, k=k, trials=trials, master_seed=seed, statistic=statistic)
  hist = estimate_distribution(cfg, mode=mode, workers=workers)
  _emit_histogram(hist, cfg.model_dump())


@experiment.command('guilbaud')
@click.option('--k', type=click.IntRange(min=1), required=True)
@trials_option
@seed_option
@click.option('--exact', is_flag=True, default=False, help='Enumerate instead of sampling')
@workers_option
def guilbaud(k: int, trials: int, seed: int, exact: bool, workers: int | None):
  """Pr[X(3, k) = 3], compared with its limit 0.9123."""
  estimate = guilbaud_experiment(k, trials, seed, exact=exact, workers=workers)
  config = {'n': 3, 'k': k, 'trials': trials, 'master_seed': seed, 'exact': exact}
  _emit(estimate.histogram.result(config, {
    'value': estimate.value,
    'standard_error': estimate.standard_error,
    'successes': estimate.successes,
    'limit': GUILBAUD_LIMIT,
    'distance_to_limit': estimate.value - GUILBAUD_LIMIT,
  }))


@experiment.command('growth')
@click.option('--k', type=click.IntRange(min=1), required=True)
@click.option('--n', 'n_list', type=click.IntRange(min=1), multiple=True, required=True)
@trials_option
@seed_option
@click.option(
  '--format', 'fmt', type=click.Choice(['json', 'csv']), default='json', show_default=True
)
@output_option
@workers_option
def growth(
  k: int,
  n_list: Sequence[int],
  trials: int,
  seed: int,
  fmt: str,
  output: str | None,
  workers: int | None,
):
  """E[X(n, k)] per n and the log-log slope. Exploratory only."""
  table = growth_exponent_experiment(k, list(n_list), trials, seed, workers=workers)
  if fmt == 'csv':
    write_text(write_growth_csv(table), output)
  else:
    config = {'k': k, 'n': list(n_list), 'trials': trials, 'master_seed': seed}
    write_text(table.result(config).model_dump_json(indent=2) + '\n', output)
  show_table(
    f'growth k={k} ({table.label})',
    ['n', 'E[X]', 'se', 'mode'],
    ((r.n, f'{r.mean:.4f}', f'{r.standard_error:.4f}', r.mode) for r in table.rows),
  )


@experiment.command('fstar-count')
@click.option('--n', type=click.IntRange(min=1), required=True)
@recorded_trials_option
@recorded_seed_option
def fstar_count(n: int, trials: int | None, seed: int | None):
  """|F(n)|, |F*(n)| and the pattern-avoider count over all pairs of permutations."""
  counts = count_pairs(n)
  p_n = Fraction(counts.f, counts.pairs)
  _emit(ExperimentResult(
    config=_config(n=n, pairs=counts.pairs, trials=trials, master_seed=seed),
    statistic='transitive_probability',
    estimates={'p_n': float(p_n), 'f_star_fraction': counts.f_star / counts.pairs},
    exact={'p_n': str(p_n)},
    standard_errors={'p_n': 0.0, 'f_star_fraction': 0.0},
    outputs={
      **counts.model_dump(),
      'avoiders': count_pattern_avoiders(n),
      'f_le_f_star': counts.f <= counts.f_star,
    },
  ))


@experiment.command('pn')
@click.option('--n', type=click.IntRange(min=1), required=True)
@recorded_trials_option
@recorded_seed_option
def pn(n: int, trials: int | None, seed: int | None):
  """Exact p_n = |F(n)| / (n!)^2."""
  value = transitive_probability(n)
  pairs = math.factorial(n) ** 2
  _emit(ExperimentResult(
    config=_config(n=n, pairs=pairs, trials=trials, master_seed=seed),
    statistic='transitive_probability',
    estimates={'p_n': float(value)},
    exact={'p_n': str(value)},
    standard_errors={'p_n': 0.0},
    outputs={'p_n': str(value), 'value': float(value), 'pairs': pairs},
  ))
