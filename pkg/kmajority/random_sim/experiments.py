"""Exact and Monte Carlo distributions of X(n, k) and the experiments built on them."""

import itertools
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd

from kmajority.config import get_settings
from kmajority.errors import InvalidArgumentError, ResourceLimitError, VerificationError
from kmajority.models import (
  ExperimentConfig,
  GrowthRow,
  GrowthTable,
  Histogram,
  ProportionEstimate,
)
from kmajority.random_sim.patterns import count_F
from kmajority.random_sim.sampling import (
  XMode,
  sample_positions,
  statistic_mode,
  trial_rng,
  x_from_positions,
)
from kmajority.transitive import erdos_moser_floor

logger = logging.getLogger(__name__)

GUILBAUD_LIMIT = 0.9123


def exact_distribution(n: int, k: int) -> Histogram:
  """X(n, k) over every tuple of 2k-1 orders, as raw counts.

  Raises:
      ResourceLimitError: (n!)^(2k-1) tuples exceed the enumeration budget
  """
  if n < 1 or k < 1:
    raise InvalidArgumentError(f'n and k must be at least 1, got n={n}, k={k}')
  total = math.factorial(n) ** (2 * k - 1)
  budget = get_settings().enumeration_budget
  if total > budget:
    raise ResourceLimitError(f'{total} order tuples exceed the enumeration budget of {budget}')
  positions = [
    np.argsort(perm) for perm in itertools.permutations(range(n))
  ]
  counts: Counter[int] = Counter()
  for choice in itertools.product(positions, repeat=2 * k - 1):
    counts[x_from_positions(np.stack(choice), k, 'exact')] += 1
  return Histogram(n=n, k=k, trials=total, counts=dict(counts), mode='exact')


def _run_trials(n: int, k: int, master_seed: int, start: int, stop: int, mode: XMode) -> Counter:
  counts: Counter[int] = Counter()
  floor = erdos_moser_floor(n)
  for trial in range(start, stop):
    x = x_from_positions(sample_positions(n, k, trial_rng(master_seed, trial)), k, mode)
    if mode == 'exact' and x < floor:
      raise VerificationError('erdos_moser_floor', f'trial {trial} gave X={x} for n={n}')
    counts[x] += 1
  return counts


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
  size = -(-trials // workers)
  return [(start, min(start + size, trials)) for start in range(0, trials, size)]


def estimate_distribution(
  cfg: ExperimentConfig,
  mode: XMode | None = None,
  workers: int | None = None,
) -> Histogram:
  """Monte Carlo histogram of X over ``cfg.trials`` seeded samples.

  Trials are split into contiguous ranges, one per worker process. Each trial seeds its own
  generator, so the histogram is the same for any number of workers.

  Without ``mode``, ``cfg.statistic`` picks it. ``transitive_probability`` only asks whether
  X = n, which lower_bound mode decides exactly at any n, so it skips the exact oracle.
  The other statistics use the exact oracle up to ``oracle_limit``.
  """
  if mode is None:
    mode = 'lower_bound' if cfg.statistic == 'transitive_probability' else statistic_mode(cfg.n)
  workers = get_settings().workers if workers is None else workers
  ranges = _chunks(cfg.trials, max(1, workers))
  counts: Counter[int] = Counter()
  if workers <= 1 or len(ranges) == 1:
    for start, stop in ranges:
      counts.update(_run_trials(cfg.n, cfg.k, cfg.master_seed, start, stop, mode))
  else:
    with ProcessPoolExecutor(max_workers=workers) as pool:
      futures = [
        pool.submit(_run_trials, cfg.n, cfg.k, cfg.master_seed, start, stop, mode)
        for start, stop in ranges
      ]
      for future in futures:
        counts.update(future.result())
  logger.info('estimated X(%d, %d) over %d trials', cfg.n, cfg.k, cfg.trials)
  hist_mode = 'monte_carlo' if mode == 'exact' else 'lower_bound'
  return Histogram(
    n=cfg.n,
    k=cfg.k,
    trials=cfg.trials,
    counts=dict(sorted(counts.items())),
    mode=hist_mode,
    statistic=cfg.statistic,
  )


def guilbaud_experiment(
  k: int,
  trials: int,
  seed: int,
  exact: bool = False,
  workers: int | None = None,
) -> ProportionEstimate:
  """Pr[X(3, k) = 3]; tends to about 0.9123 as k grows.

  With ``exact`` the probability comes from full enumeration and ``trials`` is ignored.
  """
  if exact:
    hist = exact_distribution(3, k).model_copy(update={'statistic': 'transitive_probability'})
  else:
    hist = estimate_distribution(
      ExperimentConfig(
        n=3, k=k, trials=trials, master_seed=seed, statistic='transitive_probability'
      ),
      mode='exact',
      workers=workers,
    )
  return ProportionEstimate(
    k=k,
    trials=hist.trials,
    successes=hist.counts.get(3, 0),
    value=float(hist.probability(3)),
    standard_error=hist.standard_error(3),
    mode=hist.mode,
    histogram=hist,
  )


def fit_slope(ns: Sequence[int], means: Sequence[float]) -> float | None:
  """Least-squares slope of log(mean) against log(n); None with fewer than two distinct n."""
  if len(set(ns)) < 2:
    return None
  log_n = np.log(np.asarray(ns, dtype=float))
  slope, _ = np.polyfit(log_n, np.log(np.asarray(means, dtype=float)), 1)
  return float(slope)


def growth_exponent_experiment(
  k: int,
  n_list: Sequence[int],
  trials: int,
  seed: int,
  workers: int | None = None,
) -> GrowthTable:
  """E[X(n, k)] for each n and the fitted log-log slope. Exploratory: nothing is asserted.

  Rows above the oracle limit use the recursive lower bound and are labelled so.
  """
  rows = []
  for n in n_list:
    mode = statistic_mode(n)
    hist = estimate_distribution(
      ExperimentConfig(n=n, k=k, trials=trials, master_seed=seed), mode=mode, workers=workers
    )
    rows.append(
      GrowthRow(n=n, mean=hist.mean(), standard_error=hist.mean_standard_error(), mode=hist.mode)
    )
  slope = fit_slope([r.n for r in rows], [r.mean for r in rows])
  return GrowthTable(k=k, trials=trials, master_seed=seed, rows=rows, slope=slope)


def growth_frame(table: GrowthTable) -> pd.DataFrame:
  """Plot-ready columns: n, log_n, mean, log_mean, standard_error, mode."""
  records = [row.model_dump() for row in table.rows]
  frame = pd.DataFrame(records, columns=list(GrowthRow.model_fields))
  frame.insert(1, 'log_n', np.log(frame['n'].astype(float)))
  frame.insert(3, 'log_mean', np.log(frame['mean'].astype(float)))
  return frame


def write_growth_csv(table: GrowthTable, path: str | Path | None = None) -> str:
  """CSV text of the growth table; also written to ``path`` when given."""
  text = growth_frame(table).to_csv(index=False)
  if path is not None:
    Path(path).write_text(text)
  return text


def transitive_probability(n: int) -> Fraction:
  """p_n = |F(n)| / (n!)^2: the chance that (id, pi1, pi2) generates a transitive tournament."""
  return Fraction(count_F(n), math.factorial(n) ** 2)
