"""Seeded sampling from G(n, k) and the X(n, k) statistic.

Per-trial generators come from ``SeedSequence(entropy=master_seed, spawn_key=(trial,))``, so a
trial's sample depends only on the master seed and the trial index.
"""

import logging

import numpy as np

from kmajority.config import get_settings
from kmajority.core import Profile, Tournament
from kmajority.errors import InvalidArgumentError
from kmajority.models import XMode, XValue
from kmajority.transitive import find_transitive_recursive, max_transitive_bruteforce

logger = logging.getLogger(__name__)


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
  """Generator for one trial, derived from the master seed by the trial counter."""
  return np.random.default_rng(np.random.SeedSequence(entropy=master_seed, spawn_key=(trial,)))


def fisher_yates_batch(rng: np.random.Generator, rows: int, n: int) -> np.ndarray:
  """``rows`` independent uniform permutations of 0..n-1, one per row.

  Position i (from the end) is swapped with a uniform index in [0, i], for all rows at once.
  """
  perms = np.tile(np.arange(n, dtype=np.int64), (rows, 1))
  idx = np.arange(rows)
  for i in range(n - 1, 0, -1):
    j = rng.integers(0, i + 1, size=rows)
    perms[idx, i], perms[idx, j] = perms[idx, j], perms[idx, i].copy()
  return perms


def inverse_rows(perms: np.ndarray) -> np.ndarray:
  """Row-wise inverse: ``out[r, perms[r, i]] = i``."""
  rows, n = perms.shape
  out = np.empty_like(perms)
  out[np.arange(rows)[:, None], perms] = np.arange(n)
  return out


def sample_positions(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
  """Position matrix (2k-1, n) of a sample from G(n, k)."""
  return inverse_rows(fisher_yates_batch(rng, 2 * k - 1, n))


def sample_profile(n: int, k: int, seed: int | np.random.Generator) -> Profile:
  """2k-1 independent uniform orders drawn with replacement.

  Raises:
      InvalidArgumentError: n or k below 1
  """
  if n < 1 or k < 1:
    raise InvalidArgumentError(f'sampling needs n >= 1 and k >= 1, got n={n}, k={k}')
  rng = np.random.default_rng(seed)
  return Profile.from_sequences(k, fisher_yates_batch(rng, 2 * k - 1, n).tolist())


def statistic_mode(n: int) -> XMode:
  """'exact' while the exact oracle accepts n, else 'lower_bound'."""
  return 'exact' if n <= get_settings().oracle_limit else 'lower_bound'


def x_from_positions(positions: np.ndarray, k: int, mode: XMode = 'exact') -> int:
  """X of the profile with the given position matrix, without building the profile first."""
  positions = np.asarray(positions)
  n = positions.shape[1]
  if n <= 2:
    return n
  ahead = (positions[:, :, None] < positions[:, None, :]).sum(axis=0) >= k
  scores = ahead.sum(axis=1)
  if len(np.unique(scores)) == n:
    return n
  if mode == 'exact':
    return max_transitive_bruteforce(Tournament.from_matrix(ahead)).size
  seqs = np.argsort(positions, axis=1)
  return find_transitive_recursive(Profile.from_sequences(k, seqs.tolist())).size


def x_statistic(p: Profile, mode: XMode | None = None) -> XValue:
  """Size of the largest transitive subtournament (exact) or a guaranteed one (lower_bound).

  Without ``mode`` the exact oracle is used while n is within ``oracle_limit``. Exact requests
  above the limit fall back to lower_bound. A value equal to n is exact in either mode.
  """
  limit = get_settings().oracle_limit
  mode = statistic_mode(p.n) if mode is None else mode
  if mode == 'exact' and p.n > limit:
    logger.warning('exact X needs n <= %d, got %d; reporting a lower bound', limit, p.n)
    mode = 'lower_bound'
  value = x_from_positions(p.positions(), p.k, mode)
  return XValue(value=value, mode='exact' if value == p.n else mode)
