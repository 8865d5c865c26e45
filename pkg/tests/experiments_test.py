import math
from fractions import Fraction

import pytest

from kmajority.errors import ResourceLimitError
from kmajority.models import ExperimentConfig
from kmajority.random_sim import (
  estimate_distribution,
  exact_distribution,
  fit_slope,
  growth_exponent_experiment,
  growth_frame,
  guilbaud_experiment,
  transitive_probability,
  write_growth_csv,
)
from kmajority.random_sim.experiments import GUILBAUD_LIMIT


def test_exact_distribution_three_vertices():
  hist = exact_distribution(3, 2)
  assert hist.trials == 216
  assert hist.counts == {2: 12, 3: 204}
  assert hist.probability(2) == Fraction(1, 18)
  assert hist.standard_error(2) == 0.0
  result = hist.result({'n': 3, 'k': 2})
  assert result.exact == {'Pr[X=2]': '1/18', 'Pr[X=3]': '17/18'}
  assert result.histogram == {'2': 12, '3': 204}
  assert result.mode == 'exact'
  assert result.outputs == {}


@pytest.mark.parametrize(
  'n, k, counts',
  [(1, 1, {1: 1}), (2, 1, {2: 2}), (2, 2, {2: 8}), (3, 1, {3: 6})],
)
def test_exact_distribution_small_cases(n, k, counts):
  assert exact_distribution(n, k).counts == counts


def test_exact_distribution_four_vertices():
  hist = exact_distribution(4, 2)
  assert hist.trials == 24**3
  assert set(hist.counts) <= {3, 4}
  assert hist.counts[4] == 24 * 24 * 24 - hist.counts[3]


def test_exact_distribution_budget():
  with pytest.raises(ResourceLimitError):
    exact_distribution(5, 2)


def test_estimate_is_reproducible():
  cfg = ExperimentConfig(n=6, k=2, trials=300, master_seed=11)
  first = estimate_distribution(cfg)
  assert first == estimate_distribution(cfg)
  assert first.mode == 'monte_carlo'
  assert sum(first.counts.values()) == 300
  assert min(first.counts) >= 3


def test_estimate_does_not_depend_on_workers():
  cfg = ExperimentConfig(n=5, k=2, trials=120, master_seed=2)
  assert estimate_distribution(cfg, workers=1) == estimate_distribution(cfg, workers=3)


def test_lower_bound_mode_is_labelled():
  cfg = ExperimentConfig(n=40, k=2, trials=5, master_seed=1)
  hist = estimate_distribution(cfg)
  assert hist.mode == 'lower_bound'
  assert hist.result({}).exact is None


def test_transitive_probability_statistic_skips_the_oracle():
  plain = estimate_distribution(ExperimentConfig(n=6, k=2, trials=200, master_seed=11))
  cfg = ExperimentConfig(n=6, k=2, trials=200, master_seed=11, statistic='transitive_probability')
  hist = estimate_distribution(cfg)
  assert hist.mode == 'lower_bound'
  assert hist.statistic == 'transitive_probability'
  assert hist.counts.get(6, 0) == plain.counts.get(6, 0)
  observed = hist.observable()
  assert observed['Pr[X=6]'] == float(plain.probability(6))
  assert observed['standard_error'] == plain.standard_error(6)


def test_transitive_probability_above_the_oracle_limit():
  cfg = ExperimentConfig(n=40, k=2, trials=4, master_seed=3, statistic='transitive_probability')
  hist = estimate_distribution(cfg)
  assert hist.trials == 4
  assert 'Pr[X=40]' in hist.result(cfg.model_dump()).outputs


def test_mean_statistic():
  cfg = ExperimentConfig(n=5, k=2, trials=60, master_seed=4, statistic='mean')
  hist = estimate_distribution(cfg)
  assert hist.mode == 'monte_carlo'
  assert hist.observable() == {'E[X]': hist.mean(), 'standard_error': hist.mean_standard_error()}
  plain = cfg.model_copy(update={'statistic': 'distribution'})
  assert estimate_distribution(plain).counts == hist.counts


@pytest.mark.slow
def test_cycle_probability_estimate():
  hist = estimate_distribution(ExperimentConfig(n=3, k=2, trials=100_000, master_seed=2024))
  assert abs(float(hist.probability(2)) - 1 / 18) <= 4 * hist.standard_error(2)


def test_guilbaud_exact_k2():
  estimate = guilbaud_experiment(2, trials=1, seed=0, exact=True)
  assert estimate.value == pytest.approx(17 / 18)
  assert estimate.successes == 204
  assert estimate.mode == 'exact'
  assert estimate.standard_error == 0.0
  assert estimate.histogram.counts == {2: 12, 3: 204}


def test_guilbaud_sampled_is_seeded():
  first = guilbaud_experiment(3, trials=500, seed=9)
  assert first == guilbaud_experiment(3, trials=500, seed=9)
  assert first.mode == 'monte_carlo'
  assert 0.8 < first.value <= 1.0
  assert first.histogram.trials == 500
  assert first.successes == first.histogram.counts.get(3, 0)


@pytest.mark.slow
def test_guilbaud_approaches_its_limit():
  estimates = {k: guilbaud_experiment(k, trials=100_000, seed=30 + k) for k in (10, 50, 200)}
  assert abs(estimates[200].value - GUILBAUD_LIMIT) <= 0.02
  for k, estimate in estimates.items():
    assert GUILBAUD_LIMIT - 0.02 <= estimate.value <= 17 / 18, k
  for smaller, larger in ((10, 50), (50, 200)):
    a, b = estimates[smaller], estimates[larger]
    tol = 4 * math.hypot(a.standard_error, b.standard_error)
    assert a.value >= b.value - tol, (smaller, larger)


def test_growth_table():
  table = growth_exponent_experiment(2, [4, 8, 16], trials=40, seed=3)
  assert table == growth_exponent_experiment(2, [4, 8, 16], trials=40, seed=3)
  assert [row.n for row in table.rows] == [4, 8, 16]
  assert all(row.mode == 'monte_carlo' for row in table.rows)
  assert table.slope is not None
  assert table.label == 'exploratory'


def test_growth_single_n_has_no_slope():
  assert growth_exponent_experiment(1, [5], trials=3, seed=0).slope is None


def test_fit_slope():
  assert fit_slope([2, 4, 8], [3.0, 3.0, 3.0]) == pytest.approx(0.0, abs=1e-9)
  assert fit_slope([4, 16, 64], [2.0, 4.0, 8.0]) == pytest.approx(0.5)
  assert fit_slope([4, 4], [1.0, 2.0]) is None


def test_growth_csv(tmp_path):
  table = growth_exponent_experiment(1, [3, 6], trials=4, seed=1)
  frame = growth_frame(table)
  assert list(frame.columns) == ['n', 'log_n', 'mean', 'log_mean', 'standard_error', 'mode']
  path = tmp_path / 'growth.csv'
  text = write_growth_csv(table, path)
  assert path.read_text() == text
  assert text.splitlines()[0] == 'n,log_n,mean,log_mean,standard_error,mode'
  assert text.splitlines()[1].startswith('3,')


@pytest.mark.parametrize(
  'n, value',
  [(1, Fraction(1)), (2, Fraction(1)), (3, Fraction(17, 18))],
)
def test_transitive_probability(n, value):
  assert transitive_probability(n) == value


def test_exact_distribution_five_orders():
  hist = exact_distribution(3, 3)
  assert hist.trials == 6**5
  assert set(hist.counts) == {2, 3}
  exact = guilbaud_experiment(3, trials=1, seed=0, exact=True)
  assert exact.successes == hist.counts[3]
  assert 0.9123 < exact.value < 17 / 18


def test_single_trial_histogram():
  hist = estimate_distribution(ExperimentConfig(n=4, k=2, trials=1, master_seed=0))
  assert len(hist.counts) == 1
  assert hist.trials == 1
