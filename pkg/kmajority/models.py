"""Pydantic models for witnesses, partitions, experiments and command results."""

import math
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from kmajority.core import VertexSet

Direction = Literal['a->b', 'b->a']
Mode = Literal['exact', 'monte_carlo', 'lower_bound']
XMode = Literal['exact', 'lower_bound']
Statistic = Literal['distribution', 'mean', 'transitive_probability']


class TransitiveWitness(BaseModel):
  """A beat-chain: every listed vertex beats every vertex listed after it."""

  model_config = ConfigDict(frozen=True)

  vertices: tuple[int, ...]

  @computed_field
  @property
  def size(self) -> int:
    return len(self.vertices)

  def vertex_set(self) -> VertexSet:
    return VertexSet.of(self.vertices)


class BipartiteWitness(BaseModel):
  """Parts of a T_{t,t}; ``direction`` says which part beats the other."""

  model_config = ConfigDict(frozen=True, populate_by_name=True)

  a: tuple[int, ...] = Field(alias='A')
  b: tuple[int, ...] = Field(alias='B')
  direction: Direction = 'a->b'

  @computed_field
  @property
  def t(self) -> int:
    return min(len(self.a), len(self.b))

  def sets(self) -> tuple[VertexSet, VertexSet]:
    return VertexSet.of(self.a), VertexSet.of(self.b)

  def dump(self) -> dict[str, Any]:
    """JSON shape ``{t, A, B, direction}``."""
    return self.model_dump(by_alias=True, mode='json')


class PartitionPair(BaseModel):
  """One labelled pair of a type partition."""

  s: str
  a: list[int] = Field(alias='A')
  b: list[int] = Field(alias='B')

  model_config = ConfigDict(populate_by_name=True)


class PartitionReport(BaseModel):
  """Serialised type partition."""

  n: int
  k: int
  parts: int
  pairs: list[PartitionPair]


class XValue(BaseModel):
  """One value of X and how it was obtained; ``lower_bound`` values may undercount."""

  model_config = ConfigDict(frozen=True)

  value: int
  mode: XMode


class ExperimentConfig(BaseModel):
  """Parameters of a Monte Carlo run over G(n, k)."""

  n: int = Field(ge=1)
  k: int = Field(ge=1)
  trials: int = Field(ge=1)
  master_seed: int = Field(ge=0, lt=2**64)
  statistic: Statistic = 'distribution'


class Histogram(BaseModel):
  """Raw counts of X; exact and sampled runs share this type.

  ``statistic`` names the observable the run was asked for; ``observable`` reports it.
  """

  n: int
  k: int
  trials: int
  counts: dict[int, int]
  mode: Mode = 'exact'
  statistic: Statistic = 'distribution'

  @model_validator(mode='after')
  def _counts_sum_to_trials(self) -> 'Histogram':
    if sum(self.counts.values()) != self.trials:
      raise ValueError('histogram counts must sum to the number of trials')
    return self

  def probability(self, x: int) -> Fraction:
    return Fraction(self.counts.get(x, 0), self.trials)

  def mean(self) -> float:
    return sum(x * c for x, c in self.counts.items()) / self.trials

  def standard_error(self, x: int) -> float:
    """Standard error of the estimate of Pr[X = x] (zero for exact enumeration)."""
    if self.mode == 'exact':
      return 0.0
    p = float(self.probability(x))
    return math.sqrt(p * (1 - p) / self.trials)

  def mean_standard_error(self) -> float:
    if self.mode == 'exact' or self.trials < 2:
      return 0.0
    mu = self.mean()
    var = sum(c * (x - mu) ** 2 for x, c in self.counts.items()) / (self.trials - 1)
    return math.sqrt(var / self.trials)

  def observable(self) -> dict[str, Any]:
    """The requested statistic with its standard error; empty for ``distribution``."""
    if self.statistic == 'mean':
      return {'E[X]': self.mean(), 'standard_error': self.mean_standard_error()}
    if self.statistic == 'transitive_probability':
      key = f'Pr[X={self.n}]'
      return {key: float(self.probability(self.n)), 'standard_error': self.standard_error(self.n)}
    return {}

  def result(
    self, config: dict[str, Any], outputs: dict[str, Any] | None = None
  ) -> 'ExperimentResult':
    """Experiment JSON with histogram, estimates and standard errors."""
    support = sorted(self.counts)
    return ExperimentResult(
      config=config,
      statistic=self.statistic,
      histogram={str(x): self.counts[x] for x in support},
      estimates={
        **{f'Pr[X={x}]': float(self.probability(x)) for x in support},
        'E[X]': self.mean(),
      },
      exact=(
        {f'Pr[X={x}]': str(self.probability(x)) for x in support}
        if self.mode == 'exact'
        else None
      ),
      standard_errors={
        **{f'Pr[X={x}]': self.standard_error(x) for x in support},
        'E[X]': self.mean_standard_error(),
      },
      mode=self.mode,
      outputs=self.observable() if outputs is None else outputs,
    )


class ExperimentResult(BaseModel):
  """Envelope written to standard output by every experiment command."""

  config: dict[str, Any]
  statistic: Statistic = 'distribution'
  histogram: dict[str, int] = {}
  estimates: dict[str, float] = {}
  exact: dict[str, str] | None = None
  standard_errors: dict[str, float] = {}
  mode: Mode = 'exact'
  outputs: dict[str, Any] = {}


class ProportionEstimate(BaseModel):
  """Estimate of a probability with its standard error and the histogram behind it."""

  k: int
  trials: int
  successes: int
  value: float
  standard_error: float
  mode: Mode = 'monte_carlo'
  histogram: Histogram


class GrowthRow(BaseModel):
  n: int
  mean: float
  standard_error: float
  mode: Mode


class GrowthTable(BaseModel):
  """E[X(n,k)] estimates and the fitted log-log slope. Exploratory only."""

  k: int
  trials: int
  master_seed: int
  rows: list[GrowthRow]
  slope: float | None = None
  label: str = 'exploratory'

  def result(self, config: dict[str, Any]) -> ExperimentResult:
    mode: Mode = 'lower_bound' if any(r.mode == 'lower_bound' for r in self.rows) else 'monte_carlo'
    return ExperimentResult(
      config=config,
      statistic='mean',
      estimates={f'E[X({r.n})]': r.mean for r in self.rows},
      standard_errors={f'E[X({r.n})]': r.standard_error for r in self.rows},
      mode=mode,
      outputs=self.model_dump(),
    )


class PairCounts(BaseModel):
  """|F(n)| and |F*(n)| over all (n!)^2 pairs."""

  n: int
  pairs: int
  f: int
  f_star: int


class CheckSpan(BaseModel):
  """One verification performed before a result is emitted."""

  name: str
  passed: bool
  detail: str = ''
  duration_ms: float = 0.0


class CommandResult(BaseModel):
  """Envelope written to standard output by every find/verify command."""

  command: str
  input_digests: dict[str, str] = {}
  outputs: dict[str, Any] = {}
  verification: dict[str, bool] = {}
  checks: list[CheckSpan] = []
  wall_time_s: float = 0.0
