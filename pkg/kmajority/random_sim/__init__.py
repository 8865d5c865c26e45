# The random model G(n, k), the X(n, k) experiments and the permutation-pattern machinery

from .experiments import (
  estimate_distribution,
  exact_distribution,
  fit_slope,
  growth_exponent_experiment,
  growth_frame,
  guilbaud_experiment,
  transitive_probability,
  write_growth_csv,
)
from .patterns import (
  CYCLIC_PATTERN,
  PRINTED_PATTERN,
  PatternMatrix3,
  contains_cyclic_triple,
  count_F,
  count_F_star,
  count_pairs,
  count_pattern_avoiders,
  find_cyclic_triple,
  in_F_star,
  pattern_contains_3d,
  profile_to_matrix3,
)
from .sampling import (
  fisher_yates_batch,
  sample_positions,
  sample_profile,
  statistic_mode,
  trial_rng,
  x_from_positions,
  x_statistic,
)

__all__ = [
  'CYCLIC_PATTERN',
  'PRINTED_PATTERN',
  'PatternMatrix3',
  'contains_cyclic_triple',
  'count_F',
  'count_F_star',
  'count_pairs',
  'count_pattern_avoiders',
  'estimate_distribution',
  'exact_distribution',
  'find_cyclic_triple',
  'fisher_yates_batch',
  'fit_slope',
  'growth_exponent_experiment',
  'growth_frame',
  'guilbaud_experiment',
  'in_F_star',
  'pattern_contains_3d',
  'profile_to_matrix3',
  'sample_positions',
  'sample_profile',
  'statistic_mode',
  'transitive_probability',
  'trial_rng',
  'write_growth_csv',
  'x_from_positions',
  'x_statistic',
]
