import pytest

from kmajority.config import reset_settings
from kmajority.core import LinearOrder, Profile, VertexSet, is_transitive, majority_tournament
from kmajority.errors import InvalidArgumentError, ResourceLimitError
from kmajority.random_sim import (
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
from kmajority.random_sim.patterns import all_pairs

CYCLIC_PI1 = LinearOrder((1, 2, 0))
CYCLIC_PI2 = LinearOrder((2, 0, 1))


def _generates_transitive(pi1: LinearOrder, pi2: LinearOrder) -> bool:
  p = Profile(2, (LinearOrder.identity(pi1.n), pi1, pi2))
  return is_transitive(majority_tournament(p))


@pytest.mark.parametrize('n, f', [(1, 1), (2, 4), (3, 34)])
def test_count_F(n, f):
  assert count_F(n) == f


def test_count_F_star_three():
  assert count_F_star(3) == 35


@pytest.mark.parametrize('n', [3, 4])
def test_counts_match_direct_enumeration(n):
  pairs = list(all_pairs(n))
  assert count_F(n) == sum(_generates_transitive(a, b) for a, b in pairs)
  assert count_F_star(n) == sum(in_F_star(a, b) for a, b in pairs)


def test_count_pairs():
  counts = count_pairs(4)
  assert counts.pairs == 576
  assert counts.f <= counts.f_star <= counts.pairs


def test_pair_budget():
  with pytest.raises(ResourceLimitError):
    count_F(7)
  with pytest.raises(ResourceLimitError):
    count_pattern_avoiders(7)


def test_cyclic_triple_examples():
  assert find_cyclic_triple(CYCLIC_PI1, CYCLIC_PI2) == (0, 1, 2)
  assert find_cyclic_triple(CYCLIC_PI1, CYCLIC_PI2, contiguous=True) == (0, 1, 2)
  assert find_cyclic_triple(CYCLIC_PI2, CYCLIC_PI1) is None
  spread = (LinearOrder((1, 3, 2, 0)), LinearOrder((2, 0, 1, 3)))
  assert contains_cyclic_triple(*spread)
  assert not contains_cyclic_triple(*spread, contiguous=True)
  with pytest.raises(InvalidArgumentError):
    find_cyclic_triple(CYCLIC_PI1, LinearOrder((0, 1)))


def test_cyclic_triples_span_triangles():
  for pi1, pi2 in all_pairs(4):
    triple = find_cyclic_triple(pi1, pi2)
    if triple is None:
      continue
    p = Profile(2, (LinearOrder.identity(4), pi1, pi2))
    assert not is_transitive(majority_tournament(p), VertexSet.of(triple))
    assert not _generates_transitive(pi1, pi2)


def test_pattern_matrix_validation():
  with pytest.raises(InvalidArgumentError):
    PatternMatrix3(3, ((0, 0, 0), (1, 1, 1)))
  with pytest.raises(InvalidArgumentError):
    PatternMatrix3(2, ((0, 0, 0), (1, 0, 1)))
  assert (1, 0, 2) in CYCLIC_PATTERN
  assert set(PRINTED_PATTERN.ones) == {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
  assert PRINTED_PATTERN.swap_position_axes() == CYCLIC_PATTERN


def test_profile_matrix_of_the_cyclic_pair():
  assert profile_to_matrix3(CYCLIC_PI1, CYCLIC_PI2) == CYCLIC_PATTERN
  assert profile_to_matrix3(CYCLIC_PI2, CYCLIC_PI1) == PRINTED_PATTERN


def test_pattern_containment_examples():
  a = profile_to_matrix3(LinearOrder((1, 3, 2, 0)), LinearOrder((2, 0, 1, 3)))
  assert pattern_contains_3d(a, CYCLIC_PATTERN)
  assert pattern_contains_3d(a, CYCLIC_PATTERN, rule='literal')
  identity = profile_to_matrix3(LinearOrder.identity(4), LinearOrder.identity(4))
  assert not pattern_contains_3d(identity, CYCLIC_PATTERN)
  assert not pattern_contains_3d(identity, CYCLIC_PATTERN, rule='literal')


def test_pattern_containment_errors():
  small = profile_to_matrix3(LinearOrder((1, 0)), LinearOrder((0, 1)))
  with pytest.raises(InvalidArgumentError):
    pattern_contains_3d(small, CYCLIC_PATTERN)
  with pytest.raises(InvalidArgumentError):
    pattern_contains_3d(CYCLIC_PATTERN, CYCLIC_PATTERN, rule='loose')
  big = profile_to_matrix3(LinearOrder.identity(13), LinearOrder.identity(13))
  with pytest.raises(InvalidArgumentError):
    pattern_contains_3d(big, CYCLIC_PATTERN)


@pytest.mark.parametrize('pattern', [CYCLIC_PATTERN, PRINTED_PATTERN])
@pytest.mark.parametrize('n', [3, 4])
def test_avoiders_are_F_star(pattern, n):
  assert count_pattern_avoiders(n, pattern) == count_F_star(n)


def test_literal_rule_accepts_more():
  assert count_pattern_avoiders(3, rule='literal') == count_pattern_avoiders(3) == 35
  assert count_pattern_avoiders(4, rule='literal') <= count_pattern_avoiders(4)


@pytest.mark.parametrize('n, pairs', [(1, 1), (2, 4)])
def test_avoiders_below_pattern_size(n, pairs):
  assert count_pattern_avoiders(n) == pairs


def test_pattern_side_limit_is_configurable(monkeypatch, tmp_path):
  config = tmp_path / 'config.yaml'
  config.write_text('pattern_side_limit: 3\n')
  monkeypatch.setenv('KMAJORITY_CONFIG', str(config))
  reset_settings()
  a = profile_to_matrix3(LinearOrder.identity(4), LinearOrder.identity(4))
  with pytest.raises(InvalidArgumentError):
    pattern_contains_3d(a, CYCLIC_PATTERN)


def test_small_orders_have_no_cyclic_triple():
  for pi1, pi2 in all_pairs(2):
    assert in_F_star(pi1, pi2)
  identity = LinearOrder.identity(5)
  assert not contains_cyclic_triple(identity, identity)


def test_identity_encoding_and_self_containment():
  identity = profile_to_matrix3(LinearOrder.identity(3), LinearOrder.identity(3))
  assert identity.ones == ((0, 0, 0), (1, 1, 1), (2, 2, 2))
  for rule in ('embedding', 'literal'):
    assert pattern_contains_3d(CYCLIC_PATTERN, CYCLIC_PATTERN, rule=rule)
    assert pattern_contains_3d(identity, identity, rule=rule)
