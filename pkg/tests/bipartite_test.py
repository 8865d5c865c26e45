from itertools import product
from math import comb

import pytest
from hypothesis import given

from kmajority.bipartite import (
  antipode,
  build_Q,
  coarse_partition,
  consistent_pair_bound,
  find_consistent_pair,
  find_majority_dominating_pair,
  majority_pair_bound,
  max_consistent_pair_bruteforce,
  max_majority_dominating_pair_bruteforce,
  stirling_pair_bound,
  type_partition,
)
from kmajority.core import Profile, VertexSet, consistent, majority_dominates, unanimous_profile
from kmajority.errors import InvalidArgumentError, NoPairError, ResourceLimitError

from .strategies import profiles, seeded_profiles

SUITE = seeded_profiles(1000, (2, 64), (1, 2, 3), seed=20240611)


def test_consistent_pair_on_suite():
  for p in SUITE:
    a, b = find_consistent_pair(p)
    assert len(a) == len(b) >= consistent_pair_bound(p.n, p.k)
    assert a.isdisjoint(b)
    assert consistent(p, a, b)


def test_majority_dominating_pair_on_suite():
  for p in SUITE:
    a, b = find_majority_dominating_pair(p)
    assert len(a) == len(b) >= majority_pair_bound(p.n, p.k)
    assert a.isdisjoint(b)
    assert majority_dominates(p, a, b)


def test_consistent_pair_needs_two_vertices():
  with pytest.raises(NoPairError):
    find_consistent_pair(unanimous_profile(1, 2))


def test_dominating_pair_degenerate_on_one_vertex():
  with pytest.raises(NoPairError):
    find_majority_dominating_pair(unanimous_profile(1, 1))


def test_consistent_pair_example():
  p = Profile.from_sequences(1, [(3, 1, 0, 2)])
  a, b = find_consistent_pair(p)
  assert (a.members(), b.members()) == ((1, 3), (0, 2))


@pytest.mark.parametrize(
  'k, sizes',
  [(1, {1: 2}), (2, {2: 2, 3: 4}), (3, {3: 2, 4: 6, 5: 12})],
)
def test_Q_size_and_lengths(k, sizes):
  q = build_Q(k)
  assert len(q) == comb(2 * k, k)
  by_length: dict[int, int] = {}
  for s in q:
    by_length[len(s)] = by_length.get(len(s), 0) + 1
  assert by_length == sizes


@pytest.mark.parametrize('k', range(1, 7))
def test_Q_is_an_antipode_closed_prefix_code(k):
  q = set(build_Q(k))
  assert len(q) == comb(2 * k, k)
  assert {antipode(s) for s in q} == q
  for s in q:
    assert max(s.count(0), s.count(1)) == k
  for bits in product((0, 1), repeat=2 * k - 1):
    assert sum(1 for length in range(k, 2 * k) if bits[:length] in q) == 1


def test_Q_rejects_k_below_one():
  with pytest.raises(InvalidArgumentError):
    build_Q(0)


def test_type_partition_first_coordinate():
  p = Profile.from_sequences(1, [(4, 3, 2, 1, 0)])
  result = type_partition(p)
  assert result.assignment == ((1,), (1,), (1,), (0,), (0,))
  assert len(result.pairs) == 1
  assert result.pairs[0].a.members() == (3, 4)
  assert result.pairs[0].b.members() == (0, 1, 2)


@given(profiles(min_n=1, max_n=12))
def test_full_types_pair_up_consistently(p):
  result = type_partition(p)
  assert all(len(t) == 2 * p.k - 1 for t in result.assignment)
  covered = 0
  for pair in result.pairs:
    assert pair.label[0] == 0
    assert abs(len(pair.a) - len(pair.b)) <= 1
    assert consistent(p, pair.a, pair.b)
    covered |= (pair.a | pair.b).mask
  assert covered == VertexSet.full(p.n).mask


@given(profiles(min_n=1, max_n=12))
def test_coarse_partition_pairs_majority_dominate(p):
  result = coarse_partition(p)
  assert result.parts == comb(2 * p.k, p.k)
  covered = 0
  for pair in result.pairs:
    assert pair.label.count(0) == p.k
    assert pair.a.isdisjoint(pair.b) and covered & (pair.a | pair.b).mask == 0
    assert abs(len(pair.a) - len(pair.b)) <= 1
    assert majority_dominates(p, pair.a, pair.b)
    covered |= (pair.a | pair.b).mask
  assert covered == VertexSet.full(p.n).mask


def test_coarse_partition_report_uses_labels():
  p = Profile.from_sequences(2, [(0, 1, 2, 3, 4, 5), (5, 4, 3, 2, 1, 0), (0, 2, 4, 1, 3, 5)])
  report = coarse_partition(p).report()
  assert report.parts == 6
  assert [pair.s for pair in report.pairs] == ['00', '010', '100']
  dumped = report.model_dump(by_alias=True)
  assert set(dumped['pairs'][0]) == {'s', 'A', 'B'}


@pytest.mark.parametrize('n', [5, 6])
def test_dominating_pair_small_n(n):
  p = Profile.from_sequences(2, [tuple(range(n)), tuple(reversed(range(n))), tuple(range(n))])
  a, b = find_majority_dominating_pair(p)
  assert len(a) == len(b) >= 1
  assert majority_dominates(p, a, b)


def test_constructions_never_beat_exhaustive_search():
  for p in seeded_profiles(40, (2, 9), (1, 2), seed=7):
    a, _ = find_consistent_pair(p)
    best_a, best_b = max_consistent_pair_bruteforce(p)
    assert consistent(p, best_a, best_b)
    assert len(best_a) >= len(a)
    a, _ = find_majority_dominating_pair(p)
    best_a, best_b = max_majority_dominating_pair_bruteforce(p)
    assert majority_dominates(p, best_a, best_b)
    assert len(best_a) >= len(a)


def test_exhaustive_pair_search_refuses_large_inputs():
  with pytest.raises(ResourceLimitError):
    max_consistent_pair_bruteforce(unanimous_profile(15, 1))


def test_unanimous_profile_splits_in_half():
  a, b = max_consistent_pair_bruteforce(unanimous_profile(8, 2))
  assert len(a) == len(b) == 4


@pytest.mark.parametrize('n', [1, 10, 100, 1000, 12345])
@pytest.mark.parametrize('k', [1, 2, 3, 5, 8])
def test_bounds_are_ordered(n, k):
  assert stirling_pair_bound(n, k) <= majority_pair_bound(n, k)
  assert consistent_pair_bound(n, k) <= majority_pair_bound(n, k)


def test_bound_values():
  assert consistent_pair_bound(64, 2) == 8
  assert majority_pair_bound(64, 2) == 10
  assert stirling_pair_bound(64, 1) == 0


@pytest.mark.parametrize('k', range(1, 7))
def test_Q_counts_per_length(k):
  q = build_Q(k)
  for i in range(1, k):
    assert sum(1 for s in q if len(s) == k + i) == 2 * comb(k - 1 + i, i)


@given(profiles(min_n=1, max_n=16))
def test_every_prefix_group_is_balanced_against_its_antipode(p):
  result = type_partition(p)
  for length in range(1, 2 * p.k):
    for prefix in product((0, 1), repeat=length):
      here = result.group(prefix)
      there = result.group(antipode(prefix))
      assert abs(len(here) - len(there)) <= 1


def test_unanimous_consistent_pair():
  p = unanimous_profile(8, 2)
  a, b = find_consistent_pair(p)
  assert len(a) == len(b) >= 1
  assert consistent(p, a, b)


@pytest.mark.parametrize('k, m', [(1, 3), (2, 2), (3, 1)])
def test_consistent_pair_at_exact_multiples(k, m):
  for p in seeded_profiles(30, (m * 2 ** (2 * k - 1), m * 2 ** (2 * k - 1)), (k,), seed=k):
    a, _ = find_consistent_pair(p)
    assert len(a) >= m


def test_type_classes_on_forty_vertices():
  for p in seeded_profiles(20, (40, 40), (2,), seed=40):
    result = type_partition(p)
    assert len(set(result.assignment)) <= 8
    for pair in result.pairs:
      assert abs(len(pair.a) - len(pair.b)) <= 1


def test_coarse_partition_on_sixty_vertices():
  for p in seeded_profiles(20, (60, 60), (2,), seed=60):
    result = coarse_partition(p)
    assert len(result.pairs) == 3
    assert sum(len(pair.a) + len(pair.b) for pair in result.pairs) == 60
    for pair in result.pairs:
      assert majority_dominates(p, pair.a, pair.b)


def test_dominating_pair_on_a_hundred_vertices():
  for p in seeded_profiles(20, (100, 100), (2,), seed=100):
    a, b = find_majority_dominating_pair(p)
    assert len(a) >= 16
    assert majority_dominates(p, a, b)


def test_stirling_bound_for_larger_k():
  for k in range(1, 13):
    for n in (10, 10**3, 10**6, 10**9):
      assert stirling_pair_bound(n, k) <= majority_pair_bound(n, k)
