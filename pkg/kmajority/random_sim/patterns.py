"""Pairs of permutations, the cyclic-triple condition, and 3-dimensional permutation patterns.

F(n) holds the pairs (pi1, pi2) for which (identity, pi1, pi2) generates a transitive
2-majority tournament. F*(n) holds the pairs with no a < b < c ordered (b, c, a) in pi1 and
(c, a, b) in pi2. Such a triple spans a directed triangle, so F(n) is a subset of F*(n).
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import numpy as np

from kmajority.config import get_settings
from kmajority.core import LinearOrder
from kmajority.errors import InvalidArgumentError, ResourceLimitError
from kmajority.models import PairCounts

logger = logging.getLogger(__name__)

Triple = tuple[int, int, int]
ContainmentRule = Literal['embedding', 'literal']


@dataclass(frozen=True, slots=True)
class PatternMatrix3:
  """A 3-dimensional permutation matrix of side ``side``, stored as its 1-entries.

  Every axis-aligned slice holds exactly one 1-entry, so the ones sorted by first coordinate
  are (i, y_i, z_i) with y and z permutations.
  """

  side: int
  ones: tuple[Triple, ...]

  def __post_init__(self):
    ones = tuple(sorted(tuple(int(c) for c in one) for one in self.ones))
    if len(ones) != self.side:
      raise InvalidArgumentError(f'a side-{self.side} permutation matrix needs {self.side} ones')
    for axis in range(3):
      if sorted(one[axis] for one in ones) != list(range(self.side)):
        raise InvalidArgumentError(f'axis {axis} of {ones} is not a permutation')
    object.__setattr__(self, 'ones', ones)

  def __contains__(self, entry: object) -> bool:
    return entry in self.ones

  def swap_position_axes(self) -> 'PatternMatrix3':
    return PatternMatrix3(self.side, tuple((i, z, y) for i, y, z in self.ones))


# Encoding of pi1 = (1, 2, 0), pi2 = (2, 0, 1): the smallest pair with a cyclic triple.
CYCLIC_PATTERN = PatternMatrix3(3, ((0, 2, 1), (1, 0, 2), (2, 1, 0)))
# The same pattern with the two position axes exchanged.
PRINTED_PATTERN = CYCLIC_PATTERN.swap_position_axes()


def _check_lengths(pi1: LinearOrder, pi2: LinearOrder) -> None:
  if pi1.n != pi2.n:
    raise InvalidArgumentError(f'orders have different lengths {pi1.n} and {pi2.n}')


def find_cyclic_triple(
  pi1: LinearOrder, pi2: LinearOrder, contiguous: bool = False
) -> Triple | None:
  """First (a, b, c) with a < b < c ordered (b, c, a) in pi1 and (c, a, b) in pi2.

  With ``contiguous`` both patterns must appear as consecutive entries.
  """
  _check_lengths(pi1, pi2)
  p1, p2 = pi1.pos, pi2.pos
  if contiguous:
    for i in range(pi1.n - 2):
      b, c, a = pi1.seq[i:i + 3]
      if a < b < c and p2[a] == p2[c] + 1 and p2[b] == p2[a] + 1:
        return a, b, c
    return None
  for a, b, c in itertools.combinations(range(pi1.n), 3):
    if p1[b] < p1[c] < p1[a] and p2[c] < p2[a] < p2[b]:
      return a, b, c
  return None


def contains_cyclic_triple(pi1: LinearOrder, pi2: LinearOrder, contiguous: bool = False) -> bool:
  """Whether some a < b < c is ordered (b, c, a) in pi1 and (c, a, b) in pi2."""
  return find_cyclic_triple(pi1, pi2, contiguous) is not None


def in_F_star(pi1: LinearOrder, pi2: LinearOrder) -> bool:
  """Membership in F*(n): no cyclic triple."""
  return not contains_cyclic_triple(pi1, pi2)


def _pair_budget(n: int) -> int:
  pairs = math.factorial(n) ** 2
  budget = get_settings().pair_count_budget
  if pairs > budget:
    raise ResourceLimitError(f'{pairs} pairs exceed the pair enumeration budget of {budget}')
  return pairs


def _all_positions(n: int) -> np.ndarray:
  """Positions of every permutation of 0..n-1, one row per permutation, lexicographic."""
  perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
  pos = np.empty_like(perms)
  pos[np.arange(len(perms))[:, None], perms] = np.arange(n)
  return pos


def count_F(n: int) -> int:
  """|F(n)| by enumerating all pairs, one pi1 at a time against every pi2 at once."""
  _pair_budget(n)
  if n <= 2:
    return math.factorial(n) ** 2
  pos = _all_positions(n)
  identity = np.arange(n)
  base = (identity[:, None] < identity[None, :]).astype(np.int64)
  later = pos[:, :, None] < pos[:, None, :]
  total = 0
  for p1 in pos:
    first = base + (p1[:, None] < p1[None, :])
    ahead = (first[None, :, :] + later) >= 2
    scores = np.sort(ahead.sum(axis=2), axis=1)
    total += int(np.all(np.diff(scores, axis=1) != 0, axis=1).sum())
  return total


def count_F_star(n: int) -> int:
  """|F*(n)| by enumerating all pairs, one pi1 at a time against every pi2 at once."""
  _pair_budget(n)
  pos = _all_positions(n)
  triples = list(itertools.combinations(range(n), 3))
  total = 0
  for p1 in pos:
    hit = np.zeros(len(pos), dtype=bool)
    for a, b, c in triples:
      if p1[b] < p1[c] < p1[a]:
        hit |= (pos[:, c] < pos[:, a]) & (pos[:, a] < pos[:, b])
    total += int((~hit).sum())
  return total


def count_pairs(n: int) -> PairCounts:
  """|F(n)| and |F*(n)|, checking that the first is at most the second."""
  f, f_star = count_F(n), count_F_star(n)
  if f > f_star:
    raise AssertionError(f'|F({n})| = {f} exceeds |F*({n})| = {f_star}')
  return PairCounts(n=n, pairs=math.factorial(n) ** 2, f=f, f_star=f_star)


def profile_to_matrix3(pi1: LinearOrder, pi2: LinearOrder) -> PatternMatrix3:
  """A[i, j, k] = 1 iff i sits at position j of pi1 and position k of pi2."""
  _check_lengths(pi1, pi2)
  return PatternMatrix3(pi1.n, tuple((i, pi1.pos[i], pi2.pos[i]) for i in range(pi1.n)))


def _same_shape(values: Sequence[int], pattern: Sequence[int]) -> bool:
  m = len(values)
  return all(
    (values[s] < values[t]) == (pattern[s] < pattern[t]) for s in range(m) for t in range(s + 1, m)
  )


def _contains_embedding(a: PatternMatrix3, p: PatternMatrix3) -> bool:
  ys = [y for _, y, _ in a.ones]
  zs = [z for _, _, z in a.ones]
  py = [y for _, y, _ in p.ones]
  pz = [z for _, _, z in p.ones]
  for rows in itertools.combinations(range(a.side), p.side):
    if _same_shape([ys[i] for i in rows], py) and _same_shape([zs[i] for i in rows], pz):
      return True
  return False


def _contains_literal(a: PatternMatrix3, p: PatternMatrix3) -> bool:
  index_sets = list(itertools.combinations(range(a.side), p.side))
  for s1 in index_sets:
    picked = [a.ones[i] for i in s1]
    for s2 in index_sets:
      rank2 = {v: j for j, v in enumerate(s2)}
      for s3 in index_sets:
        rank3 = {v: j for j, v in enumerate(s3)}
        if all(
          (j1, rank2[y], rank3[z]) in p
          for j1, (_, y, z) in enumerate(picked)
          if y in rank2 and z in rank3
        ):
          return True
  return False


def pattern_contains_3d(
  a: PatternMatrix3, p: PatternMatrix3, rule: ContainmentRule = 'embedding'
) -> bool:
  """Whether ``a`` contains the pattern ``p``.

  ``embedding``: some side(p) ones of ``a`` are ordered along every axis as the ones of ``p``.
  ``literal``: increasing index sequences exist on all three axes such that every 1-entry of
  ``a`` inside the selected grid lands on a 1-entry of ``p``; a grid that misses every one of
  ``a`` qualifies, so this rule accepts more.

  Raises:
      InvalidArgumentError: ``p`` larger than ``a`` or ``a`` above the pattern side limit
  """
  if p.side > a.side:
    raise InvalidArgumentError(f'pattern side {p.side} exceeds matrix side {a.side}')
  limit = get_settings().pattern_side_limit
  if a.side > limit:
    raise InvalidArgumentError(f'pattern search accepts side <= {limit}, got {a.side}')
  if rule == 'embedding':
    return _contains_embedding(a, p)
  if rule == 'literal':
    return _contains_literal(a, p)
  raise InvalidArgumentError(f'unknown containment rule {rule!r}')


def all_pairs(n: int) -> Iterator[tuple[LinearOrder, LinearOrder]]:
  """Every (pi1, pi2) over permutations of 0..n-1, lexicographic."""
  orders = [LinearOrder(perm) for perm in itertools.permutations(range(n))]
  return itertools.product(orders, repeat=2)


def count_pattern_avoiders(
  n: int, pattern: PatternMatrix3 = CYCLIC_PATTERN, rule: ContainmentRule = 'embedding'
) -> int:
  """S_P(n): encodings of pairs of n-permutations that avoid ``pattern``."""
  pairs = _pair_budget(n)
  if n < pattern.side:
    return pairs
  return sum(
    1 for pi1, pi2 in all_pairs(n)
    if not pattern_contains_3d(profile_to_matrix3(pi1, pi2), pattern, rule)
  )
