"""Consistent pairs by order halving, and the binary-type partition into majority-dominating pairs.

Both constructions walk the orders of a profile one at a time and split the current
groups at a midpoint of the next order.
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from math import comb

from kmajority.config import get_settings
from kmajority.core import LinearOrder, Profile, VertexSet, consistent, majority_dominates
from kmajority.errors import InvalidArgumentError, NoPairError, ResourceLimitError
from kmajority.models import PartitionPair, PartitionReport

logger = logging.getLogger(__name__)

TypeVector = tuple[int, ...]

PAIR_SEARCH_LIMIT = 14


def antipode(bits: TypeVector) -> TypeVector:
  """Flip every bit."""
  return tuple(1 - b for b in bits)


def bits_label(bits: TypeVector) -> str:
  """Bits as a string, e.g. (0, 1, 0) -> '010'."""
  return ''.join(str(b) for b in bits)


@dataclass(frozen=True, slots=True)
class TypePair:
  """A labelled pair (A_s, B_s) where B_s holds the antipodal types of A_s."""

  label: TypeVector
  a: VertexSet
  b: VertexSet

  @property
  def min_size(self) -> int:
    return min(len(self.a), len(self.b))


@dataclass(frozen=True, slots=True)
class TypePartition:
  """Type of every vertex plus the antipodal pairs the types induce."""

  k: int
  assignment: tuple[TypeVector, ...]
  pairs: tuple[TypePair, ...]

  @property
  def n(self) -> int:
    return len(self.assignment)

  @property
  def parts(self) -> int:
    return 2 * len(self.pairs)

  def group(self, prefix: TypeVector) -> VertexSet:
    """Vertices whose type starts with ``prefix``."""
    size = len(prefix)
    return VertexSet.of(v for v, t in enumerate(self.assignment) if t[:size] == prefix)

  def report(self) -> PartitionReport:
    return PartitionReport(
      n=self.n,
      k=self.k,
      parts=self.parts,
      pairs=[
        PartitionPair(s=bits_label(pair.label), a=list(pair.a), b=list(pair.b))
        for pair in self.pairs
      ],
    )


def _trim(a: list[int], b: list[int], order: LinearOrder) -> tuple[list[int], list[int]]:
  """Cut the larger side down to the smaller one, dropping its latest vertices in ``order``."""
  size = min(len(a), len(b))
  a = sorted(a, key=order.pos.__getitem__)[:size]
  b = sorted(b, key=order.pos.__getitem__)[:size]
  return a, b


def find_consistent_pair(p: Profile) -> tuple[VertexSet, VertexSet]:
  """Equal-size disjoint sets consistent in every order, of size at least n / 2^(2k-1).

  Raises:
      NoPairError: fewer than two vertices
  """
  if p.n < 2:
    raise NoPairError(f'a consistent pair needs at least 2 vertices, got {p.n}')
  first = p.orders[0].seq
  half = p.n // 2
  a, b = _trim(list(first[:half]), list(first[half:]), p.orders[0])
  for step, order in enumerate(p.orders[1:], start=2):
    s = len(a)
    sigma = order.restrict(VertexSet.of(a + b))
    c = set(sigma[:s])
    keep = (
      [v for v in a if v in c],
      [v for v in b if v not in c],
    )
    swap = (
      [v for v in a if v not in c],
      [v for v in b if v in c],
    )
    if min(map(len, swap)) > min(map(len, keep)):
      keep = swap
    a, b = _trim(keep[0], keep[1], order)
    logger.debug('consistent pair after %d orders: size %d', step, len(a))
  return VertexSet.of(a), VertexSet.of(b)


def type_partition(p: Profile) -> TypePartition:
  """Assign every vertex a binary type of length 2k-1 by successive balanced splits.

  Coordinate 1 is 0 on the first floor(n/2) vertices of the first order. Coordinate i+1 is
  decided for each antipodal group pair (A_s, B_s) by restricting order i+1 to A_s + B_s and
  giving 0 to its first |A_s| vertices.
  """
  types: list[list[int]] = [[] for _ in range(p.n)]
  first = p.orders[0].seq
  for i, v in enumerate(first):
    types[v].append(0 if i < p.n // 2 else 1)
  for order in p.orders[1:]:
    groups: dict[TypeVector, list[int]] = {}
    for v, t in enumerate(types):
      groups.setdefault(tuple(t), []).append(v)
    for prefix in {_canonical(t) for t in groups}:
      members = groups.get(prefix, [])
      partner = groups.get(antipode(prefix), [])
      sigma = order.restrict(VertexSet.of(members + partner))
      for idx, v in enumerate(sigma):
        types[v].append(0 if idx < len(members) else 1)
  assignment = tuple(tuple(t) for t in types)
  by_type: dict[TypeVector, list[int]] = {}
  for v, t in enumerate(assignment):
    by_type.setdefault(t, []).append(v)
  pairs = tuple(
    TypePair(
      label=label,
      a=VertexSet.of(by_type.get(label, [])),
      b=VertexSet.of(by_type.get(antipode(label), [])),
    )
    for label in sorted({_canonical(t) for t in by_type})
  )
  return TypePartition(k=p.k, assignment=assignment, pairs=pairs)


def _canonical(bits: TypeVector) -> TypeVector:
  """The member of {bits, antipode(bits)} starting with 0."""
  return bits if bits[0] == 0 else antipode(bits)


def build_Q(k: int) -> list[TypeVector]:
  """Antipode-closed prefix code of size binom(2k, k) on vectors of length k..2k-1.

  A vector belongs to Q when it is the first prefix of itself to contain k zeros or k ones.
  """
  if k < 1:
    raise InvalidArgumentError(f'k must be at least 1, got {k}')
  q: list[TypeVector] = [(0,) * k, (1,) * k]
  frontier = [
    bits
    for bits in _binary_vectors(k)
    if bits not in ((0,) * k, (1,) * k)
  ]
  for length in range(k + 1, 2 * k):
    grown = []
    for prefix in frontier:
      for bit in (0, 1):
        bits = prefix + (bit,)
        if bits.count(0) >= k or bits.count(1) >= k:
          q.append(bits)
        else:
          grown.append(bits)
    frontier = grown
  return sorted(q, key=lambda bits: (len(bits), bits))


def _binary_vectors(length: int) -> list[TypeVector]:
  return [tuple((x >> (length - 1 - i)) & 1 for i in range(length)) for x in range(1 << length)]


def coarse_partition(p: Profile) -> TypePartition:
  """Group the full types by their prefix in Q: binom(2k, k) parts in antipodal pairs.

  For s in Q with at least k zeros, A_s holds the types extending s and B_s those extending
  the antipode of s; A_s dominates B_s in every order where s has a zero.
  """
  full = type_partition(p)
  pairs = []
  for s in build_Q(p.k):
    if s.count(0) < p.k:
      continue
    pairs.append(TypePair(label=s, a=full.group(s), b=full.group(antipode(s))))
  return TypePartition(k=p.k, assignment=full.assignment, pairs=tuple(pairs))


def find_majority_dominating_pair(p: Profile) -> tuple[VertexSet, VertexSet]:
  """Best pair of the coarse partition, trimmed to equal size; A majority dominates B.

  Raises:
      InvalidArgumentError: empty profile
      NoPairError: no pair has two non-empty sides (only possible for n = 1)
  """
  if p.n == 0:
    raise InvalidArgumentError('profile has no vertices')
  partition = coarse_partition(p)
  best = max(partition.pairs, key=lambda pair: pair.min_size)
  if best.min_size == 0:
    raise NoPairError(
      f'degenerate: no majority-dominating pair with two non-empty sides for n={p.n}'
    )
  a, b = _trim(list(best.a), list(best.b), p.orders[0])
  logger.debug('majority-dominating pair %s of size %d', bits_label(best.label), len(a))
  return VertexSet.of(a), VertexSet.of(b)


def consistent_pair_bound(n: int, k: int) -> int:
  """floor(n / 2^(2k-1)), guaranteed by the halving construction."""
  return n // 2 ** (2 * k - 1)


def majority_pair_bound(n: int, k: int) -> int:
  """floor(n / binom(2k, k)), guaranteed by the coarse partition."""
  return n // comb(2 * k, k)


def stirling_pair_bound(n: int, k: int) -> int:
  """The weaker closed form floor(sqrt(pi (k-1) / 4) * n / 2^(2k-1))."""
  return math.floor(math.sqrt(math.pi * (k - 1) / 4) * n / 2 ** (2 * k - 1))


def _pair_search(p: Profile, accept) -> tuple[VertexSet, VertexSet]:
  limit = min(PAIR_SEARCH_LIMIT, get_settings().bipartite_oracle_limit)
  if p.n > limit:
    raise ResourceLimitError(f'exhaustive pair search accepts n <= {limit}, got {p.n}')
  best = (VertexSet(), VertexSet())
  vertices = range(p.n)
  for size in range(1, p.n // 2 + 1):
    found = None
    for a in combinations(vertices, size):
      a_set = VertexSet.of(a)
      rest = [v for v in vertices if v not in a_set]
      for b in combinations(rest, size):
        b_set = VertexSet.of(b)
        if accept(p, a_set, b_set):
          found = (a_set, b_set)
          break
      if found:
        break
    if not found:
      break
    best = found
  return best


def max_consistent_pair_bruteforce(p: Profile) -> tuple[VertexSet, VertexSet]:
  """Largest equal-size consistent pair by exhaustive search."""
  return _pair_search(p, consistent)


def max_majority_dominating_pair_bruteforce(p: Profile) -> tuple[VertexSet, VertexSet]:
  """Largest equal-size pair with A majority dominating B, by exhaustive search."""
  return _pair_search(p, majority_dominates)
