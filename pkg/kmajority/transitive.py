"""Transitive subtournaments: the recursive extraction and the exact oracles.

The exact oracles are bit-parallel. A beat-chain is grown by intersecting a candidate mask
with out-neighbourhoods, and the source side of a T_{t,t} is grown by intersecting common
out-neighbourhoods.
"""

import logging
import math
from itertools import combinations
from typing import Callable, Iterable, Sequence

from kmajority.bipartite import find_majority_dominating_pair
from kmajority.config import get_settings
from kmajority.core import (
  Profile,
  Tournament,
  VertexSet,
  bipartite_direction,
  is_transitive,
  majority_tournament,
  restrict_profile,
)
from kmajority.errors import InvalidArgumentError, ResourceLimitError, VerificationError
from kmajority.models import BipartiteWitness, TransitiveWitness

logger = logging.getLogger(__name__)

Refiner = Callable[[Tournament], Sequence[VertexSet] | None]

NAIVE_LIMIT = 12


def transitive_lower_bound(n: int, k: int) -> float:
  """n^(1 / (2k - log2(k) / 2)), the transitive-set size every k-majority tournament reaches."""
  if n < 1:
    return 0.0
  return n ** (1.0 / (2 * k - 0.5 * math.log2(k)))


def meets_transitive_bound(size: int, n: int, k: int) -> bool:
  """size >= transitive_lower_bound(n, k), up to rounding at exact powers like 128^(2/7) = 4."""
  return size >= transitive_lower_bound(n, k) - 1e-9


def erdos_moser_floor(n: int) -> int:
  """floor(log2 n) + 1: every tournament on n >= 1 vertices has a transitive set this large."""
  return n.bit_length() if n >= 1 else 0


def beat_order(t: Tournament, s: VertexSet) -> tuple[int, ...]:
  """Members of a transitive set ``s`` listed so that each beats every later one."""
  return tuple(sorted(s, key=lambda v: -(t.rows[v] & s.mask).bit_count()))


def verify_transitive_witness(t: Tournament, w: TransitiveWitness) -> bool:
  """True iff the vertices are distinct ids of ``t`` and each beats every later one."""
  vs = w.vertices
  if len(set(vs)) != len(vs) or any(not 0 <= v < t.n for v in vs):
    return False
  return all(t.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def verify_bipartite_witness(t: Tournament, w: BipartiteWitness) -> bool:
  """True iff the parts are distinct ids, disjoint, of equal size, and oriented as claimed."""
  a, b = w.sets()
  if len(a) != len(w.a) or len(b) != len(w.b) or len(a) != len(b):
    return False
  if not a.isdisjoint(b) or not (a.within(t.n) and b.within(t.n)):
    return False
  if not a:
    return True
  return bipartite_direction(t, a, b) == w.direction


def max_transitive_bruteforce(t: Tournament, limit: int | None = None) -> TransitiveWitness:
  """Exact maximum transitive subtournament.

  best(C) = max over v in C of 1 + best(C & out(v)), memoised on the candidate mask C. A
  vertex is skipped when 1 + |C & out(v)| cannot beat the value already found for C, so every
  memo entry is exact. Once the memo holds ``memo_limit`` entries new values are no longer
  stored and the search continues as plain branch and bound.

  Raises:
      ResourceLimitError: ``t.n`` above the oracle limit
      VerificationError: the result falls below floor(log2 n) + 1
  """
  settings = get_settings()
  limit = settings.oracle_limit if limit is None else limit
  if t.n > limit:
    raise ResourceLimitError(
      f'exact transitive search accepts n <= {limit}, got {t.n}; use --mode recursive'
    )
  rows = t.rows
  memo: dict[int, int] = {}
  memo_limit = settings.memo_limit

  def best(cand: int) -> int:
    if cand == 0:
      return 0
    hit = memo.get(cand)
    if hit is not None:
      return hit
    top = 0
    for v in _by_local_score(rows, cand):
      sub = rows[v] & cand
      if 1 + sub.bit_count() <= top:
        continue
      top = max(top, 1 + best(sub))
    if len(memo) < memo_limit:
      memo[cand] = top
    return top

  chain = []
  cand = (1 << t.n) - 1
  while cand:
    target = best(cand)
    head = next(v for v in _by_local_score(rows, cand) if 1 + best(rows[v] & cand) == target)
    chain.append(head)
    cand &= rows[head]
  witness = TransitiveWitness(vertices=tuple(chain))
  if witness.size < erdos_moser_floor(t.n):
    raise VerificationError('erdos_moser_floor', f'size {witness.size} on {t.n} vertices')
  logger.debug('exact transitive search on %d vertices: %d (memo %d)', t.n, witness.size, len(memo))
  return witness


def _by_local_score(rows: tuple[int, ...], cand: int) -> list[int]:
  return sorted(VertexSet(cand), key=lambda v: -(rows[v] & cand).bit_count())


def max_transitive_naive(t: Tournament) -> int:
  """Size of the largest transitive subset, checking every subset (n <= 12)."""
  if t.n > NAIVE_LIMIT:
    raise ResourceLimitError(f'naive search accepts n <= {NAIVE_LIMIT}, got {t.n}')
  for size in range(t.n, 0, -1):
    for subset in combinations(range(t.n), size):
      if is_transitive(t, VertexSet.of(subset)):
        return size
  return 0


def find_transitive_recursive(p: Profile, base: int | None = None) -> TransitiveWitness:
  """Transitive set of size at least n^(1/(2k - log2(k)/2)) by recursing on dominating pairs.

  Instances with at most ``base`` vertices go to the exact oracle, and an already transitive
  instance is returned whole. Otherwise the best majority-dominating pair (A, B) is taken,
  each side is solved on its restricted profile, and the A-chain is followed by the B-chain
  since every edge between them points from A to B.

  Raises:
      InvalidArgumentError: empty profile
  """
  if p.n == 0:
    raise InvalidArgumentError('profile has no vertices')
  base = get_settings().recursion_base if base is None else base
  return TransitiveWitness(vertices=_recurse(p, majority_tournament(p), base))


def _recurse(p: Profile, t: Tournament, base: int) -> tuple[int, ...]:
  everything = VertexSet.full(p.n)
  if is_transitive(t, everything):
    return beat_order(t, everything)
  if p.n <= base:
    return max_transitive_bruteforce(t, limit=base).vertices
  a, b = find_majority_dominating_pair(p)
  chain: list[int] = []
  for side in (a, b):
    sub_profile, new_to_old = restrict_profile(p, side)
    sub_tournament, _ = t.induced(side)
    chain.extend(new_to_old[v] for v in _recurse(sub_profile, sub_tournament, base))
  logger.debug('n=%d: pair size %d, chain size %d', p.n, len(a), len(chain))
  return tuple(chain)


def max_bipartite_transitive_bruteforce(
  t: Tournament,
  limit: int | None = None,
  candidates: Iterable[VertexSet] | None = None,
) -> BipartiteWitness:
  """Exact largest T_{t,t}, searching source sides A by depth-first extension.

  The common out-neighbourhood N(A) is the largest possible sink side, so a branch stops
  once |N(A)| cannot beat the best t. Given ``candidates``, only those source sides are
  tried and any n is accepted.

  Raises:
      ResourceLimitError: ``t.n`` above the limit and no candidate family given
  """
  rows = t.rows
  full = (1 << t.n) - 1
  best_t, best_a, best_common = 0, 0, 0

  if candidates is not None:
    for a in candidates:
      common = full
      for u in a:
        common &= rows[u]
      size = min(len(a), common.bit_count())
      if size > best_t:
        best_t, best_a, best_common = size, a.mask, common
    return _bipartite_witness(best_t, best_a, best_common)

  limit = get_settings().bipartite_oracle_limit if limit is None else limit
  if t.n > limit:
    raise ResourceLimitError(f'exact bipartite search accepts n <= {limit}, got {t.n}')

  def extend(a: int, size: int, common: int, start: int) -> None:
    nonlocal best_t, best_a, best_common
    for v in range(start, t.n):
      if size + t.n - v <= best_t:
        return
      nxt = common & rows[v]
      if nxt.bit_count() <= best_t:
        continue
      value = min(size + 1, nxt.bit_count())
      if value > best_t:
        best_t, best_a, best_common = value, a | (1 << v), nxt
      extend(a | (1 << v), size + 1, nxt, v + 1)

  extend(0, 0, full, 0)
  return _bipartite_witness(best_t, best_a, best_common)


def _bipartite_witness(size: int, a_mask: int, common: int) -> BipartiteWitness:
  return BipartiteWitness(
    a=VertexSet(a_mask).members()[:size],
    b=VertexSet(common).members()[:size],
    direction='a->b',
  )


def _check_partition(t: Tournament, parts: Sequence[VertexSet]) -> None:
  seen = 0
  for part in parts:
    if part.mask & seen:
      raise InvalidArgumentError('parts overlap')
    seen |= part.mask
  if seen != (1 << t.n) - 1:
    raise InvalidArgumentError('parts do not cover the vertex set')


def _source_first(w: BipartiteWitness, new_to_old: Sequence[int]) -> BipartiteWitness:
  src, dst = (w.a, w.b) if w.direction == 'a->b' else (w.b, w.a)
  return BipartiteWitness(
    a=tuple(new_to_old[v] for v in src),
    b=tuple(new_to_old[v] for v in dst),
    direction='a->b',
  )


def _single_edge(t: Tournament) -> BipartiteWitness:
  for u in range(t.n):
    if t.rows[u]:
      return BipartiteWitness(a=(u,), b=(VertexSet(t.rows[u]).members()[0],))
  return BipartiteWitness(a=(), b=())


def _inner_witness(t: Tournament, refine: Refiner | None, limit: int) -> BipartiteWitness:
  if t.n <= limit:
    return max_bipartite_transitive_bruteforce(t, limit=limit)
  if refine is not None:
    parts = refine(t)
    if parts:
      return guided_bipartite_search(t, parts, refine=refine, limit=limit)
  return _single_edge(t)


def guided_bipartite_search(
  t: Tournament,
  parts: Sequence[VertexSet],
  refine: Refiner | None = None,
  limit: int | None = None,
) -> BipartiteWitness:
  """Large T_{t,t} for a tournament whose parts are joined by fully oriented blocks.

  For parts i -> j the pair (V_i, V_j) is a candidate. A part m with i -> m -> j adds an
  inner witness A' -> B' found inside V_m, giving (V_i + A', V_j + B'). Inner witnesses come
  from the exact oracle on small parts and from ``refine`` (which partitions a part again)
  on large ones. The best inner witness alone is the fallback. The result is verified but not
  a certified maximum.

  Raises:
      InvalidArgumentError: ``parts`` is not a partition of the vertex set
  """
  _check_partition(t, parts)
  limit = get_settings().bipartite_oracle_limit if limit is None else limit
  q = len(parts)
  forward = [[False] * q for _ in range(q)]
  for i in range(q):
    for j in range(q):
      if i != j and parts[i] and parts[j]:
        forward[i][j] = bipartite_direction(t, parts[i], parts[j]) == 'a->b'

  inner: dict[int, BipartiteWitness] = {}

  def inner_of(m: int) -> BipartiteWitness:
    if m not in inner:
      sub, new_to_old = t.induced(parts[m])
      inner[m] = _source_first(_inner_witness(sub, refine, limit), new_to_old)
    return inner[m]

  best = BipartiteWitness(a=(), b=())
  for m in range(q):
    if parts[m] and inner_of(m).t > best.t:
      best = inner_of(m)

  for i in range(q):
    for j in range(q):
      if not forward[i][j]:
        continue
      middle = [m for m in range(q) if m not in (i, j) and forward[i][m] and forward[m][j]]
      extension = max((inner_of(m) for m in middle), key=lambda w: w.t, default=None)
      src, dst = parts[i].members(), parts[j].members()
      if extension is not None:
        src, dst = src + extension.a, dst + extension.b
      size = min(len(src), len(dst))
      if size > best.t:
        best = BipartiteWitness(a=src[:size], b=dst[:size])
  logger.debug('guided search over %d parts found t=%d', q, best.t)
  return best
