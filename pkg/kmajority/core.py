"""Linear orders, profiles, tournaments and the predicates every other module relies on.

Vertices are the integers 0..n-1. Vertex sets and adjacency rows are Python integers used
as bitmasks, so set intersection is a single ``&``.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from kmajority.errors import InvalidArgumentError


@dataclass(frozen=True, slots=True)
class VertexSet:
  """Unordered set of vertex ids stored as a bitmask."""

  mask: int = 0

  def __post_init__(self):
    if self.mask < 0:
      raise InvalidArgumentError('vertex set mask must be non-negative')

  @classmethod
  def of(cls, vertices: Iterable[int]) -> 'VertexSet':
    """Build a set from ids; repeated ids collapse."""
    mask = 0
    for v in vertices:
      v = int(v)
      if v < 0:
        raise InvalidArgumentError(f'negative vertex id {v}')
      mask |= 1 << v
    return cls(mask)

  @classmethod
  def full(cls, n: int) -> 'VertexSet':
    return cls((1 << n) - 1)

  def __len__(self) -> int:
    return self.mask.bit_count()

  def __bool__(self) -> bool:
    return self.mask != 0

  def __iter__(self) -> Iterator[int]:
    m = self.mask
    while m:
      low = m & -m
      yield low.bit_length() - 1
      m ^= low

  def __contains__(self, v: object) -> bool:
    return isinstance(v, int) and v >= 0 and (self.mask >> v) & 1 == 1

  def __or__(self, other: 'VertexSet') -> 'VertexSet':
    return VertexSet(self.mask | other.mask)

  def __and__(self, other: 'VertexSet') -> 'VertexSet':
    return VertexSet(self.mask & other.mask)

  def __sub__(self, other: 'VertexSet') -> 'VertexSet':
    return VertexSet(self.mask & ~other.mask)

  def members(self) -> tuple[int, ...]:
    """Sorted ids."""
    return tuple(self)

  def isdisjoint(self, other: 'VertexSet') -> bool:
    return self.mask & other.mask == 0

  def within(self, n: int) -> bool:
    """True when every member is below ``n``."""
    return self.mask >> n == 0


@dataclass(frozen=True, slots=True)
class LinearOrder:
  """A permutation of 0..n-1 with its inverse for O(1) position lookup."""

  seq: tuple[int, ...]
  pos: tuple[int, ...] = field(init=False, repr=False, compare=False)

  def __post_init__(self):
    seq = tuple(int(v) for v in self.seq)
    n = len(seq)
    pos = [-1] * n
    for i, v in enumerate(seq):
      if not 0 <= v < n or pos[v] != -1:
        raise InvalidArgumentError(f'{list(seq)} is not a permutation of 0..{n - 1}')
      pos[v] = i
    object.__setattr__(self, 'seq', seq)
    object.__setattr__(self, 'pos', tuple(pos))

  @classmethod
  def identity(cls, n: int) -> 'LinearOrder':
    return cls(tuple(range(n)))

  @property
  def n(self) -> int:
    return len(self.seq)

  def restrict(self, s: VertexSet) -> tuple[int, ...]:
    """Members of ``s`` listed in this order."""
    return tuple(sorted(s, key=self.pos.__getitem__))


@dataclass(frozen=True, slots=True)
class Profile:
  """The 2k-1 linear orders generating a k-majority tournament. Duplicates are allowed."""

  k: int
  orders: tuple[LinearOrder, ...]

  def __post_init__(self):
    if self.k < 1:
      raise InvalidArgumentError(f'k must be at least 1, got {self.k}')
    orders = tuple(self.orders)
    if len(orders) != 2 * self.k - 1:
      raise InvalidArgumentError(
        f'a profile with k={self.k} needs {2 * self.k - 1} orders, got {len(orders)}'
      )
    if len({o.n for o in orders}) != 1:
      raise InvalidArgumentError('all orders of a profile must cover the same vertex set')
    object.__setattr__(self, 'orders', orders)

  @classmethod
  def from_sequences(cls, k: int, seqs: Iterable[Sequence[int]]) -> 'Profile':
    return cls(k, tuple(LinearOrder(tuple(s)) for s in seqs))

  @property
  def n(self) -> int:
    return self.orders[0].n

  def positions(self) -> np.ndarray:
    """Matrix of shape (2k-1, n) with ``positions()[i, v]`` the position of v in order i."""
    return np.array([o.pos for o in self.orders], dtype=np.int64).reshape(len(self.orders), self.n)


@dataclass(frozen=True, slots=True)
class Tournament:
  """Complete antisymmetric orientation; ``rows[u]`` is the out-neighbour bitmask of u."""

  rows: tuple[int, ...]

  def __post_init__(self):
    rows = tuple(int(r) for r in self.rows)
    n = len(rows)
    for u in range(n):
      row = rows[u]
      if row < 0 or row >> n or (row >> u) & 1:
        raise InvalidArgumentError(f'row {u} has a self-loop or an out-of-range vertex')
      for v in range(u + 1, n):
        if ((row >> v) & 1) == ((rows[v] >> u) & 1):
          raise InvalidArgumentError(f'pair ({u}, {v}) must carry exactly one edge')
    object.__setattr__(self, 'rows', rows)

  @classmethod
  def from_matrix(cls, matrix: Sequence[Sequence[int]] | np.ndarray) -> 'Tournament':
    """Build from a square 0/1 (or boolean) matrix with ``matrix[u][v]`` meaning u -> v."""
    adj = np.asarray(matrix, dtype=bool)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
      if adj.size == 0:
        return cls(())
      raise InvalidArgumentError('adjacency matrix must be square')
    rows = []
    for row in adj:
      mask = 0
      for v in np.flatnonzero(row).tolist():
        mask |= 1 << v
      rows.append(mask)
    return cls(tuple(rows))

  @property
  def n(self) -> int:
    return len(self.rows)

  def has_edge(self, u: int, v: int) -> bool:
    return (self.rows[u] >> v) & 1 == 1

  def out_set(self, u: int) -> VertexSet:
    return VertexSet(self.rows[u])

  def out_degree(self, u: int, within: VertexSet | None = None) -> int:
    row = self.rows[u]
    if within is not None:
      row &= within.mask
    return row.bit_count()

  def in_mask(self, u: int) -> int:
    """Bitmask of vertices beating u."""
    return ((1 << self.n) - 1) & ~self.rows[u] & ~(1 << u)

  def matrix(self) -> list[list[int]]:
    return [[(row >> v) & 1 for v in range(self.n)] for row in self.rows]

  def score_order(self) -> list[int]:
    """Vertices by decreasing out-degree, ties by id."""
    return sorted(range(self.n), key=lambda v: (-self.rows[v].bit_count(), v))

  def induced(self, s: VertexSet) -> tuple['Tournament', tuple[int, ...]]:
    """Induced subtournament on ``s``, relabelled 0..|s|-1 in increasing old-id order.

    Returns:
        The subtournament and the map new id -> old id
    """
    if not s.within(self.n):
      raise InvalidArgumentError('vertex set is not contained in the tournament')
    new_to_old = s.members()
    rows = []
    for old in new_to_old:
      row = self.rows[old]
      mask = 0
      for new, other in enumerate(new_to_old):
        if (row >> other) & 1:
          mask |= 1 << new
      rows.append(mask)
    return Tournament(tuple(rows)), new_to_old

  def relabel(self, mapping: Sequence[int]) -> 'Tournament':
    """Rename vertex u to ``mapping[u]``; ``mapping`` must be a permutation."""
    LinearOrder(tuple(mapping))
    rows = [0] * self.n
    for u, row in enumerate(self.rows):
      mask = 0
      for v in VertexSet(row):
        mask |= 1 << mapping[v]
      rows[mapping[u]] = mask
    return Tournament(tuple(rows))


def transitive_tournament(n: int) -> Tournament:
  """T_n with u -> v exactly when u < v."""
  full = (1 << n) - 1
  return Tournament(tuple(full & ~((1 << (u + 1)) - 1) for u in range(n)))


def unanimous_profile(n: int, k: int, order: Sequence[int] | None = None) -> Profile:
  """Profile whose 2k-1 orders all equal ``order`` (identity by default)."""
  seq = tuple(order) if order is not None else tuple(range(n))
  return Profile.from_sequences(k, [seq] * (2 * k - 1))


def condorcet_profile() -> Profile:
  """Three cyclic rotations of (0, 1, 2); generates the 3-cycle 0 -> 1 -> 2 -> 0."""
  return Profile.from_sequences(2, [(0, 1, 2), (1, 2, 0), (2, 0, 1)])


def _check_vertex(p: Profile, v: int) -> None:
  if not 0 <= v < p.n:
    raise InvalidArgumentError(f'vertex {v} out of range for n={p.n}')


def _check_pair(a: VertexSet, b: VertexSet, n: int) -> None:
  if not a.isdisjoint(b):
    raise InvalidArgumentError('vertex sets must be disjoint')
  if not (a.within(n) and b.within(n)):
    raise InvalidArgumentError(f'vertex sets must lie in 0..{n - 1}')


def precedence_count(p: Profile, u: int, v: int) -> int:
  """Number of orders of ``p`` in which u comes before v."""
  _check_vertex(p, u)
  _check_vertex(p, v)
  if u == v:
    raise InvalidArgumentError('precedence needs two distinct vertices')
  return sum(1 for o in p.orders if o.pos[u] < o.pos[v])


def majority_from_positions(positions: np.ndarray, k: int) -> Tournament:
  """Majority tournament of a (2k-1, n) position matrix: u -> v iff u precedes v in >= k rows."""
  positions = np.asarray(positions)
  ahead = (positions[:, :, None] < positions[:, None, :]).sum(axis=0)
  return Tournament.from_matrix(ahead >= k)


def majority_tournament(p: Profile) -> Tournament:
  """The k-majority tournament generated by ``p``."""
  if p.n == 0:
    return Tournament(())
  return majority_from_positions(p.positions(), p.k)


def is_transitive(t: Tournament, s: VertexSet | None = None) -> bool:
  """True iff the subtournament induced on ``s`` (default: all) is acyclic.

  Uses the fact that a tournament is transitive exactly when its scores are distinct.
  """
  if s is None:
    s = VertexSet.full(t.n)
  if not s.within(t.n):
    raise InvalidArgumentError('vertex set is not contained in the tournament')
  scores = {(t.rows[v] & s.mask).bit_count() for v in s}
  return len(scores) == len(s)


def _all_edges_from(t: Tournament, a: VertexSet, b: VertexSet) -> bool:
  return all(t.rows[u] & b.mask == b.mask for u in a)


def bipartite_direction(t: Tournament, a: VertexSet, b: VertexSet) -> str | None:
  """'a->b' or 'b->a' when all edges between the sets agree, else None."""
  _check_pair(a, b, t.n)
  if _all_edges_from(t, a, b):
    return 'a->b'
  if _all_edges_from(t, b, a):
    return 'b->a'
  return None


def is_transitive_bipartite(t: Tournament, a: VertexSet, b: VertexSet) -> bool:
  """True iff every edge between ``a`` and ``b`` points the same way (a T_{|a|,|b|})."""
  return bipartite_direction(t, a, b) is not None


def dominates_in_order(o: LinearOrder, a: VertexSet, b: VertexSet) -> bool:
  """True iff every vertex of ``a`` appears before every vertex of ``b`` in ``o``."""
  _check_pair(a, b, o.n)
  if not a or not b:
    return True
  return max(o.pos[v] for v in a) < min(o.pos[v] for v in b)


def consistent(p: Profile, a: VertexSet, b: VertexSet) -> bool:
  """True iff in every order one of the sets dominates the other."""
  return all(dominates_in_order(o, a, b) or dominates_in_order(o, b, a) for o in p.orders)


def majority_dominates(p: Profile, a: VertexSet, b: VertexSet) -> bool:
  """True iff ``a`` dominates ``b`` in at least k orders."""
  return sum(1 for o in p.orders if dominates_in_order(o, a, b)) >= p.k


def relabel_profile(p: Profile, mapping: Sequence[int]) -> Profile:
  """Rename vertex v to ``mapping[v]`` in every order."""
  LinearOrder(tuple(mapping))
  return Profile.from_sequences(p.k, [[mapping[v] for v in o.seq] for o in p.orders])


def restrict_profile(p: Profile, s: VertexSet) -> tuple[Profile, tuple[int, ...]]:
  """Restrict every order to ``s``, relabelling members 0..|s|-1 by increasing old id.

  The relabelling matches ``Tournament.induced``, so the majority tournament of the
  restriction equals the induced subtournament.

  Returns:
      The restricted profile and the map new id -> old id
  """
  if not s:
    raise InvalidArgumentError('cannot restrict a profile to an empty vertex set')
  if not s.within(p.n):
    raise InvalidArgumentError(f'vertex set must lie in 0..{p.n - 1}')
  new_to_old = s.members()
  old_to_new = {old: new for new, old in enumerate(new_to_old)}
  seqs = [[old_to_new[v] for v in o.restrict(s)] for o in p.orders]
  return Profile.from_sequences(p.k, seqs), new_to_old
