"""Lexicographic products and powers, lifted profiles, Paley-7, realizer search, random bases.

Product vertex (u, v) of G1 o G2 is encoded as v * |G1| + u, so G2 picks a contiguous block
and G1 the vertex inside it. In G^r = G^(r-1) o G the outermost coordinate is therefore the
most significant base-n digit.
"""

import itertools
import logging
from dataclasses import dataclass
from importlib import resources
from typing import Iterator, Sequence

import numpy as np

from kmajority.config import get_settings
from kmajority.core import Profile, Tournament, VertexSet, majority_tournament
from kmajority.errors import (
  InternalSearchError,
  InvalidArgumentError,
  SearchBudgetExceeded,
  VerificationError,
)
from kmajority.formats import parse_profile
from kmajority.models import TransitiveWitness

logger = logging.getLogger(__name__)

PALEY_RESIDUES = (1, 2, 4)
PALEY7_FIXTURE = 'paley7_profile.txt'


def lex_product(g1: Tournament, g2: Tournament) -> Tournament:
  """G1 o G2: blocks follow G2, and inside a block the edges follow G1."""
  n1 = g1.n
  block = (1 << n1) - 1
  rows = []
  for v, outer in enumerate(g2.rows):
    between = 0
    for w in VertexSet(outer):
      between |= block << (w * n1)
    for inner in g1.rows:
      rows.append(between | (inner << (v * n1)))
  return Tournament(tuple(rows))


def power(g: Tournament, r: int) -> Tournament:
  """G^r = G^(r-1) o G."""
  if r < 1:
    raise InvalidArgumentError(f'power needs r >= 1, got {r}')
  result = g
  for _ in range(r - 1):
    result = lex_product(result, g)
  return result


def product_parts(n_inner: int, n_outer: int) -> list[VertexSet]:
  """The contiguous blocks V_0..V_{q-1} of a product whose outer factor has q vertices."""
  block = (1 << n_inner) - 1
  return [VertexSet(block << (m * n_inner)) for m in range(n_outer)]


def product_refiner(base_n: int):
  """Refiner for ``guided_bipartite_search`` on powers of a ``base_n``-vertex tournament.

  A part of G^r induces G^(r-1), which splits again into ``base_n`` blocks.
  """

  def refine(t: Tournament) -> list[VertexSet] | None:
    if base_n < 2 or t.n <= base_n or t.n % base_n:
      return None
    return product_parts(t.n // base_n, base_n)

  return refine


def product_bipartite_bound(b: int, q: int, r: int) -> int:
  """b (q^r - 1) / (q - 1): the T_{t,t} size in the r-th power of a base without T_{b+1,b+1}.

  The base has q vertices.
  """
  if q < 2 or r < 1:
    raise InvalidArgumentError('product bound needs q >= 2 and r >= 1')
  return b * sum(q**i for i in range(r))


@dataclass(frozen=True, slots=True)
class ProductStructure:
  """G1 o G2 together with the block partition induced by the outer factor."""

  inner: Tournament
  outer: Tournament

  @property
  def parts(self) -> list[VertexSet]:
    return product_parts(self.inner.n, self.outer.n)

  def tournament(self) -> Tournament:
    return lex_product(self.inner, self.outer)

  def check_blocks(self, t: Tournament | None = None) -> bool:
    """Blocks induce the inner factor and are joined as the outer factor says."""
    t = self.tournament() if t is None else t
    parts = self.parts
    for i, part in enumerate(parts):
      if t.induced(part)[0] != self.inner:
        return False
      for j, other in enumerate(parts):
        if i == j:
          continue
        want = self.outer.has_edge(i, j)
        if any((t.rows[u] & other.mask == other.mask) != want for u in part):
          return False
    return True


def lift_profile(base: Profile, r: int) -> Profile:
  """Profile on n^r vertices generating power(majority_tournament(base), r).

  Order i sorts product vertices by the positions of their coordinates in order i of
  ``base``, outermost coordinate first.
  """
  if r < 1:
    raise InvalidArgumentError(f'lift needs r >= 1, got {r}')
  n = base.n
  size = n**r
  xs = np.arange(size, dtype=np.int64)
  seqs = []
  for pos in base.positions():
    key = np.zeros(size, dtype=np.int64)
    for j in range(r):
      key += pos[(xs // n**j) % n] * n**j
    seq = np.empty(size, dtype=np.int64)
    seq[key] = xs
    seqs.append(seq.tolist())
  return Profile.from_sequences(base.k, seqs)


def lift_transitive_witness(w: TransitiveWitness, g: Tournament, r: int) -> TransitiveWitness:
  """The t^r-vertex beat-chain of G^r made of all coordinate tuples drawn from a chain of G.

  Tuples are listed lexicographically by chain index, outermost coordinate first.
  """
  if r < 1:
    raise InvalidArgumentError(f'lift needs r >= 1, got {r}')
  chain = w.vertices
  if any(not g.has_edge(u, v) for i, u in enumerate(chain) for v in chain[i + 1 :]):
    raise VerificationError('is_transitive', 'witness is not a beat-chain of the base tournament')
  lifted = []
  for picks in itertools.product(chain, repeat=r):
    # picks[0] is the outermost coordinate.
    lifted.append(sum(v * g.n ** (r - 1 - j) for j, v in enumerate(picks)))
  return TransitiveWitness(vertices=tuple(lifted))


def paley7() -> Tournament:
  """i -> j iff (j - i) mod 7 is a quadratic residue (1, 2 or 4)."""
  return Tournament(tuple(
    sum(1 << ((i + d) % 7) for d in PALEY_RESIDUES) for i in range(7)
  ))


def load_paley7_fixture() -> Profile | None:
  """The committed Paley-7 realizer, or None when the data file is absent."""
  try:
    text = resources.files('kmajority').joinpath('data', PALEY7_FIXTURE).read_text()
  except FileNotFoundError:
    return None
  return parse_profile(text)


def paley7_profile() -> Profile:
  """A 2-majority realizer of Paley-7: the committed fixture, or a fresh search.

  Raises:
      InternalSearchError: no fixture and the search finds no realizer
  """
  target = paley7()
  profile = load_paley7_fixture()
  if profile is not None and majority_tournament(profile) == target:
    return profile
  logger.warning('paley7 fixture missing or invalid; searching for a realizer')
  profile = find_realizer(target, 2)
  if profile is None:
    raise InternalSearchError('no 2-majority realizer found for Paley-7')
  return profile


def random_tournament(n: int, seed: int) -> Tournament:
  """Every pair oriented by an independent fair coin from ``numpy.random.default_rng(seed)``."""
  if n < 1:
    raise InvalidArgumentError(f'n must be at least 1, got {n}')
  rng = np.random.default_rng(seed)
  coins = np.triu(rng.integers(0, 2, size=(n, n)), k=1).astype(bool)
  upper = np.triu(np.ones((n, n), dtype=bool), k=1)
  return Tournament.from_matrix(coins | (upper & ~coins).T)


def _topological(n: int, forced_in: Sequence[int]) -> list[int] | None:
  """Smallest-id-first linear extension of the forced edges, or None when they form a cycle."""
  placed = 0
  order = []
  for _ in range(n):
    ready = [v for v in range(n) if not (placed >> v) & 1 and forced_in[v] & ~placed == 0]
    if not ready:
      return None
    order.append(ready[0])
    placed |= 1 << ready[0]
  return order


class _RealizerSearch:
  """Builds orders 2..2k-1 for a fixed first order.

  An edge u -> v may be broken (v placed before u) in at most k-1 orders. ``forced_in[v]``
  holds the in-neighbours u whose edge to v has no breaks left, so v can be placed only
  after all of them.
  """

  def __init__(self, t: Tournament, k: int, budget: int):
    self.t = t
    self.k = k
    self.n = t.n
    self.budget = budget
    self.nodes = 0
    self.in_masks = [t.in_mask(v) for v in range(t.n)]
    self.breaks = [[0] * t.n for _ in range(t.n)]

  def forced_in(self) -> list[int]:
    limit = self.k - 1
    return [
      sum(1 << u for u in VertexSet(self.in_masks[v]) if self.breaks[u][v] >= limit)
      for v in range(self.n)
    ]

  def apply(self, seq: Sequence[int], sign: int) -> None:
    placed = 0
    for v in seq:
      for u in VertexSet(self.in_masks[v] & ~placed):
        self.breaks[u][v] += sign
      placed |= 1 << v

  def run(self, first: Sequence[int]) -> list[list[int]] | None:
    self.apply(first, 1)
    try:
      rest = self.orders(2 * self.k - 2)
    finally:
      self.apply(first, -1)
    return None if rest is None else [list(first)] + rest

  def orders(self, remaining: int) -> list[list[int]] | None:
    if any(self.breaks[u][v] >= self.k for v in range(self.n) for u in VertexSet(self.in_masks[v])):
      return None
    if remaining == 0:
      return []
    forced = self.forced_in()
    last = _topological(self.n, forced)
    if last is None:
      return None
    if remaining == 1:
      return [last]
    for seq in self.extensions(forced):
      self.apply(seq, 1)
      try:
        rest = self.orders(remaining - 1)
      finally:
        self.apply(seq, -1)
      if rest is not None:
        return [seq] + rest
    return None

  def extensions(self, forced: Sequence[int]) -> Iterator[list[int]]:
    """Linear extensions of the forced edges in lexicographic order."""
    seq: list[int] = []

    def grow(placed: int) -> Iterator[list[int]]:
      if len(seq) == self.n:
        yield list(seq)
        return
      for v in range(self.n):
        if (placed >> v) & 1 or forced[v] & ~placed:
          continue
        self.nodes += 1
        if self.nodes > self.budget:
          raise SearchBudgetExceeded(f'realizer search stopped after {self.budget} nodes')
        seq.append(v)
        yield from grow(placed | (1 << v))
        seq.pop()

    yield from grow(0)


def _first_orders(t: Tournament) -> Iterator[tuple[int, ...]]:
  score = tuple(t.score_order())
  yield score
  for perm in itertools.permutations(range(t.n)):
    if perm != score:
      yield perm


def find_realizer(t: Tournament, k: int, budget: int | None = None) -> Profile | None:
  """Backtracking search for 2k-1 orders whose k-majority tournament is ``t``.

  First orders are tried score order first, then in lexicographic order.

  Returns:
      A verified realizer, or None once the whole space has been searched

  Raises:
      SearchBudgetExceeded: the node budget ran out before the space was exhausted
  """
  if k < 1:
    raise InvalidArgumentError(f'k must be at least 1, got {k}')
  budget = get_settings().realizer_node_budget if budget is None else budget
  if t.n == 0:
    return Profile.from_sequences(k, [()] * (2 * k - 1))
  search = _RealizerSearch(t, k, budget)
  for first in _first_orders(t):
    search.nodes += 1
    if search.nodes > budget:
      raise SearchBudgetExceeded(f'realizer search stopped after {budget} nodes')
    orders = search.run(first)
    if orders is None:
      continue
    profile = Profile.from_sequences(k, orders)
    if majority_tournament(profile) != t:
      raise InternalSearchError(
        'realizer search produced a profile that does not generate the target'
      )
    logger.debug('realizer for n=%d, k=%d after %d nodes', t.n, k, search.nodes)
    return profile
  return None
