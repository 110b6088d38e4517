"""Automorphism groups by exhaustive backtracking, and the disjoint-pair
searches that drive the non-commutativity certificates.

The enumeration is complete (every element, not generators), which keeps
the downstream pair searches trivially correct.  That is fine at desk
scale -- the search is pruned by degree and neighbour-degree profiles and
counts its nodes against a budget, raising :class:`SizeLimitExceeded`
rather than silently hanging on a pathological input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import LengthMismatch, OutOfRange, SizeLimitExceeded
from .graphs import Graph

#: Default cap on backtracking nodes for one enumeration.
DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``0..n-1`` stored as its image tuple.

    ``p.images[v]`` is where ``v`` goes.  As a matrix this is the
    0/1 matrix with ``M[p(j), j] = 1``, so ``p`` is a graph automorphism
    exactly when ``M A = A M`` for the adjacency matrix ``A``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            if any(not 0 <= v < n for v in self.images):
                raise OutOfRange(f"images {self.images} not within range({n})")
            raise OutOfRange(f"images {self.images} are not a bijection")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def support(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self.images) if v != w)

    def support_mask(self) -> int:
        mask = 0
        for v, w in enumerate(self.images):
            if v != w:
                mask |= 1 << v
        return mask

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self after other``: v -> self(other(v))."""
        if other.n != self.n:
            raise LengthMismatch("composing permutations of different sizes")
        return Permutation(tuple(self.images[w] for w in other.images))

    def cycles(self, names: Sequence[str] | None = None) -> str:
        """Cycle notation for display, e.g. ``(0 2)(1 3)``; ``id`` if
        trivial.  ``names`` substitutes vertex labels for the indices."""
        seen = [False] * self.n
        parts = []
        for v in range(self.n):
            if seen[v] or self.images[v] == v:
                seen[v] = True
                continue
            cyc = [v]
            seen[v] = True
            w = self.images[v]
            while w != v:
                cyc.append(w)
                seen[w] = True
                w = self.images[w]
            text = " ".join(str(x) if names is None else names[x] for x in cyc)
            parts.append(f"({text})")
        return "".join(parts) if parts else "id"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def support(p: Permutation) -> frozenset[int]:
    """The set of vertices moved by ``p``."""
    return p.support()


def is_automorphism(g: Graph, p: Permutation) -> bool:
    """Re-verify that ``p`` preserves adjacency on ``g``."""
    if p.n != g.n:
        raise LengthMismatch(f"permutation on {p.n} points, graph on {g.n}")
    im = p.images
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if bool(g.adj[i, j]) != bool(g.adj[im[i], im[j]]):
                return False
    return True


@dataclass(frozen=True)
class AutomorphismSet:
    """The full automorphism group of a graph, as an explicit element list
    in the deterministic order the search produced (lexicographic by
    image tuple, so the identity comes first)."""

    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def nontrivial(self) -> tuple[Permutation, ...]:
        return tuple(p for p in self.elements if not p.is_identity)


def automorphisms(g: Graph, node_budget: int | None = None) -> AutomorphismSet:
    """Enumerate Aut(g) completely.

    Backtracks over vertices in index order; a vertex may only map to
    vertices with the same degree and the same sorted multiset of
    neighbour degrees, and partial maps must already preserve adjacency.
    Every candidate tried costs one node against ``node_budget``
    (default :data:`DEFAULT_NODE_BUDGET`); :class:`SizeLimitExceeded` is
    raised when the budget runs out, so a caller never gets a silently
    truncated group.
    """
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    n = g.n
    if n == 0:
        return AutomorphismSet(elements=(Permutation(()),))
    profile = [
        (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v))))
        for v in range(n)
    ]
    candidates = [
        tuple(w for w in range(n) if profile[w] == profile[v]) for v in range(n)
    ]
    found: list[Permutation] = []
    images: list[int] = []
    used = 0
    nodes = 0

    def extend(v: int) -> None:
        nonlocal used, nodes
        if v == n:
            found.append(Permutation(tuple(images)))
            return
        nbrs_image = 0
        for u in range(v):
            if g.adj[v, u]:
                nbrs_image |= 1 << images[u]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            nodes += 1
            if nodes > budget:
                raise SizeLimitExceeded(budget)
            if (g.neighbor_mask(w) & used) != nbrs_image:
                continue
            images.append(w)
            used |= 1 << w
            extend(v + 1)
            images.pop()
            used &= ~(1 << w)

    extend(0)
    return AutomorphismSet(elements=tuple(found))


def twin_transpositions(g: Graph) -> list[Permutation]:
    """Transpositions swapping *twin* vertices, in lexicographic order.

    Vertices u, v are twins when N(u) - {v} = N(v) - {u}; swapping them
    and fixing everything else is always an automorphism.  This is a
    cheap O(n^2) source of certified automorphisms that avoids a full
    group enumeration on large, highly symmetric inputs.
    """
    out = []
    for u, v in combinations(range(g.n), 2):
        if (g.neighbor_mask(u) & ~(1 << v)) == (g.neighbor_mask(v) & ~(1 << u)):
            images = list(range(g.n))
            images[u], images[v] = v, u
            out.append(Permutation(tuple(images)))
    return out


def _edge_between(g: Graph, mask_a: int, mask_b: int) -> bool:
    m = mask_a
    while m:
        v = (m & -m).bit_length() - 1
        if g.neighbor_mask(v) & mask_b:
            return True
        m &= m - 1
    return False


def _sorted_distinct_supports(
    auts: AutomorphismSet,
) -> list[tuple[int, Permutation]]:
    """Non-identity elements ordered by (support size, discovery order),
    de-duplicated by support set keeping the earliest representative.

    The pair predicates below depend only on supports, so searching over
    these representatives returns the same first witness as searching
    over all elements, just without the quadratic blow-up on very
    symmetric graphs.
    """
    ranked = sorted(
        ((p.support_mask(), p) for p in auts.nontrivial()),
        key=lambda item: item[0].bit_count(),
    )
    seen: set[int] = set()
    out = []
    for mask, p in ranked:
        if mask not in seen:
            seen.add(mask)
            out.append((mask, p))
    return out


def order_pair(
    a: Permutation, b: Permutation
) -> tuple[Permutation, Permutation]:
    """Stable presentation order for a witness pair: smaller support
    first, then smaller least moved point, then lexicographic images."""

    def key(p: Permutation) -> tuple[int, int, tuple[int, ...]]:
        mask = p.support_mask()
        least = (mask & -mask).bit_length() - 1 if mask else -1
        return (mask.bit_count(), least, p.images)

    return (a, b) if key(a) <= key(b) else (b, a)


def find_disjoint_pair(
    g: Graph,
    node_budget: int | None = None,
    auts: AutomorphismSet | None = None,
) -> tuple[Permutation, Permutation] | None:
    """First pair of non-trivial automorphisms with disjoint supports.

    Complete search over the enumerated group; elements are considered in
    order of support size, so the returned witness has the smallest
    support available.  ``None`` when no such pair exists.
    """
    if auts is None:
        auts = automorphisms(g, node_budget=node_budget)
    reps = _sorted_distinct_supports(auts)
    for i in range(len(reps)):
        mask_a, a = reps[i]
        for j in range(i + 1, len(reps)):
            mask_b, b = reps[j]
            if mask_a & mask_b == 0:
                return order_pair(a, b)
    return None


def find_edge_free_disjoint_pair(
    g: Graph,
    node_budget: int | None = None,
    auts: AutomorphismSet | None = None,
) -> tuple[Permutation, Permutation] | None:
    """Like :func:`find_disjoint_pair`, but additionally no edge of ``g``
    may join the two supports."""
    if auts is None:
        auts = automorphisms(g, node_budget=node_budget)
    reps = _sorted_distinct_supports(auts)
    for i in range(len(reps)):
        mask_a, a = reps[i]
        for j in range(i + 1, len(reps)):
            mask_b, b = reps[j]
            if mask_a & mask_b == 0 and not _edge_between(g, mask_a, mask_b):
                return order_pair(a, b)
    return None
