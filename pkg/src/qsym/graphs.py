"""Finite simple graphs and the structural predicates the rest of the
package leans on.

Graphs are immutable: a dense boolean adjacency matrix plus optional
display labels.  Vertices are always ``0..n-1``; labels are cosmetic and
never affect equality.  The helpers here are deliberately plain --
breadth-first search, leaf stripping, backtracking isomorphism -- because
everything downstream (certificates, census runs) wants to re-verify
results against *simple* code rather than clever code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadParams, IndexOutOfRange, LoopEdge, NotATree

#: Sentinel used in distance matrices for "no path".
UNREACHABLE = -1


@dataclass(frozen=True)
class Provenance:
    """How a graph was made, when a product constructor made it.

    ``kind`` is one of ``cartesian``, ``direct``, ``strong``,
    ``lexicographic`` or ``corona``; ``factors`` holds the operand graphs
    in order.  The classifier uses this to lift verdicts from factors to
    the product.  Structural operations (complement, induced subgraphs)
    drop provenance, since they do not preserve the product shape.
    """

    kind: str
    factors: tuple["Graph", ...]


@dataclass(frozen=True)
class Cherry:
    """A cherry: two degree-1 vertices ``v1 < v2`` hanging off a common
    neighbour ``w`` of degree exactly 3."""

    v1: int
    v2: int
    w: int


@dataclass(frozen=True)
class GenerationPartition:
    """Distance layers of a tree measured from its centre.

    ``center`` has one or two vertices.  ``layers[k]`` is the frozenset of
    vertices whose distance to the centre (to the nearer centre vertex,
    when there are two) equals ``k``; ``layers[0]`` is the centre itself.
    Every automorphism of the tree maps each layer onto itself.
    """

    center: tuple[int, ...]
    layers: tuple[frozenset[int], ...]


class Graph:
    """An immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "labels", "provenance", "_bits", "_degrees")

    def __init__(
        self,
        adj: np.ndarray,
        labels: Sequence[str] | None = None,
        provenance: Provenance | None = None,
    ):
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise BadParams(f"adjacency matrix must be square, got {adj.shape}")
        if adj.diagonal().any():
            raise LoopEdge("adjacency matrix has a nonzero diagonal")
        if not np.array_equal(adj, adj.T):
            raise BadParams("adjacency matrix must be symmetric")
        n = adj.shape[0]
        if labels is not None and len(labels) != n:
            raise BadParams(f"{len(labels)} labels for {n} vertices")
        adj = adj.copy()
        adj.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "provenance", provenance)
        bits = []
        for v in range(n):
            mask = 0
            for u in np.flatnonzero(adj[v]):
                mask |= 1 << int(u)
            bits.append(mask)
        object.__setattr__(self, "_bits", tuple(bits))
        object.__setattr__(self, "_degrees", tuple(int(d) for d in adj.sum(axis=1)))

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Graph is immutable")

    # -- basic accessors -------------------------------------------------

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return self._degrees

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(int(u) for u in np.flatnonzero(self.adj[v]))

    def neighbor_mask(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask (bit ``u`` set iff ``u ~ v``)."""
        self._check_vertex(v)
        return self._bits[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u, v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs ``(u, v)`` with ``u < v``, sorted."""
        iu = np.triu_indices(self.n, k=1)
        sel = self.adj[iu]
        return [(int(u), int(v)) for u, v in zip(iu[0][sel], iu[1][sel])]

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def label_of(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def with_labels(self, labels: Sequence[str] | None) -> "Graph":
        return Graph(self.adj, labels=labels, provenance=self.provenance)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside range(0, {self.n})")

    # -- equality is by labelled structure, ignoring display labels -----

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# construction


def build(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an explicit edge list.

    Raises :class:`LoopEdge` on an edge ``(v, v)`` and
    :class:`IndexOutOfRange` on a vertex outside ``range(n)``.  Duplicate
    edges (in either orientation) collapse silently.
    """
    if n < 0:
        raise BadParams(f"vertex count must be >= 0, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside range(0, {n})")
        adj[u, v] = adj[v, u] = True
    return Graph(adj, labels=labels)


def complement(g: Graph) -> Graph:
    """The complement graph on the same vertex set (labels preserved)."""
    adj = ~g.adj
    np.fill_diagonal(adj, False)
    return Graph(adj, labels=g.labels)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """The induced subgraph on ``keep``, renumbered in ascending order of
    the kept original indices (labels carried along)."""
    keep = sorted(set(keep))
    for v in keep:
        g._check_vertex(v)
    idx = np.asarray(keep, dtype=np.int64)
    adj = g.adj[np.ix_(idx, idx)]
    labels = [g.label_of(v) for v in keep] if g.labels is not None else None
    return Graph(adj, labels=labels)


def line_graph(g: Graph) -> Graph:
    """The line graph: one vertex per edge of ``g``, adjacent iff the
    edges share an endpoint.  Edge order (and hence vertex numbering of
    the result) follows :meth:`Graph.edges`.
    """
    es = g.edges()
    m = len(es)
    adj = np.zeros((m, m), dtype=bool)
    for a in range(m):
        ua, va = es[a]
        for b in range(a + 1, m):
            ub, vb = es[b]
            if ua in (ub, vb) or va in (ub, vb):
                adj[a, b] = adj[b, a] = True
    labels = [f"{u}-{v}" for u, v in es]
    return Graph(adj, labels=labels)


# ---------------------------------------------------------------------------
# metrics and predicates


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances by BFS; ``UNREACHABLE`` (-1) across
    components.  Returned array is read-only."""
    n = g.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if dist[s, u] == UNREACHABLE:
                    dist[s, u] = dist[s, v] + 1
                    queue.append(u)
    dist.flags.writeable = False
    return dist


def contains_quadrangle(g: Graph) -> bool:
    """Whether ``g`` contains a 4-cycle subgraph (not necessarily induced).

    Equivalent test: some pair of distinct vertices has two or more
    common neighbours.
    """
    a = g.adj.astype(np.int64)
    paths2 = a @ a
    np.fill_diagonal(paths2, 0)
    return bool((paths2 >= 2).any())


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, each a frozenset, ordered by least vertex."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    """True when there is at most one component (vacuously for n=0)."""
    return len(components(g)) <= 1


def is_forest(g: Graph) -> bool:
    """Acyclic?  Checked per component by the edge count criterion."""
    return all(
        sum(1 for u, v in g.edges() if u in comp) == len(comp) - 1
        for comp in components(g)
    )


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count == g.n - 1


def tree_center(g: Graph) -> tuple[int, ...]:
    """Centre of a tree by iterated leaf removal: one or two vertices."""
    if not is_tree(g):
        raise NotATree("tree_center needs a tree")
    remaining = set(range(g.n))
    deg = {v: g.degree(v) for v in remaining}
    while len(remaining) > 2:
        leaves = [v for v in remaining if deg[v] <= 1]
        for v in leaves:
            remaining.discard(v)
            for u in g.neighbors(v):
                if u in remaining:
                    deg[u] -= 1
    return tuple(sorted(remaining))


def generations(g: Graph) -> GenerationPartition:
    """Layer a tree by distance from its centre.

    With a single centre vertex ``c`` the k-th layer is everything at
    distance k from ``c``; with a bicentral tree the layers measure the
    distance to the nearer of the two centre vertices, so layer 0 holds
    both.
    """
    center = tree_center(g)
    dist = distance_matrix(g)
    how_far = [min(int(dist[c, v]) for c in center) for v in range(g.n)]
    layers: list[set[int]] = []
    for v, k in enumerate(how_far):
        while len(layers) <= k:
            layers.append(set())
        layers[k].add(v)
    return GenerationPartition(
        center=center, layers=tuple(frozenset(layer) for layer in layers)
    )


def find_cherries(g: Graph) -> tuple[Cherry, ...]:
    """All cherries of ``g``, sorted by (centre, leaf pair)."""
    out = []
    for w in range(g.n):
        if g.degree(w) != 3:
            continue
        ones = [u for u in g.neighbors(w) if g.degree(u) == 1]
        for i in range(len(ones)):
            for j in range(i + 1, len(ones)):
                out.append(Cherry(v1=ones[i], v2=ones[j], w=w))
    out.sort(key=lambda c: (c.w, c.v1, c.v2))
    return tuple(out)


# ---------------------------------------------------------------------------
# isomorphism


def is_isomorphism(g1: Graph, g2: Graph, images: Sequence[int]) -> bool:
    """Check that ``images`` (vertex i of g1 goes to images[i] in g2) is a
    graph isomorphism.  Pure re-verification, no search."""
    n = g1.n
    if g2.n != n or len(images) != n or sorted(images) != list(range(n)):
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if bool(g1.adj[i, j]) != bool(g2.adj[images[i], images[j]]):
                return False
    return True


def _refinement(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    return [
        (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v))))
        for v in range(g.n)
    ]


def are_isomorphic(g1: Graph, g2: Graph) -> tuple[int, ...] | None:
    """Search for an isomorphism g1 -> g2.

    Returns the witness as an image tuple (``result[i]`` is where vertex
    ``i`` of ``g1`` lands in ``g2``), or ``None``.  Backtracking over
    vertices of ``g1`` in index order, pruned by degree and
    neighbour-degree profiles; deterministic, so equal inputs always give
    the same witness.
    """
    n = g1.n
    if g2.n != n or g1.edge_count != g2.edge_count:
        return None
    inv1, inv2 = _refinement(g1), _refinement(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [
        [w for w in range(n) if inv2[w] == inv1[v]] for v in range(n)
    ]
    images: list[int] = []
    used = 0

    def extend(v: int) -> tuple[int, ...] | None:
        nonlocal used
        if v == n:
            return tuple(images)
        nbrs_image = 0
        for u in range(v):
            if g1.adj[v, u]:
                nbrs_image |= 1 << images[u]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            if (g2.neighbor_mask(w) & used) != nbrs_image:
                continue
            images.append(w)
            used |= 1 << w
            hit = extend(v + 1)
            if hit is not None:
                return hit
            images.pop()
            used &= ~(1 << w)
        return None

    return extend(0)


# ---------------------------------------------------------------------------
# standard families


def edgeless(n: int) -> Graph:
    if n < 0:
        raise BadParams("need n >= 0")
    return build(n, [])


def complete(n: int) -> Graph:
    if n < 0:
        raise BadParams("need n >= 0")
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(k: int) -> Graph:
    """The path with ``k`` edges, hence ``k + 1`` vertices."""
    if k < 0:
        raise BadParams("need k >= 0 edges")
    return build(k + 1, [(i, i + 1) for i in range(k)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise BadParams("both sides must be nonempty")
    return build(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """The star with ``n`` rays: hub vertex 0 joined to ``1..n``."""
    if n < 1:
        raise BadParams("need at least one ray")
    return build(n + 1, [(0, i) for i in range(1, n + 1)])
