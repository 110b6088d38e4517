"""Zero patterns for the fundamental magic unitary, and the high-degree
stripping reduction.

A *zero pattern* marks entries u_ij of the n x n fundamental
representation that are forced to vanish by combinatorial data alone.
Two rules produce forced zeros:

* the degree rule -- u_ij = 0 whenever deg(i) != deg(j);
* the distance-degree rule -- u_wv = 0 whenever some vertex p at finite
  distance k >= 1 from w has a degree that appears nowhere in the
  distance-k sphere around v (an empty sphere counts: then no degree
  appears at all).

The combined pattern is the union of both, symmetrised: the antipode
swaps u_ij with u_ji, so a forced zero at (i, j) forces (j, i) too.
Classically the pattern is a sound over-approximation of "no
automorphism maps j to i", which is exactly what the soundness tests
check against enumerated automorphism groups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AsymmetricPattern
from .graphs import UNREACHABLE, Graph, distance_matrix, induced_subgraph

RULE_DEGREE = "degree"
RULE_DISTANCE_DEGREE = "distance-degree"
RULE_ANTIPODE = "antipode"


@dataclass(frozen=True)
class ZeroPattern:
    """Forced-zero cells of the n x n fundamental representation.

    ``forced[i, j]`` is True when entry (i, j) must vanish;
    ``provenance`` maps a forced cell to the rule names that produced
    it.  The diagonal is never forced (the identity always survives).
    """

    n: int
    forced: np.ndarray
    provenance: dict[tuple[int, int], tuple[str, ...]]

    def is_forced(self, i: int, j: int) -> bool:
        return bool(self.forced[i, j])

    @property
    def forced_count(self) -> int:
        return int(self.forced.sum())


@dataclass(frozen=True)
class BlockStructure:
    """Partition of the vertex set into components of the "possibly
    nonzero" relation of a symmetric zero pattern.  The fundamental
    representation is block diagonal along this partition."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def _freeze(forced: np.ndarray) -> np.ndarray:
    forced = forced.copy()
    forced.flags.writeable = False
    return forced


def degree_pattern(g: Graph) -> ZeroPattern:
    """Forced zeros from the degree rule alone."""
    deg = np.asarray(g.degree_sequence, dtype=np.int64)
    forced = deg[:, None] != deg[None, :]
    prov = {
        (int(i), int(j)): (RULE_DEGREE,) for i, j in zip(*np.nonzero(forced))
    }
    return ZeroPattern(n=g.n, forced=_freeze(forced), provenance=prov)


def distance_degree_pattern(g: Graph) -> ZeroPattern:
    """Forced zeros from the distance-degree rule alone.

    Cell (w, v) is forced when a witness vertex p with 1 <= d(w, p) = k
    exists whose degree is missing from {deg(q) : d(v, q) = k}.
    Unreachable distances never produce or satisfy a witness.
    """
    n = g.n
    deg = g.degree_sequence
    dist = distance_matrix(g)
    sphere_degrees: list[dict[int, set[int]]] = []
    for v in range(n):
        at_k: dict[int, set[int]] = {}
        for q in range(n):
            k = int(dist[v, q])
            if k >= 1:
                at_k.setdefault(k, set()).add(deg[q])
        sphere_degrees.append(at_k)
    forced = np.zeros((n, n), dtype=bool)
    for w in range(n):
        for v in range(n):
            for p in range(n):
                k = int(dist[w, p])
                if k == UNREACHABLE or k < 1:
                    continue
                if deg[p] not in sphere_degrees[v].get(k, ()):  # empty sphere forces
                    forced[w, v] = True
                    break
    prov = {
        (int(i), int(j)): (RULE_DISTANCE_DEGREE,)
        for i, j in zip(*np.nonzero(forced))
    }
    return ZeroPattern(n=g.n, forced=_freeze(forced), provenance=prov)


def zero_pattern(g: Graph) -> ZeroPattern:
    """Union of all rules, closed under the antipode symmetry.

    Provenance per cell lists the rules that fired on the cell itself;
    cells forced only because their mirror was forced carry the
    ``antipode`` tag.
    """
    parts = [degree_pattern(g), distance_degree_pattern(g)]
    n = g.n
    direct = np.zeros((n, n), dtype=bool)
    prov: dict[tuple[int, int], tuple[str, ...]] = {}
    for pat in parts:
        direct |= pat.forced
        for cell, rules in pat.provenance.items():
            prov[cell] = prov.get(cell, ()) + rules
    forced = direct | direct.T
    for i, j in zip(*np.nonzero(forced & ~direct)):
        prov[(int(i), int(j))] = (RULE_ANTIPODE,)
    if not np.array_equal(forced, forced.T):  # pragma: no cover - paranoia
        raise AsymmetricPattern("zero pattern failed to symmetrise")
    return ZeroPattern(n=n, forced=_freeze(forced), provenance=prov)


def blocks(pattern: ZeroPattern) -> BlockStructure:
    """Connected components of the complement of ``forced`` (the cells
    that may still be nonzero), ordered by least vertex.  Every vertex
    lands in exactly one block."""
    n = pattern.n
    possible = ~pattern.forced
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(n):
                if not seen[u] and (possible[v, u] or possible[u, v]):
                    seen[u] = True
                    stack.append(u)
        out.append(tuple(sorted(comp)))
    return BlockStructure(blocks=tuple(out))


def render_pattern(g: Graph, pattern: ZeroPattern) -> str:
    """Human-readable dump: an n x n grid ('0' forced, '.' possible),
    followed by a provenance legend and the block partition."""
    lines = []
    for i in range(pattern.n):
        lines.append(
            " ".join("0" if pattern.forced[i, j] else "." for j in range(pattern.n))
        )
    counts: dict[str, int] = {}
    for rules in pattern.provenance.values():
        for rule in rules:
            counts[rule] = counts.get(rule, 0) + 1
    legend = [f"forced cells: {pattern.forced_count} of {pattern.n * pattern.n}"]
    for rule in (RULE_DEGREE, RULE_DISTANCE_DEGREE, RULE_ANTIPODE):
        if rule in counts:
            legend.append(f"  {rule}: {counts[rule]} cells")
    part = blocks(pattern)
    named = ["{" + " ".join(g.label_of(v) for v in blk) + "}" for blk in part.blocks]
    legend.append("blocks: " + " ".join(named))
    return "\n".join(lines + legend)


# ---------------------------------------------------------------------------
# high-degree stripping


def strip_high_degree(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Remove every vertex of degree n-1 or n-2 (n the current order), in
    one pass.  Returns the induced remainder and the removed vertices (as
    indices into ``g``)."""
    n = g.n
    removed = tuple(v for v in range(n) if g.degree(v) in (n - 1, n - 2))
    if not removed:
        return g, ()
    keep = [v for v in range(n) if v not in set(removed)]
    return induced_subgraph(g, keep), removed


def strip_high_degree_fixpoint(
    g: Graph,
) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Iterate :func:`strip_high_degree` until nothing qualifies.

    The chain records, pass by pass, the removed vertices *as indices
    into the original graph*, so a certificate consumer can replay the
    reduction without tracking renumbering.
    """
    chain: list[tuple[int, ...]] = []
    current = g
    original_ids = list(range(g.n))
    while True:
        nxt, removed = strip_high_degree(current)
        if not removed:
            return current, tuple(chain)
        chain.append(tuple(original_ids[v] for v in removed))
        removed_set = set(removed)
        original_ids = [
            orig for v, orig in enumerate(original_ids) if v not in removed_set
        ]
        current = nxt
