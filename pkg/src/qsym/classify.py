"""Commutativity classification for the two quantum symmetry algebras.

A finite graph carries two graded notions of quantum symmetry, here
tagged ``ban`` and ``bic``:

* ``ban`` — the coarse algebra: the universal magic unitary is only
  required to commute with the adjacency matrix.
* ``bic`` — the fine algebra: a quotient of the coarse one whose extra
  relations force edges onto edges entrywise.

Commutativity of either algebra means "no quantum symmetry of that
flavour": the algebra collapses to functions on the classical
automorphism group.  Because ``bic`` is a quotient of ``ban``, a
non-commutative ``bic`` forces a non-commutative ``ban``, and a
commutative ``ban`` forces a commutative ``bic``.  On quadrangle-free
graphs the two coincide outright.

The classifier applies a fixed battery of sound rules and reports
``Unknown`` when none of them fires — it never guesses.  Every
determined verdict carries a certificate that can be re-checked from
the graph alone via :func:`verify_certificate`.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .automorphisms import (
    Permutation,
    _edge_between,
    automorphisms,
    find_disjoint_pair,
    find_edge_free_disjoint_pair,
    order_pair,
    twin_transpositions,
)
from .errors import QsymError, SizeLimitExceeded
from .graphs import Graph, complement, contains_quadrangle, is_connected, is_forest
from .products import PRODUCT_KINDS
from .reduction import blocks as pattern_blocks
from .reduction import strip_high_degree_fixpoint, zero_pattern

TARGET_BIC = "bic"
TARGET_BAN = "ban"
TARGET_BIC_COMPLEMENT = "bic_complement"


class Status(str, enum.Enum):
    COMMUTATIVE = "Commutative"
    NONCOMMUTATIVE = "NonCommutative"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:  # keep CLI output free of enum noise
        return self.value


# ---------------------------------------------------------------------------
# rule identifiers and the statements they stand on


R_SMALL = "R-SMALL"
R_QF = "R-QF"
R_QFC = "R-QFC"
R_KMN = "R-KMN"
R_BAN_1 = "R-BAN-1"
R_BIC_1 = "R-BIC-1"
R_FOREST = "R-FOREST"
R_STRIP = "R-STRIP"
R_BLOCKS = "R-BLOCKS"
R_PROD = "R-PROD"
R_CORONA = "R-CORONA"
R_CHERRY = "R-CHERRY"
R_CHAIN = "R-CHAIN"
R_CONSTRUCT = "R-CONSTRUCT"

CITATIONS: dict[str, str] = {
    R_SMALL: "on at most three points every quantum permutation algebra "
    "is commutative",
    R_QF: "a quadrangle-free graph has identical coarse and fine algebras, "
    "so verdicts transfer between the two targets",
    R_QFC: "a graph whose complement is quadrangle-free has a commutative "
    "fine algebra",
    R_KMN: "a complete bipartite graph has a non-commutative fine algebra "
    "exactly when one side has at least four vertices",
    R_BAN_1: "two non-trivial automorphisms with disjoint supports make "
    "the coarse algebra non-commutative",
    R_BIC_1: "two non-trivial automorphisms with disjoint supports and no "
    "edge between the supports make the fine algebra non-commutative",
    R_FOREST: "for a forest, the fine algebra is non-commutative exactly "
    "when an edge-free disjoint pair exists, and the coarse one exactly "
    "when a disjoint pair exists",
    R_STRIP: "removing a vertex adjacent to all, or all but one, of the "
    "others does not affect commutativity of the fine algebra",
    R_BLOCKS: "when the forced-zero pattern confines the fundamental "
    "representation to blocks with at most one block of size two or "
    "three and the rest singletons, the algebra is commutative",
    R_PROD: "a graph product inherits a non-commutative fine algebra "
    "from any factor",
    R_CORONA: "attaching copies of a graph with a non-trivial symmetry "
    "to at least two base vertices yields a non-commutative fine algebra",
    R_CHERRY: "two cherries with distinct centres induce an edge-free "
    "disjoint pair on the line graph",
    R_CHAIN: "the coarse algebra surjects onto the fine one: a "
    "non-commutative quotient forces a non-commutative source, and a "
    "commutative source forces a commutative quotient",
    R_CONSTRUCT: "the construction carries a certified symmetry fact "
    "that replays from its trace",
}


@dataclass(frozen=True)
class Citation:
    rule: str
    statement: str

    @staticmethod
    def of(rule: str) -> "Citation":
        return Citation(rule=rule, statement=CITATIONS[rule])


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Certificate:
    """Base class; concrete certificates are small frozen records."""

    def payload(self) -> dict:
        return {"kind": self.kind}  # type: ignore[attr-defined]


def _perm_payload(p: Permutation) -> dict:
    """Permutations travel as image arrays (re-verifiable data); the
    cycle string rides along for human readers."""
    return {"images": list(p.images), "cycles": p.cycles()}


def _relabel_cycles(node, labels: tuple[str, ...]) -> None:
    """Rewrite the display cycles in a payload tree with vertex labels.

    Image arrays are the machine contract and stay index-based; only the
    human-readable cycle strings pick up the graph's labels.
    """
    if isinstance(node, dict):
        images = node.get("images")
        if images is not None and "cycles" in node and len(images) == len(labels):
            node["cycles"] = Permutation(tuple(images)).cycles(labels)
        for child in node.values():
            _relabel_cycles(child, labels)
    elif isinstance(node, list):
        for child in node:
            _relabel_cycles(child, labels)


@dataclass(frozen=True)
class DisjointPair(Certificate):
    sigma: Permutation
    tau: Permutation
    kind: str = field(default="disjoint-pair", init=False)

    def payload(self) -> dict:
        return {
            "kind": self.kind,
            "sigma": _perm_payload(self.sigma),
            "tau": _perm_payload(self.tau),
        }


@dataclass(frozen=True)
class EdgeFreePair(Certificate):
    sigma: Permutation
    tau: Permutation
    kind: str = field(default="edge-free-pair", init=False)

    def payload(self) -> dict:
        return {
            "kind": self.kind,
            "sigma": _perm_payload(self.sigma),
            "tau": _perm_payload(self.tau),
        }


@dataclass(frozen=True)
class SmallOrder(Certificate):
    n: int
    kind: str = field(default="small-order", init=False)

    def payload(self) -> dict:
        return {"kind": self.kind, "n": self.n}


@dataclass(frozen=True)
class QuadrangleFreeComplement(Certificate):
    kind: str = field(default="quadrangle-free-complement", init=False)


@dataclass(frozen=True)
class QuadrangleFreeSelf(Certificate):
    """The graph is quadrangle-free, so the verdict carries over from the
    other target; ``companion`` is that target's certificate when known."""

    companion: Certificate | None = None
    kind: str = field(default="quadrangle-free", init=False)

    def payload(self) -> dict:
        out = {"kind": self.kind}
        if self.companion is not None:
            out["companion"] = self.companion.payload()
        return out


@dataclass(frozen=True)
class CompleteBipartite(Certificate):
    m: int
    n: int
    kind: str = field(default="complete-bipartite", init=False)

    def payload(self) -> dict:
        return {"kind": self.kind, "m": self.m, "n": self.n}


@dataclass(frozen=True)
class ForestNoDisjointPair(Certificate):
    """No disjoint pair exists (``edge_free_only=False``), or none without
    edges between the supports (``edge_free_only=True``)."""

    edge_free_only: bool = False
    kind: str = field(default="forest-no-disjoint-pair", init=False)

    def payload(self) -> dict:
        return {"kind": self.kind, "edge_free_only": self.edge_free_only}


@dataclass(frozen=True)
class StripToCommutative(Certificate):
    chain: tuple[tuple[int, ...], ...]
    terminal: Certificate
    kind: str = field(default="strip", init=False)

    def payload(self) -> dict:
        return {
            "kind": self.kind,
            "chain": [list(step) for step in self.chain],
            "terminal": self.terminal.payload(),
        }


@dataclass(frozen=True)
class SmallBlocks(Certificate):
    blocks: tuple[tuple[int, ...], ...]
    kind: str = field(default="small-blocks", init=False)

    def payload(self) -> dict:
        return {"kind": self.kind, "blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class ProductLift(Certificate):
    product_kind: str
    factor_index: int
    inner: Certificate
    kind: str = field(default="product-lift", init=False)

    def payload(self) -> dict:
        return {
            "kind": self.kind,
            "product_kind": self.product_kind,
            "factor_index": self.factor_index,
            "inner": self.inner.payload(),
        }


@dataclass(frozen=True)
class CoronaRule(Certificate):
    witness: Permutation
    kind: str = field(default="corona-symmetry", init=False)

    def payload(self) -> dict:
        return {"kind": self.kind, "witness": _perm_payload(self.witness)}


@dataclass(frozen=True)
class ConstructionFact(Certificate):
    fact: str
    trace: object = None
    kind: str = field(default="construction", init=False)

    def payload(self) -> dict:
        out: dict = {"kind": self.kind, "fact": self.fact}
        if self.trace is not None:
            out["trace"] = self.trace.payload()
        return out


# ---------------------------------------------------------------------------
# verdicts and reports


@dataclass(frozen=True)
class Verdict:
    target: str
    status: Status
    certificate: Certificate | None = None
    citation: Citation | None = None
    note: str | None = None

    def __post_init__(self) -> None:
        if self.status is Status.UNKNOWN:
            if self.certificate is not None:
                raise QsymError("an Unknown verdict cannot carry a certificate")
        elif self.certificate is None:
            raise QsymError(
                f"a {self.status.value} verdict must carry a certificate"
            )

    def payload(self) -> dict:
        out: dict = {"target": self.target, "status": self.status.value}
        if self.certificate is not None:
            out["certificate"] = self.certificate.payload()
        if self.citation is not None:
            out["citation"] = {
                "rule": self.citation.rule,
                "statement": self.citation.statement,
            }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class Report:
    graph: Graph
    bic: Verdict
    ban: Verdict
    bic_complement: Verdict | None
    trace: tuple[str, ...]
    notes: tuple[str, ...]
    elapsed_ms: float

    def summary(self) -> dict:
        g = self.graph
        return {
            "n": g.n,
            "edges": g.edge_count,
            "degree_sequence": sorted(g.degree_sequence),
            "connected": is_connected(g),
            "quadrangle_free": not contains_quadrangle(g),
            "forest": is_forest(g),
        }

    def payload(self) -> dict:
        out = {
            "graph": self.summary(),
            "verdicts": {
                TARGET_BIC: self.bic.payload(),
                TARGET_BAN: self.ban.payload(),
            },
            "trace": list(self.trace),
            "notes": list(self.notes),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.bic_complement is not None:
            out["verdicts"][TARGET_BIC_COMPLEMENT] = self.bic_complement.payload()
        if self.graph.labels is not None:
            _relabel_cycles(out, self.graph.labels)
        return out


# ---------------------------------------------------------------------------
# shared per-graph context


class _Ctx:
    def __init__(self, g: Graph, node_budget: int | None):
        self.g = g
        self.node_budget = node_budget
        self.trace: list[str] = []
        self.notes: list[str] = []
        self._auts = None
        self._auts_failed = False
        self._qf: bool | None = None
        self._qfc: bool | None = None

    def log(self, target: str, rule: str, outcome: str) -> None:
        self.trace.append(f"{target} {rule}: {outcome}")

    def quadrangle_free(self) -> bool:
        if self._qf is None:
            self._qf = not contains_quadrangle(self.g)
        return self._qf

    def complement_quadrangle_free(self) -> bool:
        if self._qfc is None:
            self._qfc = not contains_quadrangle(complement(self.g))
        return self._qfc

    def auts(self):
        """Full automorphism list, or None if the node budget ran out."""
        if self._auts is None and not self._auts_failed:
            try:
                if self.node_budget is None:
                    self._auts = automorphisms(self.g)
                else:
                    self._auts = automorphisms(self.g, node_budget=self.node_budget)
            except SizeLimitExceeded as exc:
                self._auts_failed = True
                self.notes.append(
                    "automorphism enumeration abandoned after "
                    f"{exc.budget} search nodes; some rules were skipped"
                )
        return self._auts

    @property
    def budget_hit(self) -> bool:
        return self._auts_failed


def _twin_pair(
    g: Graph, *, edge_free: bool
) -> tuple[Permutation, Permutation] | None:
    """Cheap witness scan: two twin swaps with disjoint supports (and, if
    requested, no edge between the supports).  Avoids full enumeration on
    highly symmetric graphs.  Candidates are tried in the same order the
    full search would use, so both paths present the same witness."""
    twins = sorted(twin_transpositions(g), key=lambda p: p.images)
    for i in range(len(twins)):
        mi = twins[i].support_mask()
        for j in range(i + 1, len(twins)):
            mj = twins[j].support_mask()
            if mi & mj:
                continue
            if edge_free and _edge_between(g, mi, mj):
                continue
            return order_pair(twins[i], twins[j])
    return None


def _complete_bipartite_parts(
    g: Graph,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Recognise a complete bipartite graph; return its two sides."""
    n = g.n
    if n < 2:
        return None
    color = [-1] * n
    color[0] = 0
    queue = [0]
    seen = 1
    while queue:
        v = queue.pop()
        for u in g.neighbors(v):
            if color[u] == -1:
                color[u] = 1 - color[v]
                seen += 1
                queue.append(u)
            elif color[u] == color[v]:
                return None  # odd cycle
    if seen != n:
        return None  # disconnected
    side_a = tuple(v for v in range(n) if color[v] == 0)
    side_b = tuple(v for v in range(n) if color[v] == 1)
    if not side_a or not side_b:
        return None
    if g.edge_count != len(side_a) * len(side_b):
        return None  # bipartite but not complete bipartite
    return side_a, side_b


def _blocks_small_enough(
    sizes: tuple[int, ...]
) -> bool:
    """At most one block of size >= 2, and that block of size <= 3."""
    big = [s for s in sizes if s >= 2]
    return len(big) <= 1 and all(s <= 3 for s in big)


def _swap(n: int, a: int, b: int) -> Permutation:
    images = list(range(n))
    images[a], images[b] = images[b], images[a]
    return Permutation(tuple(images))


# ---------------------------------------------------------------------------
# the two rule pipelines


def _bic_pipeline(ctx: _Ctx) -> Verdict:
    g = ctx.g
    t = TARGET_BIC

    if g.n <= 3:
        ctx.log(t, R_SMALL, f"fired (order {g.n})")
        return Verdict(t, Status.COMMUTATIVE, SmallOrder(g.n), Citation.of(R_SMALL))
    ctx.log(t, R_SMALL, f"order {g.n} is above three")

    if ctx.complement_quadrangle_free():
        ctx.log(t, R_QFC, "fired (complement is quadrangle-free)")
        return Verdict(
            t, Status.COMMUTATIVE, QuadrangleFreeComplement(), Citation.of(R_QFC)
        )
    ctx.log(t, R_QFC, "complement contains a quadrangle")

    parts = _complete_bipartite_parts(g)
    if parts is not None:
        side_a, side_b = parts
        m, n_side = len(side_a), len(side_b)
        if max(m, n_side) >= 4:
            wide = side_a if m >= n_side else side_b
            sigma = _swap(g.n, wide[0], wide[1])
            tau = _swap(g.n, wide[2], wide[3])
            ctx.log(t, R_KMN, f"fired (complete bipartite, side of {max(m, n_side)})")
            return Verdict(
                t,
                Status.NONCOMMUTATIVE,
                EdgeFreePair(sigma, tau),
                Citation.of(R_KMN),
            )
        ctx.log(t, R_KMN, f"fired (complete bipartite, both sides below four)")
        return Verdict(
            t,
            Status.COMMUTATIVE,
            CompleteBipartite(m, n_side),
            Citation.of(R_KMN),
        )
    ctx.log(t, R_KMN, "not complete bipartite")

    pair = _twin_pair(g, edge_free=True)
    if pair is None:
        auts = ctx.auts()
        if auts is not None:
            budget = ctx.node_budget if ctx.node_budget is not None else 10_000_000
            pair = find_edge_free_disjoint_pair(g, node_budget=budget, auts=auts)
        elif ctx.budget_hit:
            ctx.log(t, R_BIC_1, "skipped (budget exhausted)")
            pair = None
    if pair is not None:
        sigma, tau = pair
        ctx.log(t, R_BIC_1, f"fired ({sigma.cycles()} and {tau.cycles()})")
        return Verdict(
            t, Status.NONCOMMUTATIVE, EdgeFreePair(sigma, tau), Citation.of(R_BIC_1)
        )
    if not ctx.budget_hit:
        ctx.log(t, R_BIC_1, "no edge-free disjoint pair")

    prov = g.provenance
    if prov is not None and prov.kind in PRODUCT_KINDS:
        for idx, factor in enumerate(prov.factors):
            inner = classify(factor, node_budget=ctx.node_budget)
            if inner.bic.status is Status.NONCOMMUTATIVE:
                ctx.log(t, R_PROD, f"fired (factor {idx} of {prov.kind} product)")
                return Verdict(
                    t,
                    Status.NONCOMMUTATIVE,
                    ProductLift(prov.kind, idx, inner.bic.certificate),
                    Citation.of(R_PROD),
                )
        ctx.log(t, R_PROD, "no factor certified non-commutative")
    elif prov is not None and prov.kind == "corona":
        base, attachment = prov.factors
        if base.n >= 2:
            witness = None
            tw = twin_transpositions(attachment)
            if tw:
                witness = tw[0]
            else:
                try:
                    inner_auts = automorphisms(attachment, node_budget=ctx.node_budget or 10_000_000)
                    nontrivial = inner_auts.nontrivial()
                    witness = nontrivial[0] if nontrivial else None
                except SizeLimitExceeded:
                    ctx.notes.append(
                        "attachment symmetry search abandoned (budget)"
                    )
            if witness is not None:
                ctx.log(t, R_CORONA, "fired (attachment has a non-trivial symmetry)")
                return Verdict(
                    t,
                    Status.NONCOMMUTATIVE,
                    CoronaRule(witness),
                    Citation.of(R_CORONA),
                )
        ctx.log(t, R_CORONA, "premises not met")

    if is_forest(g) and not ctx.budget_hit:
        # the edge-free search above came up empty, which settles a forest
        ctx.log(t, R_FOREST, "fired (forest without an edge-free disjoint pair)")
        return Verdict(
            t,
            Status.COMMUTATIVE,
            ForestNoDisjointPair(edge_free_only=True),
            Citation.of(R_FOREST),
        )

    terminal, chain = strip_high_degree_fixpoint(g)
    if chain:
        sub = classify(terminal, node_budget=ctx.node_budget)
        if sub.bic.status is Status.COMMUTATIVE:
            ctx.log(
                t,
                R_STRIP,
                f"fired (stripped {sum(len(s) for s in chain)} vertices "
                f"to a commutative core)",
            )
            return Verdict(
                t,
                Status.COMMUTATIVE,
                StripToCommutative(chain, sub.bic.certificate),
                Citation.of(R_STRIP),
            )
        ctx.log(t, R_STRIP, f"stripped core is {sub.bic.status.value}")
    else:
        ctx.log(t, R_STRIP, "nothing to strip")

    part = pattern_blocks(zero_pattern(g))
    if _blocks_small_enough(part.sizes):
        ctx.log(t, R_BLOCKS, f"fired (block sizes {sorted(part.sizes)})")
        return Verdict(
            t, Status.COMMUTATIVE, SmallBlocks(part.blocks), Citation.of(R_BLOCKS)
        )
    ctx.log(t, R_BLOCKS, f"blocks too coarse (sizes {sorted(part.sizes)})")

    return Verdict(t, Status.UNKNOWN)


def _ban_pipeline(ctx: _Ctx) -> Verdict:
    g = ctx.g
    t = TARGET_BAN

    if g.n <= 3:
        ctx.log(t, R_SMALL, f"fired (order {g.n})")
        return Verdict(t, Status.COMMUTATIVE, SmallOrder(g.n), Citation.of(R_SMALL))
    ctx.log(t, R_SMALL, f"order {g.n} is above three")

    pair = _twin_pair(g, edge_free=False)
    if pair is None:
        auts = ctx.auts()
        if auts is not None:
            budget = ctx.node_budget if ctx.node_budget is not None else 10_000_000
            pair = find_disjoint_pair(g, node_budget=budget, auts=auts)
        elif ctx.budget_hit:
            ctx.log(t, R_BAN_1, "skipped (budget exhausted)")
            pair = None
    if pair is not None:
        sigma, tau = pair
        ctx.log(t, R_BAN_1, f"fired ({sigma.cycles()} and {tau.cycles()})")
        return Verdict(
            t, Status.NONCOMMUTATIVE, DisjointPair(sigma, tau), Citation.of(R_BAN_1)
        )
    if not ctx.budget_hit:
        ctx.log(t, R_BAN_1, "no disjoint pair")

    if is_forest(g) and not ctx.budget_hit:
        ctx.log(t, R_FOREST, "fired (forest without a disjoint pair)")
        return Verdict(
            t,
            Status.COMMUTATIVE,
            ForestNoDisjointPair(edge_free_only=False),
            Citation.of(R_FOREST),
        )

    part = pattern_blocks(zero_pattern(g))
    if _blocks_small_enough(part.sizes):
        ctx.log(t, R_BLOCKS, f"fired (block sizes {sorted(part.sizes)})")
        return Verdict(
            t, Status.COMMUTATIVE, SmallBlocks(part.blocks), Citation.of(R_BLOCKS)
        )
    ctx.log(t, R_BLOCKS, f"blocks too coarse (sizes {sorted(part.sizes)})")

    return Verdict(t, Status.UNKNOWN)


def _transfer(ctx: _Ctx, bic: Verdict, ban: Verdict) -> tuple[Verdict, Verdict]:
    """Propagate verdicts along the quotient map and, on quadrangle-free
    graphs, along the identification of the two algebras."""
    changed = True
    while changed:
        changed = False
        if bic.status is Status.NONCOMMUTATIVE and ban.status is Status.UNKNOWN:
            cert = bic.certificate
            if isinstance(cert, EdgeFreePair):
                cert = DisjointPair(cert.sigma, cert.tau)
            ban = Verdict(
                TARGET_BAN,
                Status.NONCOMMUTATIVE,
                cert,
                Citation.of(R_CHAIN),
                note="transferred from the fine algebra",
            )
            ctx.log(TARGET_BAN, R_CHAIN, "non-commutative via the fine algebra")
            changed = True
        if ban.status is Status.COMMUTATIVE and bic.status is Status.UNKNOWN:
            bic = Verdict(
                TARGET_BIC,
                Status.COMMUTATIVE,
                ban.certificate,
                Citation.of(R_CHAIN),
                note="transferred from the coarse algebra",
            )
            ctx.log(TARGET_BIC, R_CHAIN, "commutative via the coarse algebra")
            changed = True
        if ctx.quadrangle_free():
            if bic.status is Status.COMMUTATIVE and ban.status is Status.UNKNOWN:
                ban = Verdict(
                    TARGET_BAN,
                    Status.COMMUTATIVE,
                    QuadrangleFreeSelf(companion=bic.certificate),
                    Citation.of(R_QF),
                    note="the algebras coincide on quadrangle-free graphs",
                )
                ctx.log(TARGET_BAN, R_QF, "commutative via the fine algebra")
                changed = True
            if ban.status is Status.NONCOMMUTATIVE and bic.status is Status.UNKNOWN:
                bic = Verdict(
                    TARGET_BIC,
                    Status.NONCOMMUTATIVE,
                    QuadrangleFreeSelf(companion=ban.certificate),
                    Citation.of(R_QF),
                    note="the algebras coincide on quadrangle-free graphs",
                )
                ctx.log(TARGET_BIC, R_QF, "non-commutative via the coarse algebra")
                changed = True
    if bic.status is Status.NONCOMMUTATIVE and ban.status is Status.COMMUTATIVE:
        raise QsymError(
            "inconsistent verdicts: the fine algebra cannot be "
            "non-commutative while the coarse one is commutative"
        )
    return bic, ban


def classify(g: Graph, node_budget: int | None = None) -> Report:
    """Run the full rule battery on both targets.

    ``node_budget`` caps the automorphism search; when it runs out the
    affected rules are skipped and the verdict may degrade to Unknown
    (recorded in the report's notes).
    """
    started = time.perf_counter()
    ctx = _Ctx(g, node_budget)
    bic = _bic_pipeline(ctx)
    ban = _ban_pipeline(ctx)
    bic, ban = _transfer(ctx, bic, ban)
    elapsed = (time.perf_counter() - started) * 1000.0
    return Report(
        graph=g,
        bic=bic,
        ban=ban,
        bic_complement=None,
        trace=tuple(ctx.trace),
        notes=tuple(ctx.notes),
        elapsed_ms=elapsed,
    )


def classify_with_complement(g: Graph, node_budget: int | None = None) -> Report:
    """Classify ``g`` and its complement, then combine.

    When both fine verdicts come out commutative and either the graph or
    its complement is quadrangle-free, the coarse algebra is commutative
    too (it is complement-invariant), which upgrades an Unknown coarse
    verdict and flags the graph as having no quantum symmetry at all.
    """
    base = classify(g, node_budget=node_budget)
    comp = classify(complement(g), node_budget=node_budget)
    bic_complement = Verdict(
        TARGET_BIC_COMPLEMENT,
        comp.bic.status,
        comp.bic.certificate,
        comp.bic.citation,
        note=comp.bic.note,
    )
    ban = base.ban
    notes = list(base.notes)
    both_commutative = (
        base.bic.status is Status.COMMUTATIVE
        and comp.bic.status is Status.COMMUTATIVE
    )
    g_qf = not contains_quadrangle(g)
    comp_qf = not contains_quadrangle(complement(g))
    if both_commutative and (g_qf or comp_qf):
        if ban.status is Status.UNKNOWN:
            cert: Certificate = (
                QuadrangleFreeSelf(companion=base.bic.certificate)
                if g_qf
                else QuadrangleFreeComplement()
            )
            ban = Verdict(
                TARGET_BAN,
                Status.COMMUTATIVE,
                cert,
                Citation.of(R_QF),
                note="complement-invariance settles the coarse algebra",
            )
        notes.append("no quantum symmetry: both fine algebras are commutative")
    trace = base.trace + tuple(f"complement {line}" for line in comp.trace)
    return Report(
        graph=g,
        bic=base.bic,
        ban=ban,
        bic_complement=bic_complement,
        trace=trace,
        notes=tuple(notes) + comp.notes,
        elapsed_ms=base.elapsed_ms + comp.elapsed_ms,
    )


def classify_line_graph(g: Graph, node_budget: int | None = None) -> Report:
    """Classify the line graph of ``g``, trying the cherry shortcut first.

    Two cherries with distinct centres become two independent edge swaps
    on the line graph whose supports are disjoint and joined by no edge.
    With a single shared centre the shortcut is unsound (the swaps
    overlap), so we fall through to the ordinary pipeline.
    """
    from .graphs import find_cherries, line_graph

    lg = line_graph(g)
    cherries = find_cherries(g)
    by_center: dict[int, object] = {}
    for c in cherries:
        by_center.setdefault(c.w, c)
    if len(by_center) >= 2:
        centers = sorted(by_center)
        c1, c2 = by_center[centers[0]], by_center[centers[1]]
        edge_index = {e: i for i, e in enumerate(g.edges())}
        def edge_vertex(v: int, w: int) -> int:
            return edge_index[(v, w) if v < w else (w, v)]
        sigma = _swap(lg.n, edge_vertex(c1.v1, c1.w), edge_vertex(c1.v2, c1.w))
        tau = _swap(lg.n, edge_vertex(c2.v1, c2.w), edge_vertex(c2.v2, c2.w))
        started = time.perf_counter()
        bic = Verdict(
            TARGET_BIC,
            Status.NONCOMMUTATIVE,
            EdgeFreePair(sigma, tau),
            Citation.of(R_CHERRY),
        )
        ban = Verdict(
            TARGET_BAN,
            Status.NONCOMMUTATIVE,
            DisjointPair(sigma, tau),
            Citation.of(R_CHERRY),
        )
        elapsed = (time.perf_counter() - started) * 1000.0
        return Report(
            graph=lg,
            bic=bic,
            ban=ban,
            bic_complement=None,
            trace=(
                f"bic {R_CHERRY}: fired (cherries at {c1.w} and {c2.w})",
                f"ban {R_CHERRY}: fired (cherries at {c1.w} and {c2.w})",
            ),
            notes=(),
            elapsed_ms=elapsed,
        )
    return classify(lg, node_budget=node_budget)


# ---------------------------------------------------------------------------
# certificate re-verification


def verify_certificate(g: Graph, verdict: Verdict) -> bool:
    """Re-check a verdict's certificate against the graph from scratch.

    Returns True when the certificate's premises hold of ``g``; raises
    nothing for a merely wrong certificate (that returns False)."""
    cert = verdict.certificate
    if cert is None:
        return verdict.status is Status.UNKNOWN
    return _verify(g, cert)


def _verify(g: Graph, cert: Certificate) -> bool:
    from .automorphisms import is_automorphism

    if isinstance(cert, SmallOrder):
        return g.n == cert.n and g.n <= 3
    if isinstance(cert, (DisjointPair, EdgeFreePair)):
        s, t = cert.sigma, cert.tau
        if len(s.images) != g.n or len(t.images) != g.n:
            return False
        if s.is_identity or t.is_identity:
            return False
        if not (is_automorphism(g, s) and is_automorphism(g, t)):
            return False
        ms, mt = s.support_mask(), t.support_mask()
        if ms & mt:
            return False
        if isinstance(cert, EdgeFreePair) and _edge_between(g, ms, mt):
            return False
        return True
    if isinstance(cert, QuadrangleFreeComplement):
        return not contains_quadrangle(complement(g))
    if isinstance(cert, QuadrangleFreeSelf):
        if contains_quadrangle(g):
            return False
        return cert.companion is None or _verify(g, cert.companion)
    if isinstance(cert, CompleteBipartite):
        parts = _complete_bipartite_parts(g)
        if parts is None:
            return False
        sizes = sorted((len(parts[0]), len(parts[1])))
        return sizes == sorted((cert.m, cert.n))
    if isinstance(cert, ForestNoDisjointPair):
        if not is_forest(g):
            return False
        if cert.edge_free_only:
            return find_edge_free_disjoint_pair(g) is None
        return find_disjoint_pair(g) is None
    if isinstance(cert, StripToCommutative):
        terminal, chain = strip_high_degree_fixpoint(g)
        return chain == cert.chain and _verify(terminal, cert.terminal)
    if isinstance(cert, SmallBlocks):
        part = pattern_blocks(zero_pattern(g))
        return part.blocks == cert.blocks and _blocks_small_enough(part.sizes)
    if isinstance(cert, ProductLift):
        prov = g.provenance
        if prov is None or prov.kind != cert.product_kind:
            return False
        if prov.kind not in PRODUCT_KINDS:
            return False
        if not (0 <= cert.factor_index < len(prov.factors)):
            return False
        return _verify(prov.factors[cert.factor_index], cert.inner)
    if isinstance(cert, CoronaRule):
        prov = g.provenance
        if prov is None or prov.kind != "corona":
            return False
        base, attachment = prov.factors
        if base.n < 2:
            return False
        w = cert.witness
        return (
            len(w.images) == attachment.n
            and not w.is_identity
            and is_automorphism(attachment, w)
        )
    if isinstance(cert, ConstructionFact):
        if cert.trace is None:
            return False
        from .construct import replay

        rebuilt = replay(cert.trace)
        return rebuilt == g
    return False
