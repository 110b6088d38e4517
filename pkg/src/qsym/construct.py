"""Deterministic graph constructions with replayable build traces.

The builders here assemble graphs whose symmetry behaviour is known in
advance from the way they were put together: free-style compositions
(disjoint union under a cone), tensor-style compositions (joins of
pendant-expanded factors) and wreath-style compositions (coronas over a
connected base).  Every builder returns the finished graph together with
a :class:`ConstructionTrace` -- a small, explicit recipe that
:func:`replay` can re-execute to reproduce the output bit for bit.

Traces exist so that downstream certificates can point at "how the graph
was made" and still be checkable: a trace that no longer rebuilds the
graph is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BadParams, EmptyInput, HypothesisFailed, K1Input
from .graphs import Graph, build, is_connected
from .products import corona, disjoint_union

__all__ = [
    "TraceStep",
    "ConstructionTrace",
    "cone",
    "corona_k1",
    "join",
    "make_connected_preserving",
    "distinct_orders",
    "build_free",
    "build_tensor",
    "build_wreath",
    "replay",
    "replay_all",
]


# ---------------------------------------------------------------------------
# primitive operations


def cone(g: Graph) -> Graph:
    """One new apex vertex (index ``g.n``) adjacent to every old vertex.

    When ``g`` is disconnected the apex glues the pieces together without
    changing the commutativity status of the fine algebra; the builders
    below record that guarantee in their trace notes.
    """
    n = g.n
    adj = np.zeros((n + 1, n + 1), dtype=bool)
    adj[:n, :n] = g.adj
    adj[n, :n] = True
    adj[:n, n] = True
    return Graph(adj)


def corona_k1(g: Graph) -> Graph:
    """Attach one fresh pendant vertex to every vertex of ``g``.

    The result has order ``2 * g.n``; vertex ``g.n + v`` is the pendant
    of ``v``.  For ``g.n >= 2`` the complement of the result is
    connected, which is the property the tensor builder relies on.
    """
    return corona(g, build(1, []))


def join(gs: Sequence[Graph]) -> Graph:
    """Disjoint union plus every edge between distinct factors.

    Equivalent to complementing the disjoint union of the complements,
    which is how the tests cross-check it.
    """
    if not gs:
        raise EmptyInput("join needs at least one factor")
    n = sum(g.n for g in gs)
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    off = 0
    for g in gs:
        adj[off : off + g.n, off : off + g.n] = g.adj
        off += g.n
    return Graph(adj)


# ---------------------------------------------------------------------------
# traces

#: Operations a trace step may name.
_TRACE_OPS = ("cone", "corona_k1", "disjoint_union", "join", "corona")


def _apply(op: str, operands: Sequence[Graph]) -> Graph:
    if op == "cone":
        (g,) = operands
        return cone(g)
    if op == "corona_k1":
        (g,) = operands
        return corona_k1(g)
    if op == "disjoint_union":
        return disjoint_union(list(operands))
    if op == "join":
        return join(list(operands))
    if op == "corona":
        g1, g2 = operands
        return corona(g1, g2)
    raise BadParams(f"unknown trace operation {op!r}")


@dataclass(frozen=True)
class TraceStep:
    """One replayable operation.

    ``args`` name the operands: ``in3`` is the fourth trace input,
    ``s2`` the output of the third step.  ``operand_orders`` and
    ``order`` record vertex counts going in and out, and ``note`` says
    why the step is sound where that matters.
    """

    op: str
    args: tuple[str, ...]
    operand_orders: tuple[int, ...]
    order: int
    note: str = ""

    def payload(self) -> dict:
        return {
            "op": self.op,
            "args": list(self.args),
            "operand_orders": list(self.operand_orders),
            "order": self.order,
            "note": self.note,
        }


@dataclass(frozen=True)
class ConstructionTrace:
    """A recipe that rebuilds a construction's outputs from its inputs.

    ``results`` lists the refs of the finished graphs (builders produce
    one; :func:`distinct_orders` produces one per input).  Replaying the
    steps against ``inputs`` must reproduce the outputs exactly.
    """

    inputs: tuple[Graph, ...]
    steps: tuple[TraceStep, ...]
    results: tuple[str, ...]
    notes: tuple[str, ...] = ()

    def _order_of(self, ref: str) -> int:
        if ref.startswith("in"):
            return self.inputs[int(ref[2:])].n
        return self.steps[int(ref[1:])].order

    @property
    def orders(self) -> tuple[int, ...]:
        """Vertex counts of the results, in order."""
        return tuple(self._order_of(r) for r in self.results)

    @property
    def final_order(self) -> int:
        return self.orders[-1]

    def payload(self) -> dict:
        return {
            "input_orders": [g.n for g in self.inputs],
            "steps": [s.payload() for s in self.steps],
            "results": list(self.results),
            "notes": list(self.notes),
            "final_order": self.final_order,
        }


def _resolve(ref: str, inputs: Sequence[Graph], made: Sequence[Graph]) -> Graph:
    if ref.startswith("in"):
        i = int(ref[2:])
        if not 0 <= i < len(inputs):
            raise BadParams(f"trace ref {ref!r} has no matching input")
        return inputs[i]
    if ref.startswith("s"):
        k = int(ref[1:])
        if not 0 <= k < len(made):
            raise BadParams(f"trace ref {ref!r} points past the last step")
        return made[k]
    raise BadParams(f"malformed trace ref {ref!r}")


def replay_all(trace: ConstructionTrace) -> tuple[Graph, ...]:
    """Re-execute every step of ``trace`` and return its result graphs.

    Raises :class:`BadParams` if the trace is internally inconsistent
    (unknown op, dangling ref, or a step whose recorded order disagrees
    with what the operation actually produces).
    """
    made: list[Graph] = []
    for step in trace.steps:
        operands = [_resolve(r, trace.inputs, made) for r in step.args]
        if tuple(g.n for g in operands) != step.operand_orders:
            raise BadParams(f"trace step {step.op!r}: operand orders disagree")
        out = _apply(step.op, operands)
        if out.n != step.order:
            raise BadParams(
                f"trace step {step.op!r}: recorded order {step.order}, got {out.n}"
            )
        made.append(out)
    return tuple(_resolve(r, trace.inputs, made) for r in trace.results)


def replay(trace: ConstructionTrace) -> Graph:
    """Replay a single-result trace. See :func:`replay_all`."""
    outs = replay_all(trace)
    if len(outs) != 1:
        raise BadParams(f"trace has {len(outs)} results, expected one")
    return outs[0]


class _TraceBuilder:
    """Accumulates steps while a construction runs.

    Every graph the construction touches lives under a ref, so the
    finished trace is replayable by, er, construction.
    """

    def __init__(self, inputs: Sequence[Graph]):
        self.inputs = tuple(inputs)
        self.steps: list[TraceStep] = []
        self.notes: list[str] = []
        self._graphs: dict[str, Graph] = {
            f"in{i}": g for i, g in enumerate(self.inputs)
        }

    def graph(self, ref: str) -> Graph:
        return self._graphs[ref]

    def note(self, text: str) -> None:
        self.notes.append(text)

    def add(self, op: str, args: Sequence[str], note: str = "") -> str:
        operands = [self._graphs[a] for a in args]
        out = _apply(op, operands)
        ref = f"s{len(self.steps)}"
        self.steps.append(
            TraceStep(
                op,
                tuple(args),
                tuple(g.n for g in operands),
                out.n,
                note,
            )
        )
        self._graphs[ref] = out
        return ref

    def done(self, results: Sequence[str]) -> ConstructionTrace:
        return ConstructionTrace(
            self.inputs, tuple(self.steps), tuple(results), tuple(self.notes)
        )


# ---------------------------------------------------------------------------
# shared phases


def _connect(tb: _TraceBuilder, ref: str) -> str:
    """Cone ``ref`` if it is disconnected; otherwise leave it alone."""
    if is_connected(tb.graph(ref)):
        return ref
    return tb.add(
        "cone",
        [ref],
        note="apex over a disconnected graph: connectivity gained, "
        "fine-algebra status unchanged",
    )


def _grow_distinct(tb: _TraceBuilder, refs: list[str]) -> list[str]:
    """Pendant-expand later factors until all orders are distinct.

    Collisions are resolved left to right and always grow the later
    index, so the outcome is deterministic: orders ``[3, 3, 3]`` become
    ``[3, 6, 12]``.
    """
    refs = list(refs)
    for j in range(len(refs)):
        while any(tb.graph(refs[i]).n == tb.graph(refs[j]).n for i in range(j)):
            refs[j] = tb.add(
                "corona_k1",
                [refs[j]],
                note="pendant expansion separates equal orders without "
                "losing connectivity or symmetry class",
            )
    return refs


# ---------------------------------------------------------------------------
# public constructions


def make_connected_preserving(g: Graph) -> tuple[Graph, ConstructionTrace]:
    """Return ``g`` unchanged if connected, else its cone.

    The cone direction comes with a guarantee note in the trace: for a
    disconnected base, adding the apex does not change whether the fine
    algebra is commutative.
    """
    tb = _TraceBuilder([g])
    if is_connected(g):
        tb.note("input already connected; returned unchanged")
        return g, tb.done(["in0"])
    ref = _connect(tb, "in0")
    return tb.graph(ref), tb.done([ref])


def distinct_orders(gs: Sequence[Graph]) -> tuple[list[Graph], ConstructionTrace]:
    """Grow factors by pendant expansion until all orders differ.

    Inputs must be connected and have at least two vertices each
    (pendant expansion cannot separate single vertices, and a
    single-vertex factor would break the expansion's guarantees).
    """
    for i, g in enumerate(gs):
        if g.n == 1:
            raise K1Input(f"factor {i} is a single vertex; cannot be grown apart")
    tb = _TraceBuilder(gs)
    refs = _grow_distinct(tb, [f"in{i}" for i in range(len(gs))])
    return [tb.graph(r) for r in refs], tb.done(refs)


def _drop_trivial(tb: _TraceBuilder, gs: Sequence[Graph]) -> list[str]:
    refs = []
    for i, g in enumerate(gs):
        if g.n == 1:
            tb.note(f"dropped factor {i}: a single vertex contributes nothing")
        else:
            refs.append(f"in{i}")
    return refs


def build_free(gs: Sequence[Graph]) -> tuple[Graph, ConstructionTrace]:
    """Connected graph whose symmetries compose freely across factors.

    Pipeline: drop single-vertex factors, cone each disconnected factor,
    grow orders apart, take the disjoint union, and cone once more if
    more than one factor remains.  Because the pre-cone components have
    pairwise distinct orders, no symmetry can exchange them, and the
    automorphism group of the result is the direct product of the
    factors' groups.
    """
    if not gs:
        raise EmptyInput("build_free needs at least one factor")
    tb = _TraceBuilder(gs)
    refs = _drop_trivial(tb, gs)
    if not refs:
        tb.note("all factors trivial; the result is the one-vertex graph")
        return tb.graph("in0"), tb.done(["in0"])
    refs = [_connect(tb, r) for r in refs]
    refs = _grow_distinct(tb, refs)
    if len(refs) == 1:
        return tb.graph(refs[0]), tb.done([refs[0]])
    union = tb.add(
        "disjoint_union",
        refs,
        note="components now have pairwise distinct orders, so none "
        "can be exchanged",
    )
    apex = tb.add(
        "cone",
        [union],
        note="apex over the (disconnected) union restores connectivity "
        "and preserves the fine-algebra status",
    )
    return tb.graph(apex), tb.done([apex])


def build_tensor(gs: Sequence[Graph]) -> tuple[Graph, ConstructionTrace]:
    """Connected graph whose symmetries compose as a tensor across factors.

    Pipeline: drop single-vertex factors, cone each disconnected factor,
    pendant-expand *every* factor at least once (this makes each
    factor's complement connected), grow orders apart, and join.  The
    complement of the result is then a disjoint union of factors whose
    complements are connected, one per surviving input.
    """
    if not gs:
        raise EmptyInput("build_tensor needs at least one factor")
    tb = _TraceBuilder(gs)
    refs = _drop_trivial(tb, gs)
    if not refs:
        tb.note("all factors trivial; the result is the one-vertex graph")
        return tb.graph("in0"), tb.done(["in0"])
    refs = [_connect(tb, r) for r in refs]
    refs = [
        tb.add(
            "corona_k1",
            [r],
            note="pendant expansion makes the factor's complement connected",
        )
        for r in refs
    ]
    refs = _grow_distinct(tb, refs)
    if len(refs) == 1:
        return tb.graph(refs[0]), tb.done([refs[0]])
    out = tb.add(
        "join",
        refs,
        note="join of factors with connected complements and pairwise "
        "distinct orders",
    )
    return tb.graph(out), tb.done([out])


def build_wreath(g1: Graph, g2: Graph) -> tuple[Graph, ConstructionTrace]:
    """Corona of a connected version of ``g1`` with attachment ``g2``.

    The symmetries of the result compose the base's with one copy of the
    attachment's per base vertex (a wreath shape).  That composition law
    needs either a base with no isolated vertices -- automatic once the
    base is connected on two or more vertices -- or an attachment whose
    complement has no isolated vertices.  The one way to miss both is a
    single-vertex base with a dominating attachment vertex, which raises
    :class:`HypothesisFailed`.
    """
    tb = _TraceBuilder([g1, g2])
    ref1 = _connect(tb, "in0")
    base = tb.graph(ref1)
    if base.n == 1 and any(d == g2.n - 1 for d in g2.degree_sequence):
        raise HypothesisFailed(
            "single-vertex base with a dominating attachment vertex: "
            "the wreath composition law does not hold"
        )
    out = tb.add(
        "corona",
        [ref1, "in1"],
        note="corona over a connected base realises the wreath-shaped "
        "symmetry composition",
    )
    return tb.graph(out), tb.done([out])
