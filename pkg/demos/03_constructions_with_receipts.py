"""
Constructions that carry receipts
=================================

The three composite builders (free, tensor, wreath) return the graph
*and* a replayable trace of every step.  Replaying the trace against the
original inputs must reproduce the output bit for bit -- a tamper-proof
audit trail for generated test instances.
"""

from qsym import cycle, path
from qsym.automorphisms import automorphisms
from qsym.construct import build_free, build_tensor, build_wreath, replay

# ---------------------------------------------------------------------
# Free-style assembly: vertex counts are first made pairwise distinct
# (so no symmetry can swap whole factors), then everything is united and
# coned if needed.

g, trace = build_free([path(2), cycle(5)])
print(f"free build of [P3-path, C5]: {g.n} vertices")
for step in trace.steps:
    print(f"    {step.op:14s} {step.args} -> {step.order} vertices")

# The symmetry count is the product of the factors': 2 * 10.
print("automorphism group order:", automorphisms(g).order)

# ---------------------------------------------------------------------
# Replay is exact equality, not isomorphism.

assert replay(trace) == g
print("replay reproduces the build bit for bit")

# ---------------------------------------------------------------------
# Tensor-style assembly wraps every factor in a corona first (which
# makes each complement connected), then joins.

g, trace = build_tensor([cycle(3), cycle(3)])
print(f"\ntensor build of [C3, C3]: {g.n} vertices, "
      f"{len(trace.steps)} steps")

# ---------------------------------------------------------------------
# The wreath builder refuses inputs where its composition law breaks:
# a single-vertex base together with a dominating attachment vertex.

g, trace = build_wreath(cycle(3), path(1))
print(f"\nwreath of C3 by K2: {g.n} vertices, "
      f"|Aut| = {automorphisms(g).order}  (expected 2^3 * 6 = 48)")
