"""
First verdicts: which graphs have quantum symmetry?
===================================================

A quick tour of the classifier on a handful of small graphs.  Every
determined verdict comes with a certificate you can check by hand.
"""

from qsym import classify_with_complement, complete, cycle, path, star

# ---------------------------------------------------------------------
# The 4-cycle is the smallest genuinely interesting case: the two
# symmetry algebras disagree.  The fine one (edge-entrywise relations)
# collapses to the classical group; the coarse one does not.

for g, name in [
    (cycle(4), "C4"),
    (complete(4), "K4"),
    (path(3), "P4 (path, 3 edges)"),
    (star(4), "K_{1,4}"),
]:
    report = classify_with_complement(g)
    print(f"{name:22s} fine: {report.bic.status.value:16s} "
          f"coarse: {report.ban.status.value}")

# ---------------------------------------------------------------------
# Why does the star come out noncommutative?  Its certificate is a pair
# of automorphisms with disjoint supports and no edge between them --
# swap two leaves here, swap two other leaves there.

report = classify_with_complement(star(4))
cert = report.bic.certificate
print("\nK_{1,4} witness pair:", cert.sigma.cycles(), "and", cert.tau.cycles())

# ---------------------------------------------------------------------
# The engine logs which rules fired, in order, so a surprising verdict
# can always be traced.

print("\nrule trace for C4:")
for line in classify_with_complement(cycle(4)).trace:
    print("   ", line)
