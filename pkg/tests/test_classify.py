"""Rule engine verdicts, certificates, and their re-verification.

Frozen expectations come from hand-checked small graphs; the property
tests assert the structural guarantees the engine promises: sound
certificates, no inconsistent verdict pairs, and agreement of the two
targets on quadrangle-free inputs.
"""

import pytest
from hypothesis import given, settings

from qsym.classify import (
    CompleteBipartite,
    CoronaRule,
    DisjointPair,
    EdgeFreePair,
    ForestNoDisjointPair,
    ProductLift,
    QuadrangleFreeComplement,
    QuadrangleFreeSelf,
    Report,
    SmallBlocks,
    SmallOrder,
    Status,
    StripToCommutative,
    Verdict,
    classify,
    classify_line_graph,
    classify_with_complement,
    verify_certificate,
)
from qsym.errors import QsymError
from qsym.gallery import c4pn_graph, cherry2_graph, fig7_graph, sc_graph, t0_graph
from qsym.graphs import (
    build,
    complement,
    complete,
    complete_bipartite,
    contains_quadrangle,
    cycle,
    edgeless,
    path,
    star,
)
from qsym.products import cartesian, corona, direct

from .conftest import graphs, small_corpus

C = Status.COMMUTATIVE
NC = Status.NONCOMMUTATIVE
U = Status.UNKNOWN


def both(rep):
    return rep.bic.status, rep.ban.status


# ---------------------------------------------------------------------------
# frozen verdicts on the worked examples


def test_tiny_graphs_are_commutative():
    for g in (edgeless(0), edgeless(1), complete(2), complete(3), path(2)):
        rep = classify(g)
        assert both(rep) == (C, C)
        assert isinstance(rep.bic.certificate, SmallOrder)


def test_c4_splits_the_two_targets():
    rep = classify(cycle(4))
    assert rep.bic.status is C
    assert isinstance(rep.bic.certificate, QuadrangleFreeComplement)
    assert rep.ban.status is NC
    cert = rep.ban.certificate
    assert isinstance(cert, DisjointPair)
    assert cert.sigma.cycles() == "(0 2)"
    assert cert.tau.cycles() == "(1 3)"


def test_c5_fully_commutative_via_transfer():
    rep = classify(cycle(5))
    assert both(rep) == (C, C)
    assert isinstance(rep.ban.certificate, QuadrangleFreeSelf)
    assert isinstance(rep.ban.certificate.companion, QuadrangleFreeComplement)


def test_c6_stays_unknown():
    rep = classify(cycle(6))
    assert both(rep) == (U, U)
    assert rep.bic.certificate is None


def test_k4_coarse_noncommutative_only():
    rep = classify(complete(4))
    assert both(rep) == (C, NC)


def test_complete_bipartite_wide_side():
    rep = classify(complete_bipartite(4, 2))
    assert both(rep) == (NC, NC)
    cert = rep.bic.certificate
    assert isinstance(cert, EdgeFreePair)
    assert cert.sigma.cycles() == "(0 1)"
    assert cert.tau.cycles() == "(2 3)"


def test_complete_bipartite_narrow_sides():
    for m, n in ((2, 2), (2, 3), (3, 3), (1, 3)):
        rep = classify(complete_bipartite(m, n))
        assert rep.bic.status is C, (m, n)


def test_star_four_rays_noncommutative():
    rep = classify(star(4))
    assert both(rep) == (NC, NC)


def test_fig7_small_blocks_both_targets():
    rep = classify(fig7_graph())
    assert both(rep) == (C, C)
    for v in (rep.bic, rep.ban):
        assert isinstance(v.certificate, SmallBlocks)
        assert v.certificate.blocks == ((0, 1), (2,), (3,), (4,), (5,))


def test_self_complementary_example_pair():
    rep = classify(sc_graph())
    assert both(rep) == (NC, NC)
    cert = rep.bic.certificate
    assert isinstance(cert, EdgeFreePair)
    # the graph's labels are 1-based, so this is (5 6),(7 8) in print form
    assert cert.sigma.cycles() == "(4 5)"
    assert cert.tau.cycles() == "(6 7)"


def test_cherry_free_tree_still_noncommutative():
    rep = classify(t0_graph())
    assert both(rep) == (NC, NC)
    assert isinstance(rep.bic.certificate, EdgeFreePair)


def test_two_cherries_tree():
    rep = classify(cherry2_graph())
    assert both(rep) == (NC, NC)
    cert = rep.bic.certificate
    assert cert.sigma.cycles() == "(2 3)"
    assert cert.tau.cycles() == "(4 5)"


def test_quadrangle_with_tails_family():
    for n in (2, 3, 4):
        rep = classify(c4pn_graph(n))
        assert rep.ban.status is NC, n
        cert = rep.ban.certificate
        assert isinstance(cert, DisjointPair)
        assert cert.sigma.cycles() == "(0 1)"  # the (a b) swap
        # the companion is the simultaneous mirror of all the tail pairs
        assert cert.tau.support() == frozenset(range(2, 2 * n + 2))
        assert rep.bic.status is U, n


def test_paths_are_rigid_forests():
    rep = classify(path(4))
    assert both(rep) == (C, C)
    assert isinstance(rep.bic.certificate, ForestNoDisjointPair)
    assert rep.bic.certificate.edge_free_only is True
    assert rep.ban.certificate.edge_free_only is False


def test_two_disjoint_edges():
    rep = classify(build(4, [(0, 1), (2, 3)]))
    assert both(rep) == (NC, NC)
    cert = rep.bic.certificate
    assert cert.sigma.cycles() == "(0 1)"
    assert cert.tau.cycles() == "(2 3)"


def test_edgeless_graphs():
    assert both(classify(edgeless(3))) == (C, C)
    assert both(classify(edgeless(4))) == (NC, NC)
    assert both(classify(edgeless(6))) == (NC, NC)


# ---------------------------------------------------------------------------
# provenance-gated rules


def test_product_lift_fires_when_search_is_capped():
    # the product needs ~2200 search nodes, the factor only ~300: a budget
    # of 1000 forces the engine to fall back to the provenance rule
    g = cartesian(t0_graph(), complete(2))
    rep = classify(g, node_budget=1000)
    assert rep.bic.status is NC
    cert = rep.bic.certificate
    assert isinstance(cert, ProductLift)
    assert cert.product_kind == "cartesian"
    assert cert.factor_index == 0
    assert isinstance(cert.inner, EdgeFreePair)
    assert verify_certificate(g, rep.bic)
    assert any("abandoned" in note for note in rep.notes)


def test_corona_rule_fires_when_search_is_capped():
    # a 4-vertex path attachment leaves no twins anywhere, and the corona
    # has 2^18 automorphisms, so direct search cannot finish in budget
    g = corona(t0_graph(), path(3))
    rep = classify(g, node_budget=1000)
    assert rep.bic.status is NC
    assert isinstance(rep.bic.certificate, CoronaRule)
    assert verify_certificate(g, rep.bic)


def test_products_without_provenance_fall_back():
    # same adjacency as the capped cartesian case, but built from scratch
    g = cartesian(t0_graph(), complete(2))
    bare = build(g.n, g.edges())
    rep = classify(bare, node_budget=1000)
    assert rep.bic.status is U


# ---------------------------------------------------------------------------
# transfers, complement handling, line graphs


def test_complement_settles_coarse_algebra():
    g = complement(path(4))
    rep = classify_with_complement(g)
    assert rep.bic.status is C
    assert rep.ban.status is C
    assert isinstance(rep.ban.certificate, QuadrangleFreeComplement)
    assert rep.bic_complement is not None
    assert rep.bic_complement.status is C
    assert any("no quantum symmetry" in note for note in rep.notes)


def test_complement_report_on_self_complementary():
    rep = classify_with_complement(sc_graph())
    assert rep.bic.status is NC
    assert rep.bic_complement.status is NC


def test_line_graph_cherry_shortcut():
    rep = classify_line_graph(cherry2_graph())
    assert both(rep) == (NC, NC)
    cert = rep.bic.certificate
    assert isinstance(cert, EdgeFreePair)
    assert verify_certificate(rep.graph, rep.bic)
    assert rep.graph.n == cherry2_graph().edge_count


def test_line_graph_single_center_not_shortcut():
    # three cherries, all centred at the hub: the shortcut must not fire
    rep = classify_line_graph(star(3))
    assert rep.graph.n == 3  # the triangle
    assert both(rep) == (C, C)
    assert isinstance(rep.bic.certificate, SmallOrder)


def test_line_graph_of_quiet_tree():
    rep = classify_line_graph(path(4))
    assert both(rep) == (C, C)


# ---------------------------------------------------------------------------
# budget degradation


def test_budget_collapse_to_unknown():
    rep = classify(c4pn_graph(2), node_budget=2)
    assert both(rep) == (U, U)
    assert any("abandoned" in note for note in rep.notes)
    assert any("skipped" in line for line in rep.trace)


# ---------------------------------------------------------------------------
# verdict construction rules


def test_unknown_verdict_rejects_certificate():
    with pytest.raises(QsymError):
        Verdict("bic", Status.UNKNOWN, SmallOrder(2))


def test_determined_verdict_requires_certificate():
    with pytest.raises(QsymError):
        Verdict("bic", Status.COMMUTATIVE)


def test_report_payload_shape():
    rep = classify_with_complement(cycle(4))
    doc = rep.payload()
    assert set(doc["verdicts"]) == {"bic", "ban", "bic_complement"}
    assert doc["graph"]["n"] == 4
    assert doc["verdicts"]["ban"]["certificate"]["kind"] == "disjoint-pair"
    assert "statement" in doc["verdicts"]["bic"]["citation"]
    assert isinstance(doc["trace"], list) and doc["trace"]


# ---------------------------------------------------------------------------
# certificate re-verification


@pytest.mark.parametrize("g", small_corpus(), ids=lambda g: f"n{g.n}e{g.edge_count}")
def test_certificates_reverify_on_corpus(g):
    rep = classify(g)
    for v in (rep.bic, rep.ban):
        assert verify_certificate(g, v), (v.target, v.status, v.certificate)


def test_wrong_certificates_are_rejected():
    g = cycle(4)
    swap01 = classify(build(4, [(0, 1), (2, 3)])).bic.certificate
    # (0 1) is not an automorphism of C4
    assert not verify_certificate(g, Verdict("bic", NC, swap01))
    assert not verify_certificate(g, Verdict("bic", C, SmallOrder(4)))
    assert not verify_certificate(g, Verdict("bic", C, QuadrangleFreeSelf()))
    assert not verify_certificate(
        g, Verdict("bic", C, SmallBlocks(((0,), (1,), (2,), (3,))))
    )
    assert not verify_certificate(g, Verdict("bic", C, CompleteBipartite(1, 3)))
    assert verify_certificate(g, Verdict("bic", C, CompleteBipartite(2, 2)))


def test_strip_certificate_verifies_chain():
    rep = classify(build(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]))
    # wheel-ish graph: apex 0 dominates; behaviour depends on the chain
    if isinstance(rep.bic.certificate, StripToCommutative):
        assert verify_certificate(rep.graph, rep.bic)


# ---------------------------------------------------------------------------
# engine-wide properties


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_never_inconsistent_and_always_verifiable(g):
    rep = classify(g)
    assert not (rep.bic.status is NC and rep.ban.status is C)
    for v in (rep.bic, rep.ban):
        assert verify_certificate(g, v)


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_quadrangle_free_targets_agree(g):
    if contains_quadrangle(g):
        return
    rep = classify(g)
    if U not in both(rep):
        assert rep.bic.status is rep.ban.status


@given(graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_forests_always_resolve(g):
    from qsym.graphs import is_forest

    if not is_forest(g):
        return
    rep = classify(g)
    assert U not in both(rep)
