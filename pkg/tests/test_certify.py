from __future__ import annotations

import dataclasses
import json

import pytest
from hypothesis import given, strategies as st

from conftest import KINK, POSITIVE_TREFOIL, TREFOIL
from tanglekit import certify, parse, replay
from tanglekit import graph8 as g8
from tanglekit import links as lk
from tanglekit.certify import evaluate
from tanglekit.genlab import (
    connected_sum,
    gen_alternating_tangle,
    gen_local_knot_graph8,
    gen_positive_tangle,
    gen_reduced_alternating_link,
)
from tanglekit.genlab import vertical_twist_tangle as vt
from tanglekit.tangles import denominator_closure, tangle_sum



def pairs(certs):
    return sorted((c.conclusion, c.rule) for c in certs)


def test_trefoil_certificates(trefoil):
    got = pairs(certify(trefoil))
    assert got == sorted([
        ("NonSplitLink", "Menasco (1)"),
        ("PrimeLink", "Menasco (2)"),
        ("NonTrivialLink", "Kauffman-Murasugi-Thistlethwaite"),
        ("NonTrivialLink", "Thistlethwaite (1)"),
        ("NonSplitLink", "Thistlethwaite (2)"),
        ("CompositeLinkIffProjection", "Futer-Kalfagianni-Purcell"),
    ])
    futer = next(c for c in certify(trefoil) if c.conclusion == "CompositeLinkIffProjection")
    assert futer.witness["link"] == "prime"


def test_positive_trefoil_adds_positive_rules():
    got = pairs(certify(parse(POSITIVE_TREFOIL)))
    assert ("NonSplitLink", "Ozawa") in got
    assert ("PrimeLink", "Ozawa") in got
    assert ("NonTrivialLink", "Stoimenow") in got


def test_granny_composite_iff(trefoil):
    granny = connected_sum(trefoil, trefoil)
    certs = certify(granny)
    futer = next(c for c in certs if c.conclusion == "CompositeLinkIffProjection")
    assert futer.witness["link"] == "composite"
    assert len(futer.witness["edges"]) == 2
    assert ("prime_projection", False) in futer.hypotheses
    assert "PrimeLink" not in {c.conclusion for c in certs}


def test_kink_gets_nothing_nontrivial():
    certs = certify(parse(KINK))
    assert "NonTrivialLink" not in {c.conclusion for c in certs}


def test_sum_of_twists_is_prime_tangle():
    t = tangle_sum(vt(3), vt(3))
    got = pairs(certify(t))
    assert got == [("NotRational", "Lickorish-Thistlethwaite (strongly alternating and connected)"),
                   ("PrimeTangle", "MOF tangle primeness")]
    assert not lk.is_prime_projection(denominator_closure(t))[0]


def test_vertical_twist_is_not_certified_non_rational():
    assert "NotRational" not in {c.conclusion for c in certify(vt(3))}


def test_tied_tangle_is_composite_with_knotted_arc():
    g = gen_local_knot_graph8(0, "trefoil", split=False).graph
    t = g8.excise_vertex(g)
    certs = certify(t)
    comp = next(c for c in certs if c.conclusion == "CompositeTangle")
    assert comp.witness["criterion"] in lk.CRITERIA
    k = parse(comp.witness["knot"])
    assert lk.nontrivial_criterion(k) == comp.witness["criterion"]


def test_local_knot_certificate_routes():
    for split, rules in ((True, {"vertex-split local knot", "vertex-split string closure"}),
                         (False, {"composite-circle local knot"})):
        g = gen_local_knot_graph8(2, "trefoil", split=split).graph
        lk_certs = [c for c in certify(g) if c.conclusion == "LocalKnot"]
        assert len(lk_certs) == 1 and lk_certs[0].rule in rules
        assert replay(lk_certs[0], g)


def test_planar_figure_eight_only_vertex_split():
    g = g8.planar_figure_eight()
    assert [c.conclusion for c in certify(g)] == ["VertexSplitProjection"]


def test_multivertex_research_only():
    g = parse("graph8 { V(1,2,2,1) V(3,3,4,4) }", multivertex=True)
    assert certify(g) == []
    certs = certify(g, research=True)
    assert certs and all(not c.certified for c in certs)


def test_certificates_serialize(trefoil):
    for c in certify(trefoil):
        data = json.loads(json.dumps(c.to_json()))
        assert data["conclusion"] == c.conclusion
        assert [h["predicate"] for h in data["hypotheses"]] == [k for k, _ in c.hypotheses]


def test_replay_detects_tampering(trefoil):
    cert = certify(trefoil)[0]
    assert replay(cert, trefoil)
    forged = dataclasses.replace(cert, hypotheses=cert.hypotheses + (("positive", True),))
    assert not replay(forged, trefoil)
    assert not replay(cert, parse(KINK))


def test_evaluate_prefixes():
    t = gen_alternating_tangle(1, 5)
    assert evaluate("D.reduced", t) == lk.is_reduced(denominator_closure(t))[0]
    g = g8.cap_tangle(t)
    assert evaluate("tangle.D.reduced", g) == evaluate("D.reduced", t)
    assert evaluate("witness.K.knot", g, {"knot": TREFOIL}) is True
    with pytest.raises(KeyError):
        evaluate("no_such_predicate", t)


@st.composite
def any_diagram(draw):
    seed = draw(st.integers(0, 10_000))
    size = draw(st.integers(2, 8))
    kind = draw(st.sampled_from(["link", "alt", "pos", "graph", "local"]))
    if kind == "link":
        return gen_reduced_alternating_link(seed, size)
    if kind == "alt":
        return gen_alternating_tangle(seed, size)
    if kind == "pos":
        return gen_positive_tangle(seed, size)
    if kind == "graph":
        return g8.cap_tangle(gen_alternating_tangle(seed, size))
    return gen_local_knot_graph8(seed, "trefoil").graph


@given(any_diagram())
def test_every_certificate_replays(d):
    for c in certify(d):
        assert replay(c, d)
        json.dumps(c.to_json())


@given(st.integers(0, 10_000), st.integers(2, 10))
def test_reduced_alternating_links_are_certified_nontrivial(seed, size):
    d = gen_reduced_alternating_link(seed, size)
    conclusions = {c.conclusion for c in certify(d)}
    assert {"NonSplitLink", "NonTrivialLink"} <= conclusions
