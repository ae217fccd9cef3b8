"""JSON-ready analysis reports.

Nodes are referred to by their position among the items of the canonical
text (``"diagram"`` field); edges by their label in that text.
"""

from __future__ import annotations

from . import graph8 as g8
from . import links as lk
from . import tangles as tg
from .certify import certify, composite_payload, face_walk
from .diagram import Diagram, Mode, serialize

SCHEMA = "tanglekit.report/1"


def _split(d: Diagram) -> dict:
    ok, w = lk.is_connected(d)
    out = {"connected": ok}
    if w is not None:
        out["split_witness"] = {
            "face": w.face,
            "circle": [[None, face_walk(d, w.face)]],
            "components": [[e + 1 for e in part] for part in w.components],
        }
    return out


def link_block(d: Diagram) -> dict:
    reduced, bad = lk.is_reduced(d)
    block = {"diagram": serialize(d), "crossings": d.n_crossings, "components": d.n_components}
    block.update(_split(d))
    block["reduced"] = reduced
    block["nugatory"] = bad
    block["alternating"] = lk.is_alternating(d)
    block["positive"] = lk.is_positive_diagram(d)
    sa, sb = lk.resolution(d, "A"), lk.resolution(d, "B")
    block["state_circles"] = {"A": sa.n_circles, "B": sb.n_circles}
    block["A_adequate"] = sa.is_adequate()
    block["B_adequate"] = sb.is_adequate()
    block["semi_adequate"] = block["A_adequate"] or block["B_adequate"]
    block["adequate"] = block["A_adequate"] and block["B_adequate"]
    block["twist_regions"] = lk.twist_regions(d)
    block["twist_adequate"] = {
        "A": lk.is_twist_adequate_kind(d, "A"),
        "B": lk.is_twist_adequate_kind(d, "B"),
    }
    if block["connected"]:
        prime, w = lk.is_prime_projection(d)
        block["prime_projection"] = prime
        if w is not None:
            block["composite_witness"] = composite_payload(d, w)
    else:
        block["prime_projection"] = None
    return block


def tangle_block(t: Diagram) -> dict:
    reduced, bad = lk.is_reduced(t)
    block = {"diagram": serialize(t), "crossings": t.n_crossings}
    block.update(_split(t))
    block["strings"] = [list(p) for p in tg.string_endpoints(t)]
    block["reduced"] = reduced
    block["alternating"] = lk.is_alternating(t)
    block["strongly_alternating"] = tg.is_strongly_alternating(t)
    prime, w = tg.is_prime_tangle_projection(t)
    block["prime_projection"] = prime
    if w is not None:
        block["composite_witness"] = composite_payload(t, w)
    sw = tg.split_tangle_witness(t)
    block["split_witness"] = None if sw is None else {
        "face": sw.face, "gaps": list(sw.gaps), "circle": [[None, face_walk(t, sw.face)]],
    }
    m = tg.mof(t)
    block["mof"] = m.satisfied
    block["mof_flags"] = m.flags()
    block["N"] = link_block(tg.numerator_closure(t))
    block["D"] = link_block(tg.denominator_closure(t))
    return block


def graph8_block(g: Diagram) -> dict:
    block = {"diagram": serialize(g), "crossings": g.n_crossings, "vertices": len(g.vertices)}
    single = len(g.vertices) == 1
    block["certified_range"] = single
    block["reduced"] = lk.is_reduced(g)[0]
    block["alternating"] = lk.is_alternating(g)
    block["sawollek_reduced_alternating"] = g8.sawollek_reduced_alternating(g)
    block["smoothings"] = [
        {"diagram": serialize(s), "reduced": lk.is_reduced(s)[0], "alternating": lk.is_alternating(s)}
        for s in g8.all_smoothings(g)
    ]
    vs = g8.vertex_split_witness(g)
    block["vertex_split"] = None if vs is None else {
        "vertex": vs.vertex, "corners": list(vs.corners), "face": vs.face,
        "circle": [[None, face_walk(g, vs.face)]],
    }
    if single:
        t = g8.excise_vertex(g)
        block["tangle"] = tangle_block(t)
        w = g8.local_knot_witness(g)
        block["local_knot"] = None if w is None else {
            "route": w.route, "criterion": w.criterion, "knot": serialize(w.knot), **w.circle,
        }
    return block


def build_report(d: Diagram, *, research: bool = False) -> dict:
    report = {"schema": SCHEMA, "mode": d.mode.value}
    if d.mode is Mode.LINK:
        report.update(link_block(d))
    elif d.mode is Mode.TANGLE:
        report.update(tangle_block(d))
    else:
        report.update(graph8_block(d))
        if len(d.vertices) != 1:
            report["status"] = "UNCERTIFIED"
    report["certificates"] = [c.to_json() for c in certify(d, research=research)]
    return report
