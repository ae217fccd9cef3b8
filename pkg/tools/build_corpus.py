"""Regenerate the regression corpus in tests/data/corpus.

Each diagram is rebuilt from its construction and checked against the
properties it is meant to exhibit before being written.  Run from the
repository root:  python tools/build_corpus.py
"""

from __future__ import annotations

from pathlib import Path

from tanglekit.diagram import VERTEX, Diagram, Items, Mode, parse, serialize
from tanglekit.genlab import (
    crossing_to_vertex,
    gen_local_knot_graph8,
    gen_positive_tangle,
    gen_reduced_alternating_link,
    gen_torus2,
    tie_knot,
    vertical_twist_tangle,
)
from tanglekit.graph8 import (
    cap_tangle,
    excise_vertex,
    local_knot_witness,
    planar_figure_eight,
    sawollek_reduced_alternating,
    vertex_split_witness,
)
from tanglekit.links import composite_witnesses, is_alternating, is_prime_projection, is_reduced
from tanglekit.tangles import denominator_closure, is_prime_tangle_projection, is_strongly_alternating, mof, tangle_sum

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "corpus"
TREFOIL = "link { X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) }"
POSITIVE_TREFOIL = "link { X(4,2,5,1) X(6,4,1,3) X(2,6,3,5) }"


def two_vertices(link: Diagram, a: int, b: int) -> Diagram:
    it = link.to_items()
    nodes = [(VERTEX, labs, None) if i in (a, b) else (k, labs, o) for i, (k, labs, o) in enumerate(it.nodes)]
    return Diagram.build(Items(Mode.GRAPH8, nodes, {}, [], it.loops), multivertex=True)


def prime_tangle_composite_closure() -> Diagram:
    # sum of two vertical three-crossing twists: strongly alternating, prime,
    # while neither summand is strongly alternating and D is a granny-type sum
    t = tangle_sum(vertical_twist_tangle(3), vertical_twist_tangle(3))
    assert is_strongly_alternating(t) and is_prime_tangle_projection(t)[0]
    assert not is_strongly_alternating(vertical_twist_tangle(3))
    assert not is_prime_projection(denominator_closure(t))[0]
    return t


def two_vertex_graph() -> Diagram:
    g = two_vertices(gen_reduced_alternating_link(46, 6), 0, 5)
    assert sawollek_reduced_alternating(g) and vertex_split_witness(g) is None
    return g


def unreduced_smoothing_graph() -> Diagram:
    g = crossing_to_vertex(gen_torus2(4), 0)
    assert not sawollek_reduced_alternating(g)
    return g


def prime_alternating_graph() -> Diagram:
    g = crossing_to_vertex(gen_reduced_alternating_link(1, 6), 2)
    assert sawollek_reduced_alternating(g) and vertex_split_witness(g) is None
    assert next(composite_witnesses(g), None) is None
    return g


def face_alternating_graph() -> Diagram:
    g = crossing_to_vertex(gen_torus2(5), 0)
    assert is_reduced(g)[0] and is_alternating(g) and not sawollek_reduced_alternating(g)
    return g


def split_local_knot() -> Diagram:
    g = tie_knot(planar_figure_eight(), 0, parse(TREFOIL), 0)
    assert vertex_split_witness(g) is not None and local_knot_witness(g).route == "b"
    return g


def composite_local_knot() -> Diagram:
    g = gen_local_knot_graph8(1, "trefoil", split=False).graph
    assert vertex_split_witness(g) is None and local_knot_witness(g).route == "c"
    return g


def positive_local_knot() -> Diagram:
    g = tie_knot(cap_tangle(gen_positive_tangle(9, 6)), 1, parse(POSITIVE_TREFOIL), 0)
    m = mof(excise_vertex(g))
    assert m.satisfied == "O" and not (m.alternating_N or m.alternating_D)
    assert not is_alternating(g) and not sawollek_reduced_alternating(g)
    assert local_knot_witness(g).route == "c"
    return g


CORPUS = {
    "trefoil": (lambda: parse(TREFOIL), "standard trefoil"),
    "prime_tangle_composite_closure": (prime_tangle_composite_closure, "strongly alternating prime tangle whose D-closure is composite"),
    "two_vertex_graph": (two_vertex_graph, "two vertices; reduced alternating smoothings, no vertex-split circle"),
    "unreduced_smoothing_graph": (unreduced_smoothing_graph, "one vertex; a vertex smoothing is not reduced"),
    "prime_alternating_graph": (prime_alternating_graph, "reduced, alternating and prime as a projection"),
    "face_alternating_graph": (face_alternating_graph, "reduced and alternating by face segments, not by smoothings"),
    "split_local_knot": (split_local_knot, "trefoil in one loop, vertex split"),
    "composite_local_knot": (composite_local_knot, "trefoil tied into an edge of a prime graph, not vertex split"),
    "positive_local_knot": (positive_local_knot, "positive non-alternating excised tangle with a tied trefoil"),
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (build, note) in CORPUS.items():
        d = build()
        (OUT / f"{name}.pd").write_text(f"# {note}\n{serialize(d)}\n", encoding="utf-8")
        print(name, d.n_crossings)


if __name__ == "__main__":
    main()
