"""Figure-eight spatial graph projections: vertex excision, vertex smoothings,
vertex-split circles and local-knot witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .diagram import NE, NW, SE, SW, VERTEX, Diagram, DiagramError, Items, Mode
from .links import CompositeWitness, _edge_components, is_alternating, is_reduced, nontrivial_criterion
from .tangles import exploded_items, mof, split_tangle_witness, tangle_composite_witnesses

# Slot i of the vertex becomes this endpoint of the excised tangle.  The
# boundary of the excised disk runs clockwise around the vertex, hence the
# clockwise compass sequence SW, NW, NE, SE.
EXCISION = (SW, NW, NE, SE)

# Vertex smoothings as slot pairings.
SMOOTHINGS = (((0, 1), (2, 3)), ((1, 2), (3, 0)))


@dataclass(frozen=True)
class VertexSplitWitness:
    vertex: int
    corners: tuple[int, int]
    face: int

    @property
    def sides(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Slots on either side of the circle through the vertex."""
        a, b = self.corners
        return ((a + 1) % 4, b), ((b + 1) % 4, a)


@dataclass(frozen=True)
class LocalKnotWitness:
    route: str  # "b": separated string beside a vertex-split circle, "c": composite circle
    knot: Diagram
    criterion: str
    tangle: Diagram
    circle: dict = field(default_factory=dict)


def _require_graph8(g: Diagram) -> None:
    if g.mode is not Mode.GRAPH8:
        raise DiagramError("expected a graph8 diagram")


def excise_vertex(g: Diagram) -> Diagram:
    """Remove a crossing-free neighbourhood of the vertex, leaving a 2-string tangle."""
    _require_graph8(g)
    if len(g.vertices) != 1:
        raise DiagramError("vertex excision needs exactly one vertex")
    v = g.vertices[0]
    it = exploded_items(g)
    ends = {EXCISION[s]: it.nodes[v][1][s] for s in range(4)}
    nodes = [n for i, n in enumerate(it.nodes) if i != v]
    return Diagram.build(Items(Mode.TANGLE, nodes, ends, it.arcs, []))


def cap_tangle(t: Diagram) -> Diagram:
    """Inverse of :func:`excise_vertex`: plug a vertex into the boundary."""
    if t.mode is not Mode.TANGLE:
        raise DiagramError("expected a tangle diagram")
    it = exploded_items(t)
    vertex = ("vertex", [it.ends[c] for c in EXCISION], None)
    return Diagram.build(Items(Mode.GRAPH8, [vertex] + it.nodes, {}, it.arcs, []))


def smoothing(g: Diagram, choice: dict[int, int] | int) -> Diagram:
    """Smooth every vertex; ``choice`` maps vertex to an index into SMOOTHINGS."""
    _require_graph8(g)
    if isinstance(choice, int):
        choice = {v: choice for v in g.vertices}
    it = exploded_items(g)
    arcs = list(it.arcs)
    nodes = []
    for i, (kind, labels, over) in enumerate(it.nodes):
        if kind == VERTEX:
            for a, b in SMOOTHINGS[choice[i]]:
                arcs.append((labels[a], labels[b]))
        else:
            nodes.append((kind, labels, over))
    return Diagram.build(Items(Mode.LINK, nodes, {}, arcs, []))


def all_smoothings(g: Diagram) -> list[Diagram]:
    vs = g.vertices
    return [smoothing(g, dict(zip(vs, pick))) for pick in product(range(2), repeat=len(vs))]


def sawollek_reduced_alternating(g: Diagram) -> bool:
    """Every smoothing of the vertices is a reduced alternating link projection."""
    _require_graph8(g)
    return all(is_reduced(s)[0] and is_alternating(s) for s in all_smoothings(g))


def vertex_split_witness(g: Diagram) -> VertexSplitWitness | None:
    """A circle through a vertex, crossing it between opposite corners and
    otherwise running inside one face."""
    _require_graph8(g)
    for v in g.vertices:
        for a, b in ((0, 2), (1, 3)):
            fa, fb = g.corner_face(v, a), g.corner_face(v, b)
            if fa == fb:
                return VertexSplitWitness(v, (a, b), fa)
    return None


def shadow_components(link: Diagram) -> list[Diagram]:
    """Split a link diagram into the sub-diagrams of its shadow components."""
    it = exploded_items(link)
    out = []
    for comp in _edge_components(link):
        edges = set(comp)
        nodes = [n for n in it.nodes if ((n[1][0] - 1) >> 1) in edges]
        arcs = [(2 * e + 1, 2 * e + 2) for e in sorted(edges)]
        arcs += [(2 * e + 1, 2 * e + 2) for e in sorted(edges) if link.edges[e].is_free_loop]
        out.append(Diagram.build(Items(Mode.LINK, nodes, {}, arcs, [])))
    return out


def enclosed_knot(t: Diagram, w: CompositeWitness) -> Diagram:
    """The diagram inside a composite circle, closed by an arc along the circle."""
    inside = set(w.inside)
    it = exploded_items(t)
    nodes = [n for i, n in enumerate(it.nodes) if i in inside]
    arcs = []
    loose = []
    for e, edge in enumerate(t.edges):
        ins = [p is not None and not p.is_boundary and p.node in inside for p in edge.ends]
        if all(ins):
            arcs.append((2 * e + 1, 2 * e + 2))
        elif ins[0] or ins[1]:
            loose.append(2 * e + 1 + (0 if ins[0] else 1))
    if len(loose) != 2:
        raise DiagramError("composite circle does not cut exactly two edges")
    arcs.append(tuple(loose))
    return Diagram.build(Items(Mode.LINK, nodes, {}, arcs, []))


def local_knot_witness(g: Diagram) -> LocalKnotWitness | None:
    """Search for a certified local knot; ``None`` means none was certified."""
    _require_graph8(g)
    t = excise_vertex(g)
    sw = split_tangle_witness(t)
    if sw is not None:
        pairs = (NW, SW), (NE, SE)
        if sw.gaps == ("left", "right"):
            pairs = (NW, NE), (SW, SE)
        it = exploded_items(t)
        closure = Diagram.build(
            Items(Mode.LINK, it.nodes, {}, it.arcs + [(it.ends[a], it.ends[b]) for a, b in pairs], [])
        )
        for k in shadow_components(closure):
            crit = nontrivial_criterion(k)
            if crit is not None:
                vs = vertex_split_witness(g)
                circle = {"tangle_face": sw.face, "gaps": list(sw.gaps)}
                if vs is not None:
                    circle.update(vertex=vs.vertex, corners=list(vs.corners), face=vs.face)
                return LocalKnotWitness("b", k, crit, t, circle)
    if mof(t).satisfied != "none":
        for w in tangle_composite_witnesses(t):
            k = enclosed_knot(t, w)
            crit = nontrivial_criterion(k)
            if crit is not None:
                circle = {
                    "edges": [e + 1 for e in w.edges],
                    "faces": list(w.faces),
                    "side_crossings": list(w.side_crossings),
                }
                return LocalKnotWitness("c", k, crit, t, circle)
    return None


def planar_figure_eight() -> Diagram:
    return Diagram.build(Items(Mode.GRAPH8, [(VERTEX, [1, 2, 3, 4], None)], {}, [(1, 2), (3, 4)], []))
