"""Projection predicates: connectivity, reducedness, alternation, positivity,
state resolutions, adequacy, twist regions and diagram primeness."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .diagram import CROSSING, VERTEX, Diagram, DiagramError, Mode


class StateKind(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Orientation:
    """Direction of every edge: ``heads[e]`` is the end (0 or 1) it points to."""

    heads: tuple[int, ...]

    def reversed(self) -> Orientation:
        return Orientation(tuple(1 - h for h in self.heads))


@dataclass(frozen=True)
class StateGraph:
    kind: StateKind
    # each circle is a cyclic tuple of darts
    circles: tuple[tuple[int, ...], ...]
    # crossing node -> (circle, circle) at the two smoothing arcs
    segments: dict[int, tuple[int, int]]

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    def is_adequate(self) -> bool:
        return all(a != b for a, b in self.segments.values())


@dataclass(frozen=True)
class SplitWitness:
    face: int
    components: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class CompositeWitness:
    edges: tuple[int, int]
    faces: tuple[int, int]
    side_crossings: tuple[int, int]
    # nodes on the first side (for tangles: the side away from the boundary)
    inside: tuple[int, ...]


# -- connectivity -----------------------------------------------------------

def _edge_components(d: Diagram) -> list[list[int]]:
    parent = list(range(len(d.edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for nd in d.nodes:
        root = find(nd.slots[0].edge)
        for h in nd.slots[1:]:
            r = find(h.edge)
            if r != root:
                parent[r] = root
    groups: dict[int, list[int]] = {}
    for e in range(len(d.edges)):
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values())


def is_connected(d: Diagram) -> tuple[bool, SplitWitness | None]:
    """Whether the shadow is connected; otherwise a face touching two pieces."""
    comps = _edge_components(d)
    if len(comps) <= 1:
        return True, None
    comp_of = {e: i for i, c in enumerate(comps) for e in c}
    faces = d.faces
    # Tangle strings meet along the boundary, so they share a face.  Closed
    # pieces of a link are embedded independently: the rest of the diagram
    # then sits, by convention, in the first face of the first piece.
    fallback = None
    for fi, face in enumerate(faces):
        touched = sorted({comp_of[dart >> 1] for dart in face.darts})
        if len(touched) > 1:
            first = comps[touched[0]]
            rest = tuple(sorted(e for e in range(len(d.edges)) if comp_of[e] != touched[0]))
            return False, SplitWitness(fi, (tuple(first), rest))
        if fallback is None and touched == [0]:
            fallback = fi
    rest = tuple(sorted(e for e in range(len(d.edges)) if comp_of[e] != 0))
    return False, SplitWitness(fallback, (tuple(comps[0]), rest))


# -- reducedness and alternation ---------------------------------------------

def nugatory_crossings(d: Diagram) -> list[int]:
    out = []
    for c in d.crossings:
        f = [d.corner_face(c, j) for j in range(4)]
        if f[0] == f[2] or f[1] == f[3]:
            out.append(c)
    return out


def is_reduced(d: Diagram) -> tuple[bool, list[int]]:
    bad = nugatory_crossings(d)
    return not bad, bad


def is_alternating_strands(d: Diagram) -> bool:
    """Over/under passages alternate along every strand."""
    for s in d.strands:
        seq = [p.over for p in s.passages]
        for a, b in zip(seq, seq[1:]):
            if a == b:
                return False
        if s.closed and len(seq) > 1 and seq[0] == seq[-1]:
            return False
    return True


def is_alternating_faces(d: Diagram) -> bool:
    """Face-walk test: every boundary run between two crossing corners joins
    an over end to an under end.  Runs turn through vertex corners and stop
    at tangle endpoints."""
    m = d._map
    for cyc in d._raw_faces:
        # the arriving end of each dart, and whether the walk turns at a crossing
        stops = []
        for i, dart in enumerate(cyc):
            head = m.origin[dart ^ 1]
            if head < m.n_nodes and d.nodes[head].kind == CROSSING:
                stops.append(i)
            elif head >= m.n_nodes and head in m.compass_of_vertex:
                stops.append(i)
        if not stops:
            continue
        n = len(cyc)
        for k, i in enumerate(stops):
            j = stops[(k + 1) % len(stops)]
            # run: depart the corner after dart i, arrive at the corner after dart j
            start = cyc[(i + 1) % n]
            end = cyc[j]
            a = _over_at(d, start)
            b = _over_at(d, end ^ 1)
            if a is None or b is None:
                continue
            if a == b:
                return False
    return True


def _over_at(d: Diagram, dart: int) -> bool | None:
    """Over-status of the node slot where ``dart`` starts (None off crossings)."""
    p = d.edges[dart >> 1].ends[dart & 1]
    if p is None or p.is_boundary:
        return None
    nd = d.nodes[p.node]
    if nd.kind != CROSSING:
        return None
    return nd.is_over(p.slot)


def is_alternating(d: Diagram) -> bool:
    if d.mode is Mode.GRAPH8:
        return is_alternating_faces(d)
    return is_alternating_strands(d)


# -- orientation and positivity ---------------------------------------------

def orientation_from_strands(d: Diagram, flips: tuple[int, ...]) -> Orientation:
    heads = [0] * len(d.edges)
    for s, flip in zip(d.strands, flips):
        for dart in s.darts:
            k = dart & 1
            heads[dart >> 1] = k if flip else 1 - k
    return Orientation(tuple(heads))


def crossing_signs(d: Diagram, o: Orientation) -> dict[int, int]:
    signs = {}
    for c in d.crossings:
        nd = d.nodes[c]
        incoming = [s for s, h in enumerate(nd.slots) if o.heads[h.edge] == h.end]
        u_in = next(s for s in incoming if not nd.is_over(s))
        o_in = next(s for s in incoming if nd.is_over(s))
        signs[c] = 1 if (u_in - o_in) % 4 == 1 else -1
    return signs


def is_positive(d: Diagram, o: Orientation) -> bool:
    return all(s > 0 for s in crossing_signs(d, o).values())


def exists_positive_orientation(d: Diagram) -> Orientation | None:
    k = len(d.strands)
    if k == 0:
        return Orientation(())
    for rest in product((0, 1), repeat=k - 1):
        o = orientation_from_strands(d, (0,) + rest)
        if is_positive(d, o):
            return o
    return None


def is_positive_diagram(d: Diagram) -> bool:
    return exists_positive_orientation(d) is not None


# -- state resolutions ------------------------------------------------------

def smoothing_pairs(over: int, kind: StateKind) -> tuple[tuple[int, int], tuple[int, int]]:
    """Slot pairs joined by the A or B smoothing of a crossing."""
    o = over if over == 1 else 0
    step = -1 if kind is StateKind.A else 1
    a = (o, (o + step) % 4)
    b = ((o + 2) % 4, (o + 2 + step) % 4)
    return a, b


def resolution(d: Diagram, kind: StateKind | str) -> StateGraph:
    kind = StateKind(kind)
    if d.mode is not Mode.LINK:
        raise DiagramError("resolutions are defined on link diagrams (close tangles first)")
    partner = {}
    for c in d.crossings:
        for a, b in smoothing_pairs(d.nodes[c].over, kind):
            partner[(c, a)] = b
            partner[(c, b)] = a
    circle_of_edge = {}
    circles = []
    for e in range(len(d.edges)):
        if e in circle_of_edge:
            continue
        idx = len(circles)
        darts = []
        dart = 2 * e
        while True:
            darts.append(dart)
            circle_of_edge[dart >> 1] = idx
            p = d.edges[dart >> 1].ends[1 - (dart & 1)]
            if p is None:
                break
            h = d.nodes[p.node].slots[partner[(p.node, p.slot)]]
            # leave along the paired slot, outward
            dart = 2 * h.edge + h.end
            if dart == 2 * e:
                break
        circles.append(tuple(darts))
    segments = {}
    for c in d.crossings:
        (a, _), (b, _) = smoothing_pairs(d.nodes[c].over, kind)
        slots = d.nodes[c].slots
        segments[c] = (circle_of_edge[slots[a].edge], circle_of_edge[slots[b].edge])
    return StateGraph(kind, tuple(circles), segments)


def is_A_adequate(d: Diagram) -> bool:
    return resolution(d, StateKind.A).is_adequate()


def is_B_adequate(d: Diagram) -> bool:
    return resolution(d, StateKind.B).is_adequate()


def is_semi_adequate(d: Diagram) -> bool:
    return is_A_adequate(d) or is_B_adequate(d)


def is_adequate(d: Diagram) -> bool:
    return is_A_adequate(d) and is_B_adequate(d)


# -- twist regions ------------------------------------------------------------

def twist_regions(d: Diagram) -> list[list[int]]:
    """Crossings grouped into maximal chains through bigon faces."""
    links: dict[int, set[int]] = {c: set() for c in d.crossings}
    for face in d.faces:
        if len(face.darts) != 2 or face.gaps or len(face.corners) != 2:
            continue
        (u, _), (v, _) = face.corners
        if isinstance(u, int) and isinstance(v, int) and u != v:
            if d.nodes[u].kind == CROSSING and d.nodes[v].kind == CROSSING:
                links[u].add(v)
                links[v].add(u)
    seen = set()
    regions = []
    for c in d.crossings:
        if c in seen:
            continue
        comp = {c}
        stack = [c]
        while stack:
            x = stack.pop()
            for y in links[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        regions.append(_chain_order(comp, links))
    return regions


def _chain_order(comp: set[int], links: dict[int, set[int]]) -> list[int]:
    ends = sorted(c for c in comp if len(links[c] & comp) <= 1)
    start = ends[0] if ends else min(comp)
    order = [start]
    seen = {start}
    while True:
        nxt = sorted(y for y in links[order[-1]] if y not in seen)
        if not nxt:
            break
        order.append(nxt[0])
        seen.add(nxt[0])
    order += sorted(comp - seen)
    return order


def _twist_adequate_for(d: Diagram, kind: StateKind, region_of: dict[int, int]) -> bool:
    sg = resolution(d, kind)
    if not sg.is_adequate():
        return False
    by_pair: dict[frozenset, set[int]] = {}
    for c, (a, b) in sg.segments.items():
        by_pair.setdefault(frozenset((a, b)), set()).add(region_of[c])
    return all(len(regions) == 1 for regions in by_pair.values())


def is_twist_adequate_kind(d: Diagram, kind: StateKind | str) -> bool:
    region_of = {c: i for i, reg in enumerate(twist_regions(d)) for c in reg}
    return _twist_adequate_for(d, StateKind(kind), region_of)


def is_twist_adequate(d: Diagram) -> bool:
    return is_twist_adequate_kind(d, StateKind.A) or is_twist_adequate_kind(d, StateKind.B)


# -- primeness --------------------------------------------------------------------

def _side_nodes(d: Diagram, cut: tuple[int, int], seed_edge: int, seed_end: int) -> set[int]:
    """Nodes reachable from one end of a cut edge without using the cut."""
    p = d.edges[seed_edge].ends[seed_end]
    if p is None or p.is_boundary:
        return set()
    seen = {p.node}
    stack = [p.node]
    while stack:
        v = stack.pop()
        for h in d.nodes[v].slots:
            if h.edge in cut:
                continue
            q = d.edges[h.edge].ends[1 - h.end]
            if q is None or q.is_boundary:
                continue
            if q.node not in seen:
                seen.add(q.node)
                stack.append(q.node)
    return seen


def _touches_boundary(d: Diagram, nodes: set[int], cut: tuple[int, int], seed_edge: int, seed_end: int) -> bool:
    p = d.edges[seed_edge].ends[seed_end]
    if p is not None and p.is_boundary:
        return True
    for v in nodes:
        for h in d.nodes[v].slots:
            if h.edge in cut:
                continue
            q = d.edges[h.edge].ends[1 - h.end]
            if q is not None and q.is_boundary:
                return True
    return False


def composite_witnesses(d: Diagram):
    """Yield every two-edge circle with crossings on its relevant side(s).

    For links and graph projections both sides need a crossing (vertices do
    not count).  For tangles the circle must bound a disk away from the
    boundary that contains a crossing.
    """
    groups: dict[frozenset, list[int]] = {}
    for e in range(len(d.edges)):
        if d.edges[e].is_free_loop:
            continue
        a, b = d.edge_faces(e)
        if a != b:
            groups.setdefault(frozenset((a, b)), []).append(e)
    for faces_key in sorted(groups, key=lambda k: sorted(k)):
        edges = groups[faces_key]
        fa, fb = sorted(faces_key)
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                e, f = edges[i], edges[j]
                cut = (e, f)
                side0 = _side_nodes(d, cut, e, 0)
                side1 = _side_nodes(d, cut, e, 1)
                if side0 & side1:
                    continue
                if d.mode is Mode.TANGLE:
                    b0 = _touches_boundary(d, side0, cut, e, 0)
                    b1 = _touches_boundary(d, side1, cut, e, 1)
                    if b0 == b1:
                        continue
                    inside = side1 if b0 else side0
                    outside = side0 if b0 else side1
                    n_in = sum(1 for v in inside if d.nodes[v].kind == CROSSING)
                    n_out = sum(1 for v in outside if d.nodes[v].kind == CROSSING)
                    if n_in >= 1:
                        yield CompositeWitness((e, f), (fa, fb), (n_in, n_out), tuple(sorted(inside)))
                else:
                    n0 = sum(1 for v in side0 if d.nodes[v].kind == CROSSING)
                    n1 = sum(1 for v in side1 if d.nodes[v].kind == CROSSING)
                    if n0 >= 1 and n1 >= 1:
                        inside, counts = (side0, (n0, n1))
                        if VERTEX in {d.nodes[v].kind for v in side0}:
                            inside, counts = side1, (n1, n0)
                        yield CompositeWitness((e, f), (fa, fb), counts, tuple(sorted(inside)))


def is_prime_projection(d: Diagram) -> tuple[bool, CompositeWitness | None]:
    if d.mode is Mode.LINK:
        ok, _ = is_connected(d)
        if not ok:
            raise DiagramError("primeness is defined for connected diagrams; the diagram is split")
    w = next(composite_witnesses(d), None)
    return w is None, w


# -- nontriviality criteria -----------------------------------------------------

CRITERIA = ("KMT", "Stoimenow", "Thistlethwaite")

CRITERION_PREDICATES = {
    "KMT": ("connected", "crossings>=1", "reduced", "alternating"),
    "Stoimenow": ("knot", "crossings>=1", "reduced", "positive"),
    "Thistlethwaite": ("crossings>=1", "reduced", "semi_adequate"),
}

_BASIC = {
    "connected": lambda d: is_connected(d)[0],
    "crossings>=1": lambda d: d.n_crossings >= 1,
    "reduced": lambda d: is_reduced(d)[0],
    "alternating": is_alternating,
    "knot": lambda d: d.n_components == 1,
    "positive": is_positive_diagram,
    "semi_adequate": is_semi_adequate,
}


def criterion_hypotheses(d: Diagram, name: str) -> list[tuple[str, object]]:
    """Hypotheses (predicate, value) of a named nontriviality criterion."""
    if name not in CRITERION_PREDICATES:
        raise ValueError(f"unknown criterion {name!r}")
    return [(p, _BASIC[p](d)) for p in CRITERION_PREDICATES[name]]


def nontrivial_criterion(d: Diagram) -> str | None:
    """First criterion whose hypotheses all hold, certifying ``d`` non-trivial."""
    if d.n_crossings == 0:
        return None
    for name in CRITERIA:
        if all(v is True for _, v in criterion_hypotheses(d, name)):
            return name
    return None
