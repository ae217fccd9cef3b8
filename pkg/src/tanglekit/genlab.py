"""Deterministic and seeded-random diagram generators."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .diagram import CROSSING, NE, NW, SE, SW, VERTEX, Diagram, DiagramError, Items, Mode, parse
from .graph8 import excise_vertex, vertex_split_witness, smoothing
from .links import (
    crossing_signs,
    is_connected,
    is_reduced,
    orientation_from_strands,
)
from .tangles import (
    denominator_closure,
    exploded_items,
    numerator_closure,
    quarter_rotation,
    tangle_sum,
    trivial_tangle,
)

MAX_TRIES = 2000

TREFOIL = "link { X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) }"
FIGURE8 = "link { X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) }"
KNOTS = {"trefoil": TREFOIL, "figure8": FIGURE8}


class GenerationError(RuntimeError):
    """A generate-and-filter loop ran out of attempts."""


def default_seed() -> int:
    return int(os.environ.get("TANGLEKIT_SEED", "0"))


# -- deterministic families ------------------------------------------------

def twist_tangle(n: int, *, over: int = 1) -> Diagram:
    """Horizontal twist tangle of ``n`` crossings in a row.

    Slots of each crossing point NE, NW, SW, SE; neighbours are joined
    NE-to-NW and SE-to-SW.  A uniform over-pair makes it alternating.
    """
    if n == 0:
        return trivial_tangle()
    top = [100 + i for i in range(n + 1)]
    bot = [200 + i for i in range(n + 1)]
    nodes = [(CROSSING, [top[i + 1], top[i], bot[i], bot[i + 1]], over) for i in range(n)]
    ends = {NW: top[0], SW: bot[0], NE: top[n], SE: bot[n]}
    return Diagram.build(Items(Mode.TANGLE, nodes, ends, [], []))


def vertical_twist_tangle(n: int, *, over: int = 1) -> Diagram:
    return quarter_rotation(twist_tangle(n, over=over))


def gen_torus2(n: int) -> Diagram:
    """Standard diagram of the (2, n)-torus link."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return numerator_closure(twist_tangle(n))


def gen_pretzel(p: int, q: int, r: int) -> Diagram:
    """Standard (p, q, r)-pretzel diagram; the sign of each entry picks the twist handedness."""
    parts = []
    for k in (p, q, r):
        if k == 0:
            raise ValueError("pretzel entries must be non-zero")
        parts.append(vertical_twist_tangle(abs(k), over=0 if k > 0 else 1))
    t = tangle_sum(tangle_sum(parts[0], parts[1], allow_closed=True), parts[2], allow_closed=True)
    return numerator_closure(t)


def connected_sum(a: Diagram, b: Diagram, edge_a: int = 0, edge_b: int = 0) -> Diagram:
    """Join two link diagrams by cutting one edge of each."""
    ia = exploded_items(a)
    ib = exploded_items(b, offset=ia.max_label())
    return _splice(ia, ib, edge_a, edge_b, Mode.LINK)


def _splice(ia: Items, ib: Items, edge_a: int, edge_b: int, mode: Mode) -> Diagram:
    la = ia.arcs[edge_a]
    lb = ib.arcs[edge_b]
    arcs = [x for x in ia.arcs if x != la] + [x for x in ib.arcs if x != lb]
    arcs += [(la[0], lb[0]), (lb[1], la[1])]
    return Diagram.build(Items(mode, ia.nodes + ib.nodes, dict(ia.ends), arcs, []))


def mirror(d: Diagram) -> Diagram:
    it = d.to_items()
    it.nodes = [(k, labs, None if o is None else 1 - o) for k, labs, o in it.nodes]
    return Diagram.build(it, allow_closed=d.allow_closed, multivertex=len(d.vertices) > 1)


# -- random shadows ----------------------------------------------------------

def insert_crossing(d: Diagram, face: int, u: int, w: int, over: int) -> Diagram:
    """Add a crossing inside ``face`` between boundary darts ``u`` and ``w``.

    Both edges are cut; the tail pieces meet straight through the new
    crossing, as do the head pieces.  Raises :class:`DiagramError` when this
    closes off a component the diagram does not allow.
    """
    if u >> 1 == w >> 1:
        raise DiagramError("crossing insertion needs two distinct edges")
    darts = d.faces[face].darts
    iu, iw = darts.index(u), darts.index(w)
    if iw < iu:
        u, w = w, u
    it = exploded_items(d)
    pieces = []
    drop = set()
    for dart in (u, w):
        e, k = dart >> 1, dart & 1
        pieces += [2 * e + 1 + k, 2 * e + 2 - k]
        drop.add(e)
    arcs = [a for e, a in enumerate(_edge_arcs(d, it)) if e not in drop]
    nodes = it.nodes + [(CROSSING, pieces, over)]
    return Diagram.build(
        Items(d.mode, nodes, it.ends, [x for a in arcs for x in a], []),
        allow_closed=d.allow_closed,
        multivertex=len(d.vertices) > 1,
    )


def _edge_arcs(d: Diagram, it: Items) -> list[list[tuple[int, int]]]:
    out = []
    i = 0
    for edge in d.edges:
        n = 2 if edge.is_free_loop else 1
        out.append(it.arcs[i:i + n])
        i += n
    return out


def random_insertion(d: Diagram, rng: random.Random) -> Diagram:
    faces = [f for f in d.faces if len({x >> 1 for x in f.darts}) >= 2]
    face = rng.randrange(len(faces))
    fi = d.faces.index(faces[face])
    darts = list(faces[face].darts)
    u = rng.choice(darts)
    w = rng.choice([x for x in darts if x >> 1 != u >> 1])
    return insert_crossing(d, fi, u, w, rng.randrange(2))


def random_shadow_tangle(rng: random.Random, size: int) -> Diagram:
    """A random 2-string tangle with exactly ``size`` crossings (over data arbitrary)."""
    t = trivial_tangle(vertical=rng.random() < 0.5)
    while t.n_crossings < size:
        room = size - t.n_crossings
        r = rng.random()
        try:
            if r < 0.25 and room >= 1:
                k = rng.randint(1, min(3, room))
                piece = twist_tangle(k, over=rng.randrange(2))
                if rng.random() < 0.5:
                    piece = quarter_rotation(piece)
                t = tangle_sum(t, piece) if rng.random() < 0.5 else tangle_sum(piece, t)
            elif r < 0.35:
                t = quarter_rotation(t)
            else:
                t = random_insertion(t, rng)
        except DiagramError:
            continue
    return t


def checkerboard(d: Diagram) -> list[int]:
    """Two-colouring of the faces; faces on either side of an edge differ."""
    n = len(d.faces)
    colour = [-1] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in range(len(d.edges)):
        a, b = d.edge_faces(e)
        adj[a].append(b)
        adj[b].append(a)
    for s in range(n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if colour[g] < 0:
                    colour[g] = 1 - colour[f]
                    stack.append(g)
    return colour


def make_alternating(d: Diagram, flip: bool = False) -> Diagram:
    """Reset every crossing from a checkerboard rule so the diagram alternates."""
    colour = checkerboard(d)
    it = d.to_items()
    nodes = []
    for i, (kind, labs, over) in enumerate(it.nodes):
        if kind == CROSSING:
            shaded = colour[d.corner_face(i, 0)] == 1
            over = 0 if shaded != flip else 1
        nodes.append((kind, labs, over))
    it.nodes = nodes
    return Diagram.build(it, allow_closed=d.allow_closed, multivertex=len(d.vertices) > 1)


def make_positive(d: Diagram, flips: tuple[int, ...]) -> Diagram:
    """Choose over-data so every crossing is positive for the given strand orientation."""
    o = orientation_from_strands(d, flips)
    signs = crossing_signs(d, o)
    it = d.to_items()
    it.nodes = [
        (k, labs, (1 - over) if k == CROSSING and signs[i] < 0 else over)
        for i, (k, labs, over) in enumerate(it.nodes)
    ]
    return Diagram.build(it, allow_closed=d.allow_closed)


def gen_alternating_tangle(seed: int, size: int) -> Diagram:
    """Connected tangle with ``size`` crossings whose D-closure is reduced and alternating."""
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = random.Random(f"alt-{seed}-{size}")
    for _ in range(MAX_TRIES):
        t = make_alternating(random_shadow_tangle(rng, size), flip=rng.random() < 0.5)
        if not is_connected(t)[0]:
            continue
        dc = denominator_closure(t)
        if is_reduced(dc)[0]:
            return t
    raise GenerationError(f"no alternating tangle found for seed={seed}, size={size}")


def gen_positive_tangle(seed: int, size: int) -> Diagram:
    """Connected tangle with ``size`` crossings whose D-closure is reduced and positive."""
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = random.Random(f"pos-{seed}-{size}")
    for _ in range(MAX_TRIES):
        t = random_shadow_tangle(rng, size)
        if not is_connected(t)[0]:
            continue
        dc = denominator_closure(t)
        if not is_reduced(dc)[0]:
            continue
        flips = tuple(rng.randrange(2) for _ in dc.strands)
        dc = make_positive(dc, flips)
        t = _transfer_overs(t, dc)
        return t
    raise GenerationError(f"no positive tangle found for seed={seed}, size={size}")


def _transfer_overs(t: Diagram, closure: Diagram) -> Diagram:
    """Copy over-data from a closure back onto the tangle (same node order)."""
    it = t.to_items()
    it.nodes = [(k, labs, closure.nodes[i].over) for i, (k, labs, _) in enumerate(it.nodes)]
    return Diagram.build(it, allow_closed=t.allow_closed)


def gen_reduced_alternating_link(seed: int, size: int) -> Diagram:
    """Connected reduced alternating link diagram with ``size`` crossings."""
    rng = random.Random(f"ral-{seed}-{size}")
    for _ in range(MAX_TRIES):
        t = random_shadow_tangle(rng, size)
        closure = numerator_closure(t) if rng.random() < 0.5 else denominator_closure(t)
        if not is_connected(closure)[0] or not is_reduced(closure)[0]:
            continue
        return make_alternating(closure, flip=rng.random() < 0.5)
    raise GenerationError(f"no reduced alternating link for seed={seed}, size={size}")


# -- figure-eight graphs with local knots ------------------------------------

@dataclass(frozen=True)
class LocalKnotSample:
    graph: Diagram
    knot: str
    route: str  # ground truth: "b" (vertex-split) or "c" (composite away from the vertex)


def tie_knot(g: Diagram, edge: int, knot: Diagram, knot_edge: int = 0) -> Diagram:
    """Tie ``knot`` into ``edge`` of ``g`` (a connected sum along that edge)."""
    ig = exploded_items(g)
    ik = exploded_items(knot, offset=ig.max_label())
    d = _splice(ig, ik, _arc_index(g, edge), _arc_index(knot, knot_edge), g.mode)
    return d


def _arc_index(d: Diagram, edge: int) -> int:
    return sum(2 if d.edges[e].is_free_loop else 1 for e in range(edge))


def crossing_to_vertex(link: Diagram, crossing: int) -> Diagram:
    it = link.to_items()
    nodes = [(VERTEX, labs, None) if i == crossing else (k, labs, o) for i, (k, labs, o) in enumerate(it.nodes)]
    return Diagram.build(Items(Mode.GRAPH8, nodes, {}, [], it.loops))


def _knot(rng: random.Random, name: str) -> Diagram:
    k = parse(KNOTS[name])
    return mirror(k) if rng.random() < 0.5 else k


def gen_local_knot_graph8(seed: int, knot: str = "trefoil", split: bool | None = None) -> LocalKnotSample:
    """Figure-eight graph diagram with ``knot`` tied locally into one loop.

    ``split=True`` keeps the knotted loop separated from the other by a
    circle through the vertex (ground truth route "b"); ``split=False``
    builds a prime, non-split base graph and ties the knot into an edge
    (route "c").  ``None`` picks from the seed.
    """
    if knot not in KNOTS:
        raise ValueError(f"unknown knot {knot!r}")
    rng = random.Random(f"lk-{seed}-{knot}-{split}")
    if split is None:
        split = rng.random() < 0.5
    if split:
        return LocalKnotSample(_split_local_knot(rng, knot), knot, "b")
    return LocalKnotSample(_composite_local_knot(rng, knot), knot, "c")


def _split_local_knot(rng: random.Random, knot: str) -> Diagram:
    # knotted loop on one side of the vertex, the other loop optionally twisted
    g = Diagram.build(Items(Mode.GRAPH8, [(VERTEX, [1, 2, 3, 4], None)], {}, [(1, 2), (3, 4)], []))
    k = _knot(rng, knot)
    g = tie_knot(g, rng.randrange(len(g.edges)), k, rng.randrange(len(k.edges)))
    if rng.random() < 0.5:
        other = _knot(rng, rng.choice(sorted(KNOTS)))
        loops = [s for s in g.strands if not s.passages]
        if loops:
            g = tie_knot(g, loops[0].edges[0], other, rng.randrange(len(other.edges)))
    return g


def prime_graph8_bases(link: Diagram) -> list[Diagram]:
    """Graphs obtained by turning one crossing of ``link`` into the vertex,
    kept when the result has no vertex-split circle, both vertex smoothings
    are reduced and the excised tangle is connected."""
    out = []
    for c in link.crossings:
        try:
            g = crossing_to_vertex(link, c)
        except DiagramError:
            continue
        if vertex_split_witness(g) is not None:
            continue
        if not all(is_reduced(smoothing(g, i))[0] for i in range(2)):
            continue
        if is_connected(excise_vertex(g))[0]:
            out.append(g)
    return out


def _composite_local_knot(rng: random.Random, knot: str) -> Diagram:
    for _ in range(MAX_TRIES):
        base_link = gen_reduced_alternating_link(rng.randrange(10**9), rng.randint(4, 8))
        bases = prime_graph8_bases(base_link)
        if not bases:
            continue
        g = rng.choice(bases)
        k = _knot(rng, knot)
        g = tie_knot(g, rng.randrange(len(g.edges)), k, rng.randrange(len(k.edges)))
        return make_alternating(g, flip=rng.random() < 0.5)
    raise GenerationError("no composite local-knot base found")
