"""
Planar diagrams of links, 2-string tangles and figure-eight spatial graphs.

A diagram is a 4-valent plane multigraph given by a rotation system.  Every
node has four slots listed counterclockwise; a strand entering slot ``i``
leaves through slot ``i + 2``.  Crossings additionally record which opposite
slot pair carries the over-strand.  Tangle diagrams live in a disk whose
boundary carries the four endpoints NW, NE, SE, SW; the four boundary gap
arcs take part in face walks so that every "circle in the disk" argument
becomes a question about faces.

Text format (whitespace-insensitive, ``#`` starts a comment)::

    link   { X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) }
    tangle { ends(nw=1,ne=2,se=3,sw=4) A(1,2) A(4,3) }
    graph8 { V(1,2,3,4) A(1,2) A(3,4) }

``X(a,b,c,d)`` lists edge labels counterclockwise starting at the incoming
under-strand, so the over-strand occupies slots 1 and 3.  ``V`` is a graph
vertex, ``A(a,b)`` a crossing-free arc joining two labels and ``O(a)`` a free
loop.  Every label is used exactly twice.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator, NamedTuple

NW, NE, SE, SW = "nw", "ne", "se", "sw"
COMPASS = (NW, NE, SE, SW)

# Counterclockwise around the disk: NE -> NW -> SW -> SE -> NE.
CCW_NEXT = {NE: NW, NW: SW, SW: SE, SE: NE}
CW_NEXT = {v: k for k, v in CCW_NEXT.items()}

# Boundary gap arcs, named by side of the disk, as (end0, end1).
GAPS = {"top": (NW, NE), "right": (NE, SE), "bottom": (SE, SW), "left": (SW, NW)}
GAP_NAMES = tuple(GAPS)

CROSSING = "crossing"
VERTEX = "vertex"


class Mode(str, Enum):
    LINK = "link"
    TANGLE = "tangle"
    GRAPH8 = "graph8"


class DiagramError(ValueError):
    """Raised when a diagram fails validation."""


class ParseError(DiagramError):
    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        if pos is not None and text is not None:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)


class HalfEdge(NamedTuple):
    edge: int
    end: int


class Port(NamedTuple):
    """Attachment point of an edge end: a node slot or a tangle endpoint."""

    node: int | None
    slot: int | None
    compass: str | None = None

    @property
    def is_boundary(self) -> bool:
        return self.compass is not None


@dataclass(frozen=True)
class Node:
    kind: str
    slots: tuple[HalfEdge, HalfEdge, HalfEdge, HalfEdge]
    # 1: slots (1,3) carry the over-strand, 0: slots (0,2).  None for vertices.
    over: int | None = None

    def is_over(self, slot: int) -> bool:
        return slot % 2 == self.over


@dataclass(frozen=True)
class Edge:
    ends: tuple[Port | None, Port | None]

    @property
    def is_free_loop(self) -> bool:
        return self.ends[0] is None


class Corner(NamedTuple):
    """The sector between ``slot`` and the next slot counterclockwise at a
    node (int) or boundary endpoint (compass string)."""

    vertex: int | str
    slot: int


@dataclass(frozen=True)
class Face:
    darts: tuple[int, ...]
    corners: tuple[Corner, ...]
    gaps: tuple[str, ...] = ()

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(d >> 1 for d in self.darts)

    def __len__(self) -> int:
        return len(self.corners)


@dataclass(frozen=True)
class Passage:
    node: int
    slot_in: int
    over: bool


@dataclass(frozen=True)
class Strand:
    """A maximal straight-through path (open) or cycle (closed).

    ``darts`` are the traversed edge directions; dart ``2e + k`` runs along
    edge ``e`` from end ``k`` to end ``1 - k``.
    """

    darts: tuple[int, ...]
    passages: tuple[Passage, ...]
    closed: bool
    start: Port | None = None
    stop: Port | None = None

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.darts)


@dataclass
class Items:
    """Label-level form of a diagram; the currency of all constructions."""

    mode: Mode
    nodes: list[tuple[str, list[int], int | None]] = field(default_factory=list)
    ends: dict[str, int] = field(default_factory=dict)
    arcs: list[tuple[int, int]] = field(default_factory=list)
    loops: list[int] = field(default_factory=list)

    def max_label(self) -> int:
        labels = [lab for _, labs, _ in self.nodes for lab in labs]
        labels += list(self.ends.values()) + [x for a in self.arcs for x in a] + self.loops
        return max(labels, default=0)

    def shifted(self, offset: int) -> Items:
        return Items(
            self.mode,
            [(k, [lab + offset for lab in labs], o) for k, labs, o in self.nodes],
            {c: lab + offset for c, lab in self.ends.items()},
            [(a + offset, b + offset) for a, b in self.arcs],
            [lab + offset for lab in self.loops],
        )


class _Map:
    """Rotation-system view used for face walks, including boundary gaps."""

    def __init__(self, d: Diagram):
        n = len(d.nodes)
        m = len(d.edges)
        self.n_nodes = n
        self.n_real_edges = m
        vertex_of_compass = {}
        if d.mode is Mode.TANGLE:
            for i, c in enumerate(COMPASS):
                vertex_of_compass[c] = n + i
        n_vertices = n + len(vertex_of_compass)
        self.gap_edge = {}
        ends: list[tuple[int, int]] = []
        loop_vertex = {}
        for e, edge in enumerate(d.edges):
            if edge.is_free_loop:
                loop_vertex[e] = n_vertices
                n_vertices += 1
                ends.append((loop_vertex[e], loop_vertex[e]))
            else:
                ends.append(tuple(
                    vertex_of_compass[p.compass] if p.is_boundary else p.node for p in edge.ends
                ))
        if d.mode is Mode.TANGLE:
            for name, (a, b) in GAPS.items():
                self.gap_edge[name] = len(ends)
                ends.append((vertex_of_compass[a], vertex_of_compass[b]))
        self.n_vertices = n_vertices
        self.n_edges = len(ends)
        self.origin = [0] * (2 * len(ends))
        for e, (a, b) in enumerate(ends):
            self.origin[2 * e] = a
            self.origin[2 * e + 1] = b
        rot: list[list[int]] = [[] for _ in range(n_vertices)]
        for v, node in enumerate(d.nodes):
            rot[v] = [2 * h.edge + h.end for h in node.slots]
        gap_of = {}
        for name, (a, b) in GAPS.items():
            gap_of[(a, b)] = 2 * self.gap_edge.get(name, 0)
            gap_of[(b, a)] = 2 * self.gap_edge.get(name, 0) + 1
        for c, v in vertex_of_compass.items():
            h = d.endpoints[c]
            rot[v] = [gap_of[(c, CW_NEXT[c])], gap_of[(c, CCW_NEXT[c])], 2 * h.edge + h.end]
        for e, v in loop_vertex.items():
            rot[v] = [2 * e, 2 * e + 1]
        self.rot = rot
        self.pos = [0] * len(self.origin)
        for v, darts in enumerate(rot):
            for i, dart in enumerate(darts):
                self.pos[dart] = i
        self.vertex_of_compass = vertex_of_compass
        self.compass_of_vertex = {v: c for c, v in vertex_of_compass.items()}
        self.loop_vertex = loop_vertex

    def next_dart(self, dart: int) -> int:
        back = dart ^ 1
        h = self.origin[back]
        darts = self.rot[h]
        return darts[(self.pos[back] - 1) % len(darts)]

    def walk_faces(self) -> list[list[int]]:
        seen = [False] * len(self.origin)
        faces = []
        for start in range(len(self.origin)):
            if seen[start]:
                continue
            cycle = []
            d = start
            while not seen[d]:
                seen[d] = True
                cycle.append(d)
                d = self.next_dart(d)
            faces.append(cycle)
        return faces

    def component_roots(self) -> list[int]:
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in range(self.n_edges):
            a, b = find(self.origin[2 * e]), find(self.origin[2 * e + 1])
            if a != b:
                parent[a] = b
        return [find(v) for v in range(self.n_vertices)]

    def components(self) -> list[set[int]]:
        groups: dict[int, set[int]] = {}
        for v, r in enumerate(self.component_roots()):
            groups.setdefault(r, set()).add(v)
        return list(groups.values())


@dataclass(frozen=True, eq=False)
class Diagram:
    mode: Mode
    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]
    endpoints: dict[str, HalfEdge] = field(default_factory=dict)
    allow_closed: bool = False

    # -- construction ---------------------------------------------------

    @classmethod
    def build(cls, items: Items, *, allow_closed: bool = False, multivertex: bool = False) -> Diagram:
        """Glue labelled items into a validated diagram."""
        mode = items.mode
        occ: dict[int, list[tuple]] = {}

        def note(label, where):
            if not isinstance(label, int) or label < 1:
                raise DiagramError(f"labels must be positive integers, got {label!r}")
            occ.setdefault(label, []).append(where)

        for i, (kind, labels, over) in enumerate(items.nodes):
            if len(labels) != 4:
                raise DiagramError(f"node {i} has {len(labels)} slots, expected 4")
            if kind == CROSSING and over not in (0, 1):
                raise DiagramError(f"crossing {i} has invalid over-pair {over!r}")
            for s, lab in enumerate(labels):
                note(lab, ("node", i, s))
        for c, lab in items.ends.items():
            note(lab, ("end", c))
        for j, (a, b) in enumerate(items.arcs):
            note(a, ("arc", j, 0))
            note(b, ("arc", j, 1))
        for j, a in enumerate(items.loops):
            note(a, ("loop", j, 0))
            note(a, ("loop", j, 1))
        for lab, places in occ.items():
            if len(places) != 2:
                raise DiagramError(f"label {lab} used {len(places)} times, expected exactly 2")

        label_at = {}
        for lab, places in occ.items():
            for p in places:
                label_at[p] = lab

        def partner(where):
            a, b = occ[label_at[where]]
            return b if a == where else a

        def port(where) -> Port:
            if where[0] == "node":
                return Port(where[1], where[2])
            return Port(None, None, where[1])

        terminals = [("node", i, s) for i in range(len(items.nodes)) for s in range(4)]
        terminals += [("end", c) for c in COMPASS if c in items.ends]
        visited = set()
        visited_arcs = set()
        edge_ends: list[tuple[Port | None, Port | None]] = []
        for t in terminals:
            if t in visited:
                continue
            cur = partner(t)
            while cur[0] == "arc":
                visited_arcs.add(cur[1])
                cur = partner(("arc", cur[1], 1 - cur[2]))
            if cur[0] == "loop":
                raise DiagramError(f"label {label_at[cur]} is both a free loop and attached")
            visited.add(t)
            visited.add(cur)
            edge_ends.append((port(t), port(cur)))
        # whatever remains is made of arcs and loops only: free loops
        for j in range(len(items.arcs)):
            if j in visited_arcs:
                continue
            cur = ("arc", j, 0)
            while True:
                visited_arcs.add(cur[1])
                nxt = partner(("arc", cur[1], 1 - cur[2]))
                if nxt[0] != "arc":
                    raise DiagramError(f"label {label_at[nxt]} mixes free loops with arcs")
                if nxt[1] == j:
                    break
                cur = nxt
            edge_ends.append((None, None))
        edge_ends.extend((None, None) for _ in items.loops)

        half_at: dict[tuple, HalfEdge] = {}
        for e, (p, q) in enumerate(edge_ends):
            for k, pt in enumerate((p, q)):
                if pt is None:
                    continue
                key = ("end", pt.compass) if pt.is_boundary else ("node", pt.node, pt.slot)
                half_at[key] = HalfEdge(e, k)
        nodes = tuple(
            Node(kind, tuple(half_at[("node", i, s)] for s in range(4)), over if kind == CROSSING else None)
            for i, (kind, _, over) in enumerate(items.nodes)
        )
        endpoints = {c: half_at[("end", c)] for c in COMPASS if c in items.ends}
        d = cls(mode, nodes, tuple(Edge(e) for e in edge_ends), endpoints, allow_closed)
        d._validate(multivertex=multivertex)
        return d

    def _validate(self, multivertex: bool = False) -> None:
        n_vertices = sum(1 for nd in self.nodes if nd.kind == VERTEX)
        if self.mode is Mode.LINK:
            if n_vertices or self.endpoints:
                raise DiagramError("link diagrams take no vertices and no endpoints")
            if not self.edges:
                raise DiagramError("empty link diagram")
        elif self.mode is Mode.TANGLE:
            if n_vertices:
                raise DiagramError("tangle diagrams take no graph vertices")
            if set(self.endpoints) != set(COMPASS):
                raise DiagramError("tangle needs ends(nw=..,ne=..,se=..,sw=..)")
        elif self.mode is Mode.GRAPH8:
            if self.endpoints:
                raise DiagramError("graph8 diagrams take no endpoints")
            if n_vertices == 0 or (n_vertices > 1 and not multivertex):
                raise DiagramError(
                    f"graph8 needs exactly one vertex, found {n_vertices} "
                    "(multi-vertex graphs are outside the certified range)"
                )
        self._check_planar()
        closed = [s for s in self.strands if s.closed]
        if self.mode is Mode.TANGLE and closed and not self.allow_closed:
            raise DiagramError(f"tangle has {len(closed)} closed component(s)")
        if self.mode is Mode.GRAPH8 and closed:
            raise DiagramError("graph8 has a closed component avoiding the vertex")

    def _check_planar(self) -> None:
        m = self._map
        face_of = self._face_of_dart
        root = m.component_roots()
        chi: dict[int, int] = {}
        for v in range(m.n_vertices):
            chi[root[v]] = chi.get(root[v], 0) + 1
        for e in range(m.n_edges):
            chi[root[m.origin[2 * e]]] -= 1
        seen = set()
        for dart, f in enumerate(face_of):
            if f not in seen:
                seen.add(f)
                chi[root[m.origin[dart]]] += 1
        for value in chi.values():
            if value != 2:
                raise DiagramError(f"rotation data is not planar: V - E + F = {value} for a component")

    # -- cached structure ------------------------------------------------

    @cached_property
    def _map(self) -> _Map:
        return _Map(self)

    @cached_property
    def _raw_faces(self) -> list[list[int]]:
        return self._map.walk_faces()

    @cached_property
    def _face_of_dart(self) -> list[int]:
        out = [0] * len(self._map.origin)
        for i, cyc in enumerate(self._raw_faces):
            for dart in cyc:
                out[dart] = i
        return out

    @cached_property
    def _outer_raw(self) -> int | None:
        if self.mode is not Mode.TANGLE:
            return None
        m = self._map
        return self._face_of_dart[m.rot[m.vertex_of_compass[NW]][0]]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """Faces of the sphere (or of the disk, for tangles), deterministic order."""
        m = self._map
        out = []
        gap_names = {e: name for name, e in m.gap_edge.items()}
        for i, cyc in enumerate(self._raw_faces):
            if i == self._outer_raw:
                continue
            corners = []
            gaps = []
            for dart in cyc:
                nxt = m.next_dart(dart)
                h = m.origin[nxt]
                if h < m.n_nodes:
                    corners.append(Corner(h, m.pos[nxt]))
                elif h in m.compass_of_vertex:
                    corners.append(Corner(m.compass_of_vertex[h], m.pos[nxt]))
                if (dart >> 1) in gap_names:
                    gaps.append(gap_names[dart >> 1])
            real = tuple(dd for dd in cyc if (dd >> 1) < m.n_real_edges)
            out.append(Face(real, tuple(corners), tuple(gaps)))
        return tuple(out)

    @cached_property
    def dart_face(self) -> dict[int, int]:
        """Public face index of every real dart (the face on its left)."""
        index = {}
        k = 0
        for i in range(len(self._raw_faces)):
            if i == self._outer_raw:
                continue
            index[i] = k
            k += 1
        return {d: index[self._face_of_dart[d]] for d in range(2 * len(self.edges))}

    def corner_face(self, node: int, slot: int) -> int:
        """Face containing the sector between ``slot`` and ``slot + 1``."""
        return self.dart_face[self._map.rot[node][slot % 4]]

    def edge_faces(self, e: int) -> tuple[int, int]:
        return self.dart_face[2 * e], self.dart_face[2 * e + 1]

    @cached_property
    def strands(self) -> tuple[Strand, ...]:
        out = []
        used = set()
        starts: list[tuple[int, Port]] = []
        if self.mode is Mode.TANGLE:
            for c in COMPASS:
                h = self.endpoints.get(c)
                if h is not None:
                    starts.append((2 * h.edge + h.end, Port(None, None, c)))
        for v, node in enumerate(self.nodes):
            if node.kind == VERTEX:
                for s, h in enumerate(node.slots):
                    starts.append((2 * h.edge + h.end, Port(v, s)))
        for dart, port in starts:
            if dart >> 1 in used:
                continue
            darts, passages, stop = self._trace(dart, closed_ok=False)
            used.update(x >> 1 for x in darts)
            out.append(Strand(tuple(darts), tuple(passages), False, port, stop))
        for e, edge in enumerate(self.edges):
            if e in used:
                continue
            darts, passages, _ = self._trace(2 * e, closed_ok=True)
            used.update(x >> 1 for x in darts)
            out.append(Strand(tuple(darts), tuple(passages), True))
        return tuple(out)

    def _trace(self, dart: int, closed_ok: bool):
        darts = []
        passages = []
        start = dart
        while True:
            darts.append(dart)
            e, k = dart >> 1, dart & 1
            p = self.edges[e].ends[1 - k]
            if p is None:
                return darts, passages, None
            if p.is_boundary:
                return darts, passages, p
            node = self.nodes[p.node]
            if node.kind == VERTEX:
                return darts, passages, p
            passages.append(Passage(p.node, p.slot, node.is_over(p.slot)))
            h = node.slots[(p.slot + 2) % 4]
            dart = 2 * h.edge + h.end
            if dart == start:
                return darts, passages, None

    # -- convenience -----------------------------------------------------

    @property
    def crossings(self) -> list[int]:
        return [i for i, nd in enumerate(self.nodes) if nd.kind == CROSSING]

    @property
    def vertices(self) -> list[int]:
        return [i for i, nd in enumerate(self.nodes) if nd.kind == VERTEX]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return sum(1 for s in self.strands if s.closed)

    def euler_characteristic(self) -> int:
        m = self._map
        return m.n_vertices - m.n_edges + len(self._raw_faces)

    def to_items(self) -> Items:
        """Label form: edge ``e`` carries label ``e + 1`` at both of its ends."""
        nodes = [(nd.kind, [h.edge + 1 for h in nd.slots], nd.over) for nd in self.nodes]
        ends = {c: h.edge + 1 for c, h in self.endpoints.items()}
        loops = [e + 1 for e, edge in enumerate(self.edges) if edge.is_free_loop]
        return Items(self.mode, nodes, ends, [], loops)

    def __repr__(self) -> str:
        return f"<Diagram {self.mode.value}: {self.n_crossings} crossings, {len(self.edges)} edges>"

    def __str__(self) -> str:
        return serialize(self)


# -- text format -------------------------------------------------------------

_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[{}(),=])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup:
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


def parse(text: str, *, allow_closed: bool = False, multivertex: bool = False) -> Diagram:
    """Parse diagram source text into a validated :class:`Diagram`."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def expect(kind, value=None):
        nonlocal i
        tk = toks[i]
        if tk[0] != kind or (value is not None and tk[1] != value):
            want = value or kind
            got = tk[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", tk[2], text)
        i += 1
        return tk

    def int_list(n):
        expect("punct", "(")
        vals = []
        for j in range(n):
            if j:
                expect("punct", ",")
            vals.append(int(expect("int")[1]))
        expect("punct", ")")
        return vals

    head = toks[0]
    if head[0] != "name":
        raise ParseError("expected a diagram kind (link, tangle or graph8)", head[2], text)
    i = 1
    try:
        mode = Mode(head[1].lower())
    except ValueError:
        raise ParseError(f"unknown diagram kind {head[1]!r}", head[2], text) from None
    expect("punct", "{")
    items = Items(mode)
    while peek()[1] != "}":
        tk = expect("name")
        word = tk[1]
        if word == "X":
            items.nodes.append((CROSSING, int_list(4), 1))
        elif word == "V":
            if mode is not Mode.GRAPH8:
                raise ParseError("vertices are only allowed in graph8 diagrams", tk[2], text)
            items.nodes.append((VERTEX, int_list(4), None))
        elif word == "A":
            a, b = int_list(2)
            items.arcs.append((a, b))
        elif word == "O":
            items.loops.append(int_list(1)[0])
        elif word == "ends":
            if mode is not Mode.TANGLE:
                raise ParseError("ends(...) is only allowed in tangle diagrams", tk[2], text)
            if items.ends:
                raise ParseError("duplicate ends(...) declaration", tk[2], text)
            expect("punct", "(")
            while True:
                key = expect("name")
                if key[1].lower() not in COMPASS or key[1].lower() in items.ends:
                    raise ParseError(f"bad endpoint name {key[1]!r}", key[2], text)
                expect("punct", "=")
                items.ends[key[1].lower()] = int(expect("int")[1])
                if peek()[1] == ",":
                    i += 1
                    continue
                expect("punct", ")")
                break
        else:
            raise ParseError(f"unknown item {word!r}", tk[2], text)
    expect("punct", "}")
    expect("eof")
    return Diagram.build(items, allow_closed=allow_closed, multivertex=multivertex)


def serialize(d: Diagram) -> str:
    """Canonical text for ``d``; ``parse(serialize(d))`` is isomorphic to ``d``."""
    parts = []
    if d.mode is Mode.TANGLE:
        ends = ",".join(f"{c}={d.endpoints[c].edge + 1}" for c in COMPASS)
        parts.append(f"ends({ends})")
    for nd in d.nodes:
        labels = [h.edge + 1 for h in nd.slots]
        if nd.kind == VERTEX:
            parts.append("V({})".format(",".join(map(str, labels))))
        else:
            if nd.over == 0:
                labels = labels[1:] + labels[:1]
            parts.append("X({})".format(",".join(map(str, labels))))
    for e, edge in enumerate(d.edges):
        if edge.is_free_loop:
            parts.append(f"O({e + 1})")
    return f"{d.mode.value} {{ {' '.join(parts)} }}"


def rebuild(d: Diagram, items: Items, **kw) -> Diagram:
    kw.setdefault("allow_closed", d.allow_closed)
    return Diagram.build(items, **kw)


# -- isomorphism --------------------------------------------------------------

def _component_code(d: Diagram, m: _Map, start_vertex: int, base: int) -> tuple:
    label = {start_vertex: (0, base)}
    queue = [start_vertex]
    code = []
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        _, b = label[v]
        darts = m.rot[v]
        deg = len(darts)
        if v < m.n_nodes:
            nd = d.nodes[v]
            info = (nd.kind, None if nd.over is None else (nd.over - b) % 2)
        elif v in m.compass_of_vertex:
            info = ("end", m.compass_of_vertex[v])
        else:
            info = ("loop",)
        row = [info]
        for j in range(deg):
            dart = darts[(b + j) % deg]
            w = m.origin[dart ^ 1]
            sw = m.pos[dart ^ 1]
            if w not in label:
                label[w] = (len(label), sw)
                queue.append(w)
            lw, bw = label[w]
            row.append((lw, (sw - bw) % len(m.rot[w])))
        code.append(tuple(row))
    return tuple(code), frozenset(label)


def canonical_code(d: Diagram) -> tuple:
    """Invariant of diagrams up to orientation-preserving relabelling."""
    m = d._map
    comps = []
    for comp in m.components():
        boundary = [v for v in comp if v in m.compass_of_vertex]
        if boundary:
            starts = [(m.vertex_of_compass[NW], 0)]
        else:
            nodes = sorted(v for v in comp if v < m.n_nodes)
            if not nodes:
                comps.append((("loop",),))
                continue
            vertex_nodes = [v for v in nodes if d.nodes[v].kind == VERTEX]
            pool = vertex_nodes or nodes
            starts = [(v, b) for v in pool for b in range(4)]
        comps.append(min(_component_code(d, m, v, b)[0] for v, b in starts))
    return (d.mode.value, tuple(sorted(comps)))


def isomorphic(a: Diagram, b: Diagram) -> bool:
    if a.mode is not b.mode or len(a.nodes) != len(b.nodes) or len(a.edges) != len(b.edges):
        return False
    return canonical_code(a) == canonical_code(b)


def iter_darts(d: Diagram) -> Iterator[int]:
    return iter(range(2 * len(d.edges)))
