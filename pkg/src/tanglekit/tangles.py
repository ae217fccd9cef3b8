"""Two-string tangle diagrams: closures, sums, rotations, strong alternation,
MOF, primeness and string separation."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import COMPASS, NE, NW, SE, SW, Diagram, DiagramError, Items, Mode
from .links import (
    CompositeWitness,
    StateKind,
    composite_witnesses,
    is_alternating,
    is_connected,
    is_positive_diagram,
    is_reduced,
    is_twist_adequate_kind,
)


@dataclass(frozen=True)
class TangleSplitWitness:
    face: int
    gaps: tuple[str, str]


@dataclass(frozen=True)
class MofReport:
    reduced_N: bool
    reduced_D: bool
    alternating_N: bool
    alternating_D: bool
    positive_N: bool
    positive_D: bool
    connected_N: bool
    connected_D: bool
    twistA: bool
    twistB: bool
    satisfied: str  # "M", "O", "F" or "none"

    def flags(self) -> dict[str, bool]:
        return {k: v for k, v in self.__dict__.items() if k != "satisfied"}


def exploded_items(d: Diagram, offset: int = 0) -> Items:
    """Label form with distinct labels at the two ends of each edge.

    Edge ``e`` gets ``2e+1`` at end 0 and ``2e+2`` at end 1, joined by an arc,
    so that gluing never has to deal with an edge touching two endpoints.
    """
    def lab(h):
        return offset + 2 * h.edge + 1 + h.end

    nodes = [(nd.kind, [lab(h) for h in nd.slots], nd.over) for nd in d.nodes]
    ends = {c: lab(h) for c, h in d.endpoints.items()}
    arcs = []
    for e, edge in enumerate(d.edges):
        arcs.append((offset + 2 * e + 1, offset + 2 * e + 2))
        if edge.is_free_loop:
            arcs.append((offset + 2 * e + 1, offset + 2 * e + 2))
    return Items(d.mode, nodes, ends, arcs, [])


def _require_tangle(t: Diagram) -> None:
    if t.mode is not Mode.TANGLE:
        raise DiagramError("expected a tangle diagram")


def _close(t: Diagram, pairs) -> Diagram:
    _require_tangle(t)
    it = exploded_items(t)
    arcs = it.arcs + [(it.ends[a], it.ends[b]) for a, b in pairs]
    return Diagram.build(Items(Mode.LINK, it.nodes, {}, arcs, []))


def numerator_closure(t: Diagram) -> Diagram:
    return _close(t, [(NW, NE), (SW, SE)])


def denominator_closure(t: Diagram) -> Diagram:
    return _close(t, [(NW, SW), (NE, SE)])


def tangle_sum(t1: Diagram, t2: Diagram, *, allow_closed: bool = False) -> Diagram:
    """Place ``t2`` to the right of ``t1``."""
    _require_tangle(t1)
    _require_tangle(t2)
    a = exploded_items(t1)
    b = exploded_items(t2, offset=a.max_label())
    arcs = a.arcs + b.arcs + [(a.ends[NE], b.ends[NW]), (a.ends[SE], b.ends[SW])]
    ends = {NW: a.ends[NW], NE: b.ends[NE], SE: b.ends[SE], SW: a.ends[SW]}
    return Diagram.build(
        Items(Mode.TANGLE, a.nodes + b.nodes, ends, arcs, []),
        allow_closed=allow_closed or t1.allow_closed or t2.allow_closed,
    )


def _permute_ends(t: Diagram, new_from_old: dict[str, str]) -> Diagram:
    _require_tangle(t)
    it = exploded_items(t)
    ends = {new: it.ends[old] for new, old in new_from_old.items()}
    return Diagram.build(Items(Mode.TANGLE, it.nodes, ends, it.arcs, []), allow_closed=t.allow_closed)


def pi_rotation(t: Diagram) -> Diagram:
    return _permute_ends(t, {NW: SE, SE: NW, NE: SW, SW: NE})


def quarter_rotation(t: Diagram) -> Diagram:
    """Rotate a quarter turn clockwise: the NW endpoint moves to NE."""
    return _permute_ends(t, {NE: NW, SE: NE, SW: SE, NW: SW})


def is_strongly_alternating(t: Diagram) -> bool:
    if t.n_crossings == 0:
        return False
    for closure in (numerator_closure(t), denominator_closure(t)):
        if not (is_reduced(closure)[0] and is_alternating(closure)):
            return False
    return True


def mof(t: Diagram) -> MofReport:
    _require_tangle(t)
    n, d = numerator_closure(t), denominator_closure(t)
    red_n, red_d = is_reduced(n)[0], is_reduced(d)[0]
    alt_n, alt_d = is_alternating(n), is_alternating(d)
    pos_n, pos_d = is_positive_diagram(n), is_positive_diagram(d)
    con_n, con_d = is_connected(n)[0], is_connected(d)[0]
    tw_a = is_twist_adequate_kind(n, StateKind.A) and is_twist_adequate_kind(d, StateKind.A)
    tw_b = is_twist_adequate_kind(n, StateKind.B) and is_twist_adequate_kind(d, StateKind.B)
    satisfied = "none"
    if t.n_crossings >= 1 and red_n and red_d:
        if alt_n or alt_d:
            satisfied = "M"
        elif pos_n or pos_d:
            satisfied = "O"
        elif con_n and con_d and (tw_a or tw_b):
            satisfied = "F"
    return MofReport(red_n, red_d, alt_n, alt_d, pos_n, pos_d, con_n, con_d, tw_a, tw_b, satisfied)


def is_prime_tangle_projection(t: Diagram) -> tuple[bool, CompositeWitness | None]:
    _require_tangle(t)
    w = next(composite_witnesses(t), None)
    return w is None, w


def tangle_composite_witnesses(t: Diagram):
    _require_tangle(t)
    return composite_witnesses(t)


def split_tangle_witness(t: Diagram) -> TangleSplitWitness | None:
    """A face meeting two opposite boundary gaps: its chord separates the strings."""
    _require_tangle(t)
    for fi, face in enumerate(t.faces):
        gaps = set(face.gaps)
        for pair in (("top", "bottom"), ("left", "right")):
            if set(pair) <= gaps:
                return TangleSplitWitness(fi, pair)
    return None


def string_endpoints(t: Diagram) -> list[tuple[str, str]]:
    """The endpoint pair of each string, in strand order."""
    out = []
    for s in t.strands:
        if not s.closed:
            out.append((s.start.compass, s.stop.compass))
    return out


def trivial_tangle(vertical: bool = False) -> Diagram:
    pairs = [(NW, SW), (NE, SE)] if vertical else [(NW, NE), (SW, SE)]
    ends = {c: i + 1 for i, c in enumerate(COMPASS)}
    arcs = [(ends[a], ends[b]) for a, b in pairs]
    return Diagram.build(Items(Mode.TANGLE, [], ends, arcs, []))
