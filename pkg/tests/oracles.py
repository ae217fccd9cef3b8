"""Brute-force reference implementations working directly on PD text.

Nothing here imports the package's traversal code: faces, components,
primeness and state circles are recomputed from the label lists alone.
"""

from __future__ import annotations

import re
from itertools import combinations

ITEM = re.compile(r"([XAO])\(([\d,]+)\)")


def pd_crossings(text: str) -> list[list[int]]:
    """Crossings of a link text as label lists, over-strand on slots 1 and 3."""
    out = []
    for kind, args in ITEM.findall(text):
        if kind == "X":
            out.append([int(x) for x in args.split(",")])
    return out


def pd_loops(text: str) -> int:
    return sum(1 for kind, _ in ITEM.findall(text) if kind == "O")


def occurrences(xs: list[list[int]]) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for c, labels in enumerate(xs):
        for s, lab in enumerate(labels):
            occ.setdefault(lab, []).append((c, s))
    return occ


def faces(xs: list[list[int]]) -> list[list[tuple[int, int]]]:
    """Face boundaries as lists of (crossing, slot) leaving positions.

    Leaving crossing c at slot s along label L, we arrive at the other
    occurrence (c', s') of L and leave again at slot s' - 1.
    """
    occ = occurrences(xs)
    seen = set()
    out = []
    for c, labels in enumerate(xs):
        for s in range(4):
            if (c, s) in seen:
                continue
            face = []
            cur = (c, s)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                lab = xs[cur[0]][cur[1]]
                a, b = occ[lab]
                other = b if a == cur else a
                cur = (other[0], (other[1] - 1) % 4)
            out.append(face)
    return out


def face_count(text: str) -> int:
    xs = pd_crossings(text)
    return len(faces(xs)) + 2 * pd_loops(text)


def _uf(n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    return find, union


def shadow_components(text: str) -> int:
    xs = pd_crossings(text)
    find, union = _uf(len(xs))
    occ = occurrences(xs)
    for places in occ.values():
        union(places[0][0], places[1][0])
    return len({find(i) for i in range(len(xs))}) + pd_loops(text)


def composite_by_exhaustion(text: str) -> bool:
    """All distinct edge pairs x all face pairs: a circle through faces F1, F2
    crossing edges e, f with crossings on both sides."""
    xs = pd_crossings(text)
    occ = occurrences(xs)
    fs = faces(xs)
    # labels on the boundary of each face
    face_labels = [{xs[c][s] for c, s in f} for f in fs]
    labels = sorted(occ)
    for e, f in combinations(labels, 2):
        for i, j in combinations(range(len(fs)), 2):
            if not ({e, f} <= face_labels[i] and {e, f} <= face_labels[j]):
                continue
            (c0, _), (c1, _) = occ[e]
            side0 = _reach(xs, occ, c0, {e, f})
            side1 = _reach(xs, occ, c1, {e, f})
            if side0 & side1:
                continue
            if side0 and side1:
                return True
    return False


def _reach(xs, occ, start, cut):
    seen = {start}
    stack = [start]
    while stack:
        c = stack.pop()
        for lab in xs[c]:
            if lab in cut:
                continue
            for c2, _ in occ[lab]:
                if c2 not in seen:
                    seen.add(c2)
                    stack.append(c2)
    return seen


def state_circles(text: str, kind: str) -> int:
    """Circles of the all-A or all-B state by union-find over labels."""
    xs = pd_crossings(text)
    labels = sorted(occurrences(xs))
    index = {lab: i for i, lab in enumerate(labels)}
    find, union = _uf(len(labels))
    for a, b, c, d in xs:
        if kind == "A":
            union(index[b], index[a])
            union(index[d], index[c])
        else:
            union(index[b], index[c])
            union(index[d], index[a])
    return len({find(i) for i in range(len(labels))}) + pd_loops(text)


def alternating_by_labels(text: str) -> bool:
    """Every edge joins an over-slot to an under-slot."""
    xs = pd_crossings(text)
    for places in occurrences(xs).values():
        (_, s0), (_, s1) = places
        if s0 % 2 == s1 % 2:
            return False
    return True


def nugatory_by_faces(text: str) -> list[int]:
    xs = pd_crossings(text)
    fs = faces(xs)
    where = {}
    for i, f in enumerate(fs):
        for c, s in f:
            where[(c, s)] = i
    # the sector between slot s and s+1 is the face leaving at slot s
    return [c for c in range(len(xs)) if where[(c, 0)] == where[(c, 2)] or where[(c, 1)] == where[(c, 3)]]
