from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from tanglekit import DiagramError, isomorphic, serialize
from tanglekit import links as lk
from tanglekit import tangles as tg
from tanglekit.genlab import (
    GenerationError,
    checkerboard,
    default_seed,
    gen_alternating_tangle,
    gen_local_knot_graph8,
    gen_positive_tangle,
    gen_pretzel,
    gen_reduced_alternating_link,
    gen_torus2,
    insert_crossing,
    make_alternating,
    random_shadow_tangle,
)


def test_determinism():
    assert serialize(gen_alternating_tangle(7, 6)) == serialize(gen_alternating_tangle(7, 6))
    assert serialize(gen_positive_tangle(7, 6)) == serialize(gen_positive_tangle(7, 6))
    a = gen_local_knot_graph8(3)
    b = gen_local_knot_graph8(3)
    assert serialize(a.graph) == serialize(b.graph) and a.route == b.route


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("TANGLEKIT_SEED", "42")
    assert default_seed() == 42
    monkeypatch.delenv("TANGLEKIT_SEED")
    assert default_seed() == 0


def test_size_one_tangles_exhaust():
    # both closures of a one-crossing tangle have a nugatory crossing
    with pytest.raises(GenerationError):
        gen_alternating_tangle(0, 1)


def test_bad_parameters():
    with pytest.raises(ValueError):
        gen_torus2(0)
    with pytest.raises(ValueError):
        gen_pretzel(0, 2, 3)
    with pytest.raises(ValueError):
        gen_local_knot_graph8(0, "unknot")


@pytest.mark.parametrize("n", range(2, 13))
def test_torus_links(n):
    d = gen_torus2(n)
    assert d.n_crossings == n
    assert lk.is_reduced(d)[0] and lk.is_alternating(d)


@pytest.mark.parametrize("pqr", [(2, 2, 2), (2, 3, 5), (3, 3, 3), (-2, 3, 4), (5, 5, 5)])
def test_pretzels(pqr):
    d = gen_pretzel(*pqr)
    assert d.n_crossings == sum(map(abs, pqr))
    assert lk.is_connected(d)[0] and lk.is_reduced(d)[0]
    assert lk.is_alternating(d) == (min(pqr) > 0 or max(pqr) < 0)


def test_pretzel_mirror_symmetry():
    from tanglekit.genlab import mirror

    assert isomorphic(mirror(gen_pretzel(2, 3, 4)), gen_pretzel(-2, -3, -4))


@given(st.integers(0, 10_000), st.integers(1, 10))
def test_random_shadow_size(seed, size):
    t = random_shadow_tangle(random.Random(seed), size)
    assert t.n_crossings == size
    assert len(tg.string_endpoints(t)) == 2


@given(st.integers(0, 10_000), st.integers(2, 10))
def test_checkerboard_colours_faces(seed, size):
    t = gen_alternating_tangle(seed, size)
    d = tg.denominator_closure(t)
    colour = checkerboard(d)
    for e in range(len(d.edges)):
        a, b = d.edge_faces(e)
        assert colour[a] != colour[b]


@given(st.integers(0, 10_000), st.integers(2, 10))
def test_make_alternating_keeps_shadow(seed, size):
    d = gen_reduced_alternating_link(seed, size)
    flipped = make_alternating(d, flip=True)
    assert lk.is_alternating(flipped)
    assert flipped.n_crossings == d.n_crossings
    assert len(flipped.faces) == len(d.faces)


def test_insert_crossing_adds_one():
    t = gen_alternating_tangle(2, 3)
    made = 0
    for fi, face in enumerate(t.faces):
        for u in face.darts:
            for w in face.darts:
                if u >> 1 == w >> 1:
                    continue
                try:
                    bigger = insert_crossing(t, fi, u, w, 1)
                except DiagramError:
                    continue
                assert bigger.n_crossings == 4
                made += 1
    assert made > 0


@given(st.integers(0, 10_000), st.integers(2, 10))
def test_reduced_alternating_links(seed, size):
    d = gen_reduced_alternating_link(seed, size)
    assert d.n_crossings == size
    assert lk.is_connected(d)[0] and lk.is_reduced(d)[0] and lk.is_alternating(d)
