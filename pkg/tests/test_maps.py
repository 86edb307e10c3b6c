import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from digicover.harness import connected_graphs, continuous_maps
from digicover.image import CU, DigitalImage, Explicit, gen_cycle, gen_interval
from digicover.maps import (
    DigitalMap,
    InvalidMapError,
    compose,
    find_isomorphism,
    identity,
    is_continuous,
    is_injective,
    is_isomorphism,
    is_surjective,
    restrict,
    restrict_to,
    sub_image,
    subgraphs_isomorphic,
)
from digicover.paper_suite import build_window_map

from strategies import images, maps


def mod_map(E, n):
    C = gen_cycle(n)
    return DigitalMap.from_function(E, C, lambda z: (z[0] % n,))


def test_continuity_examples():
    C4 = gen_cycle(4)
    const = DigitalMap.from_function(gen_interval(0, 5), C4, lambda z: (0,))
    assert is_continuous(const)
    assert is_continuous(mod_map(gen_interval(0, 12), 4))
    bad = DigitalMap(gen_interval(0, 1), gen_interval(0, 3), {(0,): (0,), (1,): (3,)})
    assert not is_continuous(bad)


def test_continuity_by_pairs_on_the_window():
    # every one of the 12 adjacent pairs lands on cyclically adjacent points
    p = mod_map(gen_interval(0, 12), 4)
    for z in range(12):
        a, b = p((z,))[0], p((z + 1,))[0]
        assert (b - a) % 4 == 1


def test_injective_surjective():
    C4 = gen_cycle(4)
    assert is_injective(identity(C4)) and is_surjective(identity(C4))
    p = mod_map(gen_interval(0, 12), 4)
    assert is_surjective(p) and not is_injective(p)
    inc = DigitalMap.from_function(gen_interval(0, 1), gen_interval(0, 3), lambda z: z)
    assert is_injective(inc) and not is_surjective(inc)


def test_isomorphism_examples():
    for X in (gen_cycle(5), gen_interval(0, 3), DigitalImage([(0, 0), (1, 1)], CU(2))):
        assert is_isomorphism(identity(X))
    n = 7
    C = gen_cycle(n)
    assert is_isomorphism(DigitalMap.from_function(C, C, lambda z: ((z[0] + 1) % n,)))
    T = DigitalImage([(0, 0), (1, 1), (2, 0)], CU(1))
    f = DigitalMap(gen_interval(0, 2), T, {(0,): (0, 0), (1,): (1, 1), (2,): (2, 0)})
    assert is_injective(f) and is_surjective(f)
    assert not is_isomorphism(f)


def test_map_validation():
    I = gen_interval(0, 2)
    with pytest.raises(InvalidMapError):
        DigitalMap(I, I, {(0,): (0,), (1,): (1,)})
    with pytest.raises(InvalidMapError):
        DigitalMap(I, I, {(0,): (0,), (1,): (1,), (2,): (5,)})
    with pytest.raises(InvalidMapError):
        DigitalMap(I, I, {(0,): (0,), (1,): (1,), (2,): (2,), (7,): (0,)})


def test_sub_image():
    C5 = gen_cycle(5)
    S = sub_image(C5, {(4,), (0,), (1,)})
    assert set(S.edges()) == {((0,), (1,)), ((0,), (4,))}
    assert S.parent is C5
    assert sub_image(C5, C5.points) == C5
    two = sub_image(C5, {(0,), (2,)})
    assert two.edges() == ()
    with pytest.raises(ValueError):
        sub_image(C5, [])
    with pytest.raises(ValueError):
        sub_image(C5, [(9,)])


def test_restrict():
    C5 = gen_cycle(5)
    N = {(4,), (0,), (1,)}
    r = restrict(identity(C5), N)
    assert is_isomorphism(r) and set(r.source.points) == N

    p = mod_map(gen_interval(0, 12), 4)
    r = restrict(p, {(3,), (4,), (5,)})
    assert r.assignment == {(3,): (3,), (4,): (0,), (5,): (1,)}
    assert set(r.target.points) == {(3,), (0,), (1,)}

    single = restrict(p, {(6,)})
    assert len(single.source) == 1 and single.assignment == {(6,): (2,)}

    with pytest.raises(InvalidMapError):
        restrict_to(p, {(4,)}, {(1,)})


def test_subgraphs_isomorphic_examples():
    P3a = sub_image(gen_interval(0, 5), {(0,), (1,), (2,)})
    P3b = sub_image(gen_cycle(6), {(5,), (0,), (1,)})
    assert subgraphs_isomorphic(P3a, P3b)
    triangle = DigitalImage([(0, 0), (1, 0), (0, 1)], CU(2))
    assert len(triangle.edges()) == 3
    assert not subgraphs_isomorphic(P3a, triangle)
    C5 = gen_cycle(5)
    assert subgraphs_isomorphic(sub_image(C5, {(4,), (0,), (1,)}), sub_image(C5, {(1,), (2,), (3,)}))


def _nx(X):
    g = nx.Graph()
    g.add_nodes_from(X.points)
    g.add_edges_from(X.edges())
    return g


def test_isomorphism_search_agrees_with_networkx_on_all_small_graphs():
    graphs = [G for k in range(1, 6) for G in connected_graphs(k)]
    # also disconnected ones: pairs of small graphs glued side by side
    for A, B in itertools.product(graphs, repeat=2):
        if len(A) != len(B):
            continue
        ours = find_isomorphism(A, B)
        assert (ours is not None) == nx.is_isomorphic(_nx(A), _nx(B))
        if ours is not None:
            assert is_isomorphism(DigitalMap(A, B, ours))


# -- properties ------------------------------------------------------------------


@given(maps())
def test_isomorphism_implies_continuous_bijection(f):
    if is_isomorphism(f):
        assert is_continuous(f) and is_injective(f) and is_surjective(f)
        assert subgraphs_isomorphic(f.source, f.target)


@given(maps())
def test_isomorphism_agrees_with_inverse_continuity(f):
    # the adjacency-both-ways test against the literal definition
    if is_injective(f) and is_surjective(f):
        inv = DigitalMap(f.target, f.source, {y: x for x, y in f.assignment.items()})
        assert is_isomorphism(f) == (is_continuous(f) and is_continuous(inv))


@settings(max_examples=60)
@given(images(max_points=4), images(max_points=4), images(max_points=4), st.randoms(use_true_random=False))
def test_composition_of_continuous_maps_is_continuous(X, Y, Z, rnd):
    fs = list(continuous_maps(X, Y))
    gs = list(continuous_maps(Y, Z))
    f, g = rnd.choice(fs), rnd.choice(gs)  # constant maps are always continuous
    assert is_continuous(compose(g, f))


@given(maps(), st.data())
def test_restriction_preserves_continuity(f, data):
    if not is_continuous(f):
        return
    S = data.draw(st.sets(st.sampled_from(f.source.points), min_size=1))
    assert is_continuous(restrict(f, S))


def test_isomorphism_relation_is_an_equivalence_on_small_images():
    pool = []
    for k in range(1, 5):
        pool += connected_graphs(k)
    pool += [DigitalImage(s, CU(u)) for s, u in [
        ([(0, 0), (1, 1)], 2), ([(0, 0), (1, 0), (0, 1)], 1), ([(0, 0), (1, 0), (0, 1)], 2),
        ([(0, 0), (1, 0), (0, 1), (1, 1)], 1), ([(0, 0), (2, 0), (4, 0), (6, 0), (8, 0)], 1)]]
    iso = {(i, j): subgraphs_isomorphic(A, B) for (i, A), (j, B) in itertools.product(enumerate(pool), repeat=2)}
    n = len(pool)
    for i in range(n):
        assert iso[i, i]
        for j in range(n):
            assert iso[i, j] == iso[j, i]
            for k in range(n):
                if iso[i, j] and iso[j, k]:
                    assert iso[i, k]


def test_window_map_is_continuous_surjection():
    p = build_window_map(5, 2)
    assert is_continuous(p) and is_surjective(p)
