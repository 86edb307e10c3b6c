import itertools

import pytest
from hypothesis import given, strategies as st

from digicover.image import (
    CU,
    DigitalImage,
    DigitalTopologyError,
    Explicit,
    InvalidImageError,
    PointNotInImageError,
    adjacent,
    cu_adjacent,
    cycle_point,
    gen_cycle,
    gen_cycle_rect,
    gen_interval,
    gen_window,
    is_connected,
    is_path,
    is_simple_closed_curve,
    neighborhood_closed,
    neighbors_strict,
    shortest_path,
)

from strategies import images, lattice_images


def P(*zs):
    return {(z,) for z in zs}


def test_cu_adjacent_examples():
    assert cu_adjacent((0, 0), (1, 0), 1)
    assert not cu_adjacent((0, 0), (0, 0), 2)
    assert not cu_adjacent((0, 0), (1, 1), 1)
    assert cu_adjacent((0, 0), (1, 1), 2)


def test_cu_neighbor_counts_match_offset_enumeration():
    # 4-, 8-, 6-, 18- and 26-neighborhoods of the origin
    for dim, u, expected in [(2, 1, 4), (2, 2, 8), (3, 1, 6), (3, 2, 18), (3, 3, 26), (1, 1, 2)]:
        origin = (0,) * dim
        box = itertools.product((-1, 0, 1), repeat=dim)
        assert sum(cu_adjacent(origin, y, u) for y in box) == expected


def test_cu_adjacent_errors():
    with pytest.raises(DigitalTopologyError):
        cu_adjacent((0, 0), (1,), 1)
    with pytest.raises(DigitalTopologyError):
        cu_adjacent((0, 0), (1, 0), 3)
    with pytest.raises(DigitalTopologyError):
        cu_adjacent((0, 0), (1, 0), 0)


def test_adjacent_examples():
    C4 = gen_cycle(4)
    assert adjacent(C4, (0,), (3,))
    assert not adjacent(C4, (0,), (2,))
    assert adjacent(gen_interval(0, 3), (1,), (2,))
    with pytest.raises(PointNotInImageError):
        adjacent(C4, (0,), (7,))


def test_neighbors():
    I = gen_interval(0, 3)
    assert neighbors_strict(I, (0,)) == P(1)
    assert neighbors_strict(I, (1,)) == P(0, 2)
    assert neighbors_strict(gen_cycle(5), (0,)) == P(1, 4)
    assert neighborhood_closed(I, (0,)) == P(0, 1)
    assert neighborhood_closed(gen_cycle(5), (0,)) == P(4, 0, 1)
    single = DigitalImage([(3, 3)], CU(2))
    assert neighborhood_closed(single, (3, 3)) == {(3, 3)}
    with pytest.raises(PointNotInImageError):
        neighbors_strict(I, (9,))


def test_connectivity():
    assert is_connected(gen_cycle(6))
    assert not is_connected(DigitalImage([(0, 0), (5, 5)], CU(1)))
    assert is_connected(DigitalImage([(0, 0)], CU(1)))


def test_is_path():
    I = gen_interval(0, 3)
    assert is_path(I, [0, 1, 2])
    assert is_path(I, [0, 0, 1])
    assert not is_path(I, [0, 2])
    with pytest.raises(PointNotInImageError):
        is_path(I, [0, 9])


def test_simple_closed_curve():
    assert is_simple_closed_curve(gen_cycle(6))
    assert not is_simple_closed_curve(gen_interval(0, 5))
    square = DigitalImage([(0, 0), (0, 1), (1, 0), (1, 1)], CU(2))
    assert all(len(neighbors_strict(square, p)) == 3 for p in square.points)
    assert not is_simple_closed_curve(square)
    # two disjoint 4-cycles: 2-regular but not one curve
    pts = [(i,) for i in range(8)]
    two = DigitalImage(pts, Explicit.from_pairs(
        [(pts[i], pts[(i + 1) % 4]) for i in range(4)]
        + [(pts[4 + i], pts[4 + (i + 1) % 4]) for i in range(4)]))
    assert not is_simple_closed_curve(two)
    # the 4-adjacent ring around a 3x3 box is a curve, with c_2 it is not
    ring = [(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)]
    assert is_simple_closed_curve(DigitalImage(ring, CU(1)))
    assert not is_simple_closed_curve(DigitalImage(ring, CU(2)))


def test_generators():
    assert len(gen_interval(0, 2)) == 3 and len(gen_interval(0, 2).edges()) == 2
    assert len(gen_interval(0, 0)) == 1
    I = gen_interval(0, 12)
    assert len(I) == 13
    assert all(len(neighbors_strict(I, (z,))) == 2 for z in range(1, 12))
    with pytest.raises(DigitalTopologyError):
        gen_interval(3, 2)

    assert len(gen_cycle(4).edges()) == 4
    assert neighbors_strict(gen_cycle(5), (4,)) == P(3, 0)
    assert is_simple_closed_curve(gen_cycle(8))
    assert gen_cycle(6).label(cycle_point(6, 7)) == "c1"
    for bad in (1, 2, 3):
        with pytest.raises(DigitalTopologyError):
            gen_cycle(bad)


def test_window():
    W = gen_window(3, 4)
    assert W.points == tuple((z,) for z in range(13))
    assert W.boundary == P(11, 12)
    assert (0,) not in W.boundary
    assert len(gen_window(2, 5)) == 11
    for q, n in [(1, 4), (2, 3)]:
        with pytest.raises(DigitalTopologyError):
            gen_window(q, n)


@pytest.mark.parametrize("n", [8, 10, 12])
def test_rect_cycle_is_a_curve_with_matching_labels(n):
    R = gen_cycle_rect(n)
    assert is_simple_closed_curve(R)
    by_label = {R.labels[p]: p for p in R.points}
    for i in range(n):
        assert adjacent(R, by_label[f"c{i}"], by_label[f"c{(i + 1) % n}"])


def test_image_validation():
    with pytest.raises(InvalidImageError):
        DigitalImage([], CU(1))
    with pytest.raises(InvalidImageError):
        DigitalImage([(0,), (0,)], CU(1))
    with pytest.raises(InvalidImageError):
        DigitalImage([(0,), (0, 1)], CU(1))
    with pytest.raises(InvalidImageError):
        DigitalImage([(0,)], CU(2))
    with pytest.raises(InvalidImageError):
        DigitalImage([(0,), (1,)], Explicit.from_pairs([((0,), (0,))]))
    with pytest.raises(InvalidImageError):
        DigitalImage([(0,), (1,)], Explicit.from_pairs([((0,), (5,))]))
    with pytest.raises(AttributeError):
        gen_cycle(4).dim = 2


def test_explicit_edges_are_canonical():
    a = Explicit.from_pairs([((2,), (1,)), ((0,), (1,)), ((1,), (2,))])
    assert a.edges == (((0,), (1,)), ((1,), (2,)))


# -- properties ------------------------------------------------------------------


@given(images())
def test_adjacency_symmetric_and_irreflexive(X):
    for x in X.points:
        assert not adjacent(X, x, x)
        for y in X.points:
            assert adjacent(X, x, y) == adjacent(X, y, x)


@given(st.integers(1, 4).flatmap(
    lambda d: st.tuples(st.just(d), st.tuples(*[st.integers(-2, 2)] * d), st.tuples(*[st.integers(-2, 2)] * d))))
def test_cu_nesting(args):
    d, x, y = args
    for u in range(1, d + 1):
        if cu_adjacent(x, y, u):
            assert all(cu_adjacent(x, y, v) for v in range(u, d + 1))


@given(lattice_images(max_points=8))
def test_cu_neighbor_count_bound(X):
    for x in X.points:
        assert len(neighbors_strict(X, x)) <= 3 ** X.dim - 1


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=8, unique=True))
def test_z1_is_two_adjacency(zs):
    X = DigitalImage([(z,) for z in zs], CU(1))
    for z in zs:
        assert len(neighbors_strict(X, (z,))) == len({z - 1, z + 1} & set(zs))


@given(st.integers(4, 30))
def test_cycle_properties(n):
    C = gen_cycle(n)
    assert all(len(neighbors_strict(C, p)) == 2 for p in C.points)
    assert is_connected(C)
    assert is_simple_closed_curve(C)


@given(images(max_points=6))
def test_bfs_paths_are_paths(X):
    for a in X.points:
        for b in X.points:
            path = shortest_path(X, a, b)
            if path is not None:
                assert path[0] == a and path[-1] == b
                assert is_path(X, path)
