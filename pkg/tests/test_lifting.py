import pytest
from hypothesis import given, settings, strategies as st

from digicover.classifiers import check_covering
from digicover.harness import exhaustive_instances, sampled_instances
from digicover.image import DigitalTopologyError, gen_cycle, gen_interval
from digicover.lifting import check_unique_path_lifting, enumerate_lifts
from digicover.maps import DigitalMap, identity
from digicover.paper_suite import build_doubling_map, build_window_map

from oracles import base_paths, brute_force_lift_table
from strategies import maps


def pts(*zs):
    return [(z,) for z in zs]


def test_identity_lifts_uniquely():
    C = gen_cycle(5)
    lifts = enumerate_lifts(identity(C), pts(0, 1, 2, 2, 1), (0,))
    assert [L.lift for L in lifts] == [tuple(pts(0, 1, 2, 2, 1))]


def test_doubling_map_lifts():
    p = build_doubling_map(4)
    assert [L.lift for L in enumerate_lifts(p, pts(0, 1), (0,))] == [tuple(pts(0, 1))]
    assert [L.lift for L in enumerate_lifts(p, pts(0, 3), (0,))] == [tuple(pts(0, 7))]
    # going once around the base ends on the other sheet
    L = enumerate_lifts(p, pts(0, 1, 2, 3, 0), (0,))
    assert [x.lift for x in L] == [tuple(pts(0, 1, 2, 3, 4))]


def test_window_map_lifts():
    p = build_window_map(4, 3)
    assert enumerate_lifts(p, pts(0, 3), (0,)) == []
    assert [L.lift for L in enumerate_lifts(p, pts(0, 3), (4,))] == [tuple(pts(4, 3))]
    assert [L.lift for L in enumerate_lifts(p, pts(0, 1, 2), (8,))] == [tuple(pts(8, 9, 10))]


def test_stuttering_lifts_may_branch():
    # a fold: [0,2] -> [0,1], 0,2 -> 0 and 1 -> 1
    p = DigitalMap(gen_interval(0, 2), gen_interval(0, 1), {(0,): (0,), (1,): (1,), (2,): (0,)})
    lifts = enumerate_lifts(p, pts(0, 1, 0), (0,))
    assert [L.lift for L in lifts] == [tuple(pts(0, 1, 0)), tuple(pts(0, 1, 2))]


def test_enumerate_lifts_errors():
    p = build_window_map(4, 2)
    with pytest.raises(DigitalTopologyError):
        enumerate_lifts(p, [], (0,))
    with pytest.raises(DigitalTopologyError):
        enumerate_lifts(p, pts(0, 2), (0,))
    with pytest.raises(DigitalTopologyError):
        enumerate_lifts(p, pts(0, 1), (1,))
    with pytest.raises(DigitalTopologyError):
        enumerate_lifts(p, pts(0, 1), (99,))
    with pytest.raises(DigitalTopologyError):
        check_unique_path_lifting(p, 0)


def test_ulp_on_examples():
    r = check_unique_path_lifting(build_doubling_map(4), 16)
    assert r.holds is True and r.counterexample is None
    r = check_unique_path_lifting(build_window_map(4, 3), 2)
    assert r.holds is False
    cx = r.counterexample
    assert (cx.base_path, cx.start, cx.lift_count, cx.boundary_tainted) == (tuple(pts(0, 3)), (0,), 0, False)


def test_ulp_boundary_only_failures_are_inconclusive():
    # a window whose only lifting failure runs off the tagged end
    from digicover.image import DigitalImage, CU
    W = DigitalImage(pts(*range(9)), CU(1), boundary=pts(8))
    C = gen_cycle(4)
    p = DigitalMap(W, C, {(z,): (z % 4,) for z in range(9)})
    r = check_unique_path_lifting(p, 1)
    # from 0 the step to c3 has no lift, and 0 is not tagged
    assert r.holds is False
    W2 = DigitalImage(pts(*range(-1, 9)), CU(1), boundary=pts(-1, 8))
    p2 = DigitalMap(W2, C, {(z,): (z % 4,) for z in range(-1, 9)})
    r2 = check_unique_path_lifting(p2, 1)
    assert r2.holds == "inconclusive" and r2.counterexample.boundary_tainted


# -- brute-force oracle ----------------------------------------------------------------


def _agree(p, steps):
    table = brute_force_lift_table(p, steps)
    for path in base_paths(p.target, steps):
        for e in p.fiber(path[0]):
            got = [L.lift for L in enumerate_lifts(p, path, e)]
            assert got == table.get((path, e), [])


@settings(max_examples=150, deadline=None)
@given(maps(max_points=5))
def test_lifts_match_brute_force_on_random_maps(p):
    _agree(p, 3)


def test_lifts_match_brute_force_on_harness_maps():
    for _, p in exhaustive_instances(3):
        _agree(p, 3)
    for _, p in sampled_instances(60, seed=3, max_points=6):
        _agree(p, 3)


def _ulp_by_brute_force(p, L, stuttering):
    table = brute_force_lift_table(p, L)
    for path in base_paths(p.target, L):
        if not stuttering and any(a == b for a, b in zip(path, path[1:])):
            continue
        for e in p.fiber(path[0]):
            if len(table.get((path, e), [])) != 1:
                return False
    return True


@settings(max_examples=150, deadline=None)
@given(maps(max_points=4), st.integers(1, 3), st.booleans())
def test_ulp_matches_brute_force(p, L, stuttering):
    r = check_unique_path_lifting(p, L, stuttering)
    assert (r.holds is True) == _ulp_by_brute_force(p, L, stuttering)
    if r.counterexample is not None:
        cx = r.counterexample
        assert cx.lift_count == len(cx.lifts) != 1
        assert [L.lift for L in enumerate_lifts(p, cx.base_path, cx.start)] == [x.lift for x in cx.lifts]


@settings(max_examples=100, deadline=None)
@given(maps(max_points=5))
def test_ulp_is_monotone_in_length(p):
    results = [check_unique_path_lifting(p, L).holds is True for L in (1, 2, 3, 4)]
    assert results == sorted(results, reverse=True)


@settings(max_examples=100, deadline=None)
@given(maps(max_points=5))
def test_coverings_lift_uniquely(p):
    if check_covering(p).holds:
        assert check_unique_path_lifting(p, 2 * len(p.source), stuttering=True).holds is True
