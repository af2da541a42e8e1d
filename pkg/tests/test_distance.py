import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dpdom.distance import DistanceOracle, ball, bfs_table, eccentricities, radius_and_diameter
from dpdom.errors import UnreachableError
from dpdom.graph import Graph, build_cycle, build_glued_cycles, build_path, strong_product
from dpdom.properties import plain_bfs


def test_path_and_cycle_distances():
    assert DistanceOracle(build_path(5)).dist(0, 4) == 4
    assert DistanceOracle(build_cycle(11)).dist(0, 6) == 5


def test_product_distance_is_max(c11x11):
    g, o = c11x11
    assert o.dist(g.encode(0, 0), g.encode(3, 5)) == 5


def test_ball_examples():
    o = DistanceOracle(build_cycle(11))
    assert ball(o, 3, 0) == {3}
    assert ball(o, 0, 2) == {9, 10, 0, 1, 2}
    assert ball(DistanceOracle(build_path(5)), 0, 10) == set(range(5))


@pytest.mark.parametrize("g,expected", [
    (build_cycle(11), (5, 5)),
    (build_path(5), (2, 4)),
    (strong_product(build_path(2), build_path(2)), (1, 1)),
    (build_cycle(3), (1, 1)),
    (build_cycle(4), (2, 2)),
])
def test_radius_diameter(g, expected):
    assert radius_and_diameter(DistanceOracle(g)) == expected


def test_disconnected():
    o = DistanceOracle(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert not o.connected
    assert o.dist(0, 2) is None
    with pytest.raises(UnreachableError):
        eccentricities(o)


factors = st.one_of(
    st.integers(1, 12).map(build_path),
    st.integers(3, 12).map(build_cycle),
)


@settings(max_examples=40, deadline=None)
@given(factors, factors)
def test_product_distances_match_bfs(g, h):
    prod = strong_product(g, h)
    fast = DistanceOracle(prod)
    slow = bfs_table(prod)
    assert (fast.table == slow).all()


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 14), st.data())
def test_bfs_matches_plain_bfs(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph.from_edges(n, edges)
    o = DistanceOracle(g)
    ref = plain_bfs(g)
    for u, v in itertools.product(range(n), repeat=2):
        want = ref[u][v] if ref[u][v] < 10 ** 9 else None
        assert o.dist(u, v) == want


@pytest.mark.parametrize("g", [build_cycle(9), build_glued_cycles(2, 7),
                               strong_product(build_path(3), build_cycle(5))])
def test_ball_monotone_and_full(g):
    o = DistanceOracle(g)
    diam = radius_and_diameter(o)[1]
    for u in range(g.n):
        prev = set()
        for d in range(diam + 1):
            b = ball(o, u, d)
            assert prev <= b
            prev = b
        assert prev == set(range(g.n))
