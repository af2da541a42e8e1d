import pytest

from dpdom import constructions as cons
from dpdom.checks import check_dp_set
from dpdom.distance import DistanceOracle
from dpdom.errors import InvalidInput, NotApplicable
from dpdom.formulas import cycle_certificate, formula_cycle, product_upper_bound
from dpdom.graph import build_cycle, build_glued_cycles, build_path, strong_product
from dpdom.values import Params


def test_x0():
    c = cons.x_t_set(0)
    assert c.params == Params(2, 2)
    assert c.graph_spec == "product(cycle:11,cycle:11)"
    assert set(c.coords) == set(cons.X_BASE) and c.claimed_size == 7 and c.verdict.ok


def test_x2():
    c = cons.x_t_set(2)
    assert c.params == Params(7, 8)
    assert set(c.coords) == {(6, 0), (9, 9), (12, 18), (21, 27), (24, 3), (27, 12), (30, 21)}


@pytest.mark.parametrize("t", [3, 4])
def test_x_larger_t(t):
    c = cons.x_t_set(t)
    assert len(c.vertices) == 7
    n = 11 * (t + 1)
    q = formula_cycle(n, c.params)
    assert product_upper_bound(q, q) - 2 == 7


@pytest.mark.parametrize("t", [1, -1])
def test_x_t_rejected(t):
    with pytest.raises(NotApplicable):
        cons.x_t_set(t)


@pytest.mark.parametrize("k,size", [(0, 7), (1, 40), (2, 73)])
def test_family55(k, size):
    c = cons.family55_set(k)
    assert len(c.vertices) == c.claimed_size == size
    assert c.claimed_size % 33 == 7


def test_family55_beats_product_bound():
    c = cons.family55_set(1)
    bound = product_upper_bound(formula_cycle(66, Params(2, 2)), formula_cycle(11, Params(2, 2)))
    assert bound == 42 and len(c.vertices) < bound


def test_torus_minus_one_pieces_16():
    params = Params(3, 3)
    pieces = cons.torus_minus_one_pieces(16, 16, params)
    assert sorted(pieces.z.values()) == [(3, 3), (3, 10), (10, 3), (10, 10)]
    assert pieces.removed == (10, 10)
    assert pieces.z_star == (10, 9)
    assert sorted(pieces.a.values()) == [(0, 15), (7, 15)]
    assert list(pieces.b.values()) == [(15, 6)]
    assert pieces.c_star == (12, 13)
    c = cons.torus_minus_one_set(16, 16, params)
    assert c.coords == ((0, 15), (3, 3), (3, 10), (7, 15), (10, 3), (10, 9), (12, 13), (15, 6))


@pytest.mark.parametrize("m,n,d", [(16, 16, 3), (16, 23, 3), (11, 16, 2), (12, 11, 2), (28, 29, 4)])
def test_torus_minus_one_general(m, n, d):
    c = cons.torus_minus_one_set(m, n, Params(d, d))
    k = 2 * d + 1
    assert len(c.vertices) == (m // k + 1) * (n // k + 1) - 1
    # smaller p is implied by the packing direction of monotonicity
    assert check_dp_set(DistanceOracle(c.graph), c.vertices, Params(d, 0)).ok


@pytest.mark.parametrize("m,n,d,p,why", [
    (16, 16, 3, 4, "d >= p"),
    (7, 16, 3, 3, "m >= 2d+2"),
    (16, 14, 3, 3, "n >= 4d+3"),
    (14, 16, 3, 3, "m mod 7"),
    (16, 20, 3, 3, "n mod 7"),
])
def test_torus_minus_one_hypotheses(m, n, d, p, why):
    with pytest.raises(NotApplicable, match=why.replace("+", r"\+")):
        cons.torus_minus_one_set(m, n, Params(d, p))


@pytest.mark.parametrize("k,d", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)])
def test_glued_product(k, d):
    c = cons.glued_product_set(k, d)
    assert len(c.vertices) == 3 + 5 * k and c.verdict.ok


def test_glued_cycles_certificate():
    for k in (2, 3, 5):
        g = build_glued_cycles(k, 11)
        cert = cons.glued_cycles_certificate(k)
        assert len(cert) == 2 * k
        assert check_dp_set(DistanceOracle(g), cert, Params(2, 2)).ok


def test_product_set():
    p1 = build_path(1)
    assert cons.product_set(p1, [0], p1, [0], Params(0, 0)) == {0}
    c11 = build_cycle(11)
    s = cycle_certificate(11, Params(2, 2))
    prod = cons.product_set(c11, s, c11, s, Params(2, 2))
    g = strong_product(c11, c11)
    assert len(prod) == 9 and check_dp_set(DistanceOracle(g), prod, Params(2, 2)).ok
    p5 = build_path(5)
    assert cons.product_set(p5, [2], p5, [2], Params(2, 2)) == {12}
    with pytest.raises(InvalidInput):
        cons.product_set(c11, [0, 1], c11, s, Params(2, 2))


def test_header():
    h = cons.x_t_set(0).header()
    assert h == {"name": "x_t(t=0)", "graph_spec": "product(cycle:11,cycle:11)",
                 "params": {"d": 2, "p": 2}, "claimed_size": 7}
