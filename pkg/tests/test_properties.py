"""The standing property suites, each checked against its independent oracle."""

from dpdom import properties as P
from dpdom.graph import build_cycle


def test_plain_bfs_and_quantifiers():
    dist = P.plain_bfs(build_cycle(7))
    assert dist[0] == [0, 1, 2, 3, 3, 2, 1]
    assert P.quantifier_check(dist, [0, 3], 2, 2) == (True, True)
    assert P.quantifier_check(dist, [0, 1], 0, 0) == (True, False)


def test_brute_force_table_small():
    t = P.brute_force_table(build_cycle(6), ds=[2], ps=[3, 2])
    assert t[(2, 3)] is P.INF and t[(2, 2)] == 2


def test_checker_matches_definitions():
    cases, bad = P.check_checker_oracle()
    assert cases > 1000 and bad == []


def test_solver_matches_brute_force():
    cases, bad = P.check_solver_brute_force()
    assert cases > 1000 and bad == []


def test_monotonicity():
    cases, bad = P.check_monotonicity()
    assert cases > 1000 and bad == []


def test_product_upper_bound():
    cases, bad = P.check_product_bound()
    assert cases > 300 and bad == []


def test_symmetry_on_off():
    cases, bad = P.check_symmetry_equivalence()
    assert cases > 300 and bad == []
