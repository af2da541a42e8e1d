"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or ``python3 tests/test_acceptance.py``.
"""

import itertools
import time

import pytest

from dpdom import constructions as cons
from dpdom import properties as P
from dpdom.checks import check_dp_set, is_d_dominating
from dpdom.distance import DistanceOracle
from dpdom.formulas import (ceil_div, formula_cycle, formula_grid, formula_path, product_upper_bound,
                            torus_equality_cases, torus_lower_bound)
from dpdom.graph import build_cycle, build_glued_cycles, build_path, glued_vertex, strong_product
from dpdom.reproduce import ReproConfig, claim_torus_sandwich
from dpdom.solver import SearchConfig, solve
from dpdom.values import INF, Finite, Infinite, Params

RESULTS: list[str] = []


@pytest.fixture
def report(request):
    """Call with (ok, detail); records the PASS/FAIL line and asserts."""
    name = request.node.name.removeprefix("test_")

    def emit(ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
        RESULTS.append(line)
        print(line)
        assert ok, line

    return emit


def torus(m, n):
    return strong_product(build_cycle(m), build_cycle(n))


def test_criterion_1_flagship_exact_value(report):
    g = torus(11, 11)
    x = cons.x_t_set(0)
    t0 = time.perf_counter()
    r = solve(g, Params(2, 2), SearchConfig(use_symmetry=True, initial_upper=sorted(x.vertices)))
    secs = time.perf_counter() - t0
    ok = isinstance(r.result, Finite) and r.value == 7 and secs <= 600
    ok = ok and check_dp_set(DistanceOracle(g), r.result.cert, Params(2, 2)).ok
    report(ok, f"C11xC11 d=p=2 -> {type(r.result).__name__}({r.value}) in {secs:.1f}s, {r.nodes_explored} nodes")


def test_criterion_2_construction_validity(report):
    cases = [
        (lambda: cons.x_t_set(0), 7, Params(2, 2)),
        (lambda: cons.x_t_set(2), 7, Params(7, 8)),
        (lambda: cons.family55_set(0), 7, Params(2, 2)),
        (lambda: cons.family55_set(1), 40, Params(2, 2)),
        (lambda: cons.torus_minus_one_set(16, 16, Params(3, 3)), 8, Params(3, 3)),
        (lambda: cons.glued_product_set(2, 2), 13, Params(2, 2)),
    ]
    sizes, ok = [], True
    for build, size, params in cases:
        t0 = time.perf_counter()
        c = build()
        v = check_dp_set(DistanceOracle(c.graph), c.vertices, params)
        secs = time.perf_counter() - t0
        sizes.append(len(c.vertices))
        ok = ok and v.ok and len(c.vertices) == size == c.claimed_size and c.params == params and secs < 10
    report(ok, f"sizes {sizes} (expected [7, 7, 7, 40, 8, 13]), all sets valid={ok}")


def test_criterion_3_formula_solver_agreement(report):
    bad, cases = [], 0
    for n in range(1, 21):
        for kind in ("path", "cycle"):
            if kind == "cycle" and n < 3:
                continue
            g = build_path(n) if kind == "path" else build_cycle(n)
            o = DistanceOracle(g)
            for d, p in itertools.product(range(4), range(8)):
                params = Params(d, p)
                want = formula_path(n, params) if kind == "path" else formula_cycle(n, params)
                got = solve(g, params, SearchConfig(), o).value
                cases += 1
                if got != want:
                    bad.append((kind, n, d, p, want, got))
    for m, n in itertools.product(range(2, 9), repeat=2):
        g = strong_product(build_path(m), build_path(n))
        o = DistanceOracle(g)
        for d in range(3):
            for p in range(2 * d + 1):
                params = Params(d, p)
                got = solve(g, params, SearchConfig(), o).value
                cases += 1
                if got != formula_grid(m, n, params):
                    bad.append(("grid", m, n, d, p, got))
    c6 = solve(build_cycle(6), Params(2, 3)).value
    report(not bad and c6 is INF, f"{cases} cases, {len(bad)} mismatches {bad[:3]}; C6 d=2 p=3 -> {c6}")


def test_criterion_4_infinity_propagation(report):
    r = solve(torus(6, 6), Params(2, 3))
    ok = isinstance(r.result, Infinite) and r.complete
    report(ok, f"C6xC6 d=2 p=3 -> {r.value} after complete search of {r.nodes_explored} nodes")


def test_criterion_5_glued_family(report):
    g = build_glued_cycles(2, 11)
    r = solve(g, Params(2, 2))
    cert = [glued_vertex(5, 1, 11), glued_vertex(10, 1, 11), glued_vertex(4, 2, 11), glued_vertex(9, 2, 11)]
    v = check_dp_set(DistanceOracle(g), cert, Params(2, 2))
    ok = isinstance(r.result, Finite) and r.value == 4 and v.ok
    report(ok, f"G_2 d=p=2 -> {r.value} (expected 4 = 2k); explicit 4-set valid={v.ok}")


def test_criterion_6_torus_sandwich(report):
    params = Params(3, 3)
    lower = torus_lower_bound(16, 16, params)
    upper = len(cons.torus_minus_one_set(16, 16, params).vertices)
    bracket = claim_torus_sandwich(ReproConfig(skip_slow=True))[0]
    ok = lower == 7 and upper == 8 and bracket.status == "bounded"
    report(ok, f"{lower} <= value <= {upper}, bracket record status {bracket.status}")


def test_criterion_7_equality_case(report):
    eq = torus_equality_cases(11, 10, Params(2, 2))
    r = solve(torus(11, 10), Params(2, 2), SearchConfig(node_budget=20_000_000))
    ok = eq == 6 and isinstance(r.result, Finite) and r.value == 6
    report(ok, f"equality rule {eq}, solver {r.value} ({r.nodes_explored} nodes)")


def test_criterion_8_product_counterexample(report):
    g = torus(11, 11)
    x = cons.x_t_set(0)
    dominating, _ = is_d_dominating(DistanceOracle(g), x.vertices, 2)
    factor = formula_cycle(11, Params(2, 0))
    product = product_upper_bound(factor, factor)
    ok = dominating and len(x.vertices) == 7 < product == 9 == ceil_div(11, 5) ** 2
    report(ok, f"2-dominating set of size {len(x.vertices)} (dominating={dominating}) < {product}")


def test_criterion_9_property_suites(report):
    parts, ok = [], True
    t0 = time.perf_counter()
    for fn in (P.check_monotonicity, P.check_product_bound, P.check_checker_oracle,
               P.check_solver_brute_force, P.check_symmetry_equivalence):
        cases, bad = fn()
        ok = ok and not bad and cases > 0
        parts.append(f"{fn.__name__.removeprefix('check_')} {cases}/{len(bad)}")
    report(ok, "cases/failures: " + ", ".join(parts) + f" in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
