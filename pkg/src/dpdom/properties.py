"""Standing property checks shared by the test suite and ``reproduce``.

The oracles here deliberately avoid the package's distance oracle,
checker and solver: distances come from a plain BFS and the optimum from
enumerating every vertex subset.  Each check returns ``(cases, failures)``.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from .checks import check_dp_set
from .distance import DistanceOracle
from .graph import Graph, build_cycle, build_glued_cycles, build_path, strong_product
from .solver import SearchConfig, solve
from .values import INF, Params

FAR = 10 ** 9


def plain_bfs(g: Graph) -> list[list[int]]:
    out = []
    for s in range(g.n):
        dist = [FAR] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] == FAR:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        out.append(dist)
    return out


def quantifier_check(dist: list[list[int]], s, d: int, p: int) -> tuple[bool, bool]:
    """(is p-packing, is d-dominating), read straight off the definitions."""
    s = list(s)
    packing = all(dist[x][y] >= p + 1 for x in s for y in s if x != y)
    dominating = all(any(dist[u][x] <= d for x in s) for u in range(len(dist)))
    return packing, dominating


def brute_force_table(g: Graph, ds=range(4), ps=range(8)) -> dict[tuple[int, int], object]:
    """Optimum for every (d, p) by enumerating all subsets of V(g)."""
    dist = plain_bfs(g)
    n = g.n
    best: dict[tuple[int, int], object] = {(d, p): INF for d in ds for p in ps}
    open_keys = set(best)
    for size in range(1, n + 1):
        if not open_keys:
            break
        for s in itertools.combinations(range(n), size):
            sep = min((dist[x][y] for x, y in itertools.combinations(s, 2)), default=FAR)
            cover = max(min(dist[u][x] for x in s) for u in range(n))
            for key in list(open_keys):
                d, p = key
                if cover <= d and sep >= p + 1:
                    best[key] = size
                    open_keys.discard(key)
    return best


def small_corpus(max_n: int = 14, seed: int = 7) -> list[tuple[str, Graph]]:
    P, C, sp = build_path, build_cycle, strong_product
    out = [(f"path:{n}", P(n)) for n in range(1, 10)]
    out += [(f"cycle:{n}", C(n)) for n in range(3, 11)]
    out += [
        ("product(path:2,path:3)", sp(P(2), P(3))),
        ("product(path:3,path:4)", sp(P(3), P(4))),
        ("product(cycle:3,path:4)", sp(C(3), P(4))),
        ("product(cycle:4,path:3)", sp(C(4), P(3))),
        ("product(cycle:3,cycle:4)", sp(C(3), C(4))),
        ("glued:2:5", build_glued_cycles(2, 5)),
        ("glued:2:6", build_glued_cycles(2, 6)),
        ("glued:3:5", build_glued_cycles(3, 5)),
        ("two-paths", Graph.from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)])),
    ]
    rng = random.Random(seed)
    for i in range(8):
        n = rng.randint(5, max_n)
        edges = {(v, rng.randrange(v)) for v in range(1, n)}
        for _ in range(rng.randint(0, n)):
            u, v = rng.sample(range(n), 2)
            edges.add((max(u, v), min(u, v)))
        out.append((f"random-{i}", Graph.from_edges(n, edges)))
    return [(name, g) for name, g in out if g.n <= max_n]


def check_solver_brute_force(quick: bool = False) -> tuple[int, list[str]]:
    cases, bad = 0, []
    corpus = small_corpus(max_n=10 if quick else 14)
    for name, g in corpus:
        table = brute_force_table(g)
        oracle = DistanceOracle(g)
        for (d, p), want in table.items():
            report = solve(g, Params(d, p), SearchConfig(), oracle)
            cases += 1
            if report.value != want:
                bad.append(f"{name} d={d} p={p}: brute {want} solver {report.value}")
            elif want is not INF and not check_dp_set(oracle, report.result.cert, Params(d, p)).ok:
                bad.append(f"{name} d={d} p={p}: invalid certificate")
    return cases, bad


def check_checker_oracle(quick: bool = False, seed: int = 11) -> tuple[int, list[str]]:
    rng = random.Random(seed)
    P, C, sp = build_path, build_cycle, strong_product
    corpus = small_corpus() + [
        ("product(cycle:5,cycle:7)", sp(C(5), C(7))),
        ("product(path:6,cycle:6)", sp(P(6), C(6))),
        ("glued:2:11", build_glued_cycles(2, 11)),
    ]
    cases, bad = 0, []
    for name, g in corpus:
        dist = plain_bfs(g)
        oracle = DistanceOracle(g)
        for _ in range(10 if quick else 40):
            k = rng.randint(0, min(g.n, 8))
            s = rng.sample(range(g.n), k)
            d, p = rng.randint(0, 4), rng.randint(0, 6)
            v = check_dp_set(oracle, s, Params(d, p))
            want = quantifier_check(dist, s, d, p)
            cases += 1
            if (v.is_packing, v.is_dominating) != want:
                bad.append(f"{name} S={sorted(s)} d={d} p={p}: checker {(v.is_packing, v.is_dominating)} "
                           f"definition {want}")
    return cases, bad


def monotonicity_corpus(quick: bool = False) -> list[tuple[str, Graph]]:
    P, C, sp = build_path, build_cycle, strong_product
    corpus = [(f"path:{n}", P(n)) for n in (4, 7, 11)] + [(f"cycle:{n}", C(n)) for n in (5, 8, 11, 13)]
    corpus += [("product(path:3,cycle:5)", sp(P(3), C(5))), ("glued:2:7", build_glued_cycles(2, 7))]
    if not quick:
        corpus += [("product(cycle:4,cycle:5)", sp(C(4), C(5))), ("glued:2:9", build_glued_cycles(2, 9)),
                   (f"path:{19}", P(19)), (f"cycle:{20}", C(20))]
    return corpus


def check_monotonicity(quick: bool = False) -> tuple[int, list[str]]:
    """Shrinking the radius or growing the separation never lowers the value."""
    cases, bad = 0, []
    for name, g in monotonicity_corpus(quick):
        oracle = DistanceOracle(g)
        val = {(d, p): solve(g, Params(d, p), SearchConfig(), oracle).value
               for d in range(4) for p in range(8)}
        for (d, p), (d2, p2) in itertools.product(val, repeat=2):
            if d2 <= d and p <= p2:
                cases += 1
                if not val[(d2, p2)] >= val[(d, p)]:
                    bad.append(f"{name}: value({d2},{p2})={val[(d2, p2)]} < value({d},{p})={val[(d, p)]}")
    return cases, bad


def check_product_bound(quick: bool = False) -> tuple[int, list[str]]:
    factors = [(f"path:{n}", build_path(n)) for n in range(2, 7)] + \
              [(f"cycle:{n}", build_cycle(n)) for n in range(3, 9)]
    if quick:
        factors = factors[::2]
    values = {}
    for name, g in factors:
        o = DistanceOracle(g)
        for d in range(3):
            for p in range(5):
                values[(name, d, p)] = solve(g, Params(d, p), SearchConfig(), o).value
    cases, bad = 0, []
    for (na, ga), (nb, gb) in itertools.combinations_with_replacement(factors, 2):
        prod = strong_product(ga, gb)
        o = DistanceOracle(prod)
        for d in range(3):
            for p in range(5):
                va, vb = values[(na, d, p)], values[(nb, d, p)]
                if va is INF or vb is INF:
                    continue
                got = solve(prod, Params(d, p), SearchConfig(), o).value
                cases += 1
                if not got <= va * vb:
                    bad.append(f"{na} x {nb} d={d} p={p}: {got} > {va}*{vb}")
    return cases, bad


def check_symmetry_equivalence(quick: bool = False) -> tuple[int, list[str]]:
    corpus = [build_cycle(n) for n in range(3, 14)]
    sizes = range(3, 7) if quick else range(3, 9)
    corpus += [strong_product(build_cycle(a), build_cycle(b)) for a in sizes for b in sizes if a <= b]
    cases, bad = 0, []
    for g in corpus:
        o = DistanceOracle(g)
        for d in range(3):
            for p in range(5):
                on = solve(g, Params(d, p), SearchConfig(use_symmetry=True), o)
                off = solve(g, Params(d, p), SearchConfig(use_symmetry=False), o)
                cases += 1
                if on.value != off.value:
                    bad.append(f"{g.pedigree} d={d} p={p}: symmetry {on.value} plain {off.value}")
    return cases, bad
