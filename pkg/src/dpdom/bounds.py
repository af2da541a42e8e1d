"""Aggregate every applicable rule into a lower/upper bracket.

Each side carries the tags of the rules that produced it.  Upper bounds
are only accepted together with a certificate that passes the checker, so
a finite upper value is always witnessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import constructions as cons
from .checks import check_dp_set, greedy_finite_set, is_dp_close
from .distance import DistanceOracle, eccentricities
from .errors import DpdomError
from .formulas import (ceil_div, cycle_certificate, formula_cycle, formula_grid, formula_path,
                       formula_prism, path_certificate, torus_equality_cases, torus_infinity_test,
                       torus_lower_bound)
from .graph import CyclePedigree, GluedPedigree, Graph, PathPedigree, ProductPedigree
from .values import INF, ExtNat, Params, ext_json


@dataclass
class Bounds:
    lower: ExtNat
    upper: ExtNat
    upper_certificate: tuple[int, ...] | None = None
    provenance: dict = field(default_factory=lambda: {"lower": [], "upper": []})

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {
            "lower": ext_json(self.lower),
            "upper": ext_json(self.upper),
            "certificate": list(self.upper_certificate) if self.upper_certificate is not None else None,
            "provenance": {k: list(v) for k, v in self.provenance.items()},
        }


class _Collector:
    def __init__(self, oracle: DistanceOracle, params: Params):
        self.oracle = oracle
        self.params = params
        self.lowers: list[tuple[ExtNat, str]] = []
        self.uppers: list[tuple[ExtNat, str, tuple[int, ...] | None]] = []

    def lower(self, value: ExtNat, tag: str) -> None:
        self.lowers.append((value, tag))

    def upper_set(self, cert, tag: str) -> None:
        cert = tuple(sorted(set(int(v) for v in cert)))
        if check_dp_set(self.oracle, cert, self.params).ok:
            self.uppers.append((len(cert), tag, cert))

    def infinite(self, tag: str) -> None:
        self.lowers.append((INF, tag))
        self.uppers.append((INF, tag, None))

    def result(self) -> Bounds:
        lo = max(v for v, _ in self.lowers)
        finite_ups = [u for u in self.uppers if u[0] is not INF]
        if any(u[0] is INF for u in self.uppers) and lo is INF:
            up, cert = INF, None
        elif finite_ups:
            up = min(u[0] for u in finite_ups)
            cert = next(u[2] for u in finite_ups if u[0] == up)
        else:
            up, cert = INF, None
        if lo is not INF and up is not INF and lo > up:
            raise DpdomError(f"inconsistent bounds: lower {lo} > upper {up}")
        if lo is INF and finite_ups:
            raise DpdomError("inconsistent bounds: infinite lower bound with a finite certificate")
        prov = {
            "lower": sorted({t for v, t in self.lowers if v == lo}),
            "upper": sorted({t for v, t, _ in self.uppers if v == up}),
        }
        return Bounds(lo, up, cert, prov)


def bounds(graph: Graph, params: Params, oracle: DistanceOracle | None = None) -> Bounds:
    oracle = oracle if oracle is not None else DistanceOracle(graph)
    if not oracle.connected:
        return _component_bounds(graph, params)
    col = _Collector(oracle, params)
    d, p = params.d, params.p
    n = graph.n

    # counting: one ball covers at most max|ball| vertices
    biggest = max(int((oracle.row(u) <= d).sum()) for u in range(n))
    col.lower(ceil_div(n, biggest), "ball-counting")
    col.lower(1, "nonempty")

    ecc = eccentricities(oracle)
    rad = min(ecc)
    if rad <= d:
        col.upper_set([ecc.index(rad)], "radius-at-most-d")
    elif p >= 2 * d + 1:
        col.infinite("radius-exceeds-d-wide-packing")
    if p <= d:
        col.upper_set(greedy_finite_set(oracle, d), "greedy-packing")

    ped = graph.pedigree
    if isinstance(ped, PathPedigree):
        _exact_from_formula(col, formula_path(ped.n, params), lambda: path_certificate(ped.n, params),
                            "path-formula")
    elif isinstance(ped, CyclePedigree):
        _exact_from_formula(col, formula_cycle(ped.n, params), lambda: cycle_certificate(ped.n, params),
                            "cycle-formula")
    elif isinstance(ped, GluedPedigree):
        if ped.cycle_len == 11 and d == 2 and p == 2:
            col.lower(2 * ped.k, "glued-cycles-value")
            col.upper_set(cons.glued_cycles_certificate(ped.k), "glued-cycles-value")
    elif isinstance(ped, ProductPedigree) and graph.factors is not None:
        _product_rules(col, graph, params)
    return col.result()


def _exact_from_formula(col: _Collector, value: ExtNat, certificate, tag: str) -> None:
    if value is INF:
        col.infinite(tag)
    else:
        col.lower(value, tag)
        col.upper_set(certificate(), tag)


def _product_rules(col: _Collector, graph: Graph, params: Params) -> None:
    g, h = graph.factors
    d, p = params.d, params.p
    og, oh = DistanceOracle(g), DistanceOracle(h)
    bg, bh = bounds(g, params, og), bounds(h, params, oh)

    # product of factor certificates
    if bg.upper_certificate is not None and bh.upper_certificate is not None:
        col.upper_set([a * h.n + b for a in bg.upper_certificate for b in bh.upper_certificate],
                      "product-bound")

    # an infinite factor forces an infinite product when the partner has a close vertex
    for inf_side, other, other_oracle in ((bg, h, oh), (bh, g, og)):
        if inf_side.lower is not INF:
            continue
        if p == 2 * d:
            col.infinite("perfect-code-product")
        elif p < 2 * d and any(is_dp_close(other_oracle, u, params) for u in range(other.n)):
            col.infinite("close-vertex-infinity")

    lp, rp = graph.pedigree.left, graph.pedigree.right
    paths = isinstance(lp, PathPedigree), isinstance(rp, PathPedigree)
    cycles = isinstance(lp, CyclePedigree), isinstance(rp, CyclePedigree)
    try:
        if all(paths):
            value = formula_grid(lp.n, rp.n, params)
            col.lower(value, "grid-formula")
        elif paths[0] and cycles[1]:
            col.lower(formula_prism(lp.n, rp.n, params), "prism-formula")
        elif cycles[0] and paths[1]:
            col.lower(formula_prism(rp.n, lp.n, params), "prism-formula")
    except DpdomError:
        pass

    if all(cycles):
        m, n = lp.n, rp.n
        if torus_infinity_test(m, n, params):
            col.infinite("torus-infinity")
        else:
            col.lower(torus_lower_bound(m, n, params), "torus-row-counting")
            eq = torus_equality_cases(m, n, params)
            if eq is not None:
                col.lower(eq, "torus-equality")
        _torus_constructions(col, graph, m, n, params)

    if isinstance(lp, GluedPedigree) and isinstance(rp, CyclePedigree):
        dd = (lp.cycle_len - 3) // 4
        if 4 * dd + 3 == lp.cycle_len == rp.n and dd >= 2:
            _try(col, lambda: cons.glued_product_set(lp.k, dd), graph, "construction:glued")


def _torus_constructions(col: _Collector, graph: Graph, m: int, n: int, params: Params) -> None:
    if m == n and m % 11 == 0 and m // 11 != 2:
        _try(col, lambda: cons.x_t_set(m // 11 - 1), graph, "construction:x_t")
    for big, small, swap in ((m, n, False), (n, m, True)):
        if small == 11 and big >= 11 and (big - 11) % 55 == 0:
            _try(col, lambda: cons.family55_set((big - 11) // 55), graph, "construction:family55", swap)
    if params.p <= params.d:
        _try(col, lambda: cons.torus_minus_one_set(m, n, params), graph, "construction:torus_minus_one")


def _try(col: _Collector, build, graph: Graph, tag: str, swap: bool = False) -> None:
    try:
        c = build()
    except DpdomError:
        return
    coords = [(b, a) for a, b in c.coords] if swap else c.coords
    col.upper_set([graph.encode(a, b) for a, b in coords], tag)


def _component_bounds(graph: Graph, params: Params) -> Bounds:
    lo: ExtNat = 0
    up: ExtNat = 0
    cert: list[int] | None = []
    for comp in graph.components():
        b = bounds(graph.induced(comp), params)
        lo = lo + b.lower
        up = up + b.upper
        if cert is not None and b.upper_certificate is not None:
            cert.extend(comp[i] for i in b.upper_certificate)
        else:
            cert = None
    return Bounds(lo, up, tuple(sorted(cert)) if cert is not None and up is not INF else None,
                  {"lower": ["component-sum"], "upper": ["component-sum"]})
