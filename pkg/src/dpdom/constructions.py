"""Explicit d-distance p-packing sets on strong products.

Every constructor materialises its graph, runs the checker, and raises
:class:`ConstructionError` if the set fails; a failure would mean a wrong
transcription or a false claim, so it is never silently repaired.

Index conventions: the torus families built from ``X`` and the 55k+11
family are 0-based as written.  The corner construction and the glued
family are written 1-based and are shifted by -1 here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .checks import Verdict, check_dp_set
from .distance import DistanceOracle
from .errors import DpdomError, InvalidInput, InvalidParameter, NotApplicable
from .graph import Graph, build_cycle, build_glued_cycles, glued_vertex, parse_graph_spec, strong_product
from .values import Params

X_BASE = ((2, 0), (3, 3), (4, 6), (7, 9), (8, 1), (9, 4), (10, 7))


class ConstructionError(DpdomError):
    def __init__(self, name, verdict):
        super().__init__(f"construction {name} failed its check: packing={verdict.is_packing}, "
                         f"dominating={verdict.is_dominating}")
        self.verdict = verdict


@dataclass(frozen=True)
class Construction:
    name: str
    graph_spec: str
    params: Params
    coords: tuple[tuple[int, int], ...]
    claimed_size: int
    verdict: Verdict | None = None

    @cached_property
    def graph(self) -> Graph:
        return parse_graph_spec(self.graph_spec)

    @property
    def vertices(self) -> frozenset[int]:
        g = self.graph
        return frozenset(g.encode(a, b) for a, b in self.coords)

    def header(self) -> dict:
        return {"name": self.name, "graph_spec": self.graph_spec,
                "params": {"d": self.params.d, "p": self.params.p},
                "claimed_size": self.claimed_size}


def _validated(name, spec, params, coords, claimed, graph=None) -> Construction:
    coords = tuple(sorted(set(coords)))
    c = Construction(name, spec, params, coords, claimed)
    if graph is not None:
        c.__dict__["graph"] = graph
    verdict = check_dp_set(DistanceOracle(c.graph), c.vertices, params)
    if not verdict.ok or len(coords) != claimed:
        raise ConstructionError(name, verdict)
    return Construction(name, spec, params, coords, claimed, verdict)


def product_set(g: Graph, s_g, h: Graph, s_h, params: Params) -> frozenset[int]:
    """``s_g x s_h`` on ``g x h`` after checking both factor sets."""
    for label, graph, s in (("left", g, s_g), ("right", h, s_h)):
        verdict = check_dp_set(DistanceOracle(graph), s, params)
        if not verdict.ok:
            raise InvalidInput(f"{label} factor set is not a d-distance p-packing set", verdict)
    return frozenset(a * h.n + b for a in s_g for b in s_h)


def x_t_set(t: int) -> Construction:
    """The 7-vertex set ``X`` scaled by ``t + 1`` on C_11(t+1) x C_11(t+1)."""
    if t == 1 or t < 0:
        raise NotApplicable(f"x_t needs t = 0 or t >= 2, got t={t}")
    s = t + 1
    n = 11 * s
    params = Params(5 * s // 2, 3 * t + 2)
    coords = [(s * i, s * j) for i, j in X_BASE]
    return _validated(f"x_t(t={t})", f"product(cycle:{n},cycle:{n})", params, coords, 7)


def family55_set(k: int) -> Construction:
    """Triples marching diagonally around C_N x C_11, N = 55k + 11, plus one corner vertex."""
    if k < 0:
        raise InvalidParameter(f"family55 needs k >= 0, got {k}")
    big = 55 * k + 11
    coords = []
    for i in range(1, 11 * k + 3):
        for a, b in ((5 * i - 3, 9 * i - 9), (5 * i - 2, 9 * i - 6), (5 * i - 1, 9 * i - 3)):
            coords.append((a % big, b % 11))
    coords.append((big - 1, 7))
    return _validated(f"family55(k={k})", f"product(cycle:{big},cycle:11)", Params(2, 2),
                      coords, 33 * k + 7)


@dataclass(frozen=True)
class CornerPieces:
    """The named pieces of the corner construction, 0-based."""
    z: dict
    a: dict
    b: dict
    c_star: tuple[int, int]
    z_star: tuple[int, int]
    removed: tuple[int, int]


def torus_minus_one_hypotheses(m: int, n: int, params: Params) -> str | None:
    d, p = params.d, params.p
    k = 2 * d + 1
    if d < p:
        return f"needs d >= p (d={d}, p={p})"
    if m < 2 * d + 2:
        return f"needs m >= 2d+2 = {2 * d + 2} (m={m})"
    if n < 4 * d + 3:
        return f"needs n >= 4d+3 = {4 * d + 3} (n={n})"
    if not 1 <= m % k <= d:
        return f"needs m mod {k} in [1, {d}] (got {m % k})"
    if not 1 <= n % k <= d:
        return f"needs n mod {k} in [1, {d}] (got {n % k})"
    return None


def torus_minus_one_pieces(m: int, n: int, params: Params) -> CornerPieces:
    why = torus_minus_one_hypotheses(m, n, params)
    if why:
        raise NotApplicable(f"torus_minus_one: {why}")
    d = params.d
    k = 2 * d + 1
    m1, n1, r = m // k, n // k, n % k

    def shift(v):
        return (v[0] - 1, v[1] - 1)

    z = {(i, j): shift((i * k - d, j * k - d)) for i in range(1, m1 + 1) for j in range(1, n1 + 1)}
    a = {i: shift((i * k - 2 * d, n)) for i in range(1, m1 + 1)}
    b = {j: shift((m, j * k)) for j in range(1, n1)}
    c_star = shift((m - d, n - r))
    z_star = shift((m1 * k - d, n1 * k - d - 1))
    return CornerPieces(z, a, b, c_star, z_star, z[(m1, n1)])


def torus_minus_one_set(m: int, n: int, params: Params) -> Construction:
    """Corner-repaired grid of centres on C_m x C_n, one below the product bound.

    Built and checked with ``p = d``; by monotonicity in ``p`` the same set
    works for every smaller ``p``.
    """
    pieces = torus_minus_one_pieces(m, n, params)
    k = 2 * params.d + 1
    m1, n1 = m // k, n // k
    coords = [v for key, v in pieces.z.items() if key != (m1, n1)]
    coords += list(pieces.a.values()) + list(pieces.b.values()) + [pieces.c_star, pieces.z_star]
    return _validated(f"torus_minus_one(m={m},n={n},d={params.d})", f"product(cycle:{m},cycle:{n})",
                      Params(params.d, params.d), coords, m1 * n1 + m1 + n1)


def glued_layer_set(j: int, d: int, L: int) -> list[tuple[int, int]]:
    """The eight vertices S^j, as (G_k vertex, 0-based cycle position)."""
    one_based = [
        (1, d + 1), (1, 3 * d + 1), (2, 4 * d + 2),
        (d + 2, 2 * d + 1), (d + 3, 4 * d + 3),
        (2 * d + 3, d + 1), (2 * d + 3, 3 * d + 2), (3 * d + 4, 4 * d + 3),
    ]
    return [(glued_vertex(i, j, L), c - 1) for i, c in one_based]


def glued_product_set(k: int, d: int) -> Construction:
    """Union of the sets S^j on G_k x C_{4d+3}, sharing three vertices in the glued layers."""
    if k < 2 or d < 2:
        raise InvalidParameter(f"glued construction needs k >= 2 and d >= 2, got k={k}, d={d}")
    L = 4 * d + 3
    coords = []
    for j in range(1, k + 1):
        coords.extend(glued_layer_set(j, d, L))
    g = strong_product(build_glued_cycles(k, L), build_cycle(L))
    return _validated(f"glued(k={k},d={d})", f"product(glued:{k}:{L},cycle:{L})", Params(d, d),
                      coords, 3 + 5 * k, graph=g)


def glued_cycles_certificate(k: int) -> list[int]:
    """2k-vertex 2-distance 2-packing set of G_k with 11-cycles."""
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    out = [glued_vertex(5, 1, 11), glued_vertex(10, 1, 11)]
    for j in range(2, k + 1):
        out += [glued_vertex(4, j, 11), glued_vertex(9, j, 11)]
    return out
