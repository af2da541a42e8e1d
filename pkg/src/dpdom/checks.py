"""Definitional checkers for packings and distance domination."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .distance import DistanceOracle, UNREACHABLE, ball
from .errors import InvalidParameter, NotApplicable
from .graph import Graph
from .values import Params


@dataclass(frozen=True)
class Verdict:
    is_packing: bool
    is_dominating: bool
    packing_violations: list[tuple[int, int]] = field(default_factory=list)
    undominated: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_packing and self.is_dominating

    def to_json(self) -> dict:
        return {
            "packing": self.is_packing,
            "dominating": self.is_dominating,
            "violations": [list(x) for x in self.packing_violations],
            "undominated": list(self.undominated),
        }


def _members(oracle: DistanceOracle, s: Iterable[int]) -> list[int]:
    members = sorted(set(int(v) for v in s))
    for v in members:
        if not 0 <= v < oracle.n:
            raise InvalidParameter(f"vertex {v} out of range [0, {oracle.n - 1}]")
    return members


def packing_violations(oracle: DistanceOracle, s: Iterable[int], p: int) -> list[tuple[int, int]]:
    members = _members(oracle, s)
    out = []
    for i, u in enumerate(members):
        row = oracle.row(u)
        for v in members[i + 1:]:
            if row[v] <= p:
                out.append((u, v))
    return out


def is_p_packing(oracle: DistanceOracle, s: Iterable[int], p: int) -> tuple[bool, list[tuple[int, int]]]:
    bad = packing_violations(oracle, s, p)
    return not bad, bad


def undominated_vertices(oracle: DistanceOracle, s: Iterable[int], d: int) -> list[int]:
    members = _members(oracle, s)
    if not members:
        return list(range(oracle.n))
    near = np.full(oracle.n, UNREACHABLE, dtype=np.int64)
    for u in members:
        np.minimum(near, oracle.row(u), out=near)
    return np.flatnonzero(near > d).tolist()


def is_d_dominating(oracle: DistanceOracle, s: Iterable[int], d: int) -> tuple[bool, list[int]]:
    bad = undominated_vertices(oracle, s, d)
    return not bad, bad


def check_dp_set(oracle: DistanceOracle, s: Iterable[int], params: Params) -> Verdict:
    s = list(s)
    viol = packing_violations(oracle, s, params.p)
    undom = undominated_vertices(oracle, s, params.d)
    return Verdict(not viol, not undom, viol, undom)


def greedy_finite_set(oracle: DistanceOracle, d: int) -> list[int]:
    """Start from vertex 0 and keep adding the lowest-index vertex at distance
    at least ``d + 1`` from everything chosen.

    The result is d-distance dominating and a d-packing, so it is a
    d-distance p-packing set for every ``p <= d``.
    """
    if oracle.n == 0:
        return []
    chosen = [0]
    near = oracle.row(0).astype(np.int64)
    while True:
        far = np.flatnonzero(near > d)
        if far.size == 0:
            return chosen
        x = int(far[0])
        chosen.append(x)
        np.minimum(near, oracle.row(x), out=near)


def is_dp_close(oracle: DistanceOracle, u: int, params: Params) -> bool:
    """True iff every two vertices of the d-ball around ``u`` are within distance p."""
    members = sorted(ball(oracle, u, params.d))
    idx = np.asarray(members)
    return all(bool((oracle.row(x)[idx] <= params.p).all()) for x in members)


def pendant_path_orders(g: Graph) -> list[int]:
    """Order of the maximal pendant path starting at each degree-1 vertex."""
    orders = []
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        prev, cur, k = leaf, g.adj[leaf][0], 1
        while g.degree(cur) == 2 and cur != leaf:
            k += 1
            nxt = g.adj[cur][0] if g.adj[cur][0] != prev else g.adj[cur][1]
            prev, cur = cur, nxt
        orders.append(k)
    return orders


def pendant_path_infinity_criterion(g: Graph, params: Params) -> bool:
    """Whether ``g`` has a pendant path on at least ``(2d - p) / 2`` vertices.

    If so its leaf is (d, p)-close, so pairing ``g`` with any partner of
    infinite value yields an infinite product.
    """
    d, p = params.d, params.p
    if p >= 2 * d:
        raise NotApplicable(f"pendant-path criterion needs p < 2d (d={d}, p={p})")
    need = (2 * d - p + 1) // 2
    return any(k >= need for k in pendant_path_orders(g))
