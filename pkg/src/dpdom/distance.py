"""All-pairs distances, balls and eccentricities."""

from __future__ import annotations

from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import InvalidParameter, UnreachableError
from .graph import Graph

# Stored for disconnected pairs.  Larger than any real distance, so
# comparisons like ``dist <= d`` and max-of-factors behave correctly.
UNREACHABLE = np.iinfo(np.int32).max

TABLE_LIMIT = 4096


def bfs_table(g: Graph) -> np.ndarray:
    """Direct all-pairs BFS on the adjacency of ``g``."""
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int32)
    rows, cols = [], []
    for u in range(g.n):
        for v in g.adj[u]:
            rows.append(u)
            cols.append(v)
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
    raw = shortest_path(mat, method="D", unweighted=True, directed=False)
    out = np.full(raw.shape, UNREACHABLE, dtype=np.int32)
    finite = np.isfinite(raw)
    out[finite] = raw[finite].astype(np.int32)
    return out


class DistanceOracle:
    """Exact distances on an immutable graph.

    Strong products are answered with the max-of-factors law from the
    factor oracles; above :data:`TABLE_LIMIT` vertices no full table is
    materialised for them.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.factor_oracles: tuple[DistanceOracle, DistanceOracle] | None = None
        if graph.factors is not None:
            self.factor_oracles = (DistanceOracle(graph.factors[0]), DistanceOracle(graph.factors[1]))
        elif graph.n > TABLE_LIMIT:
            raise InvalidParameter(f"non-product graph with {graph.n} vertices exceeds table limit")

    @cached_property
    def table(self) -> np.ndarray:
        if self.factor_oracles is None:
            return bfs_table(self.graph)
        left, right = self.factor_oracles
        if self.n > TABLE_LIMIT:
            raise InvalidParameter(f"full table for {self.n} vertices not materialised; use dist()")
        lt, rt = left.table, right.table
        # ((a, b), (a', b')) -> max(d(a, a'), d(b, b')), row-major
        full = np.maximum(lt[:, None, :, None], rt[None, :, None, :])
        return full.reshape(self.n, self.n)

    def dist(self, u: int, v: int) -> int | None:
        """Distance, or None when ``u`` and ``v`` lie in different components."""
        self._check(u)
        self._check(v)
        if self.factor_oracles is not None and self.n > TABLE_LIMIT:
            left, right = self.factor_oracles
            nr = right.n
            a, b = divmod(u, nr)
            a2, b2 = divmod(v, nr)
            dl, dr = left.dist(a, a2), right.dist(b, b2)
            if dl is None or dr is None:
                return None
            return max(dl, dr)
        x = int(self.table[u, v])
        return None if x == UNREACHABLE else x

    def row(self, u: int) -> np.ndarray:
        self._check(u)
        if self.factor_oracles is not None and self.n > TABLE_LIMIT:
            left, right = self.factor_oracles
            a, b = divmod(u, right.n)
            return np.maximum(left.row(a)[:, None], right.row(b)[None, :]).reshape(-1)
        return self.table[u]

    def _check(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise InvalidParameter(f"vertex {u} out of range [0, {self.n - 1}]")

    @cached_property
    def connected(self) -> bool:
        return self.n > 0 and int(self.row(0).max()) != UNREACHABLE


def distances(g: Graph) -> DistanceOracle:
    return DistanceOracle(g)


def ball(oracle: DistanceOracle, u: int, d: int) -> frozenset[int]:
    if d < 0:
        raise InvalidParameter(f"radius must be nonnegative, got {d}")
    return frozenset(np.flatnonzero(oracle.row(u) <= d).tolist())


def eccentricities(oracle: DistanceOracle) -> list[int]:
    if not oracle.connected:
        raise UnreachableError("eccentricity is undefined on a disconnected graph")
    return [int(oracle.row(u).max()) for u in range(oracle.n)]


def radius_and_diameter(oracle: DistanceOracle) -> tuple[int, int]:
    ecc = eccentricities(oracle)
    return min(ecc), max(ecc)
