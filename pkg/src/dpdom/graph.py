"""Finite simple graphs, the generators used throughout the package, and
the plain-text edge-list format.

Vertices are always the integers ``0..n-1``.  A graph may carry a
*pedigree* describing how it was generated; the distance oracle and the
solver use it for structure-aware shortcuts (max-of-factors distances,
translation symmetry).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path as FsPath
from typing import Iterable, Union

from .errors import CapacityError, GraphParseError, InvalidParameter

MAX_VERTICES = 1 << 20


@dataclass(frozen=True)
class PathPedigree:
    n: int


@dataclass(frozen=True)
class CyclePedigree:
    n: int


@dataclass(frozen=True)
class GluedPedigree:
    k: int
    cycle_len: int


@dataclass(frozen=True)
class ProductPedigree:
    left: "Pedigree"
    right: "Pedigree"
    n_left: int
    n_right: int


@dataclass(frozen=True)
class RawPedigree:
    pass


Pedigree = Union[PathPedigree, CyclePedigree, GluedPedigree, ProductPedigree, RawPedigree]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on ``range(n)``.

    ``adj`` holds one sorted tuple of neighbours per vertex.  Use the
    builders below or :meth:`from_edges` rather than the constructor.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    pedigree: Pedigree = field(default_factory=RawPedigree)
    factors: tuple["Graph", "Graph"] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], pedigree: Pedigree | None = None,
                   factors: tuple["Graph", "Graph"] | None = None) -> "Graph":
        if n < 0:
            raise InvalidParameter(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameter(f"self-loop at {u}")
            if v in nbrs[u]:
                raise InvalidParameter(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(n, adj, pedigree if pedigree is not None else RawPedigree(), factors)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices: list[int]) -> "Graph":
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u in vertices for v in self.adj[u]
                 if v in index and index[u] < index[v]]
        return Graph.from_edges(len(vertices), edges)

    # product coordinates (row-major: (a, b) -> a * n_right + b)

    def encode(self, a: int, b: int) -> int:
        p = self._product()
        return (a % p.n_left) * p.n_right + (b % p.n_right)

    def decode(self, v: int) -> tuple[int, int]:
        p = self._product()
        return divmod(v, p.n_right)

    def _product(self) -> ProductPedigree:
        if not isinstance(self.pedigree, ProductPedigree):
            raise InvalidParameter("graph is not a strong product")
        return self.pedigree

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, pedigree={self.pedigree!r})"


def build_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], PathPedigree(n))


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], CyclePedigree(n))


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product with row-major encoding ``(a, b) -> a * h.n + b``."""
    if g.n == 0 or h.n == 0:
        raise InvalidParameter("strong product needs nonempty factors")
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"product has {n} vertices (limit {MAX_VERTICES})")
    nh = h.n
    edges = []
    for a in range(g.n):
        ga = g.adj[a]
        for b in range(nh):
            u = a * nh + b
            hb = h.adj[b]
            # (a, b') with b' ~ b
            for b2 in hb:
                if b2 > b:
                    edges.append((u, a * nh + b2))
            for a2 in ga:
                if a2 < a:
                    continue
                base = a2 * nh
                edges.append((u, base + b))
                for b2 in hb:
                    edges.append((u, base + b2))
    ped = ProductPedigree(g.pedigree, h.pedigree, g.n, h.n)
    return Graph.from_edges(n, edges, ped, factors=(g, h))


def glued_vertex(i: int, j: int, cycle_len: int) -> int:
    """Index of v_i^j in :func:`build_glued_cycles` (1-based ``i`` and ``j``).

    ``v_1 -> 0``, ``v_2 -> 1``; for ``i >= 3`` the vertices are numbered
    block by block: ``2 + (j - 1) * (cycle_len - 2) + (i - 3)``.
    """
    if i == 1:
        return 0
    if i == 2:
        return 1
    if not (3 <= i <= cycle_len) or j < 1:
        raise InvalidParameter(f"no vertex v_{i}^{j} on cycles of length {cycle_len}")
    return 2 + (j - 1) * (cycle_len - 2) + (i - 3)


def build_glued_cycles(k: int, cycle_len: int) -> Graph:
    """``k`` cycles of length ``cycle_len`` sharing the single edge v_1 v_2."""
    if k < 2 or cycle_len < 5:
        raise InvalidParameter(f"glued cycles need k >= 2 and cycle_len >= 5, got k={k}, L={cycle_len}")
    n = 2 + k * (cycle_len - 2)
    edges = [(0, 1)]
    for j in range(1, k + 1):
        ring = [0, 1] + [glued_vertex(i, j, cycle_len) for i in range(3, cycle_len + 1)]
        edges.extend((ring[t], ring[t + 1]) for t in range(1, cycle_len - 1))
        edges.append((ring[-1], 0))
    return Graph.from_edges(n, edges, GluedPedigree(k, cycle_len))


def glued_cycle_vertices(k: int, cycle_len: int, j: int) -> list[int]:
    """Vertices of the j-th designated cycle, in cycle order v_1, v_2, v_3^j, ..."""
    return [0, 1] + [glued_vertex(i, j, cycle_len) for i in range(3, cycle_len + 1)]


# edge-list format

def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by ``u v`` lines (``#`` comments, blank lines ignored)."""
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise GraphParseError(f"non-integer token in {raw!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphParseError("first line must be the vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphParseError(f"expected 'u v', got {raw!r}", lineno)
        u, v = nums
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range [0, {n - 1}]", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphParseError("empty input: missing vertex count", 1)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


# graph spec expressions: path:N, cycle:N, glued:K:L, product(A,B), file:PATH

def parse_graph_spec(spec: str) -> Graph:
    spec = spec.strip()
    try:
        if spec.startswith("product(") and spec.endswith(")"):
            left, right = _split_product_args(spec[len("product("):-1])
            return strong_product(parse_graph_spec(left), parse_graph_spec(right))
        kind, _, rest = spec.partition(":")
        if kind == "path":
            return build_path(int(rest))
        if kind == "cycle":
            return build_cycle(int(rest))
        if kind == "glued":
            k, _, length = rest.partition(":")
            return build_glued_cycles(int(k), int(length))
        if kind == "file":
            return parse_edge_list(FsPath(rest).read_text(encoding="utf-8"))
    except ValueError:
        raise GraphParseError(f"bad graph spec {spec!r}") from None
    except OSError as exc:
        raise GraphParseError(f"cannot read {rest!r}: {exc}") from None
    raise GraphParseError(f"unknown graph spec {spec!r}")


def _split_product_args(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1:]
    raise GraphParseError(f"product needs two comma-separated arguments: {body!r}")


def pedigree_spec(g: Graph) -> str | None:
    """Inverse of :func:`parse_graph_spec` for generated graphs, None for raw ones."""
    return _ped_spec(g.pedigree)


def _ped_spec(p: Pedigree) -> str | None:
    if isinstance(p, PathPedigree):
        return f"path:{p.n}"
    if isinstance(p, CyclePedigree):
        return f"cycle:{p.n}"
    if isinstance(p, GluedPedigree):
        return f"glued:{p.k}:{p.cycle_len}"
    if isinstance(p, ProductPedigree):
        left, right = _ped_spec(p.left), _ped_spec(p.right)
        if left is None or right is None:
            return None
        return f"product({left},{right})"
    return None
