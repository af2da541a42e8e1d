"""Exact branch-and-bound search for the d-distance p-packing domination number.

Vertex sets are Python ints used as bitsets.  The search is a depth-first
cover search: pick the undominated vertex with the fewest feasible
dominators and branch on which of them dominates it, each child also
forbidding the dominators tried by its older siblings.  A search that
finishes without a feasible leaf proves the value is infinite.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .checks import check_dp_set
from .distance import DistanceOracle
from .errors import CapacityError, InvalidInput, InvalidParameter
from .graph import CyclePedigree, Graph, ProductPedigree
from .values import INF, ExtNat, Exhausted, Finite, GammaValue, Infinite, Params

MAX_SOLVER_VERTICES = 4096


@dataclass
class SearchConfig:
    node_budget: int = 0
    use_symmetry: bool = True
    initial_upper: Sequence[int] | None = None
    worker_count_hint: int = 1
    use_lower_bound: bool = True

    def __post_init__(self):
        if self.node_budget < 0:
            raise InvalidParameter("node budget must be nonnegative")
        if self.worker_count_hint < 1:
            raise InvalidParameter("worker count must be at least 1")


@dataclass(frozen=True)
class SearchState:
    chosen: tuple[int, ...]
    allowed: int
    undominated: int

    @property
    def forbidden(self) -> int:
        return ~self.allowed


@dataclass
class SolveReport:
    result: GammaValue
    nodes_explored: int
    wall_time: float
    provenance: list[str] = field(default_factory=list)
    complete: bool = True
    best_upper: ExtNat = INF
    best_certificate: tuple[int, ...] | None = None
    root_lower: ExtNat = 0

    @property
    def value(self):
        return self.result.value


@dataclass(frozen=True)
class BranchDecision:
    vertex: int | None
    # (dominator, mask of vertices newly forbidden in that child)
    children: tuple[tuple[int, int], ...]
    infeasible: bool = False


@dataclass(frozen=True)
class RootConstraint:
    vertex: int
    children: tuple[tuple[int, int], ...]
    group_order: int


def bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _row_mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


class SearchContext:
    """Ball bitsets for one (graph, d, p) query."""

    def __init__(self, oracle: DistanceOracle, params: Params):
        n = oracle.n
        if n > MAX_SOLVER_VERTICES:
            raise CapacityError(f"solver handles at most {MAX_SOLVER_VERTICES} vertices, got {n}")
        self.oracle = oracle
        self.n = n
        self.params = params
        self.full = (1 << n) - 1
        self.dom = []
        self.pack = []
        for u in range(n):
            row = oracle.row(u)
            self.dom.append(_row_mask(row <= params.d))
            self.pack.append(_row_mask(row <= params.p))

    def root(self) -> SearchState:
        return SearchState((), self.full, self.full)

    def choose(self, state: SearchState, u: int, extra_forbidden: int = 0) -> SearchState:
        return SearchState(state.chosen + (u,),
                           state.allowed & ~self.pack[u] & ~extra_forbidden,
                           state.undominated & ~self.dom[u])


def branch_rule(state: SearchState, ctx: SearchContext) -> BranchDecision:
    if not state.undominated:
        return BranchDecision(None, ())
    dom, allowed = ctx.dom, state.allowed
    best_v, best_c = -1, ctx.n + 1
    for v in bits(state.undominated):
        c = (dom[v] & allowed).bit_count()
        if c < best_c:
            best_v, best_c = v, c
            if c == 0:
                break
    if best_c == 0:
        return BranchDecision(best_v, (), infeasible=True)
    children, earlier = [], 0
    for u in bits(dom[best_v] & allowed):
        children.append((u, earlier))
        earlier |= 1 << u
    return BranchDecision(best_v, tuple(children))


def lower_bound(state: SearchState, ctx: SearchContext) -> ExtNat:
    undom = state.undominated
    if not undom:
        return len(state.chosen)
    size = undom.bit_count()
    best = 0
    dom = ctx.dom
    for u in bits(state.allowed):
        c = (dom[u] & undom).bit_count()
        if c > best:
            best = c
            if best == size:
                break
    if best == 0:
        return INF
    return len(state.chosen) + -(-size // best)


# symmetry

def _cycle_stabilizer(n: int) -> list[list[int]]:
    return [list(range(n)), [(-x) % n for x in range(n)]]


def _torus_stabilizer(m: int, n: int) -> list[list[int]]:
    perms = []
    for sx, sy in itertools.product((1, -1), repeat=2):
        perms.append([((sx * a) % m) * n + (sy * b) % n for a in range(m) for b in range(n)])
        if m == n:
            perms.append([((sy * b) % m) * n + (sx * a) % n for a in range(m) for b in range(n)])
    return perms


def stabilizer_of_zero(graph: Graph) -> list[list[int]] | None:
    """Reflections (and the coordinate swap on square tori) fixing vertex 0.

    Translations act transitively on cycles and tori; together with this
    stabilizer they generate the symmetry group used for root fixing.
    Returns None for graphs without a recognised transitive pedigree.
    """
    ped = graph.pedigree
    if isinstance(ped, CyclePedigree):
        return _cycle_stabilizer(ped.n)
    if (isinstance(ped, ProductPedigree) and isinstance(ped.left, CyclePedigree)
            and isinstance(ped.right, CyclePedigree)):
        return _torus_stabilizer(ped.n_left, ped.n_right)
    return None


def symmetry_root_fix(graph: Graph, ctx: SearchContext) -> RootConstraint | None:
    """Branch on the dominator of vertex 0, one child per stabilizer orbit.

    Child ``i`` takes the lowest-index representative of the i-th orbit and
    forbids every vertex of the earlier orbits.  Any solution can be mapped
    by a stabilizer element so that it contains the representative of the
    first orbit it meets, so no optimum is lost.
    """
    group = stabilizer_of_zero(graph)
    if group is None:
        return None
    candidates = sorted(bits(ctx.dom[0]))
    seen: set[int] = set()
    children, earlier = [], 0
    for u in candidates:
        if u in seen:
            continue
        orbit = {g[u] for g in group}
        seen |= orbit
        children.append((u, earlier))
        earlier |= mask_of(orbit)
    return RootConstraint(0, tuple(children), len(group))


# search

class _BudgetHit(Exception):
    pass


class _Search:
    def __init__(self, ctx: SearchContext, best: int, best_cert: tuple[int, ...] | None,
                 budget: int, use_lb: bool):
        self.ctx = ctx
        self.best = best
        self.best_cert = best_cert
        self.budget = budget
        self.use_lb = use_lb
        self.nodes = 0

    def run(self, chosen: tuple[int, ...], allowed: int, undom: int) -> None:
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            raise _BudgetHit
        if not undom:
            if len(chosen) < self.best:
                self.best = len(chosen)
                self.best_cert = chosen
            return
        depth = len(chosen)
        if depth + 1 >= self.best:
            return
        dom = self.ctx.dom
        best_v, best_c = -1, 1 << 30
        m = undom
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            c = (dom[v] & allowed).bit_count()
            if c < best_c:
                best_v, best_c = v, c
                if c <= 1:
                    break
        if best_c == 0:
            return
        if self.use_lb:
            size = undom.bit_count()
            top = 0
            m = allowed
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                c = (dom[u] & undom).bit_count()
                if c > top:
                    top = c
                    if top == size:
                        break
            if top == 0 or depth + -(-size // top) >= self.best:
                return
        pack = self.ctx.pack
        cands = dom[best_v] & allowed
        earlier = 0
        while cands:
            low = cands & -cands
            u = low.bit_length() - 1
            cands ^= low
            self.run(chosen + (u,), allowed & ~pack[u] & ~earlier, undom & ~dom[u])
            earlier |= low
            if depth + 1 >= self.best:
                return


def _prepare(graph: Graph, params: Params, config: SearchConfig, oracle: DistanceOracle | None):
    if graph.n == 0:
        raise InvalidParameter("solver needs a nonempty graph")
    oracle = oracle if oracle is not None else DistanceOracle(graph)
    ctx = SearchContext(oracle, params)
    best, cert = ctx.n + 1, None
    if config.initial_upper is not None:
        cert = tuple(sorted(set(config.initial_upper)))
        verdict = check_dp_set(oracle, cert, params)
        if not verdict.ok:
            raise InvalidInput("initial upper-bound certificate is not a d-distance p-packing set", verdict)
        best = len(cert)
    root = ctx.root()
    children: list[tuple[int, int]]
    constraint = symmetry_root_fix(graph, ctx) if config.use_symmetry else None
    if constraint is not None:
        children = list(constraint.children)
    else:
        decision = branch_rule(root, ctx)
        children = list(decision.children)
    return ctx, best, cert, children, constraint


def _run_children(search: _Search, children) -> None:
    root = search.ctx.root()
    for u, extra in children:
        if search.best <= 1:
            break
        child = search.ctx.choose(root, u, extra)
        search.run(child.chosen, child.allowed, child.undominated)


def _worker(args):
    oracle, params, best, cert, child, budget, use_lb = args
    search = _Search(SearchContext(oracle, params), best, cert, budget, use_lb)
    try:
        _run_children(search, [child])
    except _BudgetHit:
        return search.best, search.best_cert, search.nodes, False
    return search.best, search.best_cert, search.nodes, True


def solve(graph: Graph, params: Params, config: SearchConfig | None = None,
          oracle: DistanceOracle | None = None) -> SolveReport:
    """Compute the exact value, or report budget exhaustion.

    ``Infinite`` is returned only after a complete search without any
    feasible leaf and without a seeded certificate.
    """
    config = config or SearchConfig()
    t0 = time.perf_counter()
    ctx, best, cert, children, constraint = _prepare(graph, params, config, oracle)
    provenance = ["full-search"]
    if constraint is not None:
        provenance.append("symmetry")
    if cert is not None:
        provenance.append("initial-upper")
    if not config.use_lower_bound:
        provenance.append("no-lower-bound")
    root_lb = lower_bound(ctx.root(), ctx)

    complete = True
    if config.worker_count_hint > 1 and len(children) > 1:
        provenance.append(f"workers={config.worker_count_hint}")
        jobs = [(ctx.oracle, params, best, cert, ch, config.node_budget, config.use_lower_bound)
                for ch in children]
        with ProcessPoolExecutor(max_workers=config.worker_count_hint) as pool:
            outcomes = list(pool.map(_worker, jobs))
        nodes = 1
        for b, c, k, done in outcomes:
            nodes += k
            complete = complete and done
            if b < best:
                best, cert = b, c
    else:
        search = _Search(ctx, best, cert, config.node_budget, config.use_lower_bound)
        search.nodes = 1
        try:
            _run_children(search, children)
        except _BudgetHit:
            complete = False
        best, cert, nodes = search.best, search.best_cert, search.nodes

    elapsed = time.perf_counter() - t0
    upper = best if cert is not None else INF
    if not complete:
        result: GammaValue = Exhausted(nodes)
    elif cert is None:
        result = Infinite()
    else:
        result = Finite(len(cert), frozenset(cert))
    return SolveReport(result, nodes, elapsed, provenance, complete, upper, cert, root_lb)
