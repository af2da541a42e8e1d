"""Staged evaluation: shortcuts, then formulas, then bounds, then the solver."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import Bounds, bounds
from .distance import DistanceOracle
from .errors import DpdomError, NotApplicable
from .formulas import (formula_cycle, formula_grid, formula_path, formula_prism, shortcut_value,
                       torus_equality_cases, torus_infinity_test)
from .graph import CyclePedigree, Graph, PathPedigree, ProductPedigree, pedigree_spec
from .solver import SearchConfig, SolveReport, solve
from .values import INF, ExtNat, Finite, Params, ext_json

STAGES = ("shortcut", "formula", "bounds", "solver")


@dataclass
class ComputeResult:
    stage: str
    value: ExtNat | None
    certificate: tuple[int, ...] | None = None
    bounds: Bounds | None = None
    report: SolveReport | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"stage": self.stage, "value": ext_json(self.value) if self.value is not None else None,
               "certificate": list(self.certificate) if self.certificate is not None else None}
        if self.bounds is not None:
            out["bounds"] = self.bounds.to_json()
        if self.report is not None:
            out["nodes_explored"] = self.report.nodes_explored
            out["provenance"] = list(self.report.provenance)
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def formula_value(graph: Graph, params: Params, strict: bool = False) -> ExtNat | None:
    """Closed-form value for paths, cycles, grids, prisms and covered toruses.

    Returns None when no formula applies; with ``strict`` the reason is
    raised as NotApplicable instead.
    """
    ped = graph.pedigree
    try:
        if isinstance(ped, PathPedigree):
            return formula_path(ped.n, params)
        if isinstance(ped, CyclePedigree):
            return formula_cycle(ped.n, params)
        if isinstance(ped, ProductPedigree):
            lp, rp = ped.left, ped.right
            if isinstance(lp, PathPedigree) and isinstance(rp, PathPedigree):
                return formula_grid(lp.n, rp.n, params)
            if isinstance(lp, PathPedigree) and isinstance(rp, CyclePedigree):
                return formula_prism(lp.n, rp.n, params)
            if isinstance(lp, CyclePedigree) and isinstance(rp, PathPedigree):
                return formula_prism(rp.n, lp.n, params)
            if isinstance(lp, CyclePedigree) and isinstance(rp, CyclePedigree):
                if torus_infinity_test(lp.n, rp.n, params):
                    return INF
                v = torus_equality_cases(lp.n, rp.n, params)
                if v is None and strict:
                    raise NotApplicable(f"torus C{lp.n} x C{rp.n} is outside the exactly solved cases")
                return v
    except DpdomError:
        if strict:
            raise
        return None
    if strict:
        raise NotApplicable(f"no closed form for graph {pedigree_spec(graph) or '(edge list)'}")
    return None


def compute(graph: Graph, params: Params, config: SearchConfig | None = None,
            force_stage: str | None = None) -> ComputeResult:
    """Answer from the cheapest stage that settles the value.

    With ``force_stage`` only that stage runs; its result has ``value``
    None when the stage cannot settle the query.
    """
    if force_stage is not None and force_stage not in STAGES:
        raise ValueError(f"unknown stage {force_stage!r}")
    config = config or SearchConfig()
    oracle = DistanceOracle(graph)
    notes = [] if oracle.connected else ["disconnected graph: value summed over components"]

    def wanted(stage):
        return force_stage is None or force_stage == stage

    if wanted("shortcut"):
        v = shortcut_value(oracle, params)
        if v is not None or force_stage == "shortcut":
            return ComputeResult("shortcut", v, notes=notes)
    if wanted("formula"):
        v = formula_value(graph, params)
        if v is not None or force_stage == "formula":
            return ComputeResult("formula", v, notes=notes)
    b = None
    if wanted("bounds") or force_stage is None:
        b = bounds(graph, params, oracle)
        if b.exact or force_stage == "bounds":
            return ComputeResult("bounds", b.lower if b.exact else None, b.upper_certificate, b, notes=notes)
    if force_stage == "solver":
        run_config = SearchConfig(config.node_budget, config.use_symmetry, None,
                                  config.worker_count_hint, config.use_lower_bound)
    else:
        seed = b.upper_certificate if b is not None else None
        run_config = SearchConfig(config.node_budget, config.use_symmetry,
                                  config.initial_upper if config.initial_upper is not None else seed,
                                  config.worker_count_hint, config.use_lower_bound)
    report = solve(graph, params, run_config, oracle)
    cert = tuple(sorted(report.result.cert)) if isinstance(report.result, Finite) else None
    return ComputeResult("solver", report.value, cert, b, report, notes)
