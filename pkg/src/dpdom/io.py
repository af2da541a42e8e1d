"""Vertex-set files and JSON reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import GraphParseError
from .graph import Graph, ProductPedigree
from .values import Exhausted, Finite, GammaValue, Infinite, ext_json


def parse_vertex_set(text: str, graph: Graph) -> list[int]:
    """One vertex per line; on product graphs an ``a b`` pair is also accepted."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(x) for x in line.split()]
        except ValueError:
            raise GraphParseError(f"non-integer token in {raw!r}", lineno) from None
        if len(nums) == 1:
            v = nums[0]
        elif len(nums) == 2 and isinstance(graph.pedigree, ProductPedigree):
            a, b = nums
            ped = graph.pedigree
            if not (0 <= a < ped.n_left and 0 <= b < ped.n_right):
                raise GraphParseError(f"coordinate pair ({a}, {b}) out of range", lineno)
            v = graph.encode(a, b)
        else:
            raise GraphParseError(f"expected a vertex id or a coordinate pair, got {raw!r}", lineno)
        if not 0 <= v < graph.n:
            raise GraphParseError(f"vertex {v} out of range [0, {graph.n - 1}]", lineno)
        out.append(v)
    return out


def read_vertex_set(path: str | Path, graph: Graph) -> list[int]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}") from None
    return parse_vertex_set(text, graph)


def format_vertex_set(vertices, graph: Graph, header: dict | None = None) -> str:
    lines = []
    if header is not None:
        lines.append("# " + json.dumps(header, sort_keys=True))
    pairs = isinstance(graph.pedigree, ProductPedigree)
    for v in sorted(vertices):
        lines.append("%d %d" % graph.decode(v) if pairs else str(v))
    return "\n".join(lines) + "\n"


def gamma_json(result: GammaValue) -> dict[str, Any]:
    if isinstance(result, Finite):
        return {"status": "finite", "value": result.k, "certificate": sorted(result.cert)}
    if isinstance(result, Infinite):
        return {"status": "infinite", "value": "infinite", "certificate": None}
    if isinstance(result, Exhausted):
        return {"status": "exhausted", "value": None, "certificate": None,
                "nodes_explored": result.nodes_explored}
    raise TypeError(result)


def solve_report_json(report) -> dict[str, Any]:
    out = gamma_json(report.result)
    out.update({
        "nodes_explored": report.nodes_explored,
        "wall_time": round(report.wall_time, 6),
        "provenance": list(report.provenance),
        "complete": report.complete,
        "upper": ext_json(report.best_upper),
        "lower": ext_json(report.root_lower),
    })
    if out["certificate"] is None and report.best_certificate is not None:
        out["certificate"] = list(report.best_certificate)
    return out


def write_json(path: str | Path, payload: dict) -> None:
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
