"""DOT and JSON-lines renderings of crystal graphs.

Output is deterministic: vertices in level order (lex within a level),
edges in generation order, JSON with sorted keys and fixed separators.
"""

from __future__ import annotations

import json

from .partitions import format_partition
from .typea import CrystalGraph


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def graph_to_dot(graph: CrystalGraph) -> str:
    """DOT digraph; vertex ids are the canonical text encodings."""
    lines = ["digraph crystal {"]
    for level in graph.levels:
        for lam in level:
            lines.append(f'    "{format_partition(lam)}";')
    for src, dst, res in graph.edges:
        lines.append(f'    "{format_partition(src)}" -> '
                     f'"{format_partition(dst)}" [res={res}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_jsonl(graph: CrystalGraph, header: dict) -> str:
    """Header record, one {"n","partition"} record per vertex, then the edges."""
    lines = [_dump(header)]
    for n, level in enumerate(graph.levels):
        for lam in level:
            lines.append(_dump({"n": n, "partition": list(lam)}))
    edges = [{"from": list(src), "res": res, "to": list(dst)}
             for src, dst, res in graph.edges]
    lines.append(_dump({"edges": edges}))
    return "\n".join(lines) + "\n"
