"""Canonical text formats: JSON records, the CSV table, DOT and adjacency graphs.

Every emitter here is deterministic down to the byte.  JSON uses compact
separators and fixed key order; lists of subsets and points are sorted
lexicographically before writing.
"""

from __future__ import annotations

import json
from typing import Any, Iterator

from .cosignotopes import CoSignotope
from .counting import PlusCountTable
from .enumeration import HasseDiagram
from .ferrers import FerrersDiagram
from .subsets import GroundParams


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cosignotope_to_dict(t: CoSignotope) -> dict[str, Any]:
    return {
        "n": t.params.n,
        "d": t.params.d,
        "plus": [list(B) for B in t.sorted_plus()],
    }


def cosignotope_from_dict(obj: Any) -> CoSignotope:
    if not isinstance(obj, dict):
        raise ValueError(f"co-signotope record must be an object, got {type(obj).__name__}")
    for key in ("n", "d", "plus"):
        if key not in obj:
            raise ValueError(f"co-signotope record is missing key {key!r}")
    n, d, plus = obj["n"], obj["d"], obj["plus"]
    if not isinstance(n, int) or not isinstance(d, int):
        raise ValueError("record keys n and d must be integers")
    if not isinstance(plus, list):
        raise ValueError("record key plus must be a list of subsets")
    params = GroundParams(n, d)
    subsets = []
    for entry in plus:
        if not isinstance(entry, list) or not all(isinstance(x, int) for x in entry):
            raise ValueError(f"plus entry {entry!r} is not a list of integers")
        subsets.append(tuple(entry))
    if len(set(subsets)) != len(subsets):
        raise ValueError("duplicate subsets in plus list")
    return CoSignotope.from_plus(params, subsets)


def plus_label(t: CoSignotope) -> str:
    """Canonical plus-set string, used as a node label."""
    return dumps_canonical([list(B) for B in t.sorted_plus()])


def diagram_to_dict(diagram: FerrersDiagram) -> dict[str, Any]:
    return {
        "d": diagram.d,
        "i": diagram.i,
        "points": [list(pt) for pt in diagram.sorted_points()],
    }


def diagram_from_dict(obj: Any) -> FerrersDiagram:
    if not isinstance(obj, dict):
        raise ValueError(f"diagram record must be an object, got {type(obj).__name__}")
    for key in ("d", "i", "points"):
        if key not in obj:
            raise ValueError(f"diagram record is missing key {key!r}")
    d, i, points = obj["d"], obj["i"], obj["points"]
    if not isinstance(d, int) or not isinstance(i, int):
        raise ValueError("diagram keys d and i must be integers")
    if not isinstance(points, list):
        raise ValueError("diagram key points must be a list")
    pts = []
    for entry in points:
        if not isinstance(entry, list) or not all(isinstance(x, int) for x in entry):
            raise ValueError(f"point {entry!r} is not a list of integers")
        pts.append(tuple(entry))
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in diagram")
    return FerrersDiagram(d, i, frozenset(pts))


def read_ndjson(text: str) -> Iterator[tuple[int, Any]]:
    """Yield (line number, parsed object) per non-empty line; 1-based lines."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield lineno, json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"line {lineno}: malformed JSON ({exc.msg})") from exc


def table_to_csv(table: PlusCountTable) -> str:
    header = "d\\p," + ",".join(str(p) for p in range(table.max_p + 1))
    lines = [header]
    for d in range(1, table.max_d + 1):
        lines.append(
            str(d) + "," + ",".join(str(table.value(d, p)) for p in range(table.max_p + 1))
        )
    return "\n".join(lines) + "\n"


def table_to_triples(table: PlusCountTable) -> list[dict[str, int]]:
    return [
        {"d": d, "p": p, "value": table.value(d, p)}
        for d in range(1, table.max_d + 1)
        for p in range(table.max_p + 1)
    ]


def hasse_to_dot(h: HasseDiagram) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for idx, t in enumerate(h.nodes):
        lines.append(f'  n{idx} [label="{plus_label(t)}"];')
    for a, b in h.edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_to_adjacency(h: HasseDiagram) -> dict[str, Any]:
    return {
        "n": h.params.n,
        "d": h.params.d,
        "max_level": h.max_level,
        "nodes": [
            {
                "id": idx,
                "level": h.node_levels[idx],
                "plus": [list(B) for B in t.sorted_plus()],
            }
            for idx, t in enumerate(h.nodes)
        ],
        "edges": [list(edge) for edge in h.edges],
    }
