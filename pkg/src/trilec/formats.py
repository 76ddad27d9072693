"""Text formats for graphs, triangulations and list assignments.

UPPER   ``[[1,2,3],[2,3],[3],[]]`` - entry i lists the neighbours of i above i
EDGES   a header line ``n <count>`` followed by one ``u v`` pair per line
ROT     ``[[1,2,3],[0,3,2],...]`` - full cyclic neighbour order of every vertex
LISTS   one ``u v: c1,c2,...`` line per edge

Blank lines and ``#`` comments are ignored in the line-based formats.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import ParseError
from .graph import SimpleGraph, build_graph, norm_edge
from .plane import PlaneTriangulation, from_rotation_system

FORMATS = ("UPPER", "EDGES", "ROT")


def _json_lists(text: str) -> list[list[int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("expected a list of lists", 1, 1)
    for i, row in enumerate(data):
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"entry {i} contains non-integer {x!r}", 1)
    return data


def parse_upper(text: str) -> SimpleGraph:
    rows = _json_lists(text)
    n = len(rows)
    edges = []
    for i, row in enumerate(rows):
        for j in row:
            if j <= i:
                raise ParseError(f"entry {i} lists {j}, which is not above {i}", 1)
            if j >= n:
                raise ParseError(f"entry {i} lists {j}, out of range for {n} vertices", 1)
            edges.append((i, j))
    return build_graph(n, edges)


def format_upper(g: SimpleGraph) -> str:
    rows = [sorted(u for u in g.adjacency[v] if u > v) for v in range(g.order)]
    return json.dumps(rows, separators=(",", ":"))


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edges(text: str) -> SimpleGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise ParseError(f"expected header 'n <count>', got {header!r}", lineno, 1)
    n = int(parts[1])
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v', got {line!r}", lineno, 1)
        u, v = int(parts[0]), int(parts[1])
        if u == v or u >= n or v >= n:
            raise ParseError(f"invalid edge {u} {v} for {n} vertices", lineno, 1)
        edges.append((u, v))
    return build_graph(n, edges)


def format_edges(g: SimpleGraph) -> str:
    return "\n".join([f"n {g.order}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_rot(text: str) -> PlaneTriangulation:
    return from_rotation_system(_json_lists(text))


def format_rot(t: PlaneTriangulation) -> str:
    return json.dumps([list(r) for r in t.rotations], separators=(",", ":"))


def detect_format(text: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("["):
        return "UPPER"
    return "EDGES"


def parse_graph_text(text: str, fmt: str = "AUTO") -> Union[SimpleGraph, PlaneTriangulation]:
    fmt = detect_format(text) if fmt.upper() == "AUTO" else fmt.upper()
    if fmt == "UPPER":
        return parse_upper(text)
    if fmt == "EDGES":
        return parse_edges(text)
    if fmt == "ROT":
        return parse_rot(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_graph_file(path: Union[str, Path], fmt: str = "AUTO") -> Union[SimpleGraph, PlaneTriangulation]:
    return parse_graph_text(Path(path).read_text(encoding="utf-8"), fmt)


def format_graph(obj: Union[SimpleGraph, PlaneTriangulation], fmt: str) -> str:
    fmt = fmt.upper()
    if fmt == "ROT":
        if not isinstance(obj, PlaneTriangulation):
            raise ValueError("ROT export needs an embedded triangulation")
        return format_rot(obj)
    g = obj.graph() if isinstance(obj, PlaneTriangulation) else obj
    if fmt == "UPPER":
        return format_upper(g)
    if fmt == "EDGES":
        return format_edges(g)
    raise ValueError(f"unknown format {fmt!r}")


def parse_lists(text: str) -> dict[tuple[int, int], frozenset[int]]:
    out = {}
    for lineno, line in _content_lines(text):
        head, sep, tail = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v: c1,c2,...', got {line!r}", lineno, 1)
        try:
            colors = frozenset(int(c) for c in tail.replace(",", " ").split())
        except ValueError:
            raise ParseError(f"bad colour list {tail.strip()!r}", lineno, len(head) + 2) from None
        e = norm_edge(int(parts[0]), int(parts[1]))
        if e in out:
            raise ParseError(f"duplicate list for edge {e}", lineno, 1)
        out[e] = colors
    return out


def format_lists(lists) -> str:
    return "".join(
        f"{u} {v}: {','.join(str(c) for c in sorted(cs))}\n" for (u, v), cs in sorted(lists.items())
    )
