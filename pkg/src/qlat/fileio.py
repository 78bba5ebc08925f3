"""Parsing and canonical emission of the two input file formats.

Graph files:

    graph <name>
    vertices <n>
    edge <id> <tail> <head> [tree]

Bipartite files:

    bipartite <name>
    part0 <ids...>
    part1 <ids...>
    sedge <i> <j> <+1|-1>

Blank lines and '#' comments are accepted on input and dropped by the
canonical emitters; emission sorts edges and uses single spaces, so that
emit(parse(f)) is a fixed point byte for byte.
"""

from __future__ import annotations

from .bipartite import SignedBipartiteGraph
from .graphs import OrientedMultigraph, SpanningTree


class ParseError(ValueError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int_field(no, token, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(no, f"{what} must be an integer, got {token!r}") from None


def parse_graph(text):
    """Parse a graph file into (graph, spanning tree, name)."""
    name = None
    vertices = None
    edges = []
    tree = []
    seen_ids = set()
    for no, tok in _content_lines(text):
        key = tok[0]
        if key == "graph":
            if len(tok) != 2:
                raise ParseError(no, "expected: graph <name>")
            if name is not None:
                raise ParseError(no, "duplicate graph line")
            name = tok[1]
        elif key == "vertices":
            if len(tok) != 2:
                raise ParseError(no, "expected: vertices <n>")
            if vertices is not None:
                raise ParseError(no, "duplicate vertices line")
            vertices = _int_field(no, tok[1], "vertex count")
            if vertices < 1:
                raise ParseError(no, "vertex count must be positive")
        elif key == "edge":
            if len(tok) not in (4, 5) or (len(tok) == 5 and tok[4] != "tree"):
                raise ParseError(no, "expected: edge <id> <tail> <head> [tree]")
            if vertices is None:
                raise ParseError(no, "edge before vertices line")
            eid = _int_field(no, tok[1], "edge id")
            tail = _int_field(no, tok[2], "tail")
            head = _int_field(no, tok[3], "head")
            if eid in seen_ids:
                raise ParseError(no, f"duplicate edge id {eid}")
            seen_ids.add(eid)
            if not (1 <= tail <= vertices and 1 <= head <= vertices):
                raise ParseError(no, f"edge {eid} endpoint out of range 1..{vertices}")
            edges.append((eid, tail, head))
            if len(tok) == 5:
                if tail == head:
                    raise ParseError(no, f"loop edge {eid} cannot be a tree edge")
                tree.append(eid)
        else:
            raise ParseError(no, f"unknown directive {key!r}")
    if name is None:
        raise ParseError(1, "missing graph line")
    if vertices is None:
        raise ParseError(1, "missing vertices line")
    ids = sorted(e for e, _, _ in edges)
    if ids != list(range(1, len(edges) + 1)):
        raise ParseError(1, "edge ids must be contiguous from 1")
    try:
        return OrientedMultigraph(vertices, edges), SpanningTree(tree), name
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def parse_bipartite(text):
    """Parse a bipartite file into (signed bipartite graph, name)."""
    name = None
    part0 = None
    part1 = None
    signs = {}
    for no, tok in _content_lines(text):
        key = tok[0]
        if key == "bipartite":
            if len(tok) != 2:
                raise ParseError(no, "expected: bipartite <name>")
            if name is not None:
                raise ParseError(no, "duplicate bipartite line")
            name = tok[1]
        elif key in ("part0", "part1"):
            ids = [_int_field(no, x, "vertex id") for x in tok[1:]]
            if len(set(ids)) != len(ids):
                raise ParseError(no, f"duplicate id in {key}")
            if (part0 if key == "part0" else part1) is not None:
                raise ParseError(no, f"duplicate {key} line")
            if key == "part0":
                part0 = ids
            else:
                part1 = ids
        elif key == "sedge":
            if len(tok) != 4:
                raise ParseError(no, "expected: sedge <i> <j> <+1|-1>")
            if part0 is None or part1 is None:
                raise ParseError(no, "sedge before part declarations")
            i = _int_field(no, tok[1], "part0 vertex")
            j = _int_field(no, tok[2], "part1 vertex")
            if tok[3] not in ("+1", "-1", "1"):
                raise ParseError(no, f"sign must be +1 or -1, got {tok[3]!r}")
            s = 1 if tok[3] in ("+1", "1") else -1
            if i not in part0:
                raise ParseError(no, f"{i} is not in part0")
            if j not in part1:
                raise ParseError(no, f"{j} is not in part1")
            if (i, j) in signs:
                raise ParseError(no, f"duplicate sedge ({i}, {j})")
            signs[(i, j)] = s
        else:
            raise ParseError(no, f"unknown directive {key!r}")
    if name is None:
        raise ParseError(1, "missing bipartite line")
    if part0 is None or part1 is None:
        raise ParseError(1, "missing part0/part1 line")
    try:
        return SignedBipartiteGraph(part0, part1, signs), name
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def emit_graph(g, t, name):
    """Canonical graph file text."""
    lines = [f"graph {name}", f"vertices {g.vertex_count}"]
    for eid, tail, head in g.edges:
        suffix = " tree" if eid in t.tree_edges else ""
        lines.append(f"edge {eid} {tail} {head}{suffix}")
    return "\n".join(lines) + "\n"


def emit_bipartite(b, name):
    """Canonical bipartite file text."""
    lines = [f"bipartite {name}"]
    lines.append("part0" + "".join(f" {v}" for v in b.part0))
    lines.append("part1" + "".join(f" {v}" for v in b.part1))
    for (i, j), s in sorted(b.signs.items()):
        lines.append(f"sedge {i} {j} {'+1' if s > 0 else '-1'}")
    return "\n".join(lines) + "\n"


def sniff_kind(text):
    """\"graph\" or \"bipartite\", from the first content line."""
    for _, tok in _content_lines(text):
        if tok[0] in ("graph", "bipartite"):
            return tok[0]
        break
    raise ParseError(1, "file must start with a graph or bipartite line")
