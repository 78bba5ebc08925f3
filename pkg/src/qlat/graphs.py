"""Oriented multigraphs with a chosen spanning tree.

Vertices are numbered 1..n and edges 1..m; loops and parallel edges are
allowed.  An edge (eid, tail, head) is oriented tail -> head.  Fundamental
cycles and cuts are returned as dense signed integer vectors indexed by
edge id, and exhaustive spanning-tree enumeration doubles as the
brute-force oracle for everything determinant-shaped.
"""

from __future__ import annotations

from dataclasses import dataclass


class OrientedMultigraph:
    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count, edges):
        edges = tuple((int(e), int(a), int(b)) for e, a, b in edges)
        if vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        ids = sorted(e for e, _, _ in edges)
        if ids != list(range(1, len(edges) + 1)):
            raise ValueError("edge ids must be 1..m without gaps or repeats")
        for eid, a, b in edges:
            if not (1 <= a <= vertex_count and 1 <= b <= vertex_count):
                raise ValueError(f"edge {eid} endpoint out of range")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    def __setattr__(self, name, value):
        raise AttributeError("OrientedMultigraph is immutable")

    @property
    def edge_count(self):
        return len(self.edges)

    def edge(self, eid):
        return self.edges[eid - 1]

    def is_loop(self, eid):
        _, a, b = self.edge(eid)
        return a == b

    def non_loop_edges(self):
        return [e for e, a, b in self.edges if a != b]

    def adjacency(self, edge_ids=None):
        """vertex -> list of (edge_id, other_endpoint), loops excluded."""
        adj = {v: [] for v in range(1, self.vertex_count + 1)}
        use = set(edge_ids) if edge_ids is not None else None
        for eid, a, b in self.edges:
            if a == b:
                continue
            if use is not None and eid not in use:
                continue
            adj[a].append((eid, b))
            adj[b].append((eid, a))
        return adj

    def __eq__(self, other):
        if not isinstance(other, OrientedMultigraph):
            return NotImplemented
        return (self.vertex_count, self.edges) == (other.vertex_count, other.edges)

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"OrientedMultigraph({self.vertex_count}, {list(self.edges)})"


class SpanningTree:
    __slots__ = ("tree_edges",)

    def __init__(self, tree_edges):
        object.__setattr__(self, "tree_edges", frozenset(int(e) for e in tree_edges))

    def __setattr__(self, name, value):
        raise AttributeError("SpanningTree is immutable")

    def __contains__(self, eid):
        return eid in self.tree_edges

    def __eq__(self, other):
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.tree_edges == other.tree_edges

    def __hash__(self):
        return hash(self.tree_edges)

    def __repr__(self):
        return f"SpanningTree({sorted(self.tree_edges)})"


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations

    def codes(self):
        return {v.code for v in self.violations}

    def bridge_only(self):
        """True when every violation is a bridge finding.

        The cut/flow constructions stay well defined on bridged graphs, so
        callers may force past these with a warning.
        """
        return bool(self.violations) and self.codes() <= {"bridge"}


def is_connected(g):
    if g.vertex_count == 1:
        return True
    adj = g.adjacency()
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for _, w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def bridges(g):
    """Edge ids whose removal disconnects the graph (loops never qualify)."""
    out = []
    for eid, a, b in g.edges:
        if a == b:
            continue
        if not _connected_without(g, eid):
            out.append(eid)
    return out


def _connected_without(g, skip_eid):
    if g.vertex_count == 1:
        return True
    adj = {v: [] for v in range(1, g.vertex_count + 1)}
    for eid, a, b in g.edges:
        if eid == skip_eid or a == b:
            continue
        adj[a].append(b)
        adj[b].append(a)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def _tree_is_spanning(g, t):
    ids = t.tree_edges
    if len(ids) != g.vertex_count - 1:
        return False
    dsu = list(range(g.vertex_count + 1))

    def find(x):
        while dsu[x] != x:
            dsu[x] = dsu[dsu[x]]
            x = dsu[x]
        return x

    for eid in ids:
        _, a, b = g.edge(eid)
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        dsu[ra] = rb
    return True


def validate(g, t):
    """Check connectivity, bridgelessness and spanning-tree validity.

    Collects every violation instead of stopping at the first.
    """
    out = []
    if not is_connected(g):
        out.append(Violation("disconnected", "graph is not connected"))
    for eid in bridges(g):
        out.append(Violation("bridge", f"edge {eid} is a bridge"))
    bad_ids = [e for e in t.tree_edges if not (1 <= e <= g.edge_count)]
    if bad_ids:
        out.append(Violation("tree_edge_range",
                             f"tree edges {sorted(bad_ids)} are not edge ids"))
    else:
        loops = [e for e in t.tree_edges if g.is_loop(e)]
        if loops:
            out.append(Violation("tree_loop",
                                 f"tree contains loop edges {sorted(loops)}"))
        if len(t.tree_edges) != g.vertex_count - 1:
            out.append(Violation(
                "tree_size",
                f"tree has {len(t.tree_edges)} edges, expected {g.vertex_count - 1}"))
        elif not loops and not _tree_is_spanning(g, t):
            out.append(Violation("tree_not_spanning",
                                 "tree edges do not form a spanning tree"))
    return ValidationReport(tuple(out))


def require_valid(g, t, force=False):
    """Raise unless (g, t) validates; force tolerates bridge findings only."""
    report = validate(g, t)
    if report.ok:
        return report
    if force and report.bridge_only():
        return report
    msgs = "; ".join(f"{v.code}: {v.detail}" for v in report.violations)
    raise ValueError(f"invalid graph/tree pair: {msgs}")


def _tree_path(g, t, start, goal):
    """Edges of the unique tree path start -> goal as (edge_id, forward)."""
    adj = g.adjacency(t.tree_edges)
    prev = {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        if v == goal:
            break
        for eid, w in adj[v]:
            if w not in prev:
                prev[w] = (v, eid)
                stack.append(w)
    if goal not in prev:
        raise ValueError("tree does not connect the requested vertices")
    path = []
    v = goal
    while prev[v] is not None:
        u, eid = prev[v]
        _, tail, head = g.edge(eid)
        path.append((eid, tail == u))
        v = u
    path.reverse()
    return path


def fundamental_cycle(g, t, f):
    """Signed vector of the cycle closed by the non-tree edge f.

    The cycle is oriented by f; tree edges enter with +1 when their own
    orientation agrees with that traversal and -1 otherwise.
    """
    if f in t.tree_edges:
        raise ValueError(f"edge {f} is a tree edge")
    vec = [0] * g.edge_count
    vec[f - 1] = 1
    _, tail, head = g.edge(f)
    if tail == head:
        return tuple(vec)
    # close up: walk back from head to tail through the tree
    for eid, forward in _tree_path(g, t, head, tail):
        vec[eid - 1] = 1 if forward else -1
    return tuple(vec)


def fundamental_cut(g, t, e):
    """Signed vector of the cut determined by removing the tree edge e.

    Edges crossing in the direction of e get +1, the others -1; the entry
    at e itself is always +1.
    """
    if e not in t.tree_edges:
        raise ValueError(f"edge {e} is not a tree edge")
    _, tail, head = g.edge(e)
    # side containing the tail, using the tree minus e
    adj = g.adjacency(t.tree_edges - {e})
    side = {tail}
    stack = [tail]
    while stack:
        v = stack.pop()
        for _, w in adj[v]:
            if w not in side:
                side.add(w)
                stack.append(w)
    vec = [0] * g.edge_count
    for eid, a, b in g.edges:
        a_in, b_in = a in side, b in side
        if a_in and not b_in:
            vec[eid - 1] = 1
        elif b_in and not a_in:
            vec[eid - 1] = -1
    return tuple(vec)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def enumerate_spanning_trees(g):
    """All spanning trees, by recursive include/exclude over the edge list.

    Including an edge contracts its endpoints (union-find); excluding it
    deletes it.  Partial selections are pruned as soon as the remaining
    edges cannot connect the remaining components.
    """
    if not is_connected(g):
        raise ValueError("graph is not connected")
    n = g.vertex_count
    cand = g.non_loop_edges()
    need_total = n - 1
    trees = []

    def rec(idx, parent, chosen):
        need = need_total - len(chosen)
        if need == 0:
            trees.append(SpanningTree(chosen))
            return
        if len(cand) - idx < need:
            return
        eid = cand[idx]
        _, a, b = g.edge(eid)

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ra, rb = find(a), find(b)
        if ra != rb:
            child = list(parent)
            child[ra] = rb
            rec(idx + 1, child, chosen + [eid])
        rec(idx + 1, parent, chosen)

    rec(0, list(range(n + 1)), [])
    return trees


def tree_overlap_counts(g, t):
    """c[i] = number of spanning trees sharing all but i edges with t."""
    require_valid(g, t, force=True)
    r = len(t.tree_edges)
    counts = [0] * (r + 1)
    for tree in enumerate_spanning_trees(g):
        counts[r - len(tree.tree_edges & t.tree_edges)] += 1
    return tuple(counts)


def cycle_space_gf2(g):
    """A GF(2) basis of the binary cycle space, as edge-id bitmasks.

    Uses fundamental cycles of an internal spanning tree; dimension is
    |E| - |V| + 1 for connected input.
    """
    if not is_connected(g):
        raise ValueError("graph is not connected")
    trees = _any_spanning_tree(g)
    basis = []
    for eid in range(1, g.edge_count + 1):
        if eid in trees.tree_edges:
            continue
        vec = fundamental_cycle(g, trees, eid)
        mask = 0
        for i, c in enumerate(vec):
            if c:
                mask |= 1 << i
        basis.append(mask)
    return basis


def _any_spanning_tree(g):
    dsu = list(range(g.vertex_count + 1))

    def find(x):
        while dsu[x] != x:
            dsu[x] = dsu[dsu[x]]
            x = dsu[x]
        return x

    chosen = []
    for eid, a, b in g.edges:
        if a == b:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            dsu[ra] = rb
            chosen.append(eid)
    return SpanningTree(chosen)


def gf2_reduce(basis):
    """Row-reduce a list of bitmasks; returns rows sorted by pivot bit, high first."""
    pivots = {}
    for vec in basis:
        v = vec
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                break
    return [pivots[k] for k in sorted(pivots, reverse=True)]


def gf2_in_span(vec, reduced):
    v = vec
    for row in reduced:
        top = row.bit_length() - 1
        if (v >> top) & 1:
            v ^= row
    return v == 0
