"""Generation of small test families.

connected_bridgeless_multigraphs enumerates, up to isomorphism, every
connected bridgeless multigraph with at most a given number of edges
(loops and parallel edges included); graph_tree_instances pairs each with
all of its spanning trees.  random_signed_bipartite draws arbitrary sign
matrices for the non-graphical test surface.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

from .bipartite import SignedBipartiteGraph
from .graphs import OrientedMultigraph, bridges, enumerate_spanning_trees, is_connected


def _canonical_form(n, pairs):
    """Lexicographically least relabeling of an unordered pair multiset."""
    best = None
    for perm in permutations(range(1, n + 1)):
        relabeled = sorted(tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in pairs)
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return best


def connected_bridgeless_multigraphs(max_edges, loopless=False):
    """All connected bridgeless multigraphs with <= max_edges edges, up to iso.

    Edges are oriented low vertex -> high vertex and numbered in sorted
    order, which is harmless: none of the lattice isomorphism classes in
    play depend on the orientation.
    """
    out = []
    seen = set()
    for m in range(1, max_edges + 1):
        for n in range(1, m + 1):
            pool = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)
                    if not (loopless and a == b)]
            for pairs in combinations_with_replacement(pool, m):
                used = {v for p in pairs for v in p}
                if len(used) != n:
                    continue
                g = OrientedMultigraph(
                    n, [(i + 1, a, b) for i, (a, b) in enumerate(sorted(pairs))])
                if not is_connected(g) or bridges(g):
                    continue
                key = (n, _canonical_form(n, pairs))
                if key in seen:
                    continue
                seen.add(key)
                out.append(g)
    return out


def graph_tree_instances(max_edges, loopless=False):
    """(graph, spanning tree) pairs over the bridgeless family."""
    out = []
    for g in connected_bridgeless_multigraphs(max_edges, loopless=loopless):
        for t in enumerate_spanning_trees(g):
            out.append((g, t))
    return out


def random_signed_bipartite(rng, n0, n1, edge_prob=0.6):
    """A random sign matrix on parts of sizes n0 and n1."""
    part0 = range(1, n0 + 1)
    part1 = range(n0 + 1, n0 + n1 + 1)
    signs = {}
    for i in part0:
        for j in part1:
            if rng.random() < edge_prob:
                signs[(i, j)] = rng.choice((-1, 1))
    return SignedBipartiteGraph(part0, part1, signs)


def random_signed_bipartites(seed, count, max_part0, max_part1):
    """A reproducible stream of random signed bipartite graphs."""
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n0 = rng.randint(0, max_part0)
        n1 = rng.randint(0, max_part1)
        out.append(random_signed_bipartite(rng, n0, n1))
    return out


def bipartite_split_instances(seed, per_split, max_vertices):
    """Random-sign instances covering every part-size split up to max_vertices."""
    import random

    rng = random.Random(seed)
    out = []
    for total in range(1, max_vertices + 1):
        for n0 in range(0, total + 1):
            n1 = total - n0
            for _ in range(per_split):
                out.append(random_signed_bipartite(rng, n0, n1))
    return out
