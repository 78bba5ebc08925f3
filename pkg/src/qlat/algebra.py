"""Grothendieck-group data of the path algebra of a signed bipartite graph.

The algebra is the double quiver of the bipartite graph modulo all length
two paths that start and end in part0 (which also kills every path of
length three or more).  Nothing here materializes modules: the surviving
path basis determines all graded Hom spaces, each simple has an explicit
linear projective resolution of length at most two, and every class we
need lives in the free module over Z[q,q^-1,t]/(t^2-1) spanned by the
indecomposable projectives.  The q-grading is path length; the t-grading
is the parity of negative edges along a path.

Basis order everywhere: part0 vertices first, then part1, each sorted
by id.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bipartite import dual
from .laurent import QTElement
from .matrices import QMatrix

BASIS_TAGS = ("projective", "simple", "injective", "standard", "costandard")


@dataclass(frozen=True)
class PathBasisElement:
    source: int
    target: int
    mid: int | None
    q_degree: int
    t_degree: int


@dataclass(frozen=True)
class K0Vector:
    """Coordinates of a Grothendieck-group class in one of the five bases."""

    coords: tuple
    basis: str

    def __post_init__(self):
        if self.basis not in BASIS_TAGS:
            raise ValueError(f"unknown basis tag {self.basis!r}")


def vertex_order(b):
    return b.part0 + b.part1


def _edge_parity(b, i, j):
    """t-degree of the arrow between i in part0 and j in part1."""
    return 1 if b.sign(i, j) < 0 else 0


def path_basis(b):
    """The full graded basis: idempotents, arrows, surviving length-2 paths."""
    out = [PathBasisElement(v, v, None, 0, 0) for v in vertex_order(b)]
    for (i, j), _ in sorted(b.signs.items()):
        par = _edge_parity(b, i, j)
        out.append(PathBasisElement(i, j, None, 1, par))
        out.append(PathBasisElement(j, i, None, 1, par))
    for a in b.part1:
        for k in b.part0:
            if not b.sign(k, a):
                continue
            for c in b.part1:
                if not b.sign(k, c):
                    continue
                par = (_edge_parity(b, k, a) + _edge_parity(b, k, c)) % 2
                out.append(PathBasisElement(a, c, k, 2, par))
    return out


def hom_qtdim(b, i, j):
    """Graded dimension of the maps between the projectives at i and j.

    Counts paths from i to j: this is exactly the (i, j) entry of the
    Gram matrix in the projective basis.
    """
    verts = set(b.vertices())
    if i not in verts or j not in verts:
        raise ValueError("unknown vertex")
    p0 = set(b.part0)
    total = QTElement.zero()
    if i == j:
        total = total + QTElement.one()
    if (i in p0) != (j in p0):
        lo, hi = (i, j) if i in p0 else (j, i)
        s = b.sign(lo, hi)
        if s:
            total = total + QTElement.monomial(1, 1, 0 if s > 0 else 1)
    elif i not in p0 and j not in p0:
        for k in b.part0:
            si, sj = b.sign(k, i), b.sign(k, j)
            if si and sj:
                total = total + QTElement.monomial(
                    1, 2, (_edge_parity(b, k, i) + _edge_parity(b, k, j)) % 2)
    return total


@lru_cache(maxsize=None)
def k0_gram(b):
    """Gram matrix of the graded Euler form in the projective basis."""
    order = vertex_order(b)
    ent = [[hom_qtdim(b, i, j) for j in order] for i in order]
    return QMatrix(ent, order, order)


@dataclass(frozen=True)
class Resolution:
    """A linear projective resolution, highest homological degree last.

    steps[d] lists (vertex, q_shift, t_shift) summands in homological
    degree d, with multiplicity.
    """

    vertex: int
    steps: tuple


def resolve_simple(b, i):
    """The at-most-two-step linear projective resolution of the simple at i."""
    p0 = set(b.part0)
    if i not in p0 and i not in set(b.part1):
        raise ValueError(f"unknown vertex {i}")
    step0 = ((i, 0, 0),)
    nbrs = b.neighbors(i)
    if not nbrs:
        # isolated vertex: the simple is projective
        return Resolution(i, (step0,))
    if i not in p0:
        step1 = tuple((j, 1, _edge_parity(b, j, i)) for j in nbrs)
        return Resolution(i, (step0, step1))
    step1 = tuple((j, 1, _edge_parity(b, i, j)) for j in nbrs)
    step2 = []
    for j in nbrs:
        pj = _edge_parity(b, i, j)
        for k in b.neighbors(j):
            step2.append((k, 2, (pj + _edge_parity(b, k, j)) % 2))
    return Resolution(i, (step0, step1, tuple(step2)))


def simple_in_projectives(b, i):
    """Class of the simple at i as an alternating sum over its resolution.

    A q-shift of k contributes q^k and a t-shift contributes t; the result
    must coincide with column i of the inverse Gram matrix.
    """
    order = vertex_order(b)
    pos = {v: n for n, v in enumerate(order)}
    coords = [QTElement.zero()] * len(order)
    res = resolve_simple(b, i)
    for d, step in enumerate(res.steps):
        for v, qs, ts in step:
            term = QTElement.monomial(1 if d % 2 == 0 else -1, qs, ts)
            coords[pos[v]] = coords[pos[v]] + term
    return K0Vector(tuple(coords), "projective")


@lru_cache(maxsize=None)
def k0_gram_inverse(b):
    return k0_gram(b).inverse("unit")


@lru_cache(maxsize=None)
def d_matrix(b):
    """Matrix of the duality involution in the projective basis.

    The involution is q-anti-linear, fixes every simple class, and acts on
    projective coordinates as v -> M bar(v) with M = G^-1 bar(G); it
    squares to the identity and carries projectives to injectives.
    """
    g = k0_gram(b)
    return k0_gram_inverse(b) * g.map(lambda x: x.bar())


def apply_d(b, coords):
    """Apply the duality involution to projective-basis coordinates."""
    return d_matrix(b).mul_vector(tuple(c.bar() for c in coords))


def to_projective(b, vec):
    """Convert a K0Vector in any of the five bases to projective coordinates."""
    if vec.basis == "projective":
        return vec.coords
    cols = {
        "simple": lambda: k0_gram_inverse(b),
        "injective": lambda: d_matrix(b),
        "standard": lambda: _family_matrix(b, "standard"),
        "costandard": lambda: _family_matrix(b, "costandard"),
    }[vec.basis]()
    return cols.mul_vector(vec.coords)


def _family_matrix(b, tag):
    fams = distinguished_classes(b)
    cols = [list(v.coords) for v in fams[tag]]
    ent = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]
    order = vertex_order(b)
    return QMatrix(ent, order, order)


def euler_form(b, x, y):
    """The graded Euler form: x* G y on projective coordinates.

    q-sesquilinear (anti-linear on the left) and t-bilinear.
    """
    xs = to_projective(b, x) if isinstance(x, K0Vector) else tuple(x)
    ys = to_projective(b, y) if isinstance(y, K0Vector) else tuple(y)
    g = k0_gram(b)
    mid = g.mul_vector(ys)
    total = QTElement.zero()
    for a, m in zip(xs, mid):
        total = total + a.bar() * m
    return total


def gram_in_basis(b, tag):
    """Gram matrix of the Euler form in one of the five distinguished bases."""
    fams = distinguished_classes(b)
    vecs = fams[tag]
    order = vertex_order(b)
    ent = [[euler_form(b, u, v) for v in vecs] for u in vecs]
    return QMatrix(ent, order, order)


@lru_cache(maxsize=None)
def distinguished_classes(b):
    """Projective, simple, injective, standard and costandard classes.

    All are returned in projective-basis coordinates, indexed by vertex
    order.  Standard classes are the projectives on part0 and the simples
    on part1; costandard classes swap in the injectives on part0.
    """
    order = vertex_order(b)
    n = len(order)
    p0 = set(b.part0)
    ginv = k0_gram_inverse(b)
    dmat = d_matrix(b)

    def unit_vec(k):
        return tuple(QTElement.one() if i == k else QTElement.zero() for i in range(n))

    projectives = [K0Vector(unit_vec(k), "projective") for k in range(n)]
    simples = [K0Vector(ginv.column(k), "projective") for k in range(n)]
    injectives = [K0Vector(dmat.column(k), "projective") for k in range(n)]
    standard = [projectives[k] if order[k] in p0 else simples[k] for k in range(n)]
    costandard = [injectives[k] if order[k] in p0 else simples[k] for k in range(n)]
    return {
        "projective": projectives,
        "simple": simples,
        "injective": injectives,
        "standard": standard,
        "costandard": costandard,
    }


def koszul_transport(b, x):
    """Transport a simple-basis class to the projective basis of the dual.

    The simple at i maps to the projective at i over the flipped-signs
    dual, and coefficients transform by the ring involution q -> -q^-1 t
    (t fixed).  At t = 1 this is the plain substitution q -> -q^-1; the
    extra t is what makes the pairing identity

        <x, y> = sigma(<Kx, Ky>),   sigma(q) = -q^-1 t,

    hold entrywise for arbitrary edge signs, because the dual flips every
    sign and therefore every arrow's t-parity.
    """
    if x.basis != "simple":
        raise ValueError("transport expects simple-basis coordinates")
    here = vertex_order(b)
    there = vertex_order(dual(b))
    by_vertex = dict(zip(here, x.coords))
    coords = tuple(by_vertex[v].subst_q(t_twist=True) for v in there)
    return K0Vector(coords, "projective")


def koszul_substitute(val):
    """Apply the transport substitution q -> -q^-1 t to a pairing value."""
    return val.subst_q(t_twist=True)
