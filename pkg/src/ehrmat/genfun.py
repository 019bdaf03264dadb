"""Multivariate rational generating functions of lattice polytopes:
per-cone terms from half-open unimodular cones, summation over vertex
tangent cones, and the parametric dilation form

    g_kP(z) = sum_i eps_i z^(a_i + (k-1) v_i) / prod_j (1 - z^(b_ij)).

Exponent vectors live in the ambient Z^n; the number of denominator
factors per term is the polytope dimension N, because all cone work is
done in a lattice basis of the polytope's affine hull.
"""

from .cones import (
    HalfOpenSimplicialCone, TangentCone, assert_unimodular,
    facet_normals_unimodular, half_open_decompose, pick_generic_y,
    tangent_cone, triangulate_cone,
)
from .exactmath import (
    integer_kernel, mat_identity, rational_nullspace, solve_linear, vec_add,
    vec_sub,
)
from .vertices import enumerate_vertices


class GenFunTerm:
    """One signed rational-function term of the generating function."""

    def __init__(self, sign, a, v, bs):
        if any(all(x == 0 for x in b) for b in bs):
            raise ValueError("zero denominator exponent")
        self.sign = sign
        self.a = a
        self.v = v
        self.bs = bs


class GenFun:
    def __init__(self, terms, n, dim):
        self.terms = terms
        self.n = n
        self.dim = dim


def unimodular_term(cone):
    """Generating-function term of a half-open unimodular simplicial
    cone: sign +1, numerator exponent apex plus the open rays, one
    denominator factor per ray."""
    if any(not isinstance(x, int) for x in cone.apex):
        raise ValueError("apex must be integral")
    a = cone.apex
    for ray, is_open in zip(cone.rays, cone.open_flags):
        if is_open:
            a = vec_add(a, ray)
    return GenFunTerm(1, a, cone.apex, list(cone.rays))


def affine_lattice_basis(vertices):
    """Basis of the saturated lattice span{v_i - v_0} intersect Z^n,
    as a list of integer vectors."""
    n = len(vertices[0])
    diffs = [vec_sub(v, vertices[0]) for v in vertices[1:]]
    diffs = [d for d in diffs if any(x != 0 for x in d)]
    if not diffs:
        return []
    normals = rational_nullspace(diffs, n)
    if not normals:
        return list(mat_identity(n))
    return integer_kernel(normals, n)


def to_working(basis, vec):
    """Coordinates of an ambient lattice vector in the affine-hull
    lattice basis; integral by saturation."""
    rows = [[b[c] for b in basis] for c in range(len(vec))]
    sol = solve_linear(rows, vec)
    assert sol is not None, "vector outside the affine hull"
    out = []
    for x in sol:
        assert x.denominator == 1, "lattice basis is not saturated"
        out.append(int(x))
    return tuple(out)


def build_genfun(spec):
    """Full pipeline: vertices -> tangent cones -> triangulation ->
    half-open decomposition -> unimodular terms."""
    vs = enumerate_vertices(spec)
    if not vs.vertices:
        raise ValueError("empty polytope")
    basis = affine_lattice_basis(vs.vertices)
    dim = len(basis)
    if dim == 0:
        # a single lattice point
        point = vs.vertices[0]
        return GenFun([GenFunTerm(1, point, point, [])], spec.n, 0)
    terms = []
    for i in range(len(vs)):
        terms.extend(_vertex_terms(vs, i, basis))
    return GenFun(terms, spec.n, dim)


def _vertex_terms(vs, i, basis):
    cone = tangent_cone(vs, i)
    rays_work = [to_working(basis, r) for r in cone.rays]
    dim = len(rays_work[0])
    work_cone = TangentCone(tuple([0] * dim), rays_work)
    pieces = triangulate_cone(work_cone)
    cones_work = [(None, [rays_work[j] for j in piece]) for piece in pieces]
    normals = []
    for _, rays in cones_work:
        assert_unimodular(rays)
        normals.extend(facet_normals_unimodular(rays))
    y = pick_generic_y(normals, rays=rays_work)
    decomposed = half_open_decompose(cones_work, y)
    out = []
    for piece, hoc in zip(pieces, decomposed):
        ambient = HalfOpenSimplicialCone(
            cone.apex, [cone.rays[j] for j in piece], hoc.open_flags)
        out.append(unimodular_term(ambient))
    return out


def dilate(g, k):
    """Generating function of the k-th dilation: numerator exponent
    a + (k-1)v per term, denominators unchanged."""
    if k < 1:
        raise ValueError("dilation factor must be >= 1")
    if k == 1:
        return g
    terms = [GenFunTerm(t.sign,
                        vec_add(t.a, tuple((k - 1) * x for x in t.v)),
                        tuple(k * x for x in t.v),
                        t.bs)
             for t in g.terms]
    return GenFun(terms, g.n, g.dim)


def half_open_contains(apex, rays, open_flags, point):
    """Does the half-open cone contain the point? Decided by the exact
    sign pattern of the (unique) ray coordinates of point - apex."""
    rows = [[r[c] for r in rays] for c in range(len(point))]
    sol = solve_linear(rows, vec_sub(point, apex))
    if sol is None:
        return False
    for lam, is_open in zip(sol, open_flags):
        if is_open and lam <= 0:
            return False
        if not is_open and lam < 0:
            return False
    return True


def term_lattice_points_in_box(term, lo, hi):
    """Lattice points of the term's half-open cone (at k = 1) inside the
    box lo <= x <= hi, by direct scan; test oracle only."""
    from itertools import product

    n = len(term.a)
    flags_folded = [False] * len(term.bs)  # openness already folded into a
    pts = []
    for x in product(*(range(lo[i], hi[i] + 1) for i in range(n))):
        if half_open_contains(term.a, term.bs, flags_folded, x):
            pts.append(x)
    return pts
