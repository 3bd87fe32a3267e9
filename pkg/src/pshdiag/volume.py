"""Exact polytope volume via facet enumeration and fan triangulation.

Internal helper for the Newton-number computation.  Works entirely over
rationals; intended for desk-scale dimensions (n <= 4).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .diagram import Diagram, Point
from .linalg import det, dot, nullspace, rank, solve_unique

Inequality = tuple[tuple[Fraction, ...], Fraction]  # (a, b) meaning a.x >= b


def _normalize_hyperplane(normal, offset):
    """Canonical (primitive, sign-fixed) key for a hyperplane a.x = b."""
    dens = [c.denominator for c in normal] + [offset.denominator]
    lcm = 1
    for d in dens:
        lcm = lcm * d // _gcd(lcm, d)
    ints = [int(c * lcm) for c in normal] + [int(offset * lcm)]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def diagram_facets(g: Diagram) -> list[Inequality]:
    """Facet inequalities a.x >= b (a >= 0) of conv(generators) + R^n_+.

    Enumerated through the homogenization cone spanned by (v, 1) for each
    generator and (e_k, 0) for each recession direction.
    """
    n = g.dim
    gens: list[tuple[Fraction, ...]] = [tuple(v) + (Fraction(1),) for v in g.generators]
    for k in range(n):
        ray = [Fraction(0)] * (n + 1)
        ray[k] = Fraction(1)
        gens.append(tuple(ray))
    facets: dict[tuple, Inequality] = {}
    for subset in itertools.combinations(range(len(gens)), n):
        rows = [list(gens[i]) for i in subset]
        if rank(rows) != n:
            continue
        basis = nullspace(rows)
        if len(basis) != 1:
            continue
        normal = basis[0]  # (c, -d): c.x - d >= 0 on the valid side
        vals = [dot(normal, v) for v in gens]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            normal = [-x for x in normal]
        else:
            continue
        c = tuple(normal[:n])
        d = -normal[n]
        if all(x == 0 for x in c):
            continue
        key = _normalize_hyperplane(list(c), d)
        facets[key] = (c, d)
    return list(facets.values())


def enumerate_vertices(ineqs: list[Inequality], n: int) -> list[Point]:
    """All vertices of {x : a.x >= b for each (a, b)} (assumed bounded)."""
    verts: set[Point] = set()
    for subset in itertools.combinations(range(len(ineqs)), n):
        rows = [list(ineqs[i][0]) for i in subset]
        rhs = [ineqs[i][1] for i in subset]
        x = solve_unique(rows, rhs)
        if x is None:
            continue
        if all(dot(a, x) >= b for a, b in ineqs):
            verts.add(tuple(x))
    return sorted(verts)


def _affine_coords(points: list[Point]) -> tuple[list[Point], int]:
    """Exact coordinates of the points in a basis of their affine hull."""
    p0 = points[0]
    diffs = [[q[k] - p0[k] for k in range(len(p0))] for q in points[1:]]
    if not diffs:
        return [()] * len(points), 0
    # pick a maximal independent subset of difference vectors as a basis
    basis: list[list[Fraction]] = []
    for d in diffs:
        if rank(basis + [d]) > len(basis):
            basis.append(d)
    dim = len(basis)
    # coordinates solve basis^T * coeffs = diff in least-squares-free exact
    # form: use the Gram system (basis is independent, Gram is invertible)
    gram = [[dot(bi, bj) for bj in basis] for bi in basis]
    coords = [()]
    for d in diffs:
        rhs = [dot(bi, d) for bi in basis]
        sol = solve_unique(gram, rhs)
        assert sol is not None
        # verify d really lies in the span (points are in the affine hull)
        coords.append(tuple(sol))
    coords[0] = (Fraction(0),) * dim
    return coords, dim


def _facets_of_hull(points: list[Point], d: int) -> list[list[int]]:
    """Facets of the full-dimensional hull of points in R^d, as index lists."""
    facets: dict[tuple, list[int]] = {}
    for subset in itertools.combinations(range(len(points)), d):
        rows_h = [list(points[i]) + [Fraction(1)] for i in subset]
        if rank(rows_h) != d:
            continue
        basis = nullspace(rows_h)
        if len(basis) != 1:
            continue
        normal = basis[0]
        vals = [dot(normal[:d], p) + normal[d] for p in points]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            normal = [-x for x in normal]
            vals = [-v for v in vals]
        else:
            continue
        key = _normalize_hyperplane(normal[:d], -normal[d])
        if key not in facets:
            facets[key] = [i for i, v in enumerate(vals) if v == 0]
    return list(facets.values())


def _triangulate(points: list[Point], d: int) -> list[tuple[int, ...]]:
    """Fan triangulation of the full-dimensional hull, as index tuples."""
    if d == 0:
        return [(0,)]
    if d == 1:
        order = sorted(range(len(points)), key=lambda i: points[i][0])
        return [(order[0], order[-1])]
    base = min(range(len(points)), key=lambda i: points[i])
    simplices: list[tuple[int, ...]] = []
    for facet in _facets_of_hull(points, d):
        if base in facet:
            continue
        fpts = [points[i] for i in facet]
        coords, fd = _affine_coords(fpts)
        assert fd == d - 1
        for sub in _triangulate(coords, fd):
            simplices.append((base,) + tuple(facet[i] for i in sub))
    return simplices


def polytope_volume(vertices: list[Point], n: int) -> Fraction:
    """Euclidean volume of the convex hull of the vertices in R^n.

    Assumes the hull is full-dimensional (returns 0 when it is not).
    """
    if len(vertices) <= n:
        return Fraction(0)
    if rank([[q[k] - vertices[0][k] for k in range(n)] for q in vertices[1:]]) < n:
        return Fraction(0)
    total = Fraction(0)
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    for simplex in _triangulate(list(vertices), n):
        p0 = vertices[simplex[0]]
        mat = [[vertices[i][k] - p0[k] for k in range(n)] for i in simplex[1:]]
        total += abs(det(mat))
    return total / fact
