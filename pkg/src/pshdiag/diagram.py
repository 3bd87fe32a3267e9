"""Complete convex subsets of the nonnegative orthant.

A diagram is the set conv(generators) + R^n_+, stored by its minimal
(canonical) generator set in lexicographic order.  All operations are pure
and exact; a diagram is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlp
from .errors import (
    DimensionMismatch,
    EmptyInput,
    NegativeCoordinate,
    NonpositiveScale,
    NonpositiveWeight,
    PositiveDirection,
)
from .linalg import dot

Point = tuple[Fraction, ...]


def point(coords) -> Point:
    return tuple(Fraction(c) for c in coords)


def origin(dim: int) -> Point:
    return (Fraction(0),) * dim


@dataclass(frozen=True)
class Diagram:
    dim: int
    generators: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(sorted(self.generators)))

    def __str__(self):
        pts = ", ".join("(" + ",".join(str(c) for c in g) + ")" for g in self.generators)
        return f"Diagram[{pts}]"


@dataclass(frozen=True)
class HomothetyWitness:
    """Witness of the exact set identity A = c*B + x with c > 0, x >= 0."""

    c: Fraction
    x: Point


@dataclass(frozen=True)
class DiagramGraph:
    """Vertices and compact edges of a diagram.

    Edges are index pairs (i, j), i < j, into ``vertices`` together with the
    exact direction vector vertices[j] - vertices[i].
    """

    vertices: tuple[Point, ...]
    edges: tuple[tuple[int, int, Point], ...]


def _check_point(p, dim: int) -> Point:
    p = point(p)
    if len(p) != dim:
        raise DimensionMismatch(f"point of length {len(p)}, expected {dim}")
    return p


def member_of_hull(p: Point, points: list[Point]) -> bool:
    """Exact test: p in conv(points) + R^n_+ (LP feasibility over rationals)."""
    if not points:
        return False
    n = len(p)
    m = len(points)
    # variables: lambda_i >= 0, sum = 1, sum lambda_i q_i <= p componentwise
    eq = [([Fraction(1)] * m, Fraction(1))]
    ub = [([q[k] for q in points], p[k]) for k in range(n)]
    return exactlp.feasible(m, eq=eq, ub=ub, nonneg=True) is not None


def canonicalize(dim: int, raw_points) -> Diagram:
    """Minimal generator set of conv(raw_points) + R^n_+.

    Idempotent and independent of input order.  A point survives iff it is
    not contained in the hull of the remaining points plus the orthant.
    """
    if dim < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
    pts = [_check_point(p, dim) for p in raw_points]
    if not pts:
        raise EmptyInput("at least one generator is required")
    for p in pts:
        if any(c < 0 for c in p):
            raise NegativeCoordinate(f"negative coordinate in {p}")
    pts = sorted(set(pts))
    keep = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1 :]
        # points already dropped are in the hull of the rest, so testing
        # against all other input points is equivalent and order-free
        if not member_of_hull(p, others):
            keep.append(p)
    return Diagram(dim, tuple(keep))


def contains(g: Diagram, p) -> bool:
    p = _check_point(p, g.dim)
    return member_of_hull(p, list(g.generators))


def support_value(g: Diagram, t) -> Fraction:
    """Support function sup{<t, a> : a in the diagram} for t <= 0."""
    t = _check_point_signed(t, g.dim)
    if any(c > 0 for c in t):
        raise PositiveDirection(f"direction {t} has a positive component")
    return max(dot(t, gen) for gen in g.generators)


def _check_point_signed(t, dim: int) -> tuple[Fraction, ...]:
    t = tuple(Fraction(c) for c in t)
    if len(t) != dim:
        raise DimensionMismatch(f"direction of length {len(t)}, expected {dim}")
    return t


def lelong_directional(g: Diagram, a) -> Fraction:
    """min over generators of <a, gen>, for a strictly positive weight."""
    a = _check_point_signed(a, g.dim)
    if any(c <= 0 for c in a):
        raise NonpositiveWeight(f"weight {a} must be strictly positive")
    return min(dot(a, gen) for gen in g.generators)


def minkowski_sum(g1: Diagram, g2: Diagram) -> Diagram:
    if g1.dim != g2.dim:
        raise DimensionMismatch(f"{g1.dim} != {g2.dim}")
    sums = [tuple(x + y for x, y in zip(p, q)) for p in g1.generators for q in g2.generators]
    return canonicalize(g1.dim, sums)


def scale(g: Diagram, c) -> Diagram:
    c = Fraction(c)
    if c <= 0:
        raise NonpositiveScale(f"scale factor must be positive, got {c}")
    # positive scaling preserves both the vertex property and lex order
    return Diagram(g.dim, tuple(tuple(c * x for x in p) for p in g.generators))


def translate(g: Diagram, x) -> Diagram:
    x = _check_point(x, g.dim)
    if any(c < 0 for c in x):
        raise NegativeCoordinate(f"translation {x} must be nonnegative")
    return Diagram(g.dim, tuple(tuple(a + b for a, b in zip(p, x)) for p in g.generators))


def is_homothetic_to(a: Diagram, b: Diagram) -> HomothetyWitness | None:
    """Witness for A = c*B + x with c > 0 and x >= 0, else None.

    The relation is directional: the translation must be nonnegative, so
    A homothetic to B does not imply B homothetic to A.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"{a.dim} != {b.dim}")
    va, vb = a.generators, b.generators
    if len(va) != len(vb):
        return None
    n = a.dim
    if len(va) == 1:
        pa, pb = va[0], vb[0]
        if all(c == 0 for c in pb):
            return HomothetyWitness(Fraction(1), pa)
        ratios = [pa[k] / pb[k] for k in range(n) if pb[k] != 0]
        c = min(ratios)
        if c <= 0:
            return None
        x = tuple(pa[k] - c * pb[k] for k in range(n))
        return HomothetyWitness(c, x)
    # multi-vertex: scaling + nonnegative translation preserve lex order,
    # so canonical orders must correspond; c is forced by vertex differences
    da = tuple(va[1][k] - va[0][k] for k in range(n))
    db = tuple(vb[1][k] - vb[0][k] for k in range(n))
    k0 = next(k for k in range(n) if db[k] != 0)
    c = da[k0] / db[k0]
    if c <= 0:
        return None
    x = tuple(va[0][k] - c * vb[0][k] for k in range(n))
    if any(xi < 0 for xi in x):
        return None
    for pa, pb in zip(va, vb):
        if any(pa[k] != c * pb[k] + x[k] for k in range(n)):
            return None
    return HomothetyWitness(c, x)


def hull_union(g1: Diagram, g2: Diagram) -> Diagram:
    if g1.dim != g2.dim:
        raise DimensionMismatch(f"{g1.dim} != {g2.dim}")
    return canonicalize(g1.dim, list(g1.generators) + list(g2.generators))


def touches_all_axes(g: Diagram) -> bool:
    """True iff every axis carries a generator (all other coordinates zero)."""
    for k in range(g.dim):
        if not any(
            all(c == 0 for j, c in enumerate(p) if j != k) for p in g.generators
        ):
            return False
    return True


def _is_compact_edge(gens: tuple[Point, ...], i: int, j: int) -> bool:
    # exists t < 0 with <t, v_i> = <t, v_j> > <t, v_k> for all other k;
    # by homogeneity the strict system is feasible iff this closed one is
    n = len(gens[0])
    vi, vj = gens[i], gens[j]
    eq = [([vi[k] - vj[k] for k in range(n)], Fraction(0))]
    ub = []
    for k in range(n):
        coeffs = [Fraction(0)] * n
        coeffs[k] = Fraction(1)
        ub.append((coeffs, Fraction(-1)))  # t_k <= -1
    for m, vm in enumerate(gens):
        if m in (i, j):
            continue
        ub.append(([vm[k] - vi[k] for k in range(n)], Fraction(-1)))  # <t, vm - vi> <= -1
    return exactlp.feasible(n, eq=eq, ub=ub) is not None


def compact_graph(g: Diagram) -> DiagramGraph:
    """Vertices and compact 1-faces of the diagram, by exact face enumeration."""
    gens = g.generators
    edges = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if _is_compact_edge(gens, i, j):
                direction = tuple(b - a for a, b in zip(gens[i], gens[j]))
                edges.append((i, j, direction))
    return DiagramGraph(gens, tuple(edges))


def axis_intercepts(g: Diagram) -> list[Fraction | None]:
    """Per axis, the coordinate of the axis generator, or None."""
    out: list[Fraction | None] = []
    for k in range(g.dim):
        vals = [
            p[k]
            for p in g.generators
            if all(c == 0 for j, c in enumerate(p) if j != k)
        ]
        out.append(min(vals) if vals else None)
    return out


# --- serialization ---------------------------------------------------------


def diagram_to_json(g: Diagram) -> dict:
    return {
        "dim": g.dim,
        "generators": [[str(c) for c in p] for p in g.generators],
    }


def diagram_from_json(obj: dict) -> Diagram:
    if not isinstance(obj, dict) or "dim" not in obj or "generators" not in obj:
        raise EmptyInput("diagram JSON must have 'dim' and 'generators'")
    dim = obj["dim"]
    if not isinstance(dim, int):
        raise DimensionMismatch("'dim' must be an integer")
    return canonicalize(dim, [[Fraction(c) for c in p] for p in obj["generators"]])
