"""Numerical invariants of diagrams: Newton numbers, indicator values,
relative types for monomial weights, and the standard simplex families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    Diagram,
    axis_intercepts,
    canonicalize,
    contains,
    lelong_directional,
    origin,
    support_value,
    touches_all_axes,
)
from .errors import DimensionMismatch, Unbounded
from .polynomials import SingularityInput, diagram_of_input, weight
from .volume import diagram_facets, enumerate_vertices, polytope_volume


@dataclass(frozen=True)
class NewtonNumberResult:
    """Exact rational Newton number, or the infinite marker (value=None)."""

    value: Fraction | None

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __str__(self):
        return "infinite" if self.infinite else str(self.value)


INFINITE = NewtonNumberResult(None)


def weighted_simplex(a) -> Diagram:
    """Diagram {x >= 0 : <x, a> >= 1}; generators e_k / a_k."""
    a = weight(a)
    n = len(a)
    gens = []
    for k in range(n):
        p = [Fraction(0)] * n
        p[k] = 1 / a[k]
        gens.append(tuple(p))
    return canonicalize(n, gens)


def intercept_simplex(b) -> Diagram:
    """Diagram with axis intercepts b_k; generators b_k * e_k."""
    b = weight(b)
    return weighted_simplex([1 / c for c in b])


def newton_number(g: Diagram) -> NewtonNumberResult:
    """n! * Vol(R^n_+ \\ diagram), or the infinite marker.

    Computed inside the box [0, M]^n with M the largest axis intercept:
    the complement volume is M^n minus the exact volume of box/diagram
    intersection (facet enumeration plus fan triangulation).
    """
    n = g.dim
    if not touches_all_axes(g):
        return INFINITE
    if contains(g, origin(n)):
        return NewtonNumberResult(Fraction(0))
    intercepts = axis_intercepts(g)
    m_box = max(v for v in intercepts if v is not None)
    # box validity: complement is confined to [0, M]^n iff M*e_k lies in
    # the diagram for every k
    for k in range(n):
        corner = [Fraction(0)] * n
        corner[k] = m_box
        assert contains(g, corner), "box constant too small"
    ineqs = list(diagram_facets(g))
    for k in range(n):
        low = [Fraction(0)] * n
        low[k] = Fraction(1)
        ineqs.append((tuple(low), Fraction(0)))  # x_k >= 0
        high = [Fraction(0)] * n
        high[k] = Fraction(-1)
        ineqs.append((tuple(high), -m_box))  # x_k <= M
    verts = enumerate_vertices(ineqs, n)
    inside = polytope_volume(verts, n)
    covol = m_box**n - inside
    return NewtonNumberResult(math.factorial(n) * covol)


def covolume_2d_oracle(g: Diagram) -> Fraction:
    """Independent 2-D check: shoelace area of the complement polygon."""
    if g.dim != 2:
        raise DimensionMismatch("oracle is two-dimensional only")
    if not touches_all_axes(g):
        raise Unbounded("diagram does not touch both axes")
    chain = sorted(g.generators, key=lambda p: (-p[0], p[1]))
    poly = [(Fraction(0), Fraction(0))] + chain
    area = Fraction(0)
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        area += x1 * y2 - x2 * y1
    return abs(area) / 2


def relative_type_monomial(u: SingularityInput, a) -> Fraction:
    """Directional Lelong number of log(sum |p_i|) along a monomial weight."""
    return lelong_directional(diagram_of_input(u), weight(a))


def indicator_eval(g: Diagram, t) -> Fraction:
    """Indicator value at |z_k| = e^{t_k}, t <= 0; alias of the support value."""
    return support_value(g, t)
