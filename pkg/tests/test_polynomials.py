import random
from fractions import Fraction as F

import pytest

from pshdiag import (
    canonicalize,
    diagram_of_input,
    index_of,
    input_from_json,
    input_to_json,
    lelong_directional,
    minkowski_sum,
    parse_polynomial,
    poly_add,
    poly_mul,
    polynomial,
    serialize_polynomial,
    singularity_input,
    substitute_linear,
    support_of,
)
from pshdiag.errors import (
    DimensionMismatch,
    NegativeExponent,
    PolynomialSyntaxError,
    SingularMatrix,
    UnknownVariable,
    ZeroPolynomial,
)
from pshdiag.linalg import inverse, frac_rows

# z1 = zeta1, z2 = zeta2 - zeta1
SHEAR = [[1, 0], [-1, 1]]


def P(text, dim=2):
    return parse_polynomial(text, dim)


class TestParser:
    def test_square(self):
        assert P("z1^2 + 2*z1*z2 + z2^2").as_dict() == {
            (2, 0): F(1),
            (1, 1): F(2),
            (0, 2): F(1),
        }

    def test_cancellation(self):
        assert P("(z1+z2)^2 - z1^2 - 2*z1*z2").as_dict() == {(0, 2): F(1)}

    def test_zero(self):
        assert P("0").is_zero()

    def test_rational_coefficients(self):
        assert P("1/2*z1 + 3/4").as_dict() == {(1, 0): F(1, 2), (0, 0): F(3, 4)}

    def test_syntax_error_position(self):
        with pytest.raises(PolynomialSyntaxError) as err:
            P("z1 + + z2")
        assert err.value.position == 5

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            P("z3 + 1", dim=2)

    def test_bad_exponent(self):
        with pytest.raises(NegativeExponent):
            P("z1^z2")

    def test_trailing_garbage(self):
        with pytest.raises(PolynomialSyntaxError):
            P("z1 z2")


class TestRingOps:
    def test_add(self):
        assert poly_add(P("z1"), P("z2")).as_dict() == {(1, 0): F(1), (0, 1): F(1)}

    def test_binomial(self):
        assert poly_mul(P("z1+z2"), P("z1+z2")) == P("z1^2 + 2*z1*z2 + z2^2")

    def test_cross_cancellation(self):
        assert poly_mul(P("z1 - z2"), P("z1 + z2")) == P("z1^2 - z2^2")

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            poly_add(P("z1"), parse_polynomial("z1", 3))


class TestSubstitution:
    @pytest.mark.parametrize(
        "before,after",
        [
            ("z1^2 + z1*z2", "z1*z2"),
            ("z1^3 + z1^2*z2", "z1^2*z2"),
            ("z1^2 + 2*z1*z2 + z2^2", "z2^2"),
            ("z1^3", "z1^3"),
        ],
    )
    def test_shear(self, before, after):
        assert substitute_linear(P(before), SHEAR) == P(after)

    def test_identity(self):
        p = P("z1^2 - 3*z1*z2 + 1/2")
        assert substitute_linear(p, [[1, 0], [0, 1]]) == p

    def test_inverse_round_trip(self):
        p = P("2*z1^3 - z2^2 + z1*z2")
        m = frac_rows([[2, 1], [1, 1]])
        assert substitute_linear(substitute_linear(p, m), inverse(m)) == p

    def test_singular_matrix(self):
        with pytest.raises(SingularMatrix):
            substitute_linear(P("z1"), [[1, 1], [2, 2]])


class TestSupportAndDiagram:
    def test_support(self):
        assert support_of(P("z1^3 + z1^2*z2")) == {(F(3), F(0)), (F(2), F(1))}
        assert support_of(P("5")) == {(F(0), F(0))}
        assert support_of(P("(z1+z2)^2")) == {
            (F(2), F(0)),
            (F(1), F(1)),
            (F(0), F(2)),
        }

    def test_support_of_zero(self):
        with pytest.raises(ZeroPolynomial):
            support_of(P("0"))

    def test_diagram_of_original_input(self):
        u = singularity_input(
            2,
            [
                P("z1^3"),
                P("z1^3 + z1^2*z2"),
                P("z1^2 + z1*z2"),
                P("z1^2 + 2*z1*z2 + z2^2"),
            ],
        )
        assert diagram_of_input(u) == canonicalize(2, [(2, 0), (0, 2)])

    def test_diagram_of_transformed_input(self):
        u = singularity_input(2, [P("z1^3"), P("z1^2*z2"), P("z1*z2"), P("z2^2")])
        assert diagram_of_input(u) == canonicalize(2, [(3, 0), (1, 1), (0, 2)])

    def test_single_monomial(self):
        u = singularity_input(2, [P("z1*z2")])
        assert diagram_of_input(u) == canonicalize(2, [(1, 1)])


class TestIndex:
    def test_examples(self):
        assert index_of(P("z1^3 + z1^2*z2"), (1, 1)) == 3
        assert index_of(P("z1^2 + z1*z2"), (1, 2)) == 2
        assert index_of(P("7"), (F(5, 3), 11)) == 0

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            index_of(P("0"), (1, 1))

    def test_matches_diagram_lelong(self):
        p = P("z1^4 + 3*z1*z2^2 - z2^5")
        u = singularity_input(2, [p])
        for a in [(1, 1), (F(1, 2), 3), (2, F(2, 3))]:
            assert index_of(p, a) == lelong_directional(diagram_of_input(u), a)


def random_poly(rng, dim, max_deg=6, max_terms=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_deg // 2) for _ in range(dim))
        terms[e] = F(rng.randint(-5, 5))
    p = polynomial(dim, terms)
    if p.is_zero():
        e = tuple(rng.randint(0, 2) for _ in range(dim))
        p = polynomial(dim, {e: F(1)})
    return p


class TestValuationProperties:
    def test_index_additive_under_products(self):
        rng = random.Random(42)
        for _ in range(200):
            dim = rng.randint(1, 3)
            p, q = random_poly(rng, dim), random_poly(rng, dim)
            a = [F(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(dim)]
            assert index_of(poly_mul(p, q), a) == index_of(p, a) + index_of(q, a)

    def test_diagram_homomorphism(self):
        rng = random.Random(43)
        for _ in range(40):
            dim = rng.randint(1, 3)
            p, q = random_poly(rng, dim), random_poly(rng, dim)
            dp = diagram_of_input(singularity_input(dim, [p]))
            dq = diagram_of_input(singularity_input(dim, [q]))
            dpq = diagram_of_input(singularity_input(dim, [poly_mul(p, q)]))
            assert dpq == minkowski_sum(dp, dq)

    def test_permutation_covariance(self):
        rng = random.Random(44)
        for _ in range(20):
            p = random_poly(rng, 3)
            swapped = polynomial(
                3, {(e[1], e[0], e[2]): c for e, c in p.terms}
            )
            a = [F(rng.randint(1, 7)) for _ in range(3)]
            assert index_of(p, a) == index_of(swapped, [a[1], a[0], a[2]])


class TestSerialization:
    def test_parse_serialize_round_trip(self):
        rng = random.Random(45)
        for _ in range(30):
            p = random_poly(rng, rng.randint(1, 3))
            assert parse_polynomial(serialize_polynomial(p), p.dim) == p

    def test_input_json_round_trip(self):
        u = singularity_input(2, [P("z1^3"), P("z1^2 + z1*z2")])
        assert input_from_json(input_to_json(u)) == u
