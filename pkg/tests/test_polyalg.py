from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hesstop.errors import DomainError, NotHomogeneousError, PolynomialSyntaxError
from hesstop.polyalg import (
    HomoPoly,
    complex_power_parts,
    format_poly,
    multiply,
    parse,
    partial,
    product_family,
    radial_family,
    saddle_family,
    swap_xy,
)

from conftest import homopolys
from helpers import complex_power_oracle, dict_multiply, poly_as_dict, random_homopoly


F = Fraction
X = HomoPoly(1, (F(1), F(0)))
Y = HomoPoly(1, (F(0), F(1)))


class TestParse:
    def test_difference_of_squares(self):
        assert parse("x^2 - y^2") == HomoPoly(2, (F(1), F(0), F(-1)))

    def test_monkey_saddle(self):
        assert parse("x^3 - 3*x*y^2") == saddle_family(3)

    def test_rational_coefficient(self):
        p = parse("3/2*x^2*y - y^3")
        assert p.coeffs == (F(0), F(3, 2), F(0), F(-1))

    def test_whitespace_insignificant(self):
        assert parse(" x ^ 2 + 2* x * y + y^2 ") == parse("x^2+2*x*y+y^2")

    def test_repeated_monomials_accumulate(self):
        assert parse("x^2 + x^2") == parse("2*x^2")

    def test_leading_minus(self):
        assert parse("-x^2 + y^2") == -parse("x^2 - y^2")

    def test_not_homogeneous_names_both_degrees(self):
        with pytest.raises(NotHomogeneousError) as exc:
            parse("x + x*y")
        assert exc.value.degrees == (1, 2)

    @pytest.mark.parametrize(
        "bad", ["bogus(", "x^", "2//3", "x**2", "", "3*", "x^-2", "1/0*x"]
    )
    def test_syntax_errors(self, bad):
        with pytest.raises(PolynomialSyntaxError):
            parse(bad)

    @given(homopolys())
    @settings(max_examples=150)
    def test_format_parse_round_trip(self, p):
        assert parse(format_poly(p)) == p


class TestArithmetic:
    def test_partial_x(self):
        assert partial(parse("x^2 - y^2"), "x") == parse("2*x")

    def test_partial_y(self):
        assert partial(saddle_family(3), "y") == parse("-6*x*y")

    def test_partial_kills_pure_other_variable(self):
        d = partial(parse("y^3"), "x")
        assert d.is_zero and d.degree == 2

    def test_multiply_difference_times_sum(self):
        assert multiply(parse("x^2-y^2"), parse("x^2+y^2")) == parse("x^4 - y^4")

    def test_multiply_saddle_by_radial(self):
        # frozen from the independent dict-convolution oracle
        prod = multiply(saddle_family(3), radial_family(1))
        assert prod == parse("x^5 - 2*x^3*y^2 - 3*x*y^4")
        assert poly_as_dict(prod) == dict_multiply(saddle_family(3), radial_family(1))

    def test_multiply_by_zero(self):
        z = multiply(parse("x^2+y^2"), HomoPoly.zero(3))
        assert z.is_zero and z.degree == 5

    def test_add_degree_mismatch_is_error(self):
        with pytest.raises(DomainError):
            parse("x") + parse("x^2")

    def test_add_with_tagged_zero_is_total(self):
        assert HomoPoly.zero(7) + parse("x^2") == parse("x^2")

    def test_zero_polynomials_equal_across_degree_tags(self):
        assert HomoPoly.zero(3) == HomoPoly.zero(0)
        assert hash(HomoPoly.zero(3)) == hash(HomoPoly.zero(0))

    def test_evaluate(self):
        assert parse("x^2-y^2").evaluate(3, 2) == 5
        assert saddle_family(3).evaluate(1, 1) == -2
        assert parse("x^3").evaluate(0, 0) == 0
        assert parse("1/2*x*y").evaluate(F(2, 3), F(3)) == 1

    def test_swap_xy(self):
        assert swap_xy(parse("x^3 - 3*x*y^2")) == parse("y^3 - 3*x^2*y")

    @given(homopolys(), homopolys())
    @settings(max_examples=60)
    def test_multiply_commutative(self, p, q):
        assert multiply(p, q) == multiply(q, p)

    @given(homopolys(max_degree=4), homopolys(max_degree=4), homopolys(max_degree=4))
    @settings(max_examples=40)
    def test_multiply_associative(self, p, q, r):
        assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))

    @given(homopolys(), homopolys())
    @settings(max_examples=60)
    def test_multiply_matches_dict_oracle(self, p, q):
        assert poly_as_dict(multiply(p, q)) == dict_multiply(p, q)

    @given(homopolys())
    @settings(max_examples=100)
    def test_euler_identity(self, p):
        # x p_x + y p_y = deg(p) * p, coefficient-exact
        lhs = multiply(X, partial(p, "x")) + multiply(Y, partial(p, "y"))
        assert lhs == p.degree * p

    @given(homopolys(min_degree=1), st.integers(-5, 5), st.integers(-5, 5))
    @settings(max_examples=60)
    def test_euler_identity_pointwise(self, p, x, y):
        lhs = x * partial(p, "x").evaluate(x, y) + y * partial(p, "y").evaluate(x, y)
        assert lhs == p.degree * p.evaluate(x, y)


class TestFamilies:
    def test_saddle_small_members(self):
        assert saddle_family(2) == parse("x^2 - y^2")
        assert saddle_family(3) == parse("x^3 - 3*x*y^2")
        assert saddle_family(4) == parse("x^4 - 6*x^2*y^2 + y^4")

    @pytest.mark.parametrize("m", range(2, 21))
    def test_saddle_equals_real_part_oracle(self, m):
        re, _ = complex_power_oracle(m)
        assert poly_as_dict(saddle_family(m)) == re

    def test_complex_power_parts_match_oracle(self):
        for n in range(0, 12):
            re, im = complex_power_parts(n)
            ore, oim = complex_power_oracle(n)
            assert poly_as_dict(re) == ore
            assert poly_as_dict(im) == oim

    def test_radial_small_members(self):
        assert radial_family(1) == parse("x^2 + y^2")
        assert radial_family(2) == parse("x^4 + 2*x^2*y^2 + y^4")
        assert radial_family(0) == HomoPoly.constant(1)

    def test_radial_is_power_of_circle(self):
        assert radial_family(5) == parse("x^2+y^2") ** 5

    def test_product_family_degree(self):
        assert product_family(4, 3).degree == 10

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            saddle_family(1)
        with pytest.raises(DomainError):
            radial_family(-1)


def test_random_homopoly_respects_degree(rng):
    p = random_homopoly(rng, 6)
    assert p.degree == 6 and not p.is_zero
