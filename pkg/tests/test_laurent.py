"""Laurent polynomial arithmetic, division, gcd, segments, text syntax."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gencluster.exactmath.laurent import (
    ArityMismatchError,
    LaurentPolynomial as L,
    arith,
    default_names,
    divide_exact,
    format_polynomial,
    laurent_gcd,
    parse_polynomial,
    segment_decompose,
)


def _x(i, arity=3):
    return L.variable(arity, i)


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=3)
exponent_vectors = st.tuples(st.integers(-3, 3), st.integers(-3, 3),
                             st.integers(-3, 3))


@st.composite
def laurent_polys(draw, max_terms=4):
    terms = draw(st.dictionaries(exponent_vectors, coefficients,
                                 max_size=max_terms))
    return L(3, terms)


class TestArith:
    def test_square_example(self):
        x2 = _x(1, 2)
        assert arith("mul", x2 + 1, x2 + 1) == x2 ** 2 + 2 * x2 + 1

    def test_additive_identity(self):
        p = _x(0) + 2 * _x(2) - 7
        assert arith("add", p, L.zero(3)) == p

    def test_laurent_unit_cancellation(self):
        x1 = _x(0, 1)
        assert arith("mul", x1 ** -1, x1) == L.one(1)

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            arith("add", L.one(2), L.one(3))

    @given(laurent_polys(), laurent_polys(), laurent_polys())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestDivideExact:
    def test_square_by_root(self):
        x1 = _x(0, 1)
        assert divide_exact(x1 ** 2 + 2 * x1 + 1, x1 + 1) == x1 + 1

    def test_self_division(self):
        p = _x(0) ** 2 + 3 * _x(1) - _x(2) ** -1
        assert divide_exact(p, p) == L.one(3)

    def test_not_divisible(self):
        a = _x(0) + _x(2) + _x(1)
        b = _x(0) + _x(2)
        assert divide_exact(a, b) is None

    def test_zero_divisor_rejected(self):
        with pytest.raises(ZeroDivisionError):
            divide_exact(L.one(2), L.zero(2))

    @given(laurent_polys(), laurent_polys())
    @settings(max_examples=80, deadline=None)
    def test_mul_then_divide_round_trip(self, a, b):
        if b.is_zero:
            return
        assert divide_exact(a * b, b) == a


class TestGcd:
    def test_coprime_pair(self):
        assert laurent_gcd(_x(1) + 1, _x(0) + _x(2)).is_one

    def test_self_gcd_is_normalized(self):
        p = 2 * _x(0) + 2
        assert laurent_gcd(p, p) == _x(0) + 1

    def test_common_factor(self):
        x1, x2 = _x(0, 2), _x(1, 2)
        a = (x1 + 1) * (x1 + 1) * (x2 + 1)
        b = (x1 + 1) * (x2 + 3)
        assert laurent_gcd(a, b) == x1 + 1

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            laurent_gcd(L.zero(2), L.zero(2))

    def test_one_side_zero(self):
        p = 2 * _x(0) + 2
        assert laurent_gcd(L.zero(3), p) == _x(0) + 1

    def test_multivariate_nonsegment_factor(self):
        x1, x2, x3 = _x(0), _x(1), _x(2)
        g = x1 + x2 + x3
        assert laurent_gcd(g * (x1 + 1), g * (x2 + 5)) == g

    @given(laurent_polys(max_terms=2), laurent_polys(max_terms=2),
           laurent_polys(max_terms=2))
    @settings(max_examples=40, deadline=None)
    def test_gcd_scaling_property(self, a, b, g):
        # gcd(a g, b g) is associate to g * gcd(a, b).
        if a.is_zero or b.is_zero or g.is_zero:
            return
        left = laurent_gcd(a * g, b * g)
        right = (g * laurent_gcd(a, b)).canonical()
        assert left == right


class TestSegments:
    def test_univariate_square(self):
        x1 = _x(0, 2)
        seg = segment_decompose(x1 ** 2 + 2 * x1 + 1)
        assert seg.unit_monomial == (0, 0)
        assert seg.direction == (1, 0)
        assert seg.stretch == 1
        assert seg.profile == (Fraction(1), Fraction(2), Fraction(1))

    def test_single_monomial_degenerate(self):
        seg = segment_decompose(_x(0, 2) * _x(1, 2))
        assert seg.unit_monomial == (1, 1)
        assert seg.stretch == 1
        assert seg.profile == (Fraction(1),)

    def test_stretched_diagonal(self):
        x1, x2 = _x(0, 2), _x(1, 2)
        f = x1 * x2 + x1 ** 3 * x2 ** 3 + x1 ** 5 * x2 ** 5
        seg = segment_decompose(f)
        assert seg.unit_monomial == (1, 1)
        assert seg.direction == (1, 1)
        assert seg.stretch == 2
        assert seg.profile == (Fraction(1), Fraction(1), Fraction(1))

    def test_not_a_segment(self):
        assert segment_decompose(_x(0) + _x(1) + _x(2) ** 2 + 1) is None

    @given(laurent_polys())
    @settings(max_examples=80, deadline=None)
    def test_round_trip_and_primitive_direction(self, p):
        if p.is_zero:
            return
        seg = segment_decompose(p)
        if seg is None:
            return
        assert seg.reconstruct(p.arity) == p
        from math import gcd
        g = 0
        for w in seg.direction:
            g = gcd(g, abs(w))
        assert g == 1


class TestTextSyntax:
    def test_wire_example(self):
        names = ("x1", "x2", "x3")
        text = "x2*x3^-1 + x3^-1"
        p = parse_polynomial(text, names)
        assert format_polynomial(p, names) == text

    def test_rational_and_negative_coefficients(self):
        names = default_names(2)
        p = parse_polynomial("-3/2*x1^2 + x2 - 1", names)
        assert p.coefficient((2, 0)) == Fraction(-3, 2)
        assert p.coefficient((0, 0)) == -1
        assert parse_polynomial(format_polynomial(p, names), names) == p

    def test_primed_names(self):
        names = ("x1'", "x2")
        p = parse_polynomial("x1'^2*x2 + 2", names)
        assert p.coefficient((2, 1)) == 1

    @given(laurent_polys())
    @settings(max_examples=80, deadline=None)
    def test_print_parse_round_trip(self, p):
        names = default_names(3)
        assert parse_polynomial(format_polynomial(p, names), names) == p
