"""Reduced rational expressions in the variables of an initial cluster.

A :class:`RationalExpression` is a quotient of Laurent polynomials kept in a
canonical reduced form: the denominator is either 1 (the expression is a
Laurent polynomial, possibly with negative exponents in the numerator) or a
canonical polynomial that shares no factor and no monomial with the
numerator.  Canonical forms make expression equality and set membership
exact, which the mutation-class search relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath.laurent import (
    LaurentPolynomial,
    divide_exact,
    format_polynomial,
    laurent_gcd,
)


@dataclass(frozen=True)
class RationalExpression:
    numerator: LaurentPolynomial
    denominator: LaurentPolynomial

    @staticmethod
    def make(num: LaurentPolynomial,
             den: LaurentPolynomial) -> "RationalExpression":
        if den.is_zero:
            raise ZeroDivisionError("expression with zero denominator")
        if num.is_zero:
            return RationalExpression(LaurentPolynomial.zero(num.arity),
                                      LaurentPolynomial.one(num.arity))
        shift, dpoly = den.poly_part()
        num = num.shift(tuple(-s for s in shift))
        if dpoly.is_constant:
            return RationalExpression(num * (1 / dpoly.constant_value()),
                                      LaurentPolynomial.one(num.arity))
        q = divide_exact(num, dpoly)
        if q is not None:
            return RationalExpression(q, LaurentPolynomial.one(num.arity))
        g = laurent_gcd(num, dpoly)
        if not g.is_one:
            num = divide_exact(num, g)
            dpoly = divide_exact(dpoly, g)
            assert num is not None and dpoly is not None
        c, mono, dcan = dpoly.canonical_parts()
        num = num.shift(tuple(-v for v in mono)) * (Fraction(1) / c)
        return RationalExpression(num, dcan)

    @staticmethod
    def variable(arity: int, index: int) -> "RationalExpression":
        return RationalExpression(LaurentPolynomial.variable(arity, index),
                                  LaurentPolynomial.one(arity))

    @staticmethod
    def constant(arity: int, value) -> "RationalExpression":
        return RationalExpression(LaurentPolynomial.constant(arity, value),
                                  LaurentPolynomial.one(arity))

    @property
    def arity(self) -> int:
        return self.numerator.arity

    @property
    def is_laurent(self) -> bool:
        """True when the reduced denominator is a unit monomial."""
        return self.denominator.is_one

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __add__(self, other: "RationalExpression") -> "RationalExpression":
        return RationalExpression.make(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator)

    def __mul__(self, other: "RationalExpression") -> "RationalExpression":
        return RationalExpression.make(self.numerator * other.numerator,
                                       self.denominator * other.denominator)

    def __truediv__(self, other: "RationalExpression") -> "RationalExpression":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero expression")
        return RationalExpression.make(self.numerator * other.denominator,
                                       self.denominator * other.numerator)

    def reciprocal(self) -> "RationalExpression":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return RationalExpression.make(self.denominator, self.numerator)

    def __pow__(self, e: int) -> "RationalExpression":
        if e < 0:
            return self.reciprocal() ** (-e)
        return RationalExpression.make(self.numerator ** e,
                                       self.denominator ** e)

    def display(self, names: Sequence[str]) -> str:
        """Human-facing form: Laurent content shown as ``(poly)/(monomial)``."""
        if not self.denominator.is_one:
            return (f"({format_polynomial(self.numerator, names)})"
                    f"/({format_polynomial(self.denominator, names)})")
        if self.numerator.is_zero:
            return "0"
        mins, poly = self.numerator.poly_part()
        down = tuple(min(v, 0) for v in mins)
        if not any(down):
            return format_polynomial(self.numerator, names)
        top = self.numerator.shift(tuple(-v for v in down))
        mono = format_polynomial(
            LaurentPolynomial.monomial(self.arity, tuple(-v for v in down)),
            names)
        body = format_polynomial(top, names)
        if top.is_monomial:
            return f"{body}/({mono})"
        return f"({body})/({mono})"


def evaluate_poly(poly: LaurentPolynomial,
                  values: Sequence[RationalExpression]) -> RationalExpression:
    """Evaluate a Laurent polynomial at a tuple of rational expressions."""
    if len(values) != poly.arity:
        raise ValueError("value tuple does not match arity")
    arity = values[0].arity if values else poly.arity
    acc = RationalExpression.constant(arity, 0)
    for exps, coeff in poly.sorted_terms():
        term = RationalExpression.constant(arity, coeff)
        for k, e in enumerate(exps):
            if e:
                term = term * values[k] ** e
        acc = acc + term
    return acc
