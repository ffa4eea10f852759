"""Laurent phenomenon seeds: validation, exchange Laurent polynomials, LP
mutation, seed equivalence and bounded cluster-variable enumeration.

An LP seed is a cluster together with one irreducible exchange polynomial
per variable, subject to: no variable divides any F_i, and F_i does not
depend on x_i.  Constant exchange polynomials are rejected outright (the
invertible-constant reading is not adopted).  Irreducibility is decided
exactly for polynomials whose Newton polytope is a segment (this covers
all univariate inputs); anything else is accepted with an "unverified"
marker rather than silently trusted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .exactmath.laurent import (
    LaurentPolynomial,
    divide_exact,
    format_polynomial,
    laurent_gcd,
    segment_decompose,
)
from .exactmath.matrices import solve_gf2, solve_integer_system
from .exactmath.univariate import factor_univariate
from .expressions import RationalExpression, evaluate_poly

logger = logging.getLogger(__name__)

IRREDUCIBLE_VERIFIED = "verified"
IRREDUCIBLE_UNVERIFIED = "accepted-unverified"


@dataclass(frozen=True)
class LPSeed:
    n: int
    names: tuple[str, ...]
    F: tuple[LaurentPolynomial, ...]
    ring: str = "Q"                    # "Z" | "Q"

    def __str__(self) -> str:
        polys = ", ".join(format_polynomial(f, self.names) for f in self.F)
        return f"LPSeed({polys})"


def make_lp_seed(F: Sequence, names: Optional[Sequence[str]] = None,
                 ring: str = "Q") -> LPSeed:
    """Build an LP seed from polynomials or their text forms."""
    n = len(F)
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(n))
    else:
        names = tuple(names)
    polys = []
    for f in F:
        if isinstance(f, LaurentPolynomial):
            polys.append(f)
        else:
            from .exactmath.laurent import parse_polynomial
            polys.append(parse_polynomial(f, names))
    return LPSeed(n=n, names=names, F=tuple(polys), ring=ring)


@dataclass(frozen=True)
class LPValidation:
    violations: tuple[str, ...]
    irreducibility: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_lp_seed(seed: LPSeed) -> LPValidation:
    violations: list[str] = []
    flags: list[str] = []
    for i, f in enumerate(seed.F):
        label = f"F_{i + 1}"
        if f.arity != seed.n:
            violations.append(f"{label} has wrong arity")
            flags.append(IRREDUCIBLE_UNVERIFIED)
            continue
        if f.is_zero:
            violations.append(f"{label} is zero")
            flags.append(IRREDUCIBLE_UNVERIFIED)
            continue
        if f.is_constant:
            violations.append(f"{label} is constant")
            flags.append(IRREDUCIBLE_UNVERIFIED)
            continue
        mins = f.min_exponents()
        if any(v < 0 for v in mins):
            violations.append(f"{label} has negative exponents")
        for j, v in enumerate(mins):
            if v > 0:
                violations.append(f"x{j + 1} divides {label}")
        if any(exps[i] for exps in f.terms):
            violations.append(f"{label} depends on x{i + 1}")
        flags.append(_irreducibility_flag(f, seed.ring, violations, label))
    return LPValidation(tuple(violations), tuple(flags))


def _irreducibility_flag(f: LaurentPolynomial, ring: str,
                         violations: list[str], label: str) -> str:
    seg = segment_decompose(f)
    if seg is None:
        return IRREDUCIBLE_UNVERIFIED
    profile = list(seg.expanded_profile())
    if len(profile) == 1:
        return IRREDUCIBLE_UNVERIFIED
    _, factors = factor_univariate(profile)
    reducible = len(factors) != 1 or factors[0][1] != 1
    if ring == "Z" and f.content() != 1:
        reducible = True
    if reducible:
        violations.append(f"{label} is reducible")
    return IRREDUCIBLE_VERIFIED


class LPValidationError(ValueError):
    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class LPSubstitutionError(ValueError):
    """A mutation substitution F_hat|_{x_i <- 0} is undefined."""


def _require_valid(seed: LPSeed) -> None:
    report = validate_lp_seed(seed)
    if not report.ok:
        raise LPValidationError(report.violations)


# -- exchange Laurent polynomials ------------------------------------------------

def exchange_laurent(seed: LPSeed) -> tuple[LaurentPolynomial, ...]:
    """F_hat_j = F_j / prod x_k^{a_k} with each a_k maximal.

    a_k is the largest power of F_k dividing F_j after substituting
    x_k <- F_k / x for a fresh symbol x; the fresh symbol is realized as a
    temporary extra variable and the divisibility is tested by repeated
    exact division.
    """
    _require_valid(seed)
    n = seed.n
    ext = [f.extended(1) for f in seed.F]
    out = []
    for j in range(n):
        shift = [0] * n
        for k in range(n):
            if k == j:
                continue
            shift[k] = -_max_dividing_power(seed.F[j], ext[k], k, n)
        out.append(seed.F[j].shift(tuple(shift)))
    return tuple(out)


def _max_dividing_power(fj: LaurentPolynomial, fk_ext: LaurentPolynomial,
                        k: int, n: int) -> int:
    # Substitute x_k <- F_k / x into F_j and clear the power of x: the
    # result is sum_t (terms of F_j with x_k-degree t) * F_k^t * x^(D-t).
    degree = max((exps[k] for exps in fj.terms), default=0)
    powers = [LaurentPolynomial.one(n + 1)]
    for _ in range(degree):
        powers.append(powers[-1] * fk_ext)
    substituted = LaurentPolynomial.zero(n + 1)
    for exps, c in fj.terms.items():
        t = exps[k]
        rest = exps[:k] + (0,) + exps[k + 1:] + (degree - t,)
        substituted = substituted + (
            LaurentPolynomial.monomial(n + 1, rest, c) * powers[t])
    count = 0
    while True:
        q = divide_exact(substituted, fk_ext)
        if q is None:
            return count
        substituted = q
        count += 1


# -- mutation ---------------------------------------------------------------------

def _unit_normalize(p: LaurentPolynomial, ring: str) -> LaurentPolynomial:
    """Canonical representative modulo units of the ground ring.

    Q: integer-primitive with positive leading coefficient; Z: only the
    sign is normalized.
    """
    if p.is_zero:
        return p
    if ring == "Z":
        return p * -1 if p.leading()[1] < 0 else p
    c = p.content()
    if p.leading()[1] < 0:
        c = -c
    return p * (Fraction(1) / c)


def canonical_lp(seed: LPSeed) -> LPSeed:
    """Class representative: every polynomial unit-normalized."""
    return replace(seed, F=tuple(_unit_normalize(f, seed.ring)
                                 for f in seed.F))


def _toggle_prime(name: str) -> str:
    return name[:-1] if name.endswith("'") else name + "'"


def lp_mutate(seed: LPSeed, k: int) -> LPSeed:
    """LP mutation in direction k, returned as the canonical representative.

    x_k' = F_hat_k / x_k; polynomials not involving x_k are kept, the rest
    go through the substitution G_i, saturation of common factors with
    F_hat_k|_{x_i<-0}, and the unique monomial rescale to a polynomial not
    divisible by any variable.
    """
    _require_valid(seed)
    if not 0 <= k < seed.n:
        raise IndexError(f"direction {k} out of range [0, {seed.n})")
    n = seed.n
    fhat = exchange_laurent(seed)
    new_f: list[LaurentPolynomial] = []
    for i in range(n):
        if i == k or not any(exps[k] for exps in seed.F[i].terms):
            new_f.append(seed.F[i])
            continue
        try:
            w = fhat[k].substitute_zero(i)
        except ValueError as exc:
            raise LPSubstitutionError(
                f"F_hat_{k + 1} has negative powers of x{i + 1}") from exc
        if w.is_zero:
            raise LPSubstitutionError(
                f"F_hat_{k + 1} vanishes at x{i + 1} = 0")
        shift = [0] * n
        shift[k] = -1
        nk = w.shift(tuple(shift))          # slot k now holds x_k'
        g = seed.F[i].substitute(k, nk)
        h = g
        while True:
            common = laurent_gcd(h, w)
            if common.is_constant:
                break
            h = divide_exact(h, common)
            assert h is not None
        _, poly = h.poly_part()
        new_f.append(_unit_normalize(poly, seed.ring))
    names = list(seed.names)
    names[k] = _toggle_prime(names[k])
    mutated = LPSeed(n=n, names=tuple(names),
                     F=tuple(new_f), ring=seed.ring)
    report = validate_lp_seed(mutated)
    if report.violations:
        raise RuntimeError(
            f"mutation produced an invalid seed: {report.violations}")
    return canonical_lp(mutated)


# -- equivalence --------------------------------------------------------------------

def seeds_equivalent(a: LPSeed, b: LPSeed) -> bool:
    """Equivalence under unit rescaling of variables and polynomials.

    Looks for units r_i (per variable) and r_i' (per polynomial) with
    x_i = r_i y_i and F_i = r_i' G_i.  Within one polynomial the ratio of
    two coefficients eliminates r_i', leaving multiplicative constraints
    r^(v - w) = q that are solved one prime at a time as integer linear
    systems, plus a sign system over GF(2).  In Z mode the magnitudes must
    all be 1.
    """
    if a.n != b.n or a.ring != b.ring:
        return False
    for fa, fb in zip(a.F, b.F):
        if fa.is_zero != fb.is_zero:
            return False
        if not fa.is_zero and sorted(fa.terms) != sorted(fb.terms):
            return False
    if a.ring == "Z":
        return _equivalent_z(a, b)
    vectors: list[list[int]] = []
    ratios: list[Fraction] = []
    for fa, fb in zip(a.F, b.F):
        if fa.is_zero:
            continue
        support = sorted(fa.terms)
        base = support[0]
        for exps in support[1:]:
            q = ((fb.terms[exps] / fb.terms[base])
                 / (fa.terms[exps] / fa.terms[base]))
            vectors.append([x - y for x, y in zip(exps, base)])
            ratios.append(q)
    if not vectors:
        return True
    sign_rhs = [0 if q > 0 else 1 for q in ratios]
    if not solve_gf2(vectors, sign_rhs):
        return False
    primes = set()
    factored = []
    for q in ratios:
        fac = _factor_rational(abs(q))
        factored.append(fac)
        primes.update(fac)
    for p in sorted(primes):
        rhs = [fac.get(p, 0) for fac in factored]
        if not solve_integer_system(vectors, rhs):
            return False
    return True


def _equivalent_z(a: LPSeed, b: LPSeed) -> bool:
    # Units are +-1: coefficient magnitudes must match term by term, and
    # signs must come from some choice of variable signs s_j and one
    # polynomial sign s'_i (a GF(2) system in n + n unknowns).
    n = a.n
    rows: list[list[int]] = []
    rhs: list[int] = []
    for i, (fa, fb) in enumerate(zip(a.F, b.F)):
        for exps, ca in fa.terms.items():
            cb = fb.terms[exps]
            if abs(ca) != abs(cb):
                return False
            row = [e & 1 for e in exps] + [0] * n
            row[n + i] = 1
            rows.append(row)
            rhs.append(0 if (ca > 0) == (cb > 0) else 1)
    return solve_gf2(rows, rhs)


def _factor_rational(q: Fraction) -> dict[int, int]:
    out: dict[int, int] = {}
    for value, sign in ((q.numerator, 1), (q.denominator, -1)):
        value = abs(value)
        p = 2
        while p * p <= value:
            while value % p == 0:
                out[p] = out.get(p, 0) + sign
                value //= p
            p += 1
        if value > 1:
            out[value] = out.get(value, 0) + sign
    return {p: e for p, e in out.items() if e}


def is_sign_skew_symmetric(seed: LPSeed) -> bool:
    """x_i appears in F_j exactly when x_j appears in F_i."""
    _require_valid(seed)
    dep = [[any(exps[j] for exps in f.terms) for j in range(seed.n)]
           for f in seed.F]
    return all(dep[i][j] == dep[j][i]
               for i in range(seed.n) for j in range(seed.n))


# -- enumeration --------------------------------------------------------------------

def enumerate_lp_cluster_variables(seed: LPSeed,
                                   depth: int) -> set[RationalExpression]:
    """All cluster variables reachable within ``depth`` LP mutations,
    expressed in the initial cluster.

    Every expression must be Laurent in the initial cluster; a violation
    raises.  Two equal exchange Laurent polynomials in one seed are only
    logged (no such example is known), not treated as an error.
    """
    _require_valid(seed)
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    start = canonical_lp(seed)
    exprs = tuple(RationalExpression.variable(seed.n, i)
                  for i in range(seed.n))
    variables = set(exprs)
    key0 = _state_key(start, exprs)
    seen = {key0}
    frontier = [(start, exprs)]
    for _ in range(depth):
        next_frontier = []
        for current, cur_exprs in frontier:
            fhat = exchange_laurent(current)
            if len(set(fhat)) < len(fhat):
                logger.warning(
                    "seed %s has two equal exchange Laurent polynomials",
                    current)
            for k in range(seed.n):
                value = evaluate_poly(fhat[k], cur_exprs) / cur_exprs[k]
                if not value.is_laurent:
                    raise RuntimeError(
                        "LP cluster variable is not Laurent in the initial cluster")
                variables.add(value)
                child = lp_mutate(current, k)
                new_exprs = cur_exprs[:k] + (value,) + cur_exprs[k + 1:]
                key = _state_key(child, new_exprs)
                if key not in seen:
                    seen.add(key)
                    next_frontier.append((child, new_exprs))
        frontier = next_frontier
    return variables


def _state_key(seed: LPSeed, exprs: Sequence[RationalExpression]) -> tuple:
    return (tuple(str(f) for f in seed.F), tuple(exprs))
