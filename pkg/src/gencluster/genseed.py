"""Generalized seeds: validation, exchange polynomials, mutation, the seed
digraph, coprimality and rank criteria, Laurent expansion and bounded
exploration of the mutation class.

A seed is the triple (cluster, strings, exchange matrix) together with the
column divisors d.  The exchange matrix B has n+m rows and n columns; its
top n-by-n block must be skew-symmetrizable and d_i must divide every entry
of column i.  Strings are monomials in the frozen variables whose first and
last entries are 1.

Variable indices are 0-based throughout this module.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .exactmath.laurent import (
    LaurentPolynomial,
    default_names,
    laurent_gcd,
    segment_decompose,
)
from .exactmath.matrices import rational_rank
from .expressions import RationalExpression, evaluate_poly

Matrix = tuple[tuple[int, ...], ...]


def _pos(t: int) -> int:
    return t if t > 0 else 0


@dataclass(frozen=True)
class GeneralizedSeed:
    n: int
    m: int
    names: tuple[str, ...]
    B: Matrix                       # (n+m) x n
    d: tuple[int, ...]
    rho: tuple[tuple[LaurentPolynomial, ...], ...]
    ring: str = "Q"                 # "Z" | "Q" | "Qbar"

    @property
    def size(self) -> int:
        return self.n + self.m

    def is_classical(self) -> bool:
        return all(di == 1 for di in self.d)

    def __str__(self) -> str:
        return (f"GeneralizedSeed(n={self.n}, m={self.m}, "
                f"B={[list(r) for r in self.B]}, d={list(self.d)})")


def make_seed(B: Sequence[Sequence[int]],
              d: Optional[Sequence[int]] = None,
              rho: Optional[Sequence[Sequence]] = None,
              names: Optional[Sequence[str]] = None,
              m: int = 0,
              ring: str = "Q") -> GeneralizedSeed:
    """Build a seed from plain data.

    ``rho`` entries may be LaurentPolynomials, integers or rationals;
    omitted strings default to the classical all-ones strings.
    """
    rows = tuple(tuple(int(v) for v in row) for row in B)
    if not rows:
        raise ValueError("empty exchange matrix")
    n = len(rows[0])
    size = len(rows)
    if size < n:
        raise ValueError("exchange matrix has fewer rows than columns")
    mm = size - n
    if m and m != mm:
        raise ValueError(f"frozen count {m} does not match matrix shape")
    dd = tuple(int(v) for v in d) if d is not None else (1,) * n
    if rho is None:
        strings = tuple(
            tuple(LaurentPolynomial.one(size) for _ in range(dd[i] + 1))
            for i in range(n))
    else:
        strings = []
        for entries in rho:
            row = []
            for entry in entries:
                if isinstance(entry, LaurentPolynomial):
                    row.append(entry)
                else:
                    row.append(LaurentPolynomial.constant(size, entry))
            strings.append(tuple(row))
        strings = tuple(strings)
    nm = tuple(names) if names is not None else default_names(size)
    return GeneralizedSeed(n=n, m=mm, names=nm, B=rows, d=dd,
                           rho=strings, ring=ring)


# -- validation ---------------------------------------------------------------

def validate_seed(seed: GeneralizedSeed) -> list[str]:
    """All violated seed invariants, with indices; empty means valid.

    Indices in messages are 1-based to match the external JSON surface.
    """
    errors: list[str] = []
    n, m = seed.n, seed.m
    size = n + m
    if n < 1:
        errors.append("seed needs at least one exchangeable variable")
        return errors
    if len(seed.names) != size:
        errors.append(f"expected {size} names, got {len(seed.names)}")
    if len(seed.B) != size or any(len(row) != n for row in seed.B):
        errors.append("exchange matrix is not (n+m) x n")
        return errors
    if len(seed.d) != n:
        errors.append(f"expected {n} divisors, got {len(seed.d)}")
        return errors
    for i, di in enumerate(seed.d):
        if di < 1:
            errors.append(f"d_{i + 1} must be a positive integer")
    # Column divisibility: d_i | b_ji for every row j.
    for i, di in enumerate(seed.d):
        if di < 1:
            continue
        for j in range(size):
            if seed.B[j][i] % di:
                errors.append(f"d_{i + 1} does not divide b_{j + 1}{i + 1}")
    # Sign pattern of the top block.
    for i in range(n):
        for j in range(i, n):
            bij, bji = seed.B[i][j], seed.B[j][i]
            if i == j:
                if bij != 0:
                    errors.append(f"diagonal entry b_{i + 1}{i + 1} is nonzero")
                continue
            if (bij == 0) != (bji == 0):
                errors.append(
                    f"b_{i + 1}{j + 1} and b_{j + 1}{i + 1} must vanish together")
            elif bij * bji > 0:
                errors.append(
                    f"b_{i + 1}{j + 1} and b_{j + 1}{i + 1} have equal signs")
    if not any(e.startswith("b_") or e.startswith("diagonal") for e in errors):
        if _skew_symmetrizer(seed.B, n) is None:
            errors.append("top block admits no positive symmetrizer")
    # Strings.
    if len(seed.rho) != n:
        errors.append(f"expected {n} strings, got {len(seed.rho)}")
    else:
        for i, string in enumerate(seed.rho):
            if len(string) != seed.d[i] + 1:
                errors.append(
                    f"string {i + 1} must have d_{i + 1}+1 = {seed.d[i] + 1} entries")
                continue
            for j, entry in enumerate(string):
                if entry.arity != size:
                    errors.append(f"string entry rho_{i + 1},{j} has wrong arity")
                    continue
                if not entry.is_monomial:
                    errors.append(f"rho_{i + 1},{j} is not a monomial")
                    continue
                exps, _ = entry.leading()
                if any(exps[k] for k in range(n)):
                    errors.append(
                        f"rho_{i + 1},{j} involves an exchangeable variable")
                if any(e < 0 for e in exps):
                    errors.append(f"rho_{i + 1},{j} has a negative exponent")
            if string and (not string[0].is_one or not string[-1].is_one):
                errors.append(f"string {i + 1} endpoints must equal 1")
    return errors


def _skew_symmetrizer(B: Matrix, n: int) -> Optional[tuple[int, ...]]:
    """Positive integer diagonal D with D*B_top skew-symmetric, or None.

    Multipliers are propagated along a spanning forest of the nonzero
    pattern and then every pair is verified, so inconsistent cycles are
    rejected.
    """
    mult: list[Optional[Fraction]] = [None] * n
    for root in range(n):
        if mult[root] is not None:
            continue
        mult[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i == j or B[i][j] == 0 or B[j][i] == 0:
                    continue
                if B[i][j] * B[j][i] > 0:
                    return None
                ratio = Fraction(B[i][j], -B[j][i])
                candidate = mult[i] * ratio
                if mult[j] is None:
                    mult[j] = candidate
                    queue.append(j)
    scale = 1
    for v in mult:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    ints = [int(v * scale) for v in mult]
    for i in range(n):
        for j in range(n):
            if ints[i] * B[i][j] != -ints[j] * B[j][i]:
                return None
    return tuple(ints)


class InvalidSeedError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def _require_valid(seed: GeneralizedSeed) -> None:
    violations = validate_seed(seed)
    if violations:
        raise InvalidSeedError(violations)


# -- exchange polynomials and mutation ----------------------------------------

def exchange_polynomials(seed: GeneralizedSeed) -> tuple[LaurentPolynomial, ...]:
    """The multinomials f_i = sum_j rho_ij * prod_k x_k^(j[B_ki/d_i]+ + (d_i-j)[-B_ki/d_i]+)."""
    _require_valid(seed)
    size = seed.size
    out = []
    for i in range(seed.n):
        di = seed.d[i]
        beta = [seed.B[k][i] // di for k in range(size)]
        f = LaurentPolynomial.zero(size)
        for j in range(di + 1):
            exps = tuple(j * _pos(beta[k]) + (di - j) * _pos(-beta[k])
                         for k in range(size))
            f = f + seed.rho[i][j] * LaurentPolynomial.monomial(size, exps)
        out.append(f)
    return tuple(out)


def _toggle_prime(name: str) -> str:
    return name[:-1] if name.endswith("'") else name + "'"


def mutate(seed: GeneralizedSeed, direction: int) -> GeneralizedSeed:
    """Seed mutation: relabel x_i, reverse its string, mutate the matrix.

    Mutation is an involution, so the relabeling toggles a prime mark on
    the mutated variable name.
    """
    _require_valid(seed)
    i = direction
    if not 0 <= i < seed.n:
        raise IndexError(f"direction {i} out of range [0, {seed.n})")
    size = seed.size
    B = seed.B
    new_rows = []
    for k in range(size):
        row = []
        for l in range(seed.n):
            if k == i or l == i:
                row.append(-B[k][l])
            else:
                row.append(B[k][l] + _pos(B[i][l]) * B[k][i]
                           + B[i][l] * _pos(-B[k][i]))
        new_rows.append(tuple(row))
    names = list(seed.names)
    names[i] = _toggle_prime(names[i])
    rho = list(seed.rho)
    rho[i] = tuple(reversed(rho[i]))
    return replace(seed, names=tuple(names), B=tuple(new_rows), rho=tuple(rho))


# -- digraph and acyclicity ----------------------------------------------------

@dataclass(frozen=True)
class DirectedGraph:
    vertices: int
    edges: frozenset[tuple[int, int]]

    def successors(self, v: int) -> list[int]:
        return sorted(j for (i, j) in self.edges if i == v)


def digraph(seed: GeneralizedSeed) -> DirectedGraph:
    """Edge i -> j exactly when b_ij > 0 (columns only exist up to n)."""
    edges = set()
    for i in range(seed.size):
        for j in range(seed.n):
            if seed.B[i][j] > 0:
                edges.add((i, j))
    return DirectedGraph(seed.size, frozenset(edges))


def is_acyclic(seed: GeneralizedSeed) -> bool:
    graph = digraph(seed)
    state = [0] * graph.vertices  # 0 unseen, 1 active, 2 done

    def visit(v: int) -> bool:
        state[v] = 1
        for w in graph.successors(v):
            if state[w] == 1:
                return False
            if state[w] == 0 and not visit(w):
                return False
        state[v] = 2
        return True

    return all(state[v] or visit(v) for v in range(graph.vertices))


# -- coprimality ----------------------------------------------------------------

def is_coprime(seed: GeneralizedSeed) -> bool:
    """Pairwise coprimality of the exchange polynomials.

    Over the ground ring extended by the frozen variables the Newton
    polytope of f_i is a segment parallel to the divided top part of
    column i, so two polynomials with non-proportional top columns are
    coprime with no gcd work; if exactly one of the two involves no
    exchangeable variable at all they are coprime because every f_i is
    primitive (its coefficient monomials share no factor).  Only parallel
    or doubly-degenerate pairs fall through to an actual gcd.
    """
    polys = exchange_polynomials(seed)
    n = seed.n
    tops = [[seed.B[k][i] // seed.d[i] for k in range(n)] for i in range(n)]
    segments = [segment_decompose(f) if not f.is_zero else None for f in polys]
    for i in range(n):
        for j in range(i + 1, n):
            zero_i = not any(tops[i])
            zero_j = not any(tops[j])
            if zero_i != zero_j:
                continue
            if (not zero_i and not zero_j
                    and not _proportional(tops[i], tops[j])):
                continue
            si, sj = segments[i], segments[j]
            if (si is not None and sj is not None
                    and len(si.profile) > 1 and len(sj.profile) > 1
                    and si.direction != sj.direction):
                continue
            if not laurent_gcd(polys[i], polys[j]).is_constant:
                return False
    return True


@dataclass(frozen=True)
class CoprimalityCriteria:
    full_rank: bool
    no_proportional_columns: bool


def coprimality_criteria(seed: GeneralizedSeed) -> CoprimalityCriteria:
    """Sufficient conditions: full rank of B; no two proportional columns."""
    _require_valid(seed)
    full = rational_rank(seed.B) == seed.n
    no_prop = True
    cols = [[seed.B[r][c] for r in range(seed.size)] for c in range(seed.n)]
    for i in range(seed.n):
        for j in range(i + 1, seed.n):
            if _proportional(cols[i], cols[j]):
                no_prop = False
    return CoprimalityCriteria(full_rank=full, no_proportional_columns=no_prop)


def _proportional(u: Sequence[int], v: Sequence[int]) -> bool:
    # p*u = q*v for some rationals p, q not both zero; i.e. all 2x2 minors vanish.
    for a in range(len(u)):
        for b in range(a + 1, len(u)):
            if u[a] * v[b] - u[b] * v[a]:
                return False
    return True


# -- expansion in the initial cluster --------------------------------------------

def initial_expressions(seed: GeneralizedSeed) -> tuple[RationalExpression, ...]:
    return tuple(RationalExpression.variable(seed.size, k)
                 for k in range(seed.size))


def expand_in_initial(seed: GeneralizedSeed,
                      sequence: Iterable[int]) -> tuple[RationalExpression, ...]:
    """Expressions of the final cluster in the initial one.

    Each mutation substitutes the current expressions into the exchange
    polynomial and divides by the mutated variable's expression.
    """
    _require_valid(seed)
    exprs = list(initial_expressions(seed))
    current = seed
    for i in sequence:
        if not 0 <= i < seed.n:
            raise IndexError(f"direction {i} out of range [0, {seed.n})")
        f = exchange_polynomials(current)[i]
        exprs[i] = evaluate_poly(f, exprs) / exprs[i]
        current = mutate(current, i)
    return tuple(exprs)


def verify_laurent(seed: GeneralizedSeed, sequence: Iterable[int]) -> bool:
    """Laurent phenomenon check: every expression has unit-monomial denominator."""
    return all(e.is_laurent for e in expand_in_initial(seed, sequence))


# -- rank-2 exchange-relation identities --------------------------------------

class PreconditionError(ValueError):
    """A named precondition of an operation does not hold."""

    def __init__(self, failed: list[str]):
        super().__init__("; ".join(failed))
        self.failed = failed


def rank2_mutation_identities(seed: GeneralizedSeed) -> bool:
    """Verify the rank-2 exchange-relation identities symbolically.

    With b = b_12 > 0 the two mutated exchange relations satisfy the
    monomial identities r2*r3 = q2*q3*r1^b and, for 0 < k < d_2,
    h_k * r2 = g_k * q3 * r1^(k*b_12/d_2); both are checked by exact
    Laurent arithmetic in the frozen variables.
    """
    _require_valid(seed)
    if seed.n != 2:
        raise PreconditionError(["seed must have rank 2"])
    if seed.B[0][1] <= 0:
        raise PreconditionError(["b_12 > 0 required (normalize signs first)"])
    size = seed.size
    b = seed.B[0][1]
    d2 = seed.d[1]
    beta12 = b // d2
    Bp = mutate(seed, 0).B
    frozen = range(2, size)

    def mono(exponent_of) -> LaurentPolynomial:
        exps = [0] * size
        for j in frozen:
            exps[j] = exponent_of(j)
        return LaurentPolynomial.monomial(size, tuple(exps))

    r1 = mono(lambda j: _pos(seed.B[j][0]))
    q2 = mono(lambda j: _pos(seed.B[j][1]))
    r2 = mono(lambda j: _pos(-seed.B[j][1]))
    q3 = mono(lambda j: _pos(-Bp[j][1]))
    r3 = mono(lambda j: _pos(Bp[j][1]))
    if r2 * r3 != q2 * q3 * r1 ** b:
        return False
    for k in range(1, d2):
        g_k = seed.rho[1][k] * mono(
            lambda j: k * _pos(seed.B[j][1] // d2)
            + (d2 - k) * _pos(-(seed.B[j][1] // d2)))
        h_k = seed.rho[1][k] * mono(
            lambda j: k * _pos(Bp[j][1] // d2)
            + (d2 - k) * _pos(-(Bp[j][1] // d2)))
        if h_k * r2 != g_k * q3 * r1 ** (k * beta12):
            return False
    return True


# -- bounded exploration -----------------------------------------------------------

@dataclass(frozen=True)
class ExplorationResult:
    seeds_found: int
    exhausted: bool


def _canonical_state_key(seed: GeneralizedSeed,
                         exprs: Sequence[RationalExpression],
                         names: Sequence[str]) -> tuple:
    """Relabeling-invariant key: sort exchangeable slots by their expression."""
    n, size = seed.n, seed.size
    expr_strs = [exprs[i].display(names) for i in range(n)]
    cols = [tuple(seed.B[r][c] for r in range(size)) for c in range(n)]
    rho_strs = [tuple(str(p) for p in seed.rho[i]) for i in range(n)]
    order = sorted(range(n),
                   key=lambda i: (expr_strs[i], seed.d[i], cols[i], rho_strs[i]))
    position = {old: new for new, old in enumerate(order)}
    permuted_b = tuple(
        tuple(seed.B[order[r] if r < n else r][order[c]] for c in range(n))
        for r in range(size))
    return (
        tuple(expr_strs[i] for i in order),
        permuted_b,
        tuple(seed.d[i] for i in order),
        tuple(rho_strs[i] for i in order),
    )


def explore_mutation_class(seed: GeneralizedSeed,
                           max_seeds: int) -> ExplorationResult:
    """Breadth-first search of the mutation class up to ``max_seeds`` seeds.

    Seeds are identified by their cluster expressed in the initial cluster
    together with (B, d, rho) up to the relabeling fixed by sorting the
    expressions; directions are explored in increasing index order so the
    search is deterministic.  ``exhausted`` means the whole class was
    enumerated within the bound.
    """
    _require_valid(seed)
    if max_seeds < 1:
        raise ValueError("max_seeds must be positive")
    names = seed.names
    start = (seed, initial_expressions(seed))
    seen = {_canonical_state_key(seed, start[1], names)}
    queue = deque([start])
    while queue:
        current, exprs = queue.popleft()
        fs = exchange_polynomials(current)
        for i in range(seed.n):
            new_exprs = list(exprs)
            new_exprs[i] = evaluate_poly(fs[i], exprs) / exprs[i]
            child = mutate(current, i)
            key = _canonical_state_key(child, new_exprs, names)
            if key in seen:
                continue
            if len(seen) >= max_seeds:
                return ExplorationResult(seeds_found=len(seen), exhausted=False)
            seen.add(key)
            queue.append((child, tuple(new_exprs)))
    return ExplorationResult(seeds_found=len(seen), exhausted=True)
