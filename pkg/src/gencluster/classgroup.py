"""Class groups of generalized cluster algebras that are Krull domains.

Height-1 prime divisors containing a cluster variable correspond to the
non-associated irreducible factors of its exchange polynomial; the
valuation of x_i at such a prime is the multiplicity of the factor.  The
class group is the cokernel of the valuation matrix, computed by Smith
normal form.

Two ground-field modes are supported.  ``rational`` factors exchange
polynomials over Q and keeps explicit witnesses.  ``closed`` counts primes
over an algebraically closed field without materializing algebraic
numbers: a squarefree block of degree delta and multiplicity mu in the
segment profile contributes delta distinct primes of multiplicity mu,
because a primitive-direction binomial x^w - c is irreducible in the
Laurent ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exactmath.laurent import LaurentPolynomial, segment_decompose
from .exactmath.univariate import (
    factor_univariate,
    gcd_monic,
    squarefree_decompose,
    trim,
)
from .exactmath.matrices import smith_normal_form
from .genseed import (
    GeneralizedSeed,
    PreconditionError,
    exchange_polynomials,
    is_acyclic,
    is_coprime,
    validate_seed,
)

MODE_RATIONAL = "rational"
MODE_CLOSED = "closed"


@dataclass(frozen=True)
class ClosedWitness:
    """One of the conjugate roots of a squarefree profile block.

    Identifies a prime over the algebraic closure by combinatorial data
    only: the segment direction, the stretch, the block polynomial in the
    segment parameter, and which of its ``block_degree`` roots this is.
    """

    direction: tuple[int, ...]
    stretch: int
    block: tuple[int, ...]
    block_degree: int
    root_index: int


@dataclass(frozen=True)
class PrimeDivisor:
    source: int                 # 0-based cluster variable index
    multiplicity: int
    witness: Union[LaurentPolynomial, ClosedWitness]


def check_preconditions(seed: GeneralizedSeed,
                        require_acyclic: bool = True) -> None:
    """Raise a named error unless the seed is valid, acyclic and coprime."""
    failed = []
    violations = validate_seed(seed)
    if violations:
        failed.append("invalid-seed")
    else:
        if require_acyclic and not is_acyclic(seed):
            failed.append("not-acyclic")
        if not is_coprime(seed):
            failed.append("not-coprime")
    if failed:
        raise PreconditionError(failed)


def height_one_primes(seed: GeneralizedSeed, mode: str = MODE_RATIONAL,
                      require_acyclic: bool = True) -> list[PrimeDivisor]:
    """Prime divisors containing one of the cluster variables.

    The acyclicity requirement can be relaxed (``require_acyclic=False``);
    the result then describes the upper algebra under coprimality alone.
    """
    if mode not in (MODE_RATIONAL, MODE_CLOSED):
        raise ValueError(f"unknown field mode {mode!r}")
    check_preconditions(seed, require_acyclic)
    polys = exchange_polynomials(seed)
    for i, f in enumerate(polys):
        if f.is_constant:
            # x_i * x_i' constant makes x_i a unit; the height-1 prime
            # correspondence assumes non-unit cluster variables.
            raise PreconditionError(
                [f"constant-exchange-polynomial-f{i + 1}"])
    primes: list[PrimeDivisor] = []
    profiles: dict[int, tuple[tuple[int, ...], int, list[Fraction]]] = {}
    for i, f in enumerate(polys):
        seg = segment_decompose(f)
        if seg is None:
            # Strings with frozen-variable content can bend the polytope;
            # factoring those needs general multivariate factorization,
            # which is out of scope.
            raise PreconditionError(
                [f"non-segment-exchange-polynomial-f{i + 1}"])
        expanded = list(seg.expanded_profile())
        profiles[i] = (seg.direction, seg.stretch, expanded)
        if len(expanded) == 1:
            continue  # monomial exchange polynomial: no primes from x_i
        if mode == MODE_RATIONAL:
            _, factors = factor_univariate(expanded)
            for coeffs, mult in factors:
                witness = _witness_polynomial(coeffs, seg.direction,
                                              seed.size)
                primes.append(PrimeDivisor(source=i, multiplicity=mult,
                                           witness=witness))
        else:
            _, blocks = squarefree_decompose(expanded)
            for block, mult in blocks:
                degree = len(block) - 1
                for t in range(degree):
                    primes.append(PrimeDivisor(
                        source=i, multiplicity=mult,
                        witness=ClosedWitness(direction=seg.direction,
                                              stretch=seg.stretch,
                                              block=tuple(block),
                                              block_degree=degree,
                                              root_index=t)))
    _assert_no_cross_source_collision(primes, profiles, mode)
    return primes


def _witness_polynomial(coeffs: Sequence[int], direction: tuple[int, ...],
                        arity: int) -> LaurentPolynomial:
    poly = LaurentPolynomial.zero(arity)
    for t, c in enumerate(coeffs):
        if c:
            poly = poly + LaurentPolynomial.monomial(
                arity, tuple(t * w for w in direction), c)
    return poly.canonical()


def _assert_no_cross_source_collision(primes, profiles, mode) -> None:
    # Coprimality makes collisions impossible; a collision is a logic error.
    if mode == MODE_RATIONAL:
        seen: dict[LaurentPolynomial, int] = {}
        for p in primes:
            if p.witness in seen and seen[p.witness] != p.source:
                raise RuntimeError(
                    "coprime exchange polynomials produced a shared factor")
            seen[p.witness] = p.source
    else:
        sources = sorted(profiles)
        for a in range(len(sources)):
            for b in range(a + 1, len(sources)):
                da, ea, ga = profiles[sources[a]]
                db, eb, gb = profiles[sources[b]]
                if da != db or len(ga) == 1 or len(gb) == 1:
                    continue
                if len(gcd_monic(trim(ga), trim(gb))) > 1:
                    raise RuntimeError(
                        "coprime exchange polynomials share a closed-field root")


def valuation_matrix(primes: Sequence[PrimeDivisor],
                     seed: GeneralizedSeed) -> list[list[int]]:
    """Row i lists the valuations of x_i at every prime divisor.

    In the localization at cluster i the variable x_i generates the same
    ideal as f_i (its exchange partner is a unit there), so the valuation
    equals the factor multiplicity; x_i is a unit in every other
    localization, so all other entries vanish.
    """
    rows = []
    for i in range(seed.n):
        rows.append([p.multiplicity if p.source == i else 0 for p in primes])
    return rows


@dataclass(frozen=True)
class ClassGroupResult:
    prime_count: int
    free_rank: int
    torsion: tuple[int, ...]
    primes: tuple[PrimeDivisor, ...]
    valuation: tuple[tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def class_group(seed: GeneralizedSeed, mode: str = MODE_RATIONAL,
                require_acyclic: bool = True) -> ClassGroupResult:
    """Cokernel of Z^r by the valuation rows, as free rank plus torsion."""
    primes = height_one_primes(seed, mode, require_acyclic)
    rows = valuation_matrix(primes, seed)
    snf = smith_normal_form(rows, ncols=len(primes))
    return ClassGroupResult(
        prime_count=len(primes),
        free_rank=snf.free_rank,
        torsion=snf.torsion,
        primes=tuple(primes),
        valuation=tuple(tuple(r) for r in rows),
    )


def is_factorial(seed: GeneralizedSeed, mode: str = MODE_RATIONAL) -> bool:
    """Triviality of the class group, cross-checked against irreducibility.

    The algebra is factorial exactly when every exchange polynomial is
    irreducible; both routes are computed and must agree.
    """
    result = class_group(seed, mode)
    by_group = result.is_trivial
    per_source: dict[int, list[PrimeDivisor]] = {}
    for p in result.primes:
        per_source.setdefault(p.source, []).append(p)
    by_factors = all(
        len(per_source.get(i, [])) == 1 and per_source[i][0].multiplicity == 1
        for i in range(seed.n))
    if by_group != by_factors:
        raise RuntimeError("class group and irreducibility check disagree")
    return by_group


def classical_consistency(seed: GeneralizedSeed,
                          mode: str = MODE_RATIONAL) -> bool:
    """Classical seeds have free class group of rank r - n; verify it."""
    if not seed.is_classical():
        raise PreconditionError(["seed is not classical (some d_i > 1)"])
    result = class_group(seed, mode)
    return (not result.torsion
            and result.free_rank == result.prime_count - seed.n)
