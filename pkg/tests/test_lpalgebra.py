"""LP seeds: validation, exchange Laurent polynomials, mutation, enumeration."""

import random

from gencluster import (
    LPSeed,
    LPSubstitutionError,
    enumerate_lp_cluster_variables,
    exchange_laurent,
    expand_in_initial,
    is_sign_skew_symmetric,
    lp_mutate,
    make_lp_seed,
    make_seed,
    mutate,
    seeds_equivalent,
    validate_lp_seed,
)
from gencluster.exactmath.laurent import format_polynomial, parse_polynomial
from gencluster.expressions import RationalExpression
from gencluster.genseed import exchange_polynomials
from gencluster.lpalgebra import canonical_lp


def a3_seed():
    return make_lp_seed(["x2 + 1", "x1 + x3", "x2 + 1"])


def markov_seed():
    return make_lp_seed(["x2^2 + x3^2", "x1^2 + x3^2", "x2^2 + x1^2"])


class TestValidation:
    def test_a3_ok(self):
        report = validate_lp_seed(a3_seed())
        assert report.ok
        assert all(flag == "verified" for flag in report.irreducibility)

    def test_self_dependence_rejected(self):
        seed = make_lp_seed(["x1 + x2", "x1 + 1"])
        report = validate_lp_seed(seed)
        assert any("depends on x1" in v for v in report.violations)

    def test_markov_ok(self):
        report = validate_lp_seed(markov_seed())
        assert report.ok

    def test_variable_divisor_rejected(self):
        seed = make_lp_seed(["x2^2 + x2", "x1 + 1"])
        report = validate_lp_seed(seed)
        assert any("divides" in v for v in report.violations)

    def test_constant_rejected(self):
        seed = make_lp_seed(["2", "x1 + 1"])
        report = validate_lp_seed(seed)
        assert any("constant" in v for v in report.violations)

    def test_reducible_segment_rejected(self):
        seed = make_lp_seed(["x2^2 + 2*x2 + 1", "x1 + 1"])
        report = validate_lp_seed(seed)
        assert any("reducible" in v for v in report.violations)

    def test_nonsegment_accepted_unverified(self):
        seed = make_lp_seed(["x2 + x3 + x2*x3", "x1 + x3", "x1 + x2"])
        report = validate_lp_seed(seed)
        assert report.ok
        assert report.irreducibility[0] == "accepted-unverified"


class TestExchangeLaurent:
    def test_a3(self):
        fhat = exchange_laurent(a3_seed())
        names = ("x1", "x2", "x3")
        assert format_polynomial(fhat[0], names) == "x2*x3^-1 + x3^-1"
        assert format_polynomial(fhat[1], names) == "x1 + x3"
        assert format_polynomial(fhat[2], names) == "x1^-1*x2 + x1^-1"

    def test_markov_fixed(self):
        seed = markov_seed()
        assert exchange_laurent(seed) == seed.F

    def test_trivial_when_nothing_divides(self):
        seed = make_lp_seed(["x2 + 2", "x1 + 3"])
        assert exchange_laurent(seed) == seed.F

    def test_reconstruction_invariant(self):
        seed = a3_seed()
        fhat = exchange_laurent(seed)
        for f, fh in zip(seed.F, fhat):
            mins = fh.min_exponents()
            down = tuple(-min(v, 0) for v in mins)
            assert fh.shift(down) == f

    def test_second_power_divisibility(self):
        # F1 = x3*x2^2 + (x3+1)^3 with F2 = x3+1: the x2-degree-0
        # coefficient carries F2^3 and the degree-2 one none, so the
        # maximal dividing power is 2 and F1-hat = F1 / x2^2.
        seed = make_lp_seed([
            "x2^2*x3 + x3^3 + 3*x3^2 + 3*x3 + 1",
            "x3 + 1",
            "x1 + x2",
        ])
        report = validate_lp_seed(seed)
        assert report.ok
        fhat = exchange_laurent(seed)
        assert fhat[0] == seed.F[0].shift((0, -2, 0))


class TestLPMutation:
    def test_a3_direction_1(self):
        mutated = lp_mutate(a3_seed(), 0)
        names = mutated.names
        assert names[0] == "x1'"
        rendered = [format_polynomial(f, names) for f in mutated.F]
        assert rendered == ["x2 + 1", "x1'*x3^2 + 1", "x2 + 1"]

    def test_involution_up_to_equivalence(self):
        for seed in (a3_seed(), markov_seed()):
            for k in range(seed.n):
                back = lp_mutate(lp_mutate(seed, k), k)
                assert seeds_equivalent(back, canonical_lp(seed))

    def test_markov_shape_preserved(self):
        seed = markov_seed()
        for k in range(3):
            mutated = lp_mutate(seed, k)
            for i, f in enumerate(mutated.F):
                terms = sorted(f.terms.items())
                assert len(terms) == 2
                assert all(c == 1 for _, c in terms)
                for exps, _ in terms:
                    assert sorted(exps) == [0, 0, 2]
                    assert exps[i] == 0

    def test_random_rank3_involution(self):
        rng = random.Random(83)
        produced = 0
        while produced < 20:
            coeffs = [rng.randint(1, 3) for _ in range(6)]
            try:
                seed = make_lp_seed([
                    f"{coeffs[0]}*x2 + {coeffs[1]}*x3",
                    f"{coeffs[2]}*x1 + {coeffs[3]}*x3",
                    f"{coeffs[4]}*x1 + {coeffs[5]}*x2",
                ])
                if not validate_lp_seed(seed).ok:
                    continue
                for k in range(3):
                    back = lp_mutate(lp_mutate(seed, k), k)
                    assert seeds_equivalent(back, canonical_lp(seed))
            except LPSubstitutionError:
                continue
            produced += 1

    def test_sign_skew_preserved_by_mutation(self):
        for seed in (a3_seed(), markov_seed()):
            assert is_sign_skew_symmetric(seed)
            frontier = [seed]
            seen = 0
            while frontier and seen < 12:
                current = frontier.pop()
                for k in range(current.n):
                    mutated = lp_mutate(current, k)
                    assert is_sign_skew_symmetric(mutated)
                    frontier.append(mutated)
                    seen += 1
                    if seen >= 12:
                        break


class TestEquivalence:
    def test_poly_rescaling_q(self):
        seed = a3_seed()
        scaled = LPSeed(seed.n, seed.names,
                        (seed.F[0], seed.F[1] * 3, seed.F[2]), "Q")
        assert seeds_equivalent(seed, scaled)

    def test_poly_rescaling_z(self):
        seed = make_lp_seed(["x2 + 1", "x1 + x3", "x2 + 1"], ring="Z")
        scaled = LPSeed(seed.n, seed.names,
                        (seed.F[0], seed.F[1] * 3, seed.F[2]), "Z")
        assert not seeds_equivalent(seed, scaled)
        negated = LPSeed(seed.n, seed.names,
                         (seed.F[0], seed.F[1] * -1, seed.F[2]), "Z")
        assert seeds_equivalent(seed, negated)

    def test_different_seeds(self):
        assert not seeds_equivalent(a3_seed(), markov_seed())

    def test_variable_rescaling(self):
        seed = a3_seed()
        names = seed.names
        rescaled = LPSeed(seed.n, names,
                          (seed.F[0],
                           parse_polynomial("2*x1 + x3", names),
                           seed.F[2]), "Q")
        assert seeds_equivalent(seed, rescaled)


class TestSignSkew:
    def test_a3(self):
        assert is_sign_skew_symmetric(a3_seed())

    def test_markov(self):
        assert is_sign_skew_symmetric(markov_seed())

    def test_three_cycle(self):
        seed = make_lp_seed(["x2 + 1", "x3 + 1", "x1 + 1"])
        assert not is_sign_skew_symmetric(seed)


class TestEnumeration:
    def test_a3_depth_4_exact_list(self):
        seed = a3_seed()
        found = enumerate_lp_cluster_variables(seed, 4)
        names = seed.names

        def expr(num, den):
            return RationalExpression.make(parse_polynomial(num, names),
                                           parse_polynomial(den, names))

        expected = {
            expr("x1", "1"), expr("x2", "1"), expr("x3", "1"),
            expr("x2 + 1", "x1*x3"),
            expr("x1 + x3", "x2"),
            expr("x1 + x3 + x2*x3", "x1*x2"),
            expr("x1 + x3 + x1*x2", "x2*x3"),
        }
        assert found == expected

    def test_depth_zero(self):
        seed = a3_seed()
        assert enumerate_lp_cluster_variables(seed, 0) == {
            RationalExpression.variable(3, i) for i in range(3)}

    def test_markov_growth(self):
        seed = markov_seed()
        d2 = enumerate_lp_cluster_variables(seed, 2)
        d3 = enumerate_lp_cluster_variables(seed, 3)
        assert len(d3) > len(d2) > 3

    def test_all_variables_laurent(self):
        for seed in (a3_seed(), markov_seed()):
            for v in enumerate_lp_cluster_variables(seed, 3):
                assert v.is_laurent


class TestClassicalAgreement:
    def test_a2_lp_matches_classical(self):
        # Full-rank primitive classical seed: LP mutation and classical
        # mutation produce the same variables and exchange polynomials.
        classical = make_seed([[0, 1], [-1, 0]])
        lp = make_lp_seed([format_polynomial(f, classical.names)
                           for f in exchange_polynomials(classical)])
        for sequence in ([0], [1], [0, 1], [1, 0], [0, 1, 0]):
            classical_exprs = expand_in_initial(classical, sequence)
            lp_seed = lp
            lp_exprs = [RationalExpression.variable(2, i) for i in range(2)]
            current = classical
            for k in sequence:
                fhat = exchange_laurent(lp_seed)
                from gencluster.expressions import evaluate_poly
                lp_exprs[k] = evaluate_poly(fhat[k], lp_exprs) / lp_exprs[k]
                lp_seed = lp_mutate(lp_seed, k)
                current = mutate(current, k)
            assert tuple(lp_exprs) == tuple(classical_exprs)
            assert tuple(lp_seed.F) == tuple(
                f.canonical() for f in exchange_polynomials(current))
