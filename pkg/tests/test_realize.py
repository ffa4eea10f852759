"""Realization of finitely generated abelian groups as class groups."""

import itertools

import pytest

from gencluster import (
    coprimality_criteria,
    exchange_polynomials,
    is_acyclic,
    is_coprime,
    validate_seed,
)
from gencluster.exactmath.laurent import LaurentPolynomial as L
from gencluster.realize import AbelianGroupSpec, realize_seed, verify_realization


class TestSpecNormalization:
    def test_unit_factors_stripped(self):
        assert AbelianGroupSpec(1, (1, 3, 1)).normalized().torsion == (3,)

    def test_sorted(self):
        assert AbelianGroupSpec(0, (6, 2)).normalized().torsion == (2, 6)

    def test_invariant_factors_recombine(self):
        # Z/2 + Z/3 is cyclic of order 6.
        assert AbelianGroupSpec(0, (2, 3)).invariant_factors() == (0, (6,))
        assert AbelianGroupSpec(1, (4, 6)).invariant_factors() == (1, (2, 12))

    def test_invalid_rejected(self):
        with pytest.raises(ValueError):
            AbelianGroupSpec(-1, ()).normalized()


class TestRealizeSeed:
    def test_z2_case1(self):
        seed = realize_seed(AbelianGroupSpec(0, (2,)))
        assert seed.B == ((0, -1), (2, 0))
        assert seed.d == (2, 1)
        f1, f2 = exchange_polynomials(seed)
        x1, x2 = L.variable(2, 0), L.variable(2, 1)
        assert f1 == (x2 + 1) ** 2
        assert f2 == x1 + 1

    def test_free_rank_case2(self):
        seed = realize_seed(AbelianGroupSpec(2, ()))
        assert seed.B == ((0, 3), (-1, 0))
        f1, f2 = exchange_polynomials(seed)
        x1, x2 = L.variable(2, 0), L.variable(2, 1)
        assert f1 == x2 + 1
        assert f2 == x1 ** 3 + 1

    def test_mixed_case3(self):
        seed = realize_seed(AbelianGroupSpec(2, (3,)))
        assert seed.B == ((0, 0, 0, -1), (0, 0, -1, 0),
                          (0, 3, 0, 0), (3, 0, 0, 0))
        assert [str(f) for f in exchange_polynomials(seed)] == [
            "x4^3 + 1",
            "x3^3 + 3*x3^2 + 3*x3 + 1",
            "x2 + 1",
            "x1 + 1",
        ]
        assert seed.rho[1][1].constant_value() == 3

    def test_case1_binomial_identity(self):
        # f_i = (x_{2k-i+1} + 1)^{n_i} exactly, for i <= k.
        spec = AbelianGroupSpec(0, (2, 3, 5))
        seed = realize_seed(spec)
        polys = exchange_polynomials(seed)
        k = 3
        for i, n_i in enumerate(spec.torsion):
            var = L.variable(seed.size, 2 * k - i - 1)
            assert polys[i] == (var + 1) ** n_i

    def test_realized_seeds_pass_all_checks(self):
        for spec in (AbelianGroupSpec(0, (4,)), AbelianGroupSpec(3, ()),
                     AbelianGroupSpec(1, (2, 6)), AbelianGroupSpec(0, (2, 2))):
            seed = realize_seed(spec)
            assert validate_seed(seed) == []
            assert is_acyclic(seed)
            assert is_coprime(seed)
            assert coprimality_criteria(seed).full_rank
            assert seed.ring == "Qbar"

    def test_trivial_group(self):
        seed = realize_seed(AbelianGroupSpec(0, ()))
        assert seed.n == 1 and seed.m == 1
        assert verify_realization(AbelianGroupSpec(0, ()))


class TestVerifyRealization:
    def test_z2(self):
        assert verify_realization(AbelianGroupSpec(0, (2,)))

    def test_torsion_unit_normalization(self):
        assert verify_realization(AbelianGroupSpec(2, (1, 3)))

    def test_repeated_invariants(self):
        assert verify_realization(AbelianGroupSpec(0, (2, 2)))
        assert verify_realization(AbelianGroupSpec(1, (3, 3, 3)))

    def test_desk_scale_sweep(self):
        entries = [2, 3, 4, 5, 6]
        for free_rank in range(4):
            for k in range(4):
                for torsion in itertools.combinations(entries, k):
                    spec = AbelianGroupSpec(free_rank, torsion)
                    if spec.is_trivial():
                        continue
                    assert verify_realization(spec), spec
