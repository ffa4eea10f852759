"""Smith normal form against the determinantal-divisor oracle."""

import random

from gencluster.exactmath.matrices import (
    rational_rank,
    smith_normal_form,
    solve_gf2,
    solve_integer_system,
)
from .oracles import smith_invariants_by_minors


def _random_matrix(rng, max_dim=5, entry=4):
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return [[rng.randint(-entry, entry) for _ in range(cols)]
            for _ in range(rows)], cols


class TestSmithNormalForm:
    def test_torsion_example(self):
        result = smith_normal_form([[1, 0], [0, 2]])
        assert result.torsion == (2,)
        assert result.free_rank == 0
        assert result.invariant_factors == (1, 2)

    def test_empty_rows(self):
        result = smith_normal_form([], ncols=3)
        assert result.free_rank == 3
        assert result.torsion == ()

    def test_divisibility_chain(self):
        rng = random.Random(3)
        for _ in range(120):
            rows, cols = _random_matrix(rng)
            factors = smith_normal_form(rows, cols).invariant_factors
            for a, b in zip(factors, factors[1:]):
                assert b % a == 0

    def test_oracle_agreement(self):
        rng = random.Random(17)
        for _ in range(120):
            rows, cols = _random_matrix(rng)
            result = smith_normal_form(rows, cols)
            invariants, free_rank = smith_invariants_by_minors(rows, cols)
            assert list(result.invariant_factors) == invariants
            assert result.free_rank == free_rank

    def test_rank_4x6_ratio_example(self):
        rng = random.Random(29)
        for _ in range(30):
            rows = [[rng.randint(-4, 4) for _ in range(6)] for _ in range(4)]
            result = smith_normal_form(rows, 6)
            invariants, _ = smith_invariants_by_minors(rows, 6)
            assert list(result.invariant_factors) == invariants


class TestRankAndSolvers:
    def test_rank(self):
        assert rational_rank([[0, -2], [1, 0]]) == 2
        assert rational_rank([[0, -1, 0], [1, 0, -3], [0, 3, 0]]) == 2
        assert rational_rank([[0, 0], [0, 0]]) == 0

    def test_integer_solvability(self):
        # 2x = 4 solvable; 2x = 3 not.
        assert solve_integer_system([[2]], [4])
        assert not solve_integer_system([[2]], [3])
        # x + y = 1, x - y = 1 -> x = 1, y = 0.
        assert solve_integer_system([[1, 1], [1, -1]], [1, 1])
        # 2x + 2y = 1 has no integer solution.
        assert not solve_integer_system([[2, 2]], [1])
        # inconsistent zero row
        assert not solve_integer_system([[1, 1], [2, 2]], [1, 3])
        assert solve_integer_system([[1, 1], [2, 2]], [1, 2])

    def test_gf2_solvability(self):
        assert solve_gf2([[1, 0], [1, 1]], [1, 0])
        assert not solve_gf2([[1, 1], [1, 1]], [0, 1])
        assert solve_gf2([], [])
