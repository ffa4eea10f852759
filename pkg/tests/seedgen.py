"""Random seed generators shared across the property and acceptance suites.

Seeds come out valid by construction: the top block is a skew-symmetric
integer matrix with columns rescaled by the symmetrizer, divisors are
drawn from the divisors of each column gcd, and frozen rows are filled
with multiples of the divisors.
"""

from __future__ import annotations

from math import gcd
from random import Random

from gencluster import make_seed, validate_seed
from gencluster.exactmath.laurent import LaurentPolynomial


def _divisors_up_to(n, cap):
    n = abs(n)
    if n == 0:
        return [d for d in range(1, cap + 1)]
    return [d for d in range(1, min(n, cap) + 1) if n % d == 0]


def random_generalized_seed(rng: Random, n_max=4, m_max=2, entry=4, d_max=3,
                            allow_frozen_strings=True):
    n = rng.randint(1, n_max)
    m = rng.randint(0, m_max)
    size = n + m
    while True:
        skew = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.randint(-entry, entry)
                skew[i][j] = v
                skew[j][i] = -v
        delta = [rng.choice((1, 1, 2)) for _ in range(n)]
        top = [[skew[i][j] * delta[j] for j in range(n)] for i in range(n)]
        if any(abs(top[i][j]) > entry for i in range(n) for j in range(n)):
            continue
        cols_gcd = []
        for j in range(n):
            g = 0
            for i in range(n):
                g = gcd(g, abs(top[i][j]))
            cols_gcd.append(g)
        d = [rng.choice(_divisors_up_to(g, d_max)) for g in cols_gcd]
        rows = [list(r) for r in top]
        for _ in range(m):
            rows.append([d[j] * rng.randint(-(entry // d[j]), entry // d[j])
                         for j in range(n)])
        rho = []
        for i in range(n):
            string = [LaurentPolynomial.one(size)]
            for _ in range(d[i] - 1):
                coeff = rng.randint(1, 3)
                exps = [0] * size
                if m and allow_frozen_strings:
                    exps[n + rng.randrange(m)] = rng.randint(0, 2)
                string.append(LaurentPolynomial.monomial(size, exps, coeff))
            string.append(LaurentPolynomial.one(size))
            rho.append(string)
        seed = make_seed(rows, d=d, rho=rho)
        if not validate_seed(seed):
            return seed


def random_classical_seed(rng: Random, n_max=3, m_max=2, entry=3):
    """Classical seed (all d_i = 1) with an acyclic sign pattern.

    Columns are kept nonzero so that no exchange polynomial degenerates to
    a constant (which would make that cluster variable a unit).
    """
    while True:
        n = rng.randint(2, n_max)
        m = rng.randint(0, m_max)
        top = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                top[i][j] = rng.randint(0, entry)   # edges only i -> j
                top[j][i] = -top[i][j]
        rows = [list(r) for r in top]
        for _ in range(m):
            rows.append([rng.randint(-entry, entry) for _ in range(n)])
        if all(any(rows[i][j] for i in range(n + m)) for j in range(n)):
            return make_seed(rows)


def random_rank2_frozen_seed(rng: Random, m_max=2, entry=3, d_max=3):
    """Rank-2 seed with frozen variables and b_12 > 0, for the identity checks."""
    while True:
        m = rng.randint(1, m_max)
        size = 2 + m
        b12 = rng.randint(1, entry)
        c = rng.randint(1, entry)
        scale2 = rng.choice((1, 2))
        top = [[0, b12 * scale2], [-c, 0]]
        g2 = abs(b12 * scale2)
        d2 = rng.choice(_divisors_up_to(g2, d_max))
        d1 = rng.choice(_divisors_up_to(c, d_max))
        rows = [list(r) for r in top]
        for _ in range(m):
            rows.append([d1 * rng.randint(-(entry // d1), entry // d1),
                         d2 * rng.randint(-(entry // d2), entry // d2)])
        rho = []
        for i, di in enumerate((d1, d2)):
            string = [LaurentPolynomial.one(size)]
            for _ in range(di - 1):
                exps = [0] * size
                exps[2 + rng.randrange(m)] = rng.randint(0, 2)
                string.append(LaurentPolynomial.monomial(size, exps,
                                                         rng.randint(1, 3)))
            string.append(LaurentPolynomial.one(size))
            rho.append(string)
        seed = make_seed(rows, d=[d1, d2], rho=rho)
        if not validate_seed(seed):
            return seed
