"""Realizing any finitely generated abelian group as a class group.

For a target Z^f + Z/n_1 + ... + Z/n_k there is an acyclic, coprime
generalized seed over an algebraically closed ground field whose cluster
algebra has exactly that class group.  The pure-torsion construction uses
a 2k-by-2k matrix with divisor column entries n_i and binomial-coefficient
strings, so that f_i = (x_{2k-i+1} + 1)^{n_i}; a free part of rank f is
contributed by one classical column with entry f + 1, whose exchange
polynomial splits into f + 1 distinct linear factors over the closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .classgroup import MODE_CLOSED, class_group
from .exactmath.matrices import smith_normal_form
from .genseed import (
    GeneralizedSeed,
    is_acyclic,
    is_coprime,
    make_seed,
    validate_seed,
)


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Target group Z^free_rank + sum of Z/n for n in torsion."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def normalized(self) -> "AbelianGroupSpec":
        """Strip unit factors and sort; repeated entries are allowed."""
        entries = tuple(sorted(int(t) for t in self.torsion if int(t) > 1))
        if any(t < 1 for t in self.torsion):
            raise ValueError("torsion entries must be positive")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        return AbelianGroupSpec(self.free_rank, entries)

    def is_trivial(self) -> bool:
        g = self.normalized()
        return g.free_rank == 0 and not g.torsion

    def invariant_factors(self) -> tuple[int, tuple[int, ...]]:
        """Canonical form (free rank, divisor-chain torsion) for comparison."""
        g = self.normalized()
        if not g.torsion:
            return g.free_rank, ()
        k = len(g.torsion)
        diag = [[g.torsion[i] if i == j else 0 for j in range(k)]
                for i in range(k)]
        return g.free_rank, smith_normal_form(diag).torsion


def realize_seed(group: AbelianGroupSpec) -> GeneralizedSeed:
    """An acyclic coprime seed whose closed-field class group is ``group``.

    The trivial group gets a rank-1 seed with one frozen variable and the
    irreducible exchange polynomial x2 + 1 (class group 0, the factorial
    case).
    """
    g = group.normalized()
    if g.is_trivial():
        return make_seed([[0], [1]], d=[1], rho=[[1, 1]], ring="Qbar")
    tor = g.torsion
    k = len(tor)
    if g.free_rank == 0:
        size = 2 * k
        b = [[0] * size for _ in range(size)]
        for i in range(1, k + 1):
            b[2 * k - i][i - 1] = tor[i - 1]     # row 2k-i+1, column i
        for i in range(k + 1, 2 * k + 1):
            b[2 * k - i][i - 1] = -1
        d = list(tor) + [1] * k
        rho = [[comb(tor[i - 1], r) for r in range(tor[i - 1] + 1)]
               if i <= k else [1, 1] for i in range(1, size + 1)]
        return make_seed(b, d=d, rho=rho, ring="Qbar")
    free_cols = g.free_rank + 1
    if not tor:
        return make_seed([[0, free_cols], [-1, 0]], ring="Qbar")
    size = 2 * (k + 1)
    b = [[0] * size for _ in range(size)]
    b[2 * k + 1][0] = free_cols                   # row 2k+2, column 1
    for i in range(2, k + 2):
        b[2 * k - i + 2][i - 1] = tor[i - 2]      # row 2k-i+3, column i
    for i in range(k + 2, 2 * k + 3):
        b[2 * k - i + 2][i - 1] = -1
    d = [1] + list(tor) + [1] * (k + 1)
    rho = []
    for i in range(1, size + 1):
        if 2 <= i <= k + 1:
            n_i = tor[i - 2]
            rho.append([comb(n_i, r) for r in range(n_i + 1)])
        else:
            rho.append([1, 1])
    return make_seed(b, d=d, rho=rho, ring="Qbar")


def verify_realization(group: AbelianGroupSpec) -> bool:
    """End-to-end check that the constructed seed realizes the group.

    The seed must validate and be acyclic and coprime; the class group is
    computed in closed mode and compared by Smith-normal invariant factors,
    since different generator presentations can describe the same group.
    """
    seed = realize_seed(group)
    if validate_seed(seed) or not is_acyclic(seed) or not is_coprime(seed):
        return False
    result = class_group(seed, MODE_CLOSED)
    return (result.free_rank, result.torsion) == group.invariant_factors()
