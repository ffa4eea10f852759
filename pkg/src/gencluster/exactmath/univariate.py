"""Univariate polynomial arithmetic and factorization over the rationals.

Polynomials are ascending coefficient lists.  The rational layer uses
``Fraction`` lists; the factorization core works on primitive integer
polynomials via Berlekamp factorization modulo a small prime, linear Hensel
lifting, and subset recombination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt
from typing import Sequence

QPoly = list[Fraction]
ZPoly = list[int]


def trim(coeffs: Sequence[Fraction]) -> QPoly:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def degree(coeffs: Sequence) -> int:
    return len(coeffs) - 1


def add(a: QPoly, b: QPoly) -> QPoly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n)])


def mul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim(out)


def scale(a: QPoly, c: Fraction) -> QPoly:
    return trim([x * c for x in a])


def divmod_q(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and trim(r):
        r = trim(r)
        if len(r) - 1 < db:
            break
        c = r[-1] / lb
        k = len(r) - 1 - db
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] -= c * bc
        r.pop()
    return trim(q), trim(r)


def gcd_monic(a: QPoly, b: QPoly) -> QPoly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_q(a, b)[1]
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def derivative(a: QPoly) -> QPoly:
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(a)):
        acc = acc * x + c
    return acc


def content_primitive(a: QPoly) -> tuple[Fraction, ZPoly]:
    """Write ``a = c * p`` with ``p`` integer-primitive and positive-leading."""
    a = trim(a)
    if not a:
        raise ValueError("zero polynomial has no content")
    num = 0
    den = 1
    for c in a:
        num = gcd(num, abs(c.numerator))
        den = den * c.denominator // gcd(den, c.denominator)
    c = Fraction(num, den)
    if a[-1] < 0:
        c = -c
    prim = [int(x / c) for x in a]
    return c, prim


def squarefree_decompose(g: Sequence[Fraction]) -> tuple[Fraction, list[tuple[ZPoly, int]]]:
    """Yun's algorithm: ``g = unit * prod(S_k ^ m_k)``.

    Blocks are primitive integer polynomials with positive leading
    coefficient, pairwise coprime, listed with strictly increasing
    multiplicity.
    """
    g = trim(g)
    if degree(g) < 1:
        raise ValueError("squarefree decomposition needs a nonconstant input")
    blocks: list[tuple[ZPoly, int]] = []
    d = gcd_monic(g, derivative(g))
    b, _ = divmod_q(g, d)
    c, _ = divmod_q(derivative(g), d)
    k = 1
    d_cur = add(c, scale(derivative(b), Fraction(-1)))
    while degree(b) > 0:
        a = gcd_monic(b, d_cur)
        if degree(a) > 0:
            blocks.append((content_primitive(a)[1], k))
        b, _ = divmod_q(b, a)
        c_next, _ = divmod_q(d_cur, a)
        d_cur = add(c_next, scale(derivative(b), Fraction(-1)))
        k += 1
    prod = [Fraction(1)]
    for block, m in blocks:
        for _ in range(m):
            prod = mul(prod, [Fraction(x) for x in block])
    unit, rem = divmod_q(g, prod)
    assert not rem and degree(unit) == 0
    return unit[0], blocks


# -- arithmetic mod p ---------------------------------------------------------

def _gf_trim(a: ZPoly) -> ZPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mul(a: ZPoly, b: ZPoly, p: int) -> ZPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _gf_trim(out)


def _gf_add(a: ZPoly, b: ZPoly, p: int) -> ZPoly:
    n = max(len(a), len(b))
    return _gf_trim([((a[i] if i < len(a) else 0) +
                      (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _gf_sub(a: ZPoly, b: ZPoly, p: int) -> ZPoly:
    n = max(len(a), len(b))
    return _gf_trim([((a[i] if i < len(a) else 0) -
                      (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _gf_divmod(a: ZPoly, b: ZPoly, p: int) -> tuple[ZPoly, ZPoly]:
    if not b:
        raise ZeroDivisionError
    r = [c % p for c in a]
    _gf_trim(r)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        c = r[-1] * inv % p
        k = len(r) - 1 - db
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = (r[k + i] - c * bc) % p
        _gf_trim(r)
    return _gf_trim(q), r


def _gf_gcd(a: ZPoly, b: ZPoly, p: int) -> ZPoly:
    a = _gf_trim([c % p for c in a])
    b = _gf_trim([c % p for c in b])
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _gf_gcdex(a: ZPoly, b: ZPoly, p: int) -> tuple[ZPoly, ZPoly, ZPoly]:
    # Returns (s, t, g) with s*a + t*b = g, g monic.
    r0, r1 = [c % p for c in a], [c % p for c in b]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    _gf_trim(r0), _gf_trim(r1)
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    inv = pow(r0[-1], p - 2, p)
    return ([c * inv % p for c in s0], [c * inv % p for c in t0],
            [c * inv % p for c in r0])


def _gf_pow_mod(a: ZPoly, e: int, f: ZPoly, p: int) -> ZPoly:
    result = [1]
    base = _gf_divmod(a, f, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), f, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def _gf_derivative(a: ZPoly, p: int) -> ZPoly:
    return _gf_trim([a[i] * i % p for i in range(1, len(a))])


def _berlekamp(f: ZPoly, p: int) -> list[ZPoly]:
    """Monic irreducible factors of a monic squarefree ``f`` mod ``p``."""
    n = degree(f)
    if n == 1:
        return [f]
    # Rows of the Frobenius matrix: x^(p*i) mod f.
    xp = _gf_pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _gf_divmod(_gf_mul(cur, xp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    # Nullspace of (Q - I)^T: vectors v with sum_i v_i rows[i] = v.
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)]
           for j in range(n)]
    basis = _gf_nullspace(mat, p)
    k = len(basis)
    if k == 1:
        return [f]
    factors = [f]
    for v in basis:
        poly_v = _gf_trim(list(v))
        if degree(poly_v) < 1:
            continue
        next_factors = []
        for h in factors:
            if degree(h) == 1:
                next_factors.append(h)
                continue
            pieces = []
            rest = h
            for s in range(p):
                g = _gf_gcd(rest, _gf_sub(poly_v, [s], p), p)
                if 0 < degree(g) < degree(rest):
                    pieces.append(g)
                    rest = _gf_divmod(rest, g, p)[0]
                if degree(rest) == 0:
                    break
            if degree(rest) > 0:
                pieces.append(rest)
            next_factors.extend(pieces)
        factors = next_factors
        if len(factors) == k:
            break
    return sorted(factors)


def _gf_nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    m = [row[:] for row in mat]
    pivots = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [c * inv % p for c in m[row]]
        for r in range(n):
            if r != row and m[r][col] % p:
                factor = m[r][col]
                m[r] = [(c - factor * d) % p for c, d in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for col, r in pivots.items():
            v[col] = (-m[r][fc]) % p
        basis.append(v)
    return basis


# -- Hensel lifting -----------------------------------------------------------

def _centered(c: int, q: int) -> int:
    c %= q
    return c - q if c > q // 2 else c


def _zz_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return out


def _zz_sub(a: ZPoly, b: ZPoly) -> ZPoly:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _hensel_pair(f: ZPoly, g: ZPoly, h: ZPoly, p: int, K: int) -> tuple[ZPoly, ZPoly]:
    """Lift ``f = g*h (mod p)`` with ``g`` monic to ``mod p^K``."""
    s, t, one = _gf_gcdex(g, h, p)
    assert one == [1]
    pk = p
    g = [c % p for c in g]
    h = [c % p for c in h]
    # Force the true leading coefficient on the non-monic side.
    h = h + [0] * (degree(f) - degree(g) + 1 - len(h))
    h[-1] = f[-1] % (p ** K)
    for _ in range(K - 1):
        e = _zz_sub(f, _zz_mul(g, h))
        em = _gf_trim([(c // pk) % p for c in e + [0] * 0])
        if em:
            tau = _gf_divmod(_gf_mul(t, em, p), g, p)[1]
            num = _gf_sub(em, _gf_mul(tau, h, p), p)
            sigma, rem = _gf_divmod(num, g, p)
            assert not rem
            g = _zz_sub(g, [-pk * c for c in tau] + [0] * 0)
            h = _zz_sub(h, [-pk * c for c in sigma] + [0] * 0)
            g = g + [0] * 0
        pk *= p
    q = p ** K
    g = [_centered(c, q) for c in g]
    h = [_centered(c, q) for c in h]
    while g and g[-1] == 0:
        g.pop()
    while h and h[-1] == 0:
        h.pop()
    return g, h


def _hensel_list(f: ZPoly, mods: list[ZPoly], p: int, K: int) -> list[ZPoly]:
    """Monic lifts mod p^K of the monic factors with f = lc * prod(mods) mod p."""
    if len(mods) == 1:
        q = p ** K
        inv = pow(f[-1] % q, -1, q)
        lifted = [_centered(c * inv, q) for c in f]
        while lifted and lifted[-1] == 0:
            lifted.pop()
        return [lifted]
    half = len(mods) // 2
    g0 = [1]
    for m in mods[:half]:
        g0 = _gf_mul(g0, m, p)
    h0 = [f[-1] % p]
    for m in mods[half:]:
        h0 = _gf_mul(h0, m, p)
    g, h = _hensel_pair(f, g0, h0, p, K)
    return _hensel_list(g, mods[:half], p, K) + _hensel_list(h, mods[half:], p, K)


# -- Zassenhaus factorization --------------------------------------------------

_PRIME_CACHE = [2, 3, 5, 7, 11, 13]


def _primes():
    i = 0
    while True:
        if i < len(_PRIME_CACHE):
            yield _PRIME_CACHE[i]
        else:
            candidate = _PRIME_CACHE[-1] + 2
            while any(candidate % q == 0 for q in _PRIME_CACHE
                      if q * q <= candidate):
                candidate += 2
            _PRIME_CACHE.append(candidate)
            yield candidate
        i += 1


def _zz_factor_squarefree(f: ZPoly) -> list[ZPoly]:
    """Irreducible factors of a primitive squarefree integer polynomial.

    Requires positive leading coefficient and a nonzero constant term.
    """
    n = degree(f)
    if n == 1:
        return [f]
    for p in _primes():
        if p == 2:
            continue
        if f[-1] % p == 0:
            continue
        fp = [c % p for c in f]
        if degree(_gf_gcd(fp, _gf_derivative(fp, p), p)) == 0:
            break
    lc_inv = pow(f[-1] % p, p - 2, p)
    monic_fp = [c * lc_inv % p for c in fp]
    mods = _berlekamp(monic_fp, p)
    if len(mods) == 1:
        return [f]
    bound = 2 * abs(f[-1]) * (isqrt(sum(c * c for c in f)) + 1) * (1 << n)
    K = 1
    while p ** K <= 2 * bound:
        K += 1
    q = p ** K
    lifted = _hensel_list(f, mods, p, K)
    result: list[ZPoly] = []
    remaining = list(range(len(mods)))
    f_cur = f
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for combo in combinations(remaining, size):
            cand = [f_cur[-1]]
            for i in combo:
                cand = [_centered(c, q) for c in _zz_mul(cand, lifted[i])]
            cand = content_primitive([Fraction(c) for c in cand])[1]
            quo, rem = divmod_q([Fraction(c) for c in f_cur],
                                [Fraction(c) for c in cand])
            if not rem and all(x.denominator == 1 for x in quo):
                result.append(cand)
                f_cur = [int(x) for x in quo]
                remaining = [i for i in remaining if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if degree(f_cur) > 0:
        result.append(content_primitive([Fraction(c) for c in f_cur])[1])
    return result


def factor_univariate(g: Sequence[Fraction]) -> tuple[Fraction, list[tuple[ZPoly, int]]]:
    """Complete factorization over Q: ``g = content * prod(f_i ^ m_i)``.

    Factors are primitive integer polynomials with positive leading
    coefficient, irreducible over the rationals, sorted by degree and then
    coefficients; multiplicities come from the squarefree decomposition.
    """
    g = trim(list(g))
    if degree(g) < 1:
        raise ValueError("factorization needs a nonconstant input")
    unit, blocks = squarefree_decompose(g)
    factors: list[tuple[ZPoly, int]] = []
    for block, mult in blocks:
        work = list(block)
        shift = 0
        while work[0] == 0:
            work = work[1:]
            shift += 1
        if shift:
            factors.append(([0, 1], mult))
        if degree(work) >= 1:
            for irr in _zz_factor_squarefree(work):
                factors.append((irr, mult))
    factors.sort(key=lambda fm: (degree(fm[0]), fm[0], fm[1]))
    return unit, factors
