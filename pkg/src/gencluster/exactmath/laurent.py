"""Exact multivariate Laurent polynomials over arbitrary-precision rationals.

Coefficients are :class:`fractions.Fraction`, exponent vectors are integer
tuples of a fixed length (the arity) and may contain negative entries.  All
values are immutable after construction and every operation is a pure
function, so the whole module is safe for concurrent use.

Equality, hashing and display use the canonical descending lexicographic
term order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional, Sequence, Union

Exponents = tuple[int, ...]
Coefficient = Union[int, Fraction]


class ArityMismatchError(ValueError):
    """Two polynomials of different arity were combined."""


def _coeff(value: Coefficient) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


# Exponent vectors are packed into one integer for the multiplication and
# division inner loops: each entry occupies a signed 44-bit field, so
# componentwise addition is carry-free integer addition as long as every
# entry stays far below 2^43 in magnitude (exponents here are tiny).
_FIELD_BITS = 44
_FIELD_MASK = (1 << _FIELD_BITS) - 1
_FIELD_HALF = 1 << (_FIELD_BITS - 1)


def _pack(exps: Exponents) -> int:
    acc = 0
    shift = 0
    for v in exps:
        acc += v << shift
        shift += _FIELD_BITS
    return acc


def _unpack(packed: int, arity: int) -> Exponents:
    out = []
    for _ in range(arity):
        digit = ((packed + _FIELD_HALF) & _FIELD_MASK) - _FIELD_HALF
        out.append(digit)
        packed = (packed - digit) >> _FIELD_BITS
    return tuple(out)


class LaurentPolynomial:
    """A finite sum of rational-coefficient monomials ``c * x^v``.

    ``terms`` maps exponent vectors to nonzero coefficients; zero
    coefficients are dropped on construction so that representations are
    canonical and equality is structural.
    """

    __slots__ = ("arity", "terms", "_key")

    def __init__(self, arity: int, terms: Mapping[Exponents, Coefficient]):
        cleaned: dict[Exponents, Fraction] = {}
        for exps, raw in terms.items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise ArityMismatchError(
                    f"exponent vector {exps} does not have arity {arity}")
            c = _coeff(raw)
            if c:
                cleaned[exps] = cleaned.get(exps, Fraction(0)) + c
                if not cleaned[exps]:
                    del cleaned[exps]
        self.arity = arity
        self.terms = cleaned
        self._key: Optional[tuple] = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "LaurentPolynomial":
        return cls(arity, {})

    @classmethod
    def one(cls, arity: int) -> "LaurentPolynomial":
        return cls(arity, {(0,) * arity: Fraction(1)})

    @classmethod
    def constant(cls, arity: int, value: Coefficient) -> "LaurentPolynomial":
        return cls(arity, {(0,) * arity: _coeff(value)})

    @classmethod
    def monomial(cls, arity: int, exps: Sequence[int],
                 coeff: Coefficient = 1) -> "LaurentPolynomial":
        return cls(arity, {tuple(exps): _coeff(coeff)})

    @classmethod
    def variable(cls, arity: int, index: int) -> "LaurentPolynomial":
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): Fraction(1)})

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.arity}

    @property
    def is_one(self) -> bool:
        return self.terms == {(0,) * self.arity: Fraction(1)}

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def sorted_terms(self) -> tuple[tuple[Exponents, Fraction], ...]:
        """Terms in descending lexicographic order (display order)."""
        return tuple(sorted(self.terms.items(), reverse=True))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def leading(self) -> tuple[Exponents, Fraction]:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def variables(self) -> tuple[int, ...]:
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        return tuple(sorted(used))

    def degree_in(self, index: int) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(exps[index] for exps in self.terms)

    def valuation_in(self, index: int) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no valuation")
        return min(exps[index] for exps in self.terms)

    def min_exponents(self) -> Exponents:
        if self.is_zero:
            raise ValueError("zero polynomial has no support")
        return tuple(min(exps[i] for exps in self.terms)
                     for i in range(self.arity))

    def total_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(sum(exps) for exps in self.terms)

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` integer-primitive."""
        if self.is_zero:
            raise ValueError("zero polynomial has no content")
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(
                f"arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.arity, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check(other)
        result = dict(self.terms)
        for exps, c in other.terms.items():
            s = result.get(exps, Fraction(0)) + c
            if s:
                result[exps] = s
            elif exps in result:
                del result[exps]
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.arity = self.arity
        out.terms = result
        out._key = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.arity = self.arity
        out.terms = {e: -c for e, c in self.terms.items()}
        out._key = None
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.arity, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return LaurentPolynomial.zero(self.arity)
            out = LaurentPolynomial.__new__(LaurentPolynomial)
            out.arity = self.arity
            out.terms = {e: c * v for e, v in self.terms.items()}
            out._key = None
            return out
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check(other)
        # Convolve with packed exponent keys and integer coefficients: one
        # gcd per output term instead of one per intermediate product, and
        # exponent addition becomes a single integer addition.
        den_a = 1
        for c in self.terms.values():
            den_a = den_a * c.denominator // gcd(den_a, c.denominator)
        den_b = 1
        for c in other.terms.values():
            den_b = den_b * c.denominator // gcd(den_b, c.denominator)
        ints_a = [(_pack(e), c.numerator * (den_a // c.denominator))
                  for e, c in self.terms.items()]
        ints_b = [(_pack(e), c.numerator * (den_b // c.denominator))
                  for e, c in other.terms.items()]
        acc: dict[int, int] = {}
        get = acc.get
        for ea, ca in ints_a:
            for eb, cb in ints_b:
                key = ea + eb
                acc[key] = get(key, 0) + ca * cb
        den = den_a * den_b
        arity = self.arity
        result = {_unpack(e, arity): Fraction(v, den)
                  for e, v in acc.items() if v}
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.arity = self.arity
        out.terms = result
        out._key = None
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial:
                raise ValueError(
                    "negative powers require an invertible monomial")
            (exps, c), = self.terms.items()
            return LaurentPolynomial.monomial(
                self.arity, tuple(e * exponent for e in exps),
                Fraction(1) / c ** (-exponent))
        result = LaurentPolynomial.one(self.arity)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        if self._key is None:
            self._key = (self.arity, tuple(sorted(self.terms.items())))
        return hash(self._key)

    # -- structural transforms --------------------------------------------

    def shift(self, delta: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the (unit) monomial ``x^delta``."""
        delta = tuple(delta)
        if len(delta) != self.arity:
            raise ArityMismatchError("shift vector has wrong arity")
        if not any(delta):
            return self
        out = LaurentPolynomial.__new__(LaurentPolynomial)
        out.arity = self.arity
        out.terms = {tuple(e + d for e, d in zip(exps, delta)): c
                     for exps, c in self.terms.items()}
        out._key = None
        return out

    def extended(self, extra: int) -> "LaurentPolynomial":
        """Append ``extra`` fresh variables (exponent zero everywhere)."""
        pad = (0,) * extra
        return LaurentPolynomial(self.arity + extra,
                                 {exps + pad: c for exps, c in self.terms.items()})

    def dropped(self, index: int) -> "LaurentPolynomial":
        """Remove an unused variable slot."""
        terms = {}
        for exps, c in self.terms.items():
            if exps[index]:
                raise ValueError(f"variable {index} is in use")
            terms[exps[:index] + exps[index + 1:]] = c
        return LaurentPolynomial(self.arity - 1, terms)

    def substitute_zero(self, index: int) -> "LaurentPolynomial":
        """Set ``x_index`` to zero; requires no negative powers of it."""
        terms = {}
        for exps, c in self.terms.items():
            if exps[index] < 0:
                raise ValueError(
                    f"substituting 0 for variable {index} with negative power")
            if exps[index] == 0:
                terms[exps] = c
        return LaurentPolynomial(self.arity, terms)

    def substitute(self, index: int,
                   value: "LaurentPolynomial") -> "LaurentPolynomial":
        """Replace ``x_index`` by ``value`` (same arity)."""
        self._check(value)
        powers: dict[int, LaurentPolynomial] = {}

        def power(e: int) -> LaurentPolynomial:
            if e not in powers:
                powers[e] = value ** e
            return powers[e]

        acc = LaurentPolynomial.zero(self.arity)
        for exps, c in self.terms.items():
            e = exps[index]
            rest = exps[:index] + (0,) + exps[index + 1:]
            acc = acc + LaurentPolynomial.monomial(self.arity, rest, c) * power(e)
        return acc

    def poly_part(self) -> tuple[Exponents, "LaurentPolynomial"]:
        """Split off the monomial so the rest has min exponent 0 per variable.

        Returns ``(shift, p)`` with ``self == p.shift(shift)`` and ``p`` a
        true polynomial not divisible by any variable.
        """
        if self.is_zero:
            return (0,) * self.arity, self
        mins = self.min_exponents()
        return mins, self.shift(tuple(-v for v in mins))

    def canonical_parts(self) -> tuple[Fraction, Exponents, "LaurentPolynomial"]:
        """Write ``self = c * x^v * normal`` with ``normal`` canonical.

        The canonical representative is a polynomial with min exponent 0 in
        every variable, integer-primitive coefficients, and positive leading
        coefficient in lexicographic term order.
        """
        if self.is_zero:
            raise ValueError("zero polynomial has no canonical form")
        mono, poly = self.poly_part()
        c = poly.content()
        if poly.leading()[1] < 0:
            c = -c
        return c, mono, poly * (Fraction(1) / c)

    def canonical(self) -> "LaurentPolynomial":
        return self.canonical_parts()[2]

    def __str__(self) -> str:
        return format_polynomial(self, default_names(self.arity))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


# -- ring operations --------------------------------------------------------

def arith(op: str, a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Exact ring arithmetic dispatch: ``op`` is ``add``, ``sub`` or ``mul``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def divide_exact(a: LaurentPolynomial,
                 b: LaurentPolynomial) -> Optional[LaurentPolynomial]:
    """Return ``q`` with ``a == b * q`` exactly, or None if not divisible."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return LaurentPolynomial.zero(a.arity)
    if a.arity != b.arity:
        raise ArityMismatchError(f"arity {a.arity} vs {b.arity}")
    shift_a, pa = a.poly_part()
    shift_b, pb = b.poly_part()
    q = _poly_divide(pa, pb)
    if q is None:
        return None
    return q.shift(tuple(x - y for x, y in zip(shift_a, shift_b)))


def _poly_divide(a: LaurentPolynomial,
                 b: LaurentPolynomial) -> Optional[LaurentPolynomial]:
    # Exact division of true polynomials by peeling lead terms; the packed
    # integer order is lexicographic with the last variable most
    # significant, which is an admissible term order, so the leading term
    # of an exact product is the sum of the factor leading terms.
    arity = a.arity
    bterms = [(_pack(e), c) for e, c in b.terms.items()]
    lead_b = max(k for k, _ in bterms)
    cb = dict(bterms)[lead_b]
    rem = {_pack(e): c for e, c in a.terms.items()}
    quo: dict[int, Fraction] = {}
    while rem:
        lead_r = max(rem)
        diff = lead_r - lead_b
        if any(d < 0 for d in _unpack(diff, arity)):
            return None
        c = rem[lead_r] / cb
        quo[diff] = c
        for kb, cv in bterms:
            key = diff + kb
            s = rem.get(key, 0) - c * cv
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return LaurentPolynomial(arity, {_unpack(k, arity): c
                                     for k, c in quo.items()})


# -- greatest common divisors ------------------------------------------------

def laurent_gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Gcd up to unit monomials, returned in canonical normal form.

    Segment inputs take a univariate fast path: segments with non-parallel
    directions are automatically coprime, and parallel segments reduce to a
    univariate gcd of their profiles.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.arity != b.arity:
        raise ArityMismatchError(f"arity {a.arity} vs {b.arity}")
    if a.is_zero:
        return b.canonical()
    if b.is_zero:
        return a.canonical()
    if a.is_monomial or b.is_monomial:
        return LaurentPolynomial.one(a.arity)
    sa = segment_decompose(a)
    sb = segment_decompose(b)
    if sa is not None and sb is not None:
        if sa.direction != sb.direction:
            return LaurentPolynomial.one(a.arity)
        h = _uni_gcd(list(sa.expanded_profile()), list(sb.expanded_profile()))
        if len(h) <= 1:
            return LaurentPolynomial.one(a.arity)
        out = LaurentPolynomial.zero(a.arity)
        for t, c in enumerate(h):
            if c:
                out = out + LaurentPolynomial.monomial(
                    a.arity, tuple(t * w for w in sa.direction), c)
        return out.canonical()
    _, pa = a.poly_part()
    _, pb = b.poly_part()
    return _poly_gcd(pa, pb).canonical()


def _uni_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # Monic Euclid over Q on ascending coefficient lists.
    a = _uni_trim(a)
    b = _uni_trim(b)
    while b:
        a, b = b, _uni_rem(a, b)
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def _uni_trim(a: Sequence[Fraction]) -> list[Fraction]:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _uni_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1] / lb
        k = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[k + i] -= c * bc
        r = _uni_trim(r[:-1] + [Fraction(0)])  # top term cancels exactly
    return _uni_trim(r)


def _coeffs_in(p: LaurentPolynomial, v: int) -> dict[int, LaurentPolynomial]:
    # View p as univariate in x_v; coefficients keep the full arity with
    # exponent zero at slot v.
    out: dict[int, dict[Exponents, Fraction]] = {}
    for exps, c in p.terms.items():
        e = exps[v]
        rest = exps[:v] + (0,) + exps[v + 1:]
        out.setdefault(e, {})[rest] = c
    return {e: LaurentPolynomial(p.arity, t) for e, t in out.items()}


def _from_coeffs(coeffs: dict[int, LaurentPolynomial], v: int,
                 arity: int) -> LaurentPolynomial:
    acc = LaurentPolynomial.zero(arity)
    for e, poly in coeffs.items():
        delta = [0] * arity
        delta[v] = e
        acc = acc + poly.shift(tuple(delta))
    return acc


def _poly_gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    # Recursive content / primitive-part gcd for true polynomials.
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.is_constant or b.is_constant:
        return LaurentPolynomial.one(a.arity)
    vs = set(a.variables()) | set(b.variables())
    v = max(vs)
    ca, ppa = _content_primitive(a, v)
    cb, ppb = _content_primitive(b, v)
    cg = _poly_gcd(ca, cb)
    f, g = ppa, ppb
    if f.degree_in(v) < g.degree_in(v):
        f, g = g, f
    while True:
        if g.is_zero:
            h = f
            break
        if g.degree_in(v) == 0:
            h = LaurentPolynomial.one(a.arity)
            break
        r = _prem(f, g, v)
        if not r.is_zero:
            r = _content_primitive(r, v)[1]
        f, g = g, r
    h = _content_primitive(h, v)[1] if h.degree_in(v) > 0 else h
    return cg * h


def _content_primitive(p: LaurentPolynomial,
                       v: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    coeffs = _coeffs_in(p, v)
    content = LaurentPolynomial.zero(p.arity)
    for poly in coeffs.values():
        content = _poly_gcd(content, poly)
        if content.is_constant:
            content = LaurentPolynomial.one(p.arity)
            break
    if content.is_one:
        return content, p
    pp = divide_exact(p, content)
    assert pp is not None
    return content, pp


def _prem(f: LaurentPolynomial, g: LaurentPolynomial,
          v: int) -> LaurentPolynomial:
    # Pseudo-remainder of f by g in the variable x_v.
    gc = _coeffs_in(g, v)
    dg = max(gc)
    lg = gc[dg]
    r = f
    while not r.is_zero:
        rc = _coeffs_in(r, v)
        dr = max(rc)
        if dr < dg:
            break
        lr = rc[dr]
        delta = [0] * f.arity
        delta[v] = dr - dg
        r = r * lg - g.shift(tuple(delta)) * lr
    return r


# -- Newton segment decomposition --------------------------------------------

@dataclass(frozen=True)
class SegmentForm:
    """Decomposition ``f = x^unit * profile((x^direction)^stretch)``.

    ``direction`` is primitive (entry gcd 1, first nonzero entry positive)
    and ``profile`` is a univariate coefficient tuple (ascending degree)
    with nonzero constant term.  A single monomial is the degenerate
    segment of length zero.
    """

    unit_monomial: Exponents
    direction: Exponents
    stretch: int
    profile: tuple[Fraction, ...]

    def expanded_profile(self) -> tuple[Fraction, ...]:
        """Coefficients of ``G(y) = profile(y^stretch)``."""
        if len(self.profile) == 1:
            return self.profile
        out = [Fraction(0)] * ((len(self.profile) - 1) * self.stretch + 1)
        for t, c in enumerate(self.profile):
            out[t * self.stretch] = c
        return tuple(out)

    def reconstruct(self, arity: int) -> LaurentPolynomial:
        terms = {}
        for t, c in enumerate(self.profile):
            if c:
                exps = tuple(u + t * self.stretch * w
                             for u, w in zip(self.unit_monomial, self.direction))
                terms[exps] = c
        return LaurentPolynomial(arity, terms)


def segment_decompose(f: LaurentPolynomial) -> Optional[SegmentForm]:
    """Decompose ``f`` along a collinear Newton polytope, or None.

    The base point is the lexicographically least exponent vector, which is
    always an endpoint of the segment, so offsets along the direction are
    nonnegative and the direction comes out canonically oriented.
    """
    if f.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    exps = sorted(f.terms)
    base = exps[0]
    if len(exps) == 1:
        direction = (1,) + (0,) * (f.arity - 1) if f.arity else ()
        return SegmentForm(base, direction, 1, (f.terms[base],))
    top = tuple(x - y for x, y in zip(exps[-1], base))
    g = 0
    for t in top:
        g = gcd(g, abs(t))
    direction = tuple(t // g for t in top)
    idx = next(i for i, w in enumerate(direction) if w)
    offsets: list[tuple[int, Fraction]] = []
    for e in exps:
        v = tuple(x - y for x, y in zip(e, base))
        if v[idx] % direction[idx]:
            return None
        c = v[idx] // direction[idx]
        if c < 0 or v != tuple(c * w for w in direction):
            return None
        offsets.append((c, f.terms[e]))
    stretch = 0
    for c, _ in offsets:
        stretch = gcd(stretch, c)
    profile = [Fraction(0)] * (offsets[-1][0] // stretch + 1)
    for c, coeff in offsets:
        profile[c // stretch] = coeff
    return SegmentForm(base, direction, stretch, tuple(profile))


# -- text syntax --------------------------------------------------------------

def default_names(arity: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(arity))


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: LaurentPolynomial, names: Sequence[str]) -> str:
    """Render in the wire syntax, e.g. ``x2*x3^-1 + x3^-1`` or ``-2*x1 + 1/2``."""
    if len(names) != p.arity:
        raise ArityMismatchError("name list does not match arity")
    if p.is_zero:
        return "0"
    parts = []
    for exps, c in p.sorted_terms():
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors or mag != 1:
            factors.insert(0, format_coefficient(mag))
        term = "*".join(factors)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text."""


_TOKEN = re.compile(r"\s*([+-]|[A-Za-z_][A-Za-z_0-9']*|\^|\*|/|\d+)")


def parse_polynomial(text: str, names: Sequence[str]) -> LaurentPolynomial:
    """Parse the wire syntax; inverse of :func:`format_polynomial`."""
    arity = len(names)
    index = {name: i for i, name in enumerate(names)}
    tokens: list[str] = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise PolynomialSyntaxError(
                f"unexpected character at position {pos}: {stripped[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")

    result = LaurentPolynomial.zero(arity)
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
            first = False
        if i >= len(tokens):
            raise PolynomialSyntaxError("dangling sign")
        first = False
        coeff = Fraction(sign)
        exps = [0] * arity
        expect_factor = True
        while i < len(tokens):
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise PolynomialSyntaxError(f"missing '*' before {tok!r}")
            if tok.isdigit():
                value = Fraction(int(tok))
                i += 1
                if i < len(tokens) and tokens[i] == "/":
                    if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
                        raise PolynomialSyntaxError("malformed rational")
                    value /= int(tokens[i + 1])
                    i += 2
                coeff *= value
            elif tok in index:
                var = index[tok]
                i += 1
                e = 1
                if i < len(tokens) and tokens[i] == "^":
                    i += 1
                    neg = False
                    if i < len(tokens) and tokens[i] == "-":
                        neg = True
                        i += 1
                    if i >= len(tokens) or not tokens[i].isdigit():
                        raise PolynomialSyntaxError("malformed exponent")
                    e = -int(tokens[i]) if neg else int(tokens[i])
                    i += 1
                exps[var] += e
            else:
                raise PolynomialSyntaxError(f"unknown variable {tok!r}")
            expect_factor = False
        if expect_factor and not first:
            raise PolynomialSyntaxError("empty term")
        result = result + LaurentPolynomial.monomial(arity, exps, coeff)
    return result
