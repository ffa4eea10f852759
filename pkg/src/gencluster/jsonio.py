"""JSON wire formats for seeds, LP seeds and class groups.

Variable indices on the wire are 1-based (matching the display labels);
the library itself is 0-based.  Serialization is deterministic: keys are
sorted and separators fixed, so identical inputs produce byte-identical
output across the CLI and the HTTP service.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .classgroup import ClassGroupResult, ClosedWitness
from .exactmath.laurent import (
    LaurentPolynomial,
    PolynomialSyntaxError,
    format_polynomial,
    parse_polynomial,
)
from .genseed import GeneralizedSeed, make_seed
from .lpalgebra import LPSeed, make_lp_seed


class SeedJSONError(ValueError):
    """Malformed seed document; the message names the offending field."""


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise SeedJSONError(message)


def seed_to_dict(seed: GeneralizedSeed) -> dict:
    return {
        "ring": seed.ring,
        "n": seed.n,
        "m": seed.m,
        "names": list(seed.names),
        "B": [list(row) for row in seed.B],
        "d": list(seed.d),
        "rho": [[format_polynomial(entry, seed.names) for entry in string]
                for string in seed.rho],
    }


def seed_from_dict(doc: dict) -> GeneralizedSeed:
    _expect(isinstance(doc, dict), "seed document must be an object")
    for field in ("n", "m", "B", "d", "rho"):
        _expect(field in doc, f"missing field {field!r}")
    n, m = doc["n"], doc["m"]
    _expect(isinstance(n, int) and n >= 1, "field 'n' must be a positive integer")
    _expect(isinstance(m, int) and m >= 0, "field 'm' must be a nonnegative integer")
    names = doc.get("names") or [f"x{i + 1}" for i in range(n + m)]
    _expect(isinstance(names, list) and len(names) == n + m,
            "field 'names' must list n+m labels")
    b = doc["B"]
    _expect(isinstance(b, list) and len(b) == n + m
            and all(isinstance(r, list) and len(r) == n for r in b),
            "field 'B' must be an (n+m) x n integer matrix")
    d = doc["d"]
    _expect(isinstance(d, list) and len(d) == n, "field 'd' must list n divisors")
    rho_doc = doc["rho"]
    _expect(isinstance(rho_doc, list) and len(rho_doc) == n,
            "field 'rho' must list n strings")
    rho = []
    for i, entries in enumerate(rho_doc):
        _expect(isinstance(entries, list), f"rho[{i}] must be a list")
        row = []
        for j, text in enumerate(entries):
            try:
                row.append(parse_polynomial(str(text), names))
            except PolynomialSyntaxError as exc:
                raise SeedJSONError(f"rho[{i}][{j}]: {exc}") from exc
        rho.append(row)
    ring = doc.get("ring", "Q")
    _expect(ring in ("Z", "Q", "Qbar"), "field 'ring' must be Z, Q or Qbar")
    return make_seed(b, d=d, rho=rho, names=names, m=m, ring=ring)


def lp_seed_to_dict(seed: LPSeed) -> dict:
    return {
        "ring": seed.ring,
        "n": seed.n,
        "names": list(seed.names),
        "F": [format_polynomial(f, seed.names) for f in seed.F],
    }


def lp_seed_from_dict(doc: dict) -> LPSeed:
    _expect(isinstance(doc, dict), "seed document must be an object")
    _expect("F" in doc, "missing field 'F'")
    _expect("n" in doc, "missing field 'n'")
    n = doc["n"]
    _expect(isinstance(n, int) and n >= 1, "field 'n' must be a positive integer")
    names = doc.get("names") or [f"x{i + 1}" for i in range(n)]
    _expect(isinstance(names, list) and len(names) == n,
            "field 'names' must list n labels")
    polys = doc["F"]
    _expect(isinstance(polys, list) and len(polys) == n,
            "field 'F' must list n polynomials")
    ring = doc.get("ring", "Q")
    _expect(ring in ("Z", "Q"), "field 'ring' must be Z or Q")
    parsed = []
    for i, text in enumerate(polys):
        try:
            parsed.append(parse_polynomial(str(text), names))
        except PolynomialSyntaxError as exc:
            raise SeedJSONError(f"F[{i}]: {exc}") from exc
    return make_lp_seed(parsed, names=names, ring=ring)


def any_seed_from_dict(doc: dict):
    """Detect the document kind: generalized seeds carry B, LP seeds carry F."""
    _expect(isinstance(doc, dict), "seed document must be an object")
    if "B" in doc:
        return seed_from_dict(doc)
    if "F" in doc:
        return lp_seed_from_dict(doc)
    raise SeedJSONError("document is neither a generalized seed (B) nor an LP seed (F)")


def _witness_to_json(witness, names: Sequence[str]):
    if isinstance(witness, LaurentPolynomial):
        return format_polynomial(witness, names)
    assert isinstance(witness, ClosedWitness)
    return {
        "direction": list(witness.direction),
        "stretch": witness.stretch,
        "block": list(witness.block),
        "block_degree": witness.block_degree,
        "root_index": witness.root_index,
    }


def class_group_to_dict(result: ClassGroupResult,
                        seed: GeneralizedSeed) -> dict:
    return {
        "r": result.prime_count,
        "free_rank": result.free_rank,
        "torsion": list(result.torsion),
        "primes": [
            {
                "source": p.source + 1,
                "witness": _witness_to_json(p.witness, seed.names),
                "multiplicity": p.multiplicity,
            }
            for p in result.primes
        ],
        "valuation": [list(row) for row in result.valuation],
    }
