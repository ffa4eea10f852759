"""Command-line interface.

Reads seed JSON from a file argument or stdin, writes one deterministic
JSON document to stdout.  Exit codes: 0 success, 2 malformed input or a
named precondition failure, 1 internal error.  Directions and variable
indices are 1-based on this surface.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import classgroup as cg
from . import genseed, jsonio, lpalgebra
from .genseed import GeneralizedSeed, PreconditionError
from .lpalgebra import LPSeed
from .realize import AbelianGroupSpec, realize_seed, verify_realization


class CommandError(Exception):
    """User-facing failure carrying the JSON payload and exit code."""

    def __init__(self, payload: dict, code: int = 2):
        super().__init__(payload.get("error", "command failed"))
        self.payload = payload
        self.code = code


def _read_document(path: Optional[str]) -> dict:
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        raise CommandError({"error": "cannot-read-input", "detail": str(exc)})
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CommandError({
            "error": "malformed-json",
            "detail": exc.msg,
            "line": exc.lineno,
            "column": exc.colno,
        })


def _load_any_seed(path: Optional[str]):
    doc = _read_document(path)
    try:
        return jsonio.any_seed_from_dict(doc)
    except jsonio.SeedJSONError as exc:
        raise CommandError({"error": "invalid-seed-document", "detail": str(exc)})


def _load_generalized(path: Optional[str]) -> GeneralizedSeed:
    seed = _load_any_seed(path)
    if not isinstance(seed, GeneralizedSeed):
        raise CommandError({"error": "expected-generalized-seed"})
    return seed


def _load_lp(path: Optional[str]) -> LPSeed:
    seed = _load_any_seed(path)
    if not isinstance(seed, LPSeed):
        raise CommandError({"error": "expected-lp-seed"})
    return seed


def _direction(seed_rank: int, value: int) -> int:
    if not 1 <= value <= seed_rank:
        raise CommandError({
            "error": "invalid-direction",
            "precondition": f"direction in [1, {seed_rank}]",
        })
    return value - 1


def _resolve_mode(mode: str, seed: GeneralizedSeed) -> str:
    if mode == "auto":
        return cg.MODE_CLOSED if seed.ring == "Qbar" else cg.MODE_RATIONAL
    return cg.MODE_CLOSED if mode == "closed" else cg.MODE_RATIONAL


def classgroup_payload(seed: GeneralizedSeed, mode: str) -> dict:
    """Class group JSON, or the named preconditions-not-met payload."""
    try:
        result = cg.class_group(seed, mode)
    except PreconditionError as exc:
        return {"preconditions_not_met": exc.failed}
    return jsonio.class_group_to_dict(result, seed)


def _parse_torsion(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CommandError({"error": "invalid-torsion",
                            "detail": "expected comma-separated integers"})


def _parse_sequence(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise CommandError({"error": "invalid-sequence",
                            "detail": "expected comma-separated directions"})


# -- command implementations ----------------------------------------------------

def _cmd_validate(args) -> dict:
    seed = _load_any_seed(args.seed)
    if isinstance(seed, GeneralizedSeed):
        violations = genseed.validate_seed(seed)
        if violations:
            raise CommandError({"ok": False, "violations": violations})
        return {"ok": True}
    report = lpalgebra.validate_lp_seed(seed)
    if not report.ok:
        raise CommandError({"ok": False, "violations": list(report.violations),
                            "irreducibility": list(report.irreducibility)})
    return {"ok": True, "irreducibility": list(report.irreducibility)}


def _cmd_mutate(args) -> dict:
    seed = _load_generalized(args.seed)
    mutated = genseed.mutate(seed, _direction(seed.n, args.dir))
    return jsonio.seed_to_dict(mutated)


def _cmd_exchange_polys(args) -> dict:
    seed = _load_any_seed(args.seed)
    if isinstance(seed, GeneralizedSeed):
        polys = genseed.exchange_polynomials(seed)
        from .exactmath.laurent import format_polynomial
        return {"exchange_polynomials":
                [format_polynomial(f, seed.names) for f in polys]}
    fhat = lpalgebra.exchange_laurent(seed)
    from .exactmath.laurent import format_polynomial
    return {"exchange_laurent":
            [format_polynomial(f, seed.names) for f in fhat]}


def _cmd_classgroup(args) -> dict:
    seed = _load_generalized(args.seed)
    payload = classgroup_payload(seed, _resolve_mode(args.mode, seed))
    if "preconditions_not_met" in payload:
        raise CommandError({"error": "preconditions-not-met",
                            "failed": payload["preconditions_not_met"]})
    return payload


def _cmd_realize(args) -> dict:
    spec = AbelianGroupSpec(args.free_rank, _parse_torsion(args.torsion))
    try:
        spec = spec.normalized()
    except ValueError as exc:
        raise CommandError({"error": "invalid-group", "detail": str(exc)})
    seed = realize_seed(spec)
    verified = verify_realization(spec)
    free, torsion = spec.invariant_factors()
    return {
        "seed": jsonio.seed_to_dict(seed),
        "class_group": {"free_rank": free, "torsion": list(torsion)},
        "verified": verified,
    }


def _cmd_lp_mutate(args) -> dict:
    seed = _load_lp(args.seed)
    try:
        mutated = lpalgebra.lp_mutate(seed, _direction(seed.n, args.dir))
    except lpalgebra.LPSubstitutionError as exc:
        raise CommandError({"error": "ill-defined-substitution",
                            "precondition": str(exc)})
    except lpalgebra.LPValidationError as exc:
        raise CommandError({"error": "invalid-seed",
                            "violations": exc.violations})
    return jsonio.lp_seed_to_dict(mutated)


def _cmd_lp_enumerate(args) -> dict:
    seed = _load_lp(args.seed)
    try:
        variables = lpalgebra.enumerate_lp_cluster_variables(seed, args.depth)
    except lpalgebra.LPValidationError as exc:
        raise CommandError({"error": "invalid-seed",
                            "violations": exc.violations})
    except lpalgebra.LPSubstitutionError as exc:
        raise CommandError({"error": "ill-defined-substitution",
                            "precondition": str(exc)})
    return {"variables": sorted(v.display(seed.names) for v in variables)}


def _cmd_verify_laurent(args) -> dict:
    seed = _load_generalized(args.seed)
    sequence = [_direction(seed.n, k) for k in _parse_sequence(args.sequence)]
    return {"laurent": genseed.verify_laurent(seed, sequence)}


def _cmd_explore(args) -> dict:
    seed = _load_generalized(args.seed)
    if args.max_seeds < 1:
        raise CommandError({"error": "invalid-bound",
                            "precondition": "max-seeds >= 1"})
    result = genseed.explore_mutation_class(seed, args.max_seeds)
    return {"seeds_found": result.seeds_found, "exhausted": result.exhausted}


def _cmd_serve(args) -> dict:
    from .service import run_server
    run_server(host=args.host, port=args.port)
    return {}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencluster",
        description="Exact computations with generalized cluster algebras "
                    "and Laurent phenomenon algebras.")
    parser.add_argument("--format", choices=("json", "pretty"), default="json",
                        help="output formatting (default json)")
    sub = parser.add_subparsers(dest="command", required=True)

    def seed_arg(p):
        p.add_argument("seed", nargs="?", default=None,
                       help="seed JSON file (default stdin)")

    p = sub.add_parser("validate", help="check seed invariants")
    seed_arg(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("mutate", help="mutate a generalized seed")
    p.add_argument("--dir", type=int, required=True, help="direction, 1-based")
    seed_arg(p)
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("exchange-polys", help="exchange polynomials of a seed")
    seed_arg(p)
    p.set_defaults(func=_cmd_exchange_polys)

    p = sub.add_parser("classgroup", help="class group of the cluster algebra")
    p.add_argument("--mode", choices=("rational", "closed", "auto"),
                   default="auto")
    seed_arg(p)
    p.set_defaults(func=_cmd_classgroup)

    p = sub.add_parser("realize",
                       help="seed whose class group is a prescribed group")
    p.add_argument("--free-rank", type=int, default=0)
    p.add_argument("--torsion", default="", help="comma-separated invariants")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("lp-mutate", help="mutate an LP seed")
    p.add_argument("--dir", type=int, required=True, help="direction, 1-based")
    seed_arg(p)
    p.set_defaults(func=_cmd_lp_mutate)

    p = sub.add_parser("lp-enumerate",
                       help="LP cluster variables up to a mutation depth")
    p.add_argument("--depth", type=int, required=True)
    seed_arg(p)
    p.set_defaults(func=_cmd_lp_enumerate)

    p = sub.add_parser("verify-laurent",
                       help="check the Laurent phenomenon along a sequence")
    p.add_argument("--sequence", default="", help="comma-separated directions")
    seed_arg(p)
    p.set_defaults(func=_cmd_verify_laurent)

    p = sub.add_parser("explore", help="bounded mutation-class search")
    p.add_argument("--max-seeds", type=int, required=True)
    seed_arg(p)
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("serve", help="run the local HTTP service")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    pretty = args.format == "pretty"
    try:
        payload = args.func(args)
    except CommandError as exc:
        print(jsonio.dumps(exc.payload, pretty))
        return exc.code
    except genseed.InvalidSeedError as exc:
        print(jsonio.dumps({"error": "invalid-seed",
                            "violations": exc.violations}, pretty))
        return 2
    except PreconditionError as exc:
        print(jsonio.dumps({"error": "preconditions-not-met",
                            "failed": exc.failed}, pretty))
        return 2
    except BrokenPipeError:
        return 1
    except Exception as exc:  # internal error contract: exit 1
        print(jsonio.dumps({"error": "internal-error", "detail": str(exc)}),
              file=sys.stderr)
        return 1
    if args.command != "serve":
        print(jsonio.dumps(payload, pretty))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
