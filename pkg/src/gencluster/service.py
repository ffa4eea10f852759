"""Local JSON-over-HTTP service backing the mutation explorer UI.

Sessions hold an initial seed plus a mutation history; the current seed
and all expressions are recomputed by replaying the history, so the
replay invariant holds by construction.  Each session is serialized by
its own lock; all computation underneath is pure.  The server binds to
localhost by default and adds permissive CORS headers so a static UI
served from another local port can talk to it.
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Optional, Union

from . import genseed, jsonio, lpalgebra
from .cli import classgroup_payload
from .exactmath.laurent import format_polynomial
from .expressions import RationalExpression, evaluate_poly
from .genseed import GeneralizedSeed
from .lpalgebra import LPSeed


class ApiError(Exception):
    def __init__(self, status: int, payload: dict):
        super().__init__(payload.get("error", "error"))
        self.status = status
        self.payload = payload


@dataclass
class Session:
    session_id: str
    initial: Union[GeneralizedSeed, LPSeed]
    history: list[int] = field(default_factory=list)  # 0-based directions
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def kind(self) -> str:
        return "generalized" if isinstance(self.initial, GeneralizedSeed) else "lp"

    def replay(self):
        """Current seed and expressions, recomputed from the initial seed."""
        if isinstance(self.initial, GeneralizedSeed):
            seed = self.initial
            exprs = list(genseed.initial_expressions(seed))
            for i in self.history:
                f = genseed.exchange_polynomials(seed)[i]
                exprs[i] = evaluate_poly(f, exprs) / exprs[i]
                seed = genseed.mutate(seed, i)
            return seed, tuple(exprs)
        seed = self.initial
        exprs = [RationalExpression.variable(seed.n, i)
                 for i in range(seed.n)]
        for k in self.history:
            fhat = lpalgebra.exchange_laurent(seed)
            exprs[k] = evaluate_poly(fhat[k], exprs) / exprs[k]
            seed = lpalgebra.lp_mutate(seed, k)
        return seed, tuple(exprs)


def _graph_payload(seed: Union[GeneralizedSeed, LPSeed]) -> dict:
    if isinstance(seed, GeneralizedSeed):
        graph = genseed.digraph(seed)
        vertices = [{"id": v + 1, "name": seed.names[v], "frozen": v >= seed.n}
                    for v in range(seed.size)]
        edges = sorted([i + 1, j + 1] for (i, j) in graph.edges)
        return {"vertices": vertices, "edges": edges}
    vertices = [{"id": v + 1, "name": seed.names[v], "frozen": False}
                for v in range(seed.n)]
    edges = []
    for j, f in enumerate(seed.F):
        for i in range(seed.n):
            if any(exps[i] for exps in f.terms):
                edges.append([i + 1, j + 1])
    return {"vertices": vertices, "edges": sorted(edges)}


def session_view(session: Session) -> dict:
    seed, exprs = session.replay()
    names = session.initial.names
    base = {
        "session": session.session_id,
        "kind": session.kind,
        "history": [k + 1 for k in session.history],
        "graph": _graph_payload(seed),
        "expressions": [e.display(names) for e in exprs],
    }
    if isinstance(seed, GeneralizedSeed):
        polys = genseed.exchange_polynomials(seed)
        mode = "closed" if seed.ring == "Qbar" else "rational"
        base.update({
            "seed": jsonio.seed_to_dict(seed),
            "exchange_polynomials": [format_polynomial(f, seed.names)
                                     for f in polys],
            "acyclic": genseed.is_acyclic(seed),
            "coprime": genseed.is_coprime(seed),
            "class_group": classgroup_payload(seed, mode),
        })
    else:
        fhat = lpalgebra.exchange_laurent(seed)
        base.update({
            "seed": jsonio.lp_seed_to_dict(seed),
            "exchange_laurent": [format_polynomial(f, seed.names)
                                 for f in fhat],
            "sign_skew_symmetric": lpalgebra.is_sign_skew_symmetric(seed),
            "class_group": {
                "preconditions_not_met": ["krull-hypothesis-not-verifiable"],
                "note": "for LP seeds that are Krull domains the class group "
                        "is free of rank r - n; this artifact cannot verify "
                        "the hypothesis and reports the group as conditional",
            },
        })
    return base


class SessionStore:
    def __init__(self):
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._counter = 0

    def create(self, seed) -> Session:
        with self._lock:
            self._counter += 1
            session = Session(session_id=f"s{self._counter}", initial=seed)
            self._sessions[session.session_id] = session
            return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, {"error": "unknown-session"})
        return session


_ROUTES = [
    ("POST", re.compile(r"^/session$"), "create_session"),
    ("GET", re.compile(r"^/session/([^/]+)$"), "get_session"),
    ("POST", re.compile(r"^/session/([^/]+)/mutate$"), "mutate"),
    ("POST", re.compile(r"^/session/([^/]+)/undo$"), "undo"),
    ("GET", re.compile(r"^/session/([^/]+)/classgroup$"), "get_classgroup"),
    ("POST", re.compile(r"^/realize$"), "realize"),
]


class ExplorerApi:
    """Transport-independent request handlers (shared with tests)."""

    def __init__(self):
        self.store = SessionStore()

    def create_session(self, body: dict) -> dict:
        try:
            seed = jsonio.any_seed_from_dict(body)
        except jsonio.SeedJSONError as exc:
            raise ApiError(422, {"error": "invalid-seed-document",
                                 "detail": str(exc)})
        if isinstance(seed, GeneralizedSeed):
            violations = genseed.validate_seed(seed)
            if violations:
                raise ApiError(422, {"error": "invalid-seed",
                                     "violations": violations})
        else:
            report = lpalgebra.validate_lp_seed(seed)
            if not report.ok:
                raise ApiError(422, {"error": "invalid-seed",
                                     "violations": list(report.violations)})
        session = self.store.create(seed)
        return session_view(session)

    def get_session(self, session_id: str) -> dict:
        session = self.store.get(session_id)
        with session.lock:
            return session_view(session)

    def mutate(self, session_id: str, body: dict) -> dict:
        session = self.store.get(session_id)
        direction = body.get("direction")
        rank = session.initial.n
        if not isinstance(direction, int) or not 1 <= direction <= rank:
            raise ApiError(422, {"error": "invalid-direction",
                                 "precondition": f"direction in [1, {rank}]"})
        with session.lock:
            session.history.append(direction - 1)
            try:
                return session_view(session)
            except lpalgebra.LPSubstitutionError as exc:
                session.history.pop()
                raise ApiError(422, {"error": "ill-defined-substitution",
                                     "precondition": str(exc)})

    def undo(self, session_id: str, body: Optional[dict] = None) -> dict:
        session = self.store.get(session_id)
        with session.lock:
            if not session.history:
                raise ApiError(422, {"error": "nothing-to-undo"})
            session.history.pop()
            return session_view(session)

    def get_classgroup(self, session_id: str) -> dict:
        session = self.store.get(session_id)
        with session.lock:
            seed, _ = session.replay()
        if isinstance(seed, LPSeed):
            return {"preconditions_not_met": ["krull-hypothesis-not-verifiable"]}
        mode = "closed" if seed.ring == "Qbar" else "rational"
        return classgroup_payload(seed, mode)

    def realize(self, body: dict) -> dict:
        from .realize import AbelianGroupSpec, realize_seed, verify_realization
        free_rank = body.get("free_rank", 0)
        torsion = body.get("torsion", [])
        if (not isinstance(free_rank, int)
                or not isinstance(torsion, list)
                or not all(isinstance(t, int) for t in torsion)):
            raise ApiError(422, {"error": "invalid-group"})
        try:
            spec = AbelianGroupSpec(free_rank, tuple(torsion)).normalized()
        except ValueError as exc:
            raise ApiError(422, {"error": "invalid-group", "detail": str(exc)})
        seed = realize_seed(spec)
        free, tor = spec.invariant_factors()
        return {
            "seed": jsonio.seed_to_dict(seed),
            "class_group": {"free_rank": free, "torsion": list(tor)},
            "verified": verify_realization(spec),
        }


def _make_handler(api: ExplorerApi):
    class Handler(BaseHTTPRequestHandler):
        server_version = "gencluster"

        def log_message(self, *args):  # quiet by default
            pass

        def _send(self, status: int, payload: dict) -> None:
            body = jsonio.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods",
                             "GET, POST, OPTIONS")
            self.end_headers()
            self.wfile.write(body)

        def _body(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b"{}"
            try:
                doc = json.loads(raw.decode() or "{}")
            except json.JSONDecodeError as exc:
                raise ApiError(422, {"error": "malformed-json",
                                     "detail": exc.msg, "line": exc.lineno,
                                     "column": exc.colno})
            if not isinstance(doc, dict):
                raise ApiError(422, {"error": "malformed-json",
                                     "detail": "expected a JSON object"})
            return doc

        def _dispatch(self, method: str) -> None:
            try:
                for verb, pattern, name in _ROUTES:
                    if verb != method:
                        continue
                    match = pattern.match(self.path)
                    if not match:
                        continue
                    handler = getattr(api, name)
                    args = list(match.groups())
                    if method == "POST":
                        args.append(self._body())
                    self._send(200, handler(*args))
                    return
                raise ApiError(404, {"error": "not-found"})
            except ApiError as exc:
                self._send(exc.status, exc.payload)
            except genseed.InvalidSeedError as exc:
                self._send(422, {"error": "invalid-seed",
                                 "violations": exc.violations})
            except genseed.PreconditionError as exc:
                self._send(422, {"error": "preconditions-not-met",
                                 "failed": exc.failed})
            except Exception as exc:
                self._send(500, {"error": "internal-error", "detail": str(exc)})

        def do_GET(self):
            self._dispatch("GET")

        def do_POST(self):
            self._dispatch("POST")

        def do_OPTIONS(self):
            self._send(200, {})

    return Handler


def create_server(host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    api = ExplorerApi()
    server = ThreadingHTTPServer((host, port), _make_handler(api))
    server.api = api  # type: ignore[attr-defined]
    return server


def run_server(host: str = "127.0.0.1", port: int = 8642) -> None:
    server = create_server(host, port)
    print(f"serving on http://{host}:{server.server_address[1]}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
