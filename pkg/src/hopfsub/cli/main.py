"""Command-line front end.

Exit codes: 0 when everything checked passes, 1 when a law is violated,
2 for usage, parse and construction errors.  ``SPECIES_MAX_N`` caps the
degree bound (default 4).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .. import verify
from ..foundations import DomainError, LinComb, canonical_labels, labelset
from ..interpolation import (
    RTee, check_coideal, check_ideal, port_s_r, quotient_dims,
)
from ..morphisms import check_injective, embed_b, embed_p
from ..species import Bimonoid, CapabilityError, Comonoid, HypothesisError
from ..tee import Tee
from .codec import decode_term, dumps, encode_lincomb, encode_term
from .evaluate import Value, evaluate
from .parser import ParseError, parse_expr, print_expr

DEFAULT_CAP = 4


class UsageError(Exception):
    pass


def n_cap() -> int:
    raw = os.environ.get("SPECIES_MAX_N", "")
    try:
        return int(raw) if raw else DEFAULT_CAP
    except ValueError:
        raise UsageError(f"SPECIES_MAX_N must be an integer, got {raw!r}")


def effective_n(requested: int | None) -> int:
    cap = n_cap()
    if requested is None:
        return cap
    if requested < 0:
        raise UsageError("--max-n must be nonnegative")
    if requested > cap:
        print(f"note: --max-n {requested} capped to {cap} by SPECIES_MAX_N", file=sys.stderr)
        return cap
    return requested


def _labels(text: str | None):
    if not text:
        return ()
    labels = [s.strip() for s in text.split(",")]
    if any(not s or any(ch in s for ch in "|{}") for s in labels):
        raise UsageError(f"bad label list {text!r}")
    if len(set(labels)) != len(labels):
        raise UsageError(f"repeated label in {text!r}")
    return labelset(labels)


def _load(expr: str) -> Value:
    return evaluate(parse_expr(expr))


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{what} is not valid JSON: {e}")


def _structure(v: Value, kind=Bimonoid, what="this command"):
    if not isinstance(v.structure, kind):
        need = "a bimonoid" if kind is Bimonoid else "a comonoid"
        raise UsageError(f"{what} needs {need}; {v.species.name} has no such structure")
    return v.structure


# -- corrupted structures for exercising failure paths --------------------------

class Corrupted(Bimonoid):
    """Delegates to ``base`` except for one product or coproduct value."""

    def __init__(self, base, which: str):
        super().__init__(base.species, base.name + f"!{which}")
        self.base = base
        self.which = which
        self.has_restrictions = base.has_restrictions

    def _alter(self, v: LinComb, labels) -> LinComb:
        if len(v) == 1:
            t, c = v.single()
            if not isinstance(t, tuple):
                others = [s for s in self.species.basis(labels) if s != t]
                if others:
                    return LinComb.term(others[0], c)
        return 2 * v

    def mu(self, x, y):
        v = self.base.mu(x, y)
        if self.which == "mu" and x.labels == ("1",) and y.labels == ("2",):
            return self._alter(v, ("1", "2"))
        return v

    def delta(self, x, S, T):
        v = self.base.delta(x, S, T)
        if self.which == "delta" and tuple(S) == ("1",) and tuple(T) == ("2",):
            return self._alter(v, ())
        return v

    def restrict(self, x, U):
        return self.base.restrict(x, U)

    def unit(self):
        return self.base.unit()


# -- commands -------------------------------------------------------------------

def cmd_parse(args):
    e = parse_expr(args.expr)
    out = print_expr(e)
    print(dumps({"canonical": out}) if args.json else out)
    return 0


def cmd_enumerate(args):
    v = _load(args.expr)
    labels = _labels(args.set)
    terms = [encode_term(t) for t in v.species.basis(labels)]
    if args.json:
        print(dumps(terms))
    else:
        for t in terms:
            print(dumps(t))
    return 0


def cmd_dim(args):
    v = _load(args.expr)
    n_max = effective_n(args.max_n)
    dims = [v.species.dim(canonical_labels(n)) for n in range(n_max + 1)]
    if args.json:
        print(dumps({"expr": print_expr(parse_expr(args.expr)), "dims": dims}))
    else:
        for n, d in enumerate(dims):
            print(f"{n}\t{d}")
    return 0


def cmd_mu(args):
    v = _load(args.expr)
    h = _structure(v, Bimonoid, "mu")
    x = decode_term(v.species, _json_arg(args.left, "--left"))
    y = decode_term(v.species, _json_arg(args.right, "--right"))
    if set(x.labels) & set(y.labels):
        raise UsageError("the two terms must live on disjoint label sets")
    print(dumps(encode_lincomb(h.mu(x, y))))
    return 0


def cmd_delta(args):
    v = _load(args.expr)
    c = _structure(v, Comonoid, "delta")
    x = decode_term(v.species, _json_arg(args.term, "--term"))
    S = _labels(args.split)
    if not set(S) <= set(x.labels):
        raise UsageError(f"split {list(S)} is not a subset of the term's labels {list(x.labels)}")
    T = tuple(l for l in x.labels if l not in set(S))
    print(dumps(encode_lincomb(c.delta(x, S, T))))
    return 0


def cmd_antipode(args):
    v = _load(args.expr)
    h = _structure(v, Bimonoid, "antipode")
    if not h.connected:
        raise UsageError(f"{h.name} is not connected")
    x = decode_term(v.species, _json_arg(args.term, "--term"))
    print(dumps(encode_lincomb(verify.antipode(h, x))))
    return 0


SIMPLE_LAWS = {
    "assoc": (verify.check_associativity, Bimonoid),
    "coassoc": (verify.check_coassociativity, Comonoid),
    "compat": (verify.check_compatibility, Bimonoid),
    "antipode": (verify.check_antipode, Bimonoid),
    "cocomm": (verify.check_cocommutativity, Comonoid),
    "comm": (verify.check_commutativity, Bimonoid),
    "coherence": (verify.check_coherence, Bimonoid),
    "linearized": (verify.check_linearized, Comonoid),
    "restrictions": (verify.check_restriction_axioms, Comonoid),
    "naturality": (verify.check_naturality, Comonoid),
}
LAWS = tuple(SIMPLE_LAWS) + ("morphism", "ideal", "coideal", "ports")


def _need_rtee(v: Value, law: str) -> RTee:
    if v.rtee is None:
        raise UsageError(f"law {law!r} applies to interpolation expressions R{{r}}[b,d](p,q)")
    return v.rtee


def run_law(v: Value, law: str, n_max: int) -> list[verify.Report]:
    if law in SIMPLE_LAWS:
        fn, kind = SIMPLE_LAWS[law]
        s = _structure(v, kind, f"law {law!r}")
        if law == "coherence" and not s.has_restrictions:
            raise UsageError(f"{s.name} has no restriction structure")
        if law == "antipode" and not s.connected:
            raise UsageError(f"{s.name} is not connected")
        return [fn(s, n_max)]
    if law == "morphism":
        if v.rtee is not None:
            rt = v.rtee
            return [verify.check_morphism(rt.hat_f(), rt.source, rt.target, n_max)]
        if isinstance(v.structure, Tee):
            tee = v.structure
            ep, eb = embed_p(tee), embed_b(tee)
            return [verify.check_morphism(ep, tee.p, tee, n_max, parts=("delta",)),
                    check_injective(ep, tee.p.species, n_max),
                    verify.check_morphism(eb, tee.b, tee, n_max),
                    check_injective(eb, tee.b.species, n_max)]
        raise UsageError("law 'morphism' applies to T[b](p) and R{r}[b,d](p,q) expressions")
    rt = _need_rtee(v, law)
    if law == "ideal":
        return [check_ideal(rt, n_max)]
    if law == "coideal":
        return [check_coideal(rt, n_max)]
    # ports
    nxt = RTee(rt.r + 1, rt.b, rt.d, rt.p, rt.q, rt.tau, rt.theta, check=False)
    up = port_s_r(rt, nxt)
    return [
        verify.check_morphism(rt.port_r(), rt.source, rt.carrier, n_max),
        verify.check_morphism(rt.port_upper_r(), rt.carrier, rt.target, n_max),
        verify.check_equal_maps(rt.port_r().then(rt.port_upper_r()), rt.hat_f_term, rt.source.species,
                                n_max, name="port^r∘port_r = hat_f"),
        verify.check_morphism(up, rt.carrier, nxt.carrier, n_max),
        verify.check_equal_maps(rt.port_r().then(up), nxt.port_r_term, rt.source.species, n_max,
                                name="port^r_s∘port_r = port_s"),
    ]


def cmd_verify(args):
    v = _load(args.expr)
    n_max = effective_n(args.max_n)
    if args.corrupt:
        base = v.structure
        if args.corrupt == "mu" and not isinstance(base, Bimonoid):
            raise UsageError("--corrupt mu needs a bimonoid")
        if not isinstance(base, Comonoid):
            raise UsageError("--corrupt needs a structure")
        v = Value(v.species, Corrupted(base, args.corrupt), v.rtee)
    reports = run_law(v, args.law, n_max)
    passed = all(r.passed for r in reports)
    if args.json:
        print(dumps({"expr": print_expr(parse_expr(args.expr)), "law": args.law, "n_max": n_max,
                     "passed": passed, "reports": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            print(r)
    return 0 if passed else 1


def cmd_interp(args):
    v = _load(args.expr)
    rt = _need_rtee(v, "interp")
    n_max = effective_n(args.max_n)
    rows = quotient_dims(rt, n_max)
    ok = all(r["ok"] for r in rows)
    if args.json:
        print(dumps({"expr": print_expr(parse_expr(args.expr)), "r": rt.r, "dims": rows, "passed": ok}))
    else:
        print("n\tambient\trank\tcarrier")
        for r in rows:
            print(f"{r['n']}\t{r['ambient']}\t{r['rank']}\t{r['carrier']}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfsub", description="Hopf monoids in species: evaluate and verify.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("expr_pos", nargs="?", metavar="EXPR", help="species expression, e.g. 'T[L](G+)'")
        p.add_argument("--expr", help="the expression, as a flag")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    add("parse", cmd_parse, "print the canonical form of an expression")
    p = add("enumerate", cmd_enumerate, "list the basis on a label set")
    p.add_argument("--set", default="", help="comma-separated labels, e.g. a,b,c")
    p = add("dim", cmd_dim, "dimensions on {1..n}")
    p.add_argument("--max-n", type=int)
    p = add("mu", cmd_mu, "product of two terms")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = add("delta", cmd_delta, "coproduct of a term")
    p.add_argument("--term", required=True)
    p.add_argument("--split", required=True, help="labels of the left part S")
    p = add("antipode", cmd_antipode, "antipode of a term")
    p.add_argument("--term", required=True)
    p = add("verify", cmd_verify, "check a law exhaustively")
    p.add_argument("--law", required=True, choices=LAWS)
    p.add_argument("--max-n", type=int)
    p.add_argument("--corrupt", choices=("mu", "delta"), help="inject a fault (for testing the checker)")
    p = add("interp", cmd_interp, "quotient dimensions of an interpolation expression")
    p.add_argument("--max-n", type=int)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if (args.expr is None) == (args.expr_pos is None):
        ap.error("give the expression exactly once, positionally or with --expr")
    args.expr = args.expr or args.expr_pos
    try:
        return args.fn(args)
    except (ParseError, DomainError, HypothesisError, CapabilityError, UsageError, KeyError) as e:
        payload = {"error": type(e).__name__, "message": str(e)}
        if isinstance(e, ParseError):
            payload.update({k: v for k, v in (("offset", e.offset), ("path", e.path)) if v is not None})
        if isinstance(e, HypothesisError):
            payload["hypothesis"] = e.hypothesis
        if getattr(args, "json", False):
            print(dumps(payload))
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
