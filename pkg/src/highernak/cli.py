"""Command-line interface: ``highernak <command> [options]``.

Every command prints one JSON document (or DOT with ``--dot`` where a graph
is available).  Exit codes: 0 success, 1 computation error or failed suite,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from . import bridge as br
from . import cycpoly as cp
from . import exactla as la
from . import homcalc as hc
from . import suite
from . import tilting as tl
from .algebra import build
from .oset import Kind, KupischError, KupischSeries, enumerate_objects, parse_tuple, validate_kupisch


class UsageError(ValueError):
    pass


def _jsonable(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {(k if isinstance(k, str) else json.dumps(_jsonable(k))): _jsonable(x) for k, x in v.items()}
    if hasattr(v, "item") and not isinstance(v, (str, bytes)):
        return v.item()
    return v


# ---------------------------------------------------------------------------
# argument helpers


def _kupisch(args):
    try:
        entries = [int(t) for t in args.kupisch.split(",") if t.strip()]
    except ValueError as e:
        raise UsageError(f"bad Kupisch series {args.kupisch!r}") from e
    kind = Kind(args.kind)
    bad = validate_kupisch(kind, entries)
    if bad is not None:
        raise UsageError(f"inadmissible Kupisch series: {bad}")
    return KupischSeries(kind, tuple(entries))


def _algebra(args):
    return build(args.d, _kupisch(args), args.prime)


def _module(A, spec):
    """``simple:LABEL``, ``projective:LABEL``, ``injective:LABEL`` or ``interval:LABEL``."""
    kind, _, label = spec.partition(":")
    if not label:
        raise UsageError(f"module spec {spec!r} must look like kind:label")
    lab = parse_tuple(label)
    try:
        if kind == "interval":
            return hc.interval_module(A, lab)
        make = {"simple": hc.simple, "projective": hc.projective, "injective": hc.injective}[kind]
        return make(A, lab)
    except KeyError as e:
        raise UsageError(f"unknown module {spec!r}") from e


def _add_algebra(p):
    p.add_argument("--kind", choices=[k.value for k in Kind], default="A")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kupisch", required=True, help="comma-separated entries")


def _labels(A, xs):
    return [A.label(x) for x in xs]


# ---------------------------------------------------------------------------
# commands


def cmd_objects(args):
    s = _kupisch(args)
    length = args.length or args.d
    objs = enumerate_objects(length, s)
    return {"kupisch": s.to_json(), "length": length, "count": len(objs), "objects": objs}


def cmd_algebra(args):
    A = _algebra(args)
    if args.dot:
        return A.to_dot()
    return A.to_json()


def cmd_resolve(args):
    A = _algebra(args)
    M = _module(A, args.module)
    pd = hc.projdim(M)
    res = hc.min_proj_resolution(M, args.max_degree)
    out = {"module": args.module, "projdim": pd, "terms": res.to_json(A.label), "complete": res.complete}
    if res.periodic:
        out["period"] = res.periodic[0]
    if args.verify:
        out["problems"] = [list(map(str, pr)) for pr in hc.verify_resolution(res)]
    return out


def cmd_ext(args):
    A = _algebra(args)
    M, N = _module(A, args.source), _module(A, args.target)
    return {"degree": args.degree, "ext": hc.ext_dim(M, N, args.degree)}


def cmd_gldim(args):
    A = _algebra(args)
    g, at = hc.gldim_report(A)
    return {"gldim": g, "attained_at": _labels(A, at)}


def cmd_domdim(args):
    A = _algebra(args)
    return {"domdim": hc.domdim(A)}


def cmd_tau(args):
    A = _algebra(args)
    M = _module(A, args.module)
    if args.higher:
        T = hc.tau_d(M, A.d)
        projective = None
    else:
        T, projective = hc.tau(M)
    return {
        "module": args.module,
        "translate": "tau_d" if args.higher else "tau",
        "dims": {json.dumps(_jsonable(A.label(x))): v for x, v in enumerate(T.dims) if v},
        "zero": T.is_zero(),
        "projective_input": projective,
    }


def cmd_ct_verify(args):
    A = _algebra(args)
    C = tl.canonical_ct_candidate(A, A.d)
    out = tl.verify_cluster_tilting(A, C, A.d)
    out["members"] = len(C)
    return out


def cmd_ext_quiver(args):
    A = _algebra(args)
    q = tl.ext_d_quiver(A, tl.canonical_ct_candidate(A, A.d), A.d)
    return q.to_dot() if args.dot else q.to_json()


def cmd_tilting(args):
    A = _algebra(args)
    ctx = tl.tilting_context(A, A.d)
    ts = tl.tilting_enumerate(A, A.d, ctx)
    out = {"count": len(ts)}
    if not args.count:
        out["tilting"] = [[ctx.collection.labels[i] for i in t] for t in ts]
    return out


def cmd_polytope(args):
    if args.action == "facets":
        return {"facets": [{"vertices": S, "side": k} for S, k in cp.facets(args.p, args.delta or 2 * args.d)]}
    if args.action == "simplices":
        pick = {"nonlower": cp.nonlower_simplices, "upper": cp.upper_simplices, "internal": cp.internal_simplices}
        xs = pick[args.which](args.p, args.d)
        return {"which": args.which, "count": len(xs), "simplices": xs}
    if args.action == "triangulations":
        ts = cp.triangulations(args.p, args.d, args.bound)
        if args.count:
            return {"count": len(ts)}
        return {"count": len(ts), "triangulations": [t.to_json() for t in ts]}
    ts, edges = cp.flip_graph(args.p, args.d, args.bound)
    if args.dot:
        return cp.flip_graph_dot(args.p, args.d)
    return {
        "triangulations": [t.to_json() for t in ts],
        "edges": [{"from": i, "to": j, "removed": a, "added": b} for i, j, a, b in edges],
        "connected": cp.is_connected(len(ts), edges),
    }


def cmd_bridge(args):
    if args.action == "dict":
        return {"n": args.n, "d": args.d, "dictionary": br.dictionary(args.n, args.d).to_json()}
    ec = br.ext_compatibility_check(args.n, args.d, args.prime)
    fm = br.flip_vs_mutation_check(args.n, args.d, args.prime)
    ec.pop("ext_dims")
    return {"ext_compatibility": ec, "flip_vs_mutation": fm, "ok": ec["ok"] and fm["ok"]}


def cmd_cluster_model(args):
    cm = br.cluster_model(args.n, args.d)
    if args.dot:
        lines = ["graph mutations {"] + [f"  {i} -- {j};" for i, j in cm["mutation_graph"]] + ["}"]
        return "\n".join(lines)
    cm["counts"] = {"objects": len(cm["objects"]), "cluster_tilting_sets": len(cm["cluster_tilting_sets"])}
    return cm


def cmd_paper_suite(args):
    only = [int(t) for t in args.only.split(",")] if args.only else None
    if only and any(k not in suite.CRITERIA for k in only):
        raise UsageError(f"criteria are numbered 1..{len(suite.CRITERIA)}")
    echo = (lambda line: print(line, file=sys.stderr)) if args.verbose else None
    results = suite.run(args.prime, only, echo)
    report = {"criteria": [o.to_json() for o in results], "passed": all(o.passed for o in results)}
    return report


COMMANDS = {
    "objects": cmd_objects,
    "algebra": cmd_algebra,
    "resolve": cmd_resolve,
    "ext": cmd_ext,
    "gldim": cmd_gldim,
    "domdim": cmd_domdim,
    "tau": cmd_tau,
    "ct-verify": cmd_ct_verify,
    "ext-quiver": cmd_ext_quiver,
    "tilting": cmd_tilting,
    "polytope": cmd_polytope,
    "bridge": cmd_bridge,
    "cluster-model": cmd_cluster_model,
    "paper-suite": cmd_paper_suite,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser():
    common = _Parser(add_help=False)
    common.add_argument("--prime", type=int, default=None, help="field size (default $HIGHERNAK_PRIME or 101)")
    common.add_argument("--dot", action="store_true", help="DOT output where available")

    ap = _Parser(prog="highernak", description="Higher Nakayama algebras and cyclic polytopes")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("objects", parents=[common])
    _add_algebra(p)
    p.add_argument("--length", type=int, help="tuple length (default d)")

    for name in ("algebra", "gldim", "domdim", "ct-verify", "ext-quiver"):
        _add_algebra(sub.add_parser(name, parents=[common]))

    p = sub.add_parser("resolve", parents=[common])
    _add_algebra(p)
    p.add_argument("--module", required=True, help="simple|projective|injective|interval:LABEL")
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("ext", parents=[common])
    _add_algebra(p)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("tau", parents=[common])
    _add_algebra(p)
    p.add_argument("--module", required=True)
    p.add_argument("--higher", action="store_true", help="apply tau_d instead of tau")

    p = sub.add_parser("tilting", parents=[common])
    _add_algebra(p)
    p.add_argument("--count", action="store_true")

    p = sub.add_parser("polytope", parents=[common])
    p.add_argument("action", choices=["facets", "simplices", "triangulations", "flip"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--delta", type=int, help="dimension for facets (default 2d)")
    p.add_argument("--which", choices=["nonlower", "upper", "internal"], default="nonlower")
    p.add_argument("--count", action="store_true")
    p.add_argument("--bound", type=int, help="override the enumeration bound on p")

    p = sub.add_parser("bridge", parents=[common])
    p.add_argument("action", choices=["check", "dict"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("cluster-model", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("paper-suite", parents=[common])
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--verbose", action="store_true", help="one line per criterion on stderr")
    return ap


def run(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = make_parser().parse_args(argv)
        if args.prime is not None:
            args.prime = la.check_prime(args.prime)
        else:
            args.prime = la.default_prime()
    except (UsageError, la.FieldError) as e:
        print(json.dumps({"error": "usage", "message": str(e)}), file=out)
        return 2
    try:
        result = COMMANDS[args.command](args)
    except UsageError as e:
        print(json.dumps({"error": "usage", "message": str(e)}), file=out)
        return 2
    except (KupischError, ValueError, ArithmeticError, RuntimeError, OverflowError, KeyError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=out)
        return 1
    if isinstance(result, str):
        print(result, file=out)
        return 0
    report = {"command": args.command, "version": __version__, "prime": args.prime, **_jsonable(result)}
    print(json.dumps(report, sort_keys=False), file=out)
    if args.command == "paper-suite" and not result["passed"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
