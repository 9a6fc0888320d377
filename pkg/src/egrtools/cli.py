"""Command-line front end: construct, verify, bounds, report.

Exit codes: 0 success (or verified egr), 1 verified-not-egr, 2 usage or
input error, 3 internal inconsistency (a construction failed its own
verification).  Reports are JSON with a frozen field layout
(schema_version 1); rationals are emitted as {num, den, decimal}, never
as bare floats.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .bounds import bound_report, certify_extremal
from .constructions import (
    FAMILIES,
    build_biaffine,
    build_gq_truncation,
    build_ovoid_spread,
    build_pencil_graph,
    named_graph,
)
from .galois import GF, is_prime
from .graph_core import (
    Graph,
    Graph6Error,
    NotEdgeGirthRegular,
    graph6_decode,
    graph6_encode,
    verify_egr,
)
from .spectral import certify_tight_spectrum, eigenvalues, walk_moments

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_NOT_EGR = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _field_for(q: int):
    for p in range(2, q + 1):
        if is_prime(p):
            e = 0
            qq = 1
            while qq < q:
                qq *= p
                e += 1
            if qq == q:
                return GF(p, e)
    raise UsageError(f"q = {q} is not a prime power")


def build_family(family: str, q: int | None = None, name: str | None = None) -> Graph:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "named":
        if name is None:
            raise UsageError("--name is required for the named family")
        try:
            return named_graph(name)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if q is None:
        raise UsageError(f"--q is required for family {family}")
    F = _field_for(q)
    builder = {
        "biaffine1": lambda f: build_biaffine(f, 1),
        "biaffine2": lambda f: build_biaffine(f, 2),
        "gq_truncation": build_gq_truncation,
        "ovoid_spread": build_ovoid_spread,
        "pencil": build_pencil_graph,
    }[family]
    try:
        return builder(F)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _rat_json(value) -> dict:
    fr = Fraction(value)
    return {"num": fr.numerator, "den": fr.denominator, "decimal": f"{float(fr):.6f}"}


def _signature_json(sig) -> dict:
    return {"n": sig.n, "k": sig.k, "g": sig.g, "lambda": sig.lam, "bipartite": sig.bipartite}


def _bounds_json(rep) -> dict:
    return {
        "k": rep.k,
        "g": rep.g,
        "lambda": rep.lam,
        "bipartite": rep.bipartite,
        "moore": rep.moore,
        "dfjr": rep.dfjr,
        "spectral_even": _rat_json(rep.spectral_even) if rep.spectral_even is not None else None,
        "spectral_odd": _rat_json(rep.spectral_odd) if rep.spectral_odd is not None else None,
        "vertex_cycle_cap": _rat_json(rep.vertex_cap) if rep.vertex_cap is not None else None,
        "contributions": dict(sorted(rep.contributions.items())),
        "best": rep.best,
        "notes": list(rep.notes),
    }


def _labels_json(G: Graph):
    if G.labels is None:
        return None

    def clean(x):
        if isinstance(x, tuple):
            return [clean(y) for y in x]
        return x

    return [clean(lbl) for lbl in G.labels]


def _report_skeleton(argv) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "egrtools", "version": __version__},
        "command": list(argv),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _emit(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_construct(args, argv) -> int:
    G = build_family(args.family, args.q, args.name)
    try:
        sig = verify_egr(G)
    except NotEdgeGirthRegular as exc:
        print(f"internal error: construction failed verification: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "graph6":
        payload = graph6_encode(G)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
    else:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "family": args.family,
            "q": args.q,
            "name": args.name,
            "signature": _signature_json(sig),
            "adjacency": G.adj,
            "labels": _labels_json(G),
        }
        payload = json.dumps(doc, indent=2, sort_keys=True)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
    summary = {"signature": _signature_json(sig)}
    if not args.out:
        summary["graph"] = payload if args.format == "graph6" else json.loads(payload)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_OK


def _verify_one(text: str) -> tuple[int, dict]:
    G = graph6_decode(text)
    try:
        sig = verify_egr(G)
    except NotEdgeGirthRegular as exc:
        return EXIT_NOT_EGR, {
            "egr": False,
            "failure": {"kind": exc.kind, "witness": repr(exc.witness), "message": str(exc)},
        }
    return EXIT_OK, {"egr": True, "signature": _signature_json(sig)}


def cmd_verify(args, argv) -> int:
    doc = _report_skeleton(argv)
    if args.stdin_g6_stream:
        worst = EXIT_OK
        for lineno, line in enumerate(sys.stdin, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                code, result = _verify_one(line)
            except Graph6Error as exc:
                print(json.dumps({"line": lineno, "error": str(exc)}, sort_keys=True))
                return EXIT_USAGE
            result["line"] = lineno
            print(json.dumps(result, sort_keys=True))
            worst = max(worst, code)
        return worst
    try:
        with open(args.path) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        code, result = _verify_one(text)
    except Graph6Error as exc:
        print(f"malformed graph6 input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc.update(result)
    doc["input"] = args.path
    _emit(doc, args.out)
    return code


def cmd_bounds(args, argv) -> int:
    try:
        rep = bound_report(args.k, args.g, args.lam, args.bipartite)
    except ValueError as exc:
        print(f"invalid triple: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = _report_skeleton(argv)
    doc["bounds"] = _bounds_json(rep)
    _emit(doc, args.out)
    return EXIT_OK


def cmd_report(args, argv) -> int:
    timing: dict[str, float] = {}
    doc = _report_skeleton(argv)
    doc["family"] = args.family
    doc["q"] = args.q
    doc["name"] = args.name

    t0 = time.perf_counter()
    G = build_family(args.family, args.q, args.name)
    timing["construct"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    try:
        sig = verify_egr(G)
    except NotEdgeGirthRegular as exc:
        print(f"internal error: construction failed verification: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    timing["verify"] = time.perf_counter() - t0
    doc["signature"] = _signature_json(sig)
    doc["graph6"] = graph6_encode(G)

    t0 = time.perf_counter()
    moments = walk_moments(G, min(sig.g + 1, 16))
    spec = eigenvalues(G)
    timing["spectrum"] = time.perf_counter() - t0
    doc["moments"] = moments
    doc["spectrum"] = {
        "min": round(spec.smallest, 9),
        "max": round(spec.largest, 9),
        "multiplicities": [[round(v, 9), m] for v, m in spec.groups],
    }
    tight = certify_tight_spectrum(G, sig)
    doc["tight_spectrum"] = {"certified": tight.certified, "reason": tight.reason}

    t0 = time.perf_counter()
    verdict = certify_extremal(sig)
    timing["bounds"] = time.perf_counter() - t0
    doc["bounds"] = _bounds_json(verdict.report)
    doc["extremal"] = {
        "certified": verdict.certified,
        "gap": verdict.gap,
        "tight_bounds": list(verdict.tight_bounds),
        "statement": verdict.statement,
    }
    doc["timing"] = {k: round(v, 6) for k, v in timing.items()}
    _emit(doc, args.out)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="egrtools",
        description="Construct, verify, and certify edge-girth-regular graphs.",
    )
    top.add_argument("--version", action="version", version=f"egrtools {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build a graph family and print its signature")
    pc.add_argument("--family", required=True)
    pc.add_argument("--q", type=int)
    pc.add_argument("--name")
    pc.add_argument("--format", choices=("graph6", "json"), default="graph6")
    pc.add_argument("--out")
    pc.set_defaults(fn=cmd_construct)

    pv = sub.add_parser("verify", help="verify a graph6 file for edge-girth-regularity")
    pv.add_argument("path", nargs="?")
    pv.add_argument("--stdin-g6-stream", action="store_true", help="verify one graph6 string per stdin line")
    pv.add_argument("--out")
    pv.set_defaults(fn=cmd_verify)

    pb = sub.add_parser("bounds", help="lower-bound report for a (k, g, lambda) triple")
    pb.add_argument("-k", type=int, required=True)
    pb.add_argument("-g", type=int, required=True)
    pb.add_argument("-l", "--lam", type=int, required=True, dest="lam")
    pb.add_argument("--bipartite", action="store_true")
    pb.add_argument("--out")
    pb.set_defaults(fn=cmd_bounds)

    pr = sub.add_parser("report", help="end-to-end construct/verify/spectrum/bounds report")
    pr.add_argument("--family", required=True)
    pr.add_argument("--q", type=int)
    pr.add_argument("--name")
    pr.add_argument("--out")
    pr.set_defaults(fn=cmd_report)
    return top


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if args.command == "verify" and not args.stdin_g6_stream and not args.path:
        print("verify needs a path or --stdin-g6-stream", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args, ["egrtools"] + argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
