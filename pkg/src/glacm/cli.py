"""Command-line front end: construct, enumerate, verify, render.

Output is canonical JSON (sorted keys, sorted members), so identical
invocations are byte-identical.  Exit codes: 0 success, 1 verification or
invariant failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .bundles import Ext2
from .classify import ClusterSubcat, MembershipError, classify, exhaustive_search
from .endo import ar_window, emit_quiver
from .lattice import Lattice
from .sweep import enumerate_forms
from .tilting import (AssemblyError, Collection, TiltingForm, UpsetCapExceeded,
                      assemble, build_H, is_upset)
from .verify import run_checks

OK, FAILED, INVALID = 0, 1, 2


def _dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _parse_degree_spec(lat: Lattice, item):
    if isinstance(item, str):
        return lat.parse(item)
    return lat.from_json(item)


def _extension_subcat(p: int, form: TiltingForm) -> ClusterSubcat:
    """Extend the chain to a full hereditary base, constant beyond the ends."""
    k_seq = []
    for n in range(p - 1):
        if n < form.i:
            k_seq.append(form.k[0])
        elif n > form.j:
            k_seq.append(form.k[-1])
        else:
            k_seq.append(form.k[n - form.i])
    return ClusterSubcat.standard(p, tuple(k_seq))


def cmd_construct(args) -> int:
    lat = Lattice(args.p)
    try:
        k_seq = tuple(int(v) for v in args.k.split(","))
        upset_raw = json.loads(args.upset) if args.upset else []
        upset = frozenset(_parse_degree_spec(lat, item) for item in upset_raw)
        form = TiltingForm(args.i, args.j, k_seq, args.g, args.h, upset)
        form.validate_shape(lat.p)
        h_set = build_H(lat, form.i, form.j, form.k[0], form.k[-1], form.g, form.h)
        if not set(form.upset) <= set(h_set) or not is_upset(lat, h_set, form.upset):
            raise AssemblyError("upset is not an up-closed subset of H")
    except (ValueError, KeyError) as err:
        print(f"invalid descriptor: {err}", file=sys.stderr)
        return INVALID
    try:
        coll = assemble(lat, form)
    except AssemblyError as err:
        print(f"assembly failed: {err}", file=sys.stderr)
        return FAILED
    verdict = classify(lat, coll, _extension_subcat(args.p, form))
    doc = {
        "p": args.p,
        "form": form.to_json(),
        "cardinality": len(coll),
        "collection": coll.to_json(lat),
        "verdict": verdict.to_json(lat),
    }
    print(_dumps(doc))
    return OK


def cmd_enumerate(args) -> int:
    if args.p > args.cap:
        print(f"weight {args.p} above the cap {args.cap}", file=sys.stderr)
        return INVALID
    lat = Lattice(args.p)
    out = sys.stdout
    if args.exhaustive:
        base = tuple(int(v) for v in args.base_k.split(",")) if args.base_k else None
        try:
            sub = ClusterSubcat.standard(args.p, base)
        except ValueError as err:
            print(f"invalid base: {err}", file=sys.stderr)
            return INVALID
        histogram: dict[str, int] = {}
        for coll, verdict in exhaustive_search(lat, sub, cap=args.cap):
            histogram[verdict.kind] = histogram.get(verdict.kind, 0) + 1
            out.write(_dumps({"collection": coll.to_json(lat),
                              "verdict": verdict.to_json(lat)}) + "\n")
        out.write(_dumps({"histogram": histogram}) + "\n")
        return OK
    try:
        for form in enumerate_forms(lat, max_upsets=args.max_upsets):
            coll = assemble(lat, form)
            verdict = classify(lat, coll, _extension_subcat(args.p, form))
            out.write(_dumps({"form": form.to_json(),
                              "cardinality": len(coll),
                              "verdict": verdict.to_json(lat)}) + "\n")
    except UpsetCapExceeded as err:
        print(f"upset enumeration capped: {err}; raise --max-upsets",
              file=sys.stderr)
        return INVALID
    return OK


def cmd_verify(args) -> int:
    opts = {"p": args.p, "corrupt": args.corrupt}
    results = run_checks([args.suite], opts)
    if not results:
        print(f"no checks in suite {args.suite!r}", file=sys.stderr)
        return INVALID
    failed = 0
    for check, ok, detail in results:
        tag = "PASS" if ok else "FAIL"
        if not ok:
            failed += 1
        print(f"{tag}  {check.ident:<28} {detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed"
          + (f" ({failed} failed)" if failed else ""))
    return FAILED if failed else OK


def cmd_render(args) -> int:
    lat = Lattice(args.p) if args.target == "ar" else None
    if args.target == "ar":
        try:
            lo, hi = (int(v) for v in args.window.split(".."))
        except ValueError:
            print(f"bad window {args.window!r}, expected like -5..5", file=sys.stderr)
            return INVALID
        graph = ar_window(lat, lo, hi)
    else:
        try:
            with open(args.input) as handle:
                data = json.load(handle)
            lat = Lattice(args.p)
            coll = Collection.from_json(lat, data if isinstance(data, list)
                                        else data["collection"])
            graph = emit_quiver(lat, coll)
        except (OSError, ValueError, KeyError) as err:
            print(f"cannot render: {err}", file=sys.stderr)
            return INVALID
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    elif args.format == "tikz":
        sys.stdout.write(graph.to_tikz())
    else:
        for (a, b), mult in sorted(graph.arrows.items()):
            sys.stdout.write(f"{graph.vertices[a]} -> {graph.vertices[b]}"
                             + (f" x{mult}" if mult > 1 else "") + "\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glacm",
        description="ACM and tilting-bundle combinatorics for weight type (2,2,2,p)")
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="assemble a descriptor into a collection")
    con.add_argument("--p", type=int, required=True)
    con.add_argument("--i", type=int, required=True)
    con.add_argument("--j", type=int, required=True)
    con.add_argument("--k", required=True, help="comma-separated offsets k_i..k_j")
    con.add_argument("--g", default="e", choices=("e", "g12", "g13", "g23"))
    con.add_argument("--h", default="g12", choices=("e", "g12", "g13", "g23"))
    con.add_argument("--upset", default="[]",
                     help='JSON list of degrees, e.g. \'["x13bar-4x4"]\'')
    con.set_defaults(fn=cmd_construct)

    enu = sub.add_parser("enumerate", help="stream normalized descriptors or search")
    enu.add_argument("--p", type=int, required=True)
    enu.add_argument("--cap", type=int, default=6)
    enu.add_argument("--max-upsets", type=int, default=4096)
    enu.add_argument("--exhaustive", action="store_true")
    enu.add_argument("--base-k", default=None,
                     help="offsets of the ambient chain, e.g. 0,0,0")
    enu.set_defaults(fn=cmd_enumerate)

    ver = sub.add_parser("verify", help="run the named verification checks")
    ver.add_argument("--suite", default="all",
                     choices=("figures", "tables", "oracles", "all"))
    ver.add_argument("--p", type=int, default=6,
                     help="largest weight for the oracle sweeps")
    ver.add_argument("--corrupt", action="store_true",
                     help="flip one fixture entry; the run must then fail")
    ver.set_defaults(fn=cmd_verify)

    ren = sub.add_parser("render", help="emit DOT or TikZ quivers")
    ren.add_argument("target", choices=("ar", "endo"))
    ren.add_argument("--p", type=int, required=True)
    ren.add_argument("--window", default="-3..3", help="offset range like -5..5")
    ren.add_argument("--input", help="collection JSON file (endo target)")
    ren.add_argument("--format", default="dot", choices=("dot", "tikz", "text"))
    ren.set_defaults(fn=cmd_render)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fixed: list[str] = []
    skip = False
    for idx, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--window" and idx + 1 < len(argv):
            fixed.append(f"--window={argv[idx + 1]}")  # values may start with -
            skip = True
        else:
            fixed.append(tok)
    args = build_parser().parse_args(fixed)
    if args.command == "render" and args.target == "endo" and not args.input:
        print("render endo needs --input", file=sys.stderr)
        return INVALID
    try:
        return args.fn(args)
    except MembershipError as err:
        print(f"out of scope: {err}", file=sys.stderr)
        return FAILED
    except BrokenPipeError:
        return OK


if __name__ == "__main__":
    sys.exit(main())
