"""Command-line front end.

    knotpos invariants --format dt "[4, 8, 22, ...]"
    knotpos classify "PD[X[1,4,2,5], ...]"
    knotpos obstruct --format dt --file knot.dt
    knotpos generate pretzel -2 -2 -2 > p222.pd
    knotpos verify-claims K15a --w-max 3
    knotpos bracket-trace "PD[...]"

Diagram input is a positional code, ``--file PATH`` or ``-`` for stdin.
Reports are JSON (sorted keys, stable across runs) unless ``--output text``.
Exit status: 0 when the analysis ran, 1 for invalid input or exceeded
limits, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import generators as gen
from .diagram import Diagram, DiagramError, parse_diagram_json, parse_pd
from .dt import MIRROR_POLICIES, realize_dt
from .fixtures import REFERENCE_KNOTS
from .obstruction import SCHEMA_VERSION, analyze, family_diagram, verify_family_claims
from .skein import skein_limit_default
from .stategraph import build_a_state_graph, classify, reduce_graph
from .statesum import ResourceLimitError, state_limit_default, trace_states


class UsageError(Exception):
    pass


def _read_input(args) -> str:
    sources = [s for s in (args.code, args.file) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one input: a code argument, '-' for stdin, or --file PATH")
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    elif args.code == "-":
        text = sys.stdin.read()
    else:
        text = args.code
    if not text.strip():
        raise UsageError("empty diagram input")
    return text


def load_diagram(text: str, fmt: str, mirror_policy: str) -> Diagram:
    if fmt == "dt":
        return realize_dt(text, mirror_policy)
    if fmt == "json":
        return parse_diagram_json(text)
    if fmt == "pd":
        return parse_pd(text)
    raise UsageError(f"unknown format {fmt!r}")


def _diagram_from(args) -> Diagram:
    return load_diagram(_read_input(args), args.format, args.mirror_policy)


def _emit(obj, args, text_lines=None) -> None:
    if args.output == "json":
        if isinstance(obj, dict):
            obj = {"schema": SCHEMA_VERSION, **obj}
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        lines = text_lines if text_lines is not None else _flatten(obj)
        sys.stdout.write("\n".join(lines) + "\n")


def _flatten(obj, prefix="") -> list[str]:
    out = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, dict) and "text" in v and "terms" in v:
                out.append(f"{prefix}{k}: {v['text']}")
            elif isinstance(v, dict):
                out.extend(_flatten(v, f"{prefix}{k}."))
            else:
                out.append(f"{prefix}{k}: {json.dumps(v, sort_keys=True)}")
    else:
        out.append(f"{prefix}{obj}")
    return out


# ---- subcommands ---------------------------------------------------------

def cmd_invariants(args) -> int:
    d = _diagram_from(args)
    rep = analyze(d, args.state_limit, args.skein_limit)
    keep = ("diagram", "stats", "adequacy", "jones", "jones_route", "homfly", "conway", "degree_bounds")
    _emit({k: rep[k] for k in keep}, args)
    return 0


def cmd_classify(args) -> int:
    d = _diagram_from(args)
    rg = reduce_graph(build_a_state_graph(d))
    if args.dot:
        sys.stdout.write(rg.to_dot())
        return 0
    _emit({"classification": classify(d).as_dict(), "reduced_graph": rg.to_json_obj(),
           "stats": d.stats().as_dict()}, args)
    return 0


def cmd_obstruct(args) -> int:
    d = _diagram_from(args)
    rep = analyze(d, args.state_limit, args.skein_limit)
    out = {"obstruction": rep["obstruction"], "q": d.q, "stats": rep["stats"],
           "jones": rep["jones"], "conway": rep["conway"]}
    if "positive" in rep:
        out["positive"] = rep["positive"]
    _emit(out, args)
    return 0


def _generated(args) -> Diagram:
    kind, params = args.kind, args.params
    ints = [int(p) for p in params] if kind not in ("reference", "family") else []
    if kind == "torus":
        return gen.torus_2_2p(*ints, orientation=args.orientation) if args.orientation else gen.torus_2_2p(*ints)
    if kind == "torus-knot":
        return gen.torus_2(*ints)
    if kind == "pretzel":
        return gen.pretzel(*ints)
    if kind == "braid":
        return gen.braid_closure(ints)
    if kind == "random":
        seed = ints[0] if ints else 0
        return gen.random_positive(random.Random(seed), max_crossings=args.max_crossings)
    if kind in ("reference", "family"):
        if not params or params[0] not in REFERENCE_KNOTS:
            raise UsageError(f"{kind} needs one of {sorted(REFERENCE_KNOTS)}")
        base = realize_dt(REFERENCE_KNOTS[params[0]].dt, args.mirror_policy)
        if kind == "reference":
            return base
        w = int(params[1]) if len(params) > 1 else 1
        return family_diagram(base, w)
    raise UsageError(f"unknown generator {kind!r}")


def cmd_generate(args) -> int:
    d = _generated(args)
    if args.output == "json":
        text = json.dumps({"schema": SCHEMA_VERSION, **d.to_json_obj()}, sort_keys=True) + "\n"
    else:
        text = d.to_pd() + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify_claims(args) -> int:
    if args.code in REFERENCE_KNOTS and args.file is None:
        base = realize_dt(REFERENCE_KNOTS[args.code].dt, args.mirror_policy)
    else:
        base = _diagram_from(args)
    rep = verify_family_claims(base, args.arc, args.w_max, skein_limit=args.skein_limit)
    lines = [f"w={r.w} c={r.c} minV={r.min_v} maxV={r.max_v} V1={r.second_coeff} "
             f"lead={r.lead_conway} {'ok' if r.ok else 'FAIL'}" for r in rep.rows]
    lines.append("passed" if rep.passed else "failed: " + ", ".join(rep.failures()))
    _emit(rep.as_dict(), args, lines)
    return 0


def cmd_bracket_trace(args) -> int:
    d = _diagram_from(args)
    for row in trace_states(d, args.state_limit):
        sys.stdout.write(row + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knotpos", description="Positivity tests and invariants of link diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("code", nargs="?", help="diagram code, or '-' to read stdin")
            sp.add_argument("--file", help="read the diagram from a file")
            sp.add_argument("--format", choices=("pd", "dt", "json"), default="pd")
        sp.add_argument("--state-limit", type=int, default=None,
                        help=f"max crossings for the state sum (default {state_limit_default()}, env KNOTPOS_STATE_LIMIT)")
        sp.add_argument("--skein-limit", type=int, default=None,
                        help=f"max crossings for skein recursion (default {skein_limit_default()}, env KNOTPOS_SKEIN_LIMIT)")
        sp.add_argument("--mirror-policy", choices=MIRROR_POLICIES,
                        default=os.environ.get("KNOTPOS_MIRROR_POLICY", "fewest_negative"))
        sp.add_argument("--output", choices=("json", "text"), default="json" if needs_input else "text",
                        help="report format; for generate, text means PD")

    sp = sub.add_parser("invariants", help="Jones, HOMFLY and Conway polynomials with diagram statistics")
    common(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("classify", help="A-state graph and Balanced/Burdened classification")
    common(sp)
    sp.add_argument("--dot", action="store_true", help="print the reduced A-state graph in DOT")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("obstruct", help="run the positivity obstruction")
    common(sp)
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("generate", help="write a generated diagram as PD (or JSON)")
    common(sp, needs_input=False)
    sp.add_argument("kind", choices=("torus", "torus-knot", "pretzel", "braid", "random", "reference", "family"))
    sp.add_argument("params", nargs="*")
    sp.add_argument("--orientation", choices=("antiparallel", "parallel"), default=None)
    sp.add_argument("--max-crossings", type=int, default=12)
    sp.add_argument("--out", help="write to this file instead of stdout")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify-claims", help="check the three-crossing-loop family over a base diagram")
    common(sp)
    sp.add_argument("--w-max", type=int, default=3)
    sp.add_argument("--arc", type=int, default=None,
                    help="under-strand arc leaving the negative crossing (default: detected)")
    sp.set_defaults(func=cmd_verify_claims)

    sp = sub.add_parser("bracket-trace", help="CSV of every Kauffman state")
    common(sp)
    sp.set_defaults(func=cmd_bracket_trace)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"knotpos: error: {e}", file=sys.stderr)
        return 2
    except (DiagramError, ResourceLimitError, ValueError, OSError) as e:
        print(f"knotpos: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
