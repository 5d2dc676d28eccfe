"""Command line entry point: ``grundyb <verb> ...``.

Exit status is 0 when the requested check or suite passes, 1 when it fails
and 2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bchromatic, families, graph, grundy, io, recolor, verify
from .coloring import is_b_valid, is_grundy_valid
from .errors import (
    BadParameters, CertificateCheckFailed, ColoringError, GraphError, ParseError,
    PreconditionViolated, SearchLimitExceeded, UnknownSuite,
)

OK, FAILED, USAGE = 0, 1, 2


def _params(items):
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise BadParameters(f"expected key=value, got {item!r}")
        if "," in value:
            out[key] = tuple(int(x) for x in value.split(","))
        else:
            out[key] = int(value)
    return out


def _read_graph(path):
    return io.parse_graph(Path(path).read_text())


def _read_coloring(path, n):
    return io.parse_coloring(Path(path).read_text(), n)


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    params = _params(args.params)
    spec = families.FamilySpec(args.family, params, args.seed)
    G = families.build_family(spec)
    _emit(io.serialize_graph(G, spec), args.output)
    return OK


def cmd_compute(args):
    G = _read_graph(args.file)
    if args.quantity == "grundy":
        k, order = grundy.grundy_number(G, args.limit)
        print(f"grundy {k}")
        if args.certificate:
            Path(args.certificate).write_text(io.serialize_coloring(grundy.first_fit(G, order)))
    elif args.quantity == "b":
        k, C = bchromatic.b_number(G, args.limit)
        print(f"b {k}")
        if args.certificate:
            Path(args.certificate).write_text(io.serialize_coloring(C))
    elif args.quantity == "m":
        print(f"m {bchromatic.m_of(G)}")
    else:
        g = graph.girth(G)
        print(f"girth {'inf' if g == graph.INFINITE else g}")
    return OK


def cmd_check(args):
    G = _read_graph(args.file)
    prop = args.property
    if prop in ("grundy-valid", "b-valid"):
        if not args.coloring:
            raise BadParameters(f"{prop} needs a coloring file")
        C = _read_coloring(args.coloring, G.n)
        verdict = (is_grundy_valid if prop == "grundy-valid" else is_b_valid)(G, C)
    elif prop == "cactus":
        verdict = graph.Verdict(graph.is_cactus(G))
    elif prop == "k4ec4":
        verdict = graph.is_k4e_c4_free(G)
    elif prop == "b-monotone":
        verdict = bchromatic.is_b_monotone(G, args.limit or bchromatic.MONOTONE_LIMIT)
    else:
        report = bchromatic.is_pivoted_tree(G)
        verdict = graph.Verdict(report.is_pivoted, report.pivot)
    line = f"{prop} {'true' if verdict else 'false'}"
    if verdict.witness is not None:
        line += f" witness {verdict.witness}"
    print(line)
    return OK if verdict else FAILED


_RECOLOR = {"cactus": recolor.recolor_cactus, "k4e": recolor.recolor_k4e, "girth6": recolor.recolor_girth6}


def cmd_recolor(args):
    G = _read_graph(args.file)
    C = _read_coloring(args.coloring, G.n)
    cert = _RECOLOR[args.kind](G, C)
    if args.trace:
        sys.stdout.write(cert.trace_text())
    print(f"colors {cert.p}")
    print("kept " + " ".join(map(str, cert.kept)))
    print("coloring " + " ".join(map(str, cert.new_coloring.colors)))
    print("dominating " + " ".join(map(str, cert.dominating)))
    return OK


def cmd_verify(args):
    params = _params(args.params)
    if args.seed is not None:
        params["seed"] = args.seed
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    status = OK
    for name in names:
        own = params
        if args.suite == "all":
            own = {k: v for k, v in params.items() if k in verify.suite_defaults(name)}
        report = verify.run_verification(name, own, args.limit)
        sys.stdout.write(report.to_text())
        if not report.passed:
            status = FAILED
    return status


def cmd_export_dot(args):
    G = _read_graph(args.file)
    C = _read_coloring(args.coloring, G.n) if args.coloring else None
    _emit(io.export_dot(G, C), args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grundyb", description="Grundy and b-chromatic numbers of graphs.")
    parser.add_argument("--limit", type=int, default=None, help="vertex cap for exact searches")
    parser.add_argument("--seed", type=int, default=None, help="seed for random families and suites")
    # accepted after the verb as well
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family member as a graph file")
    p.add_argument("family", choices=families.FAMILY_TAGS)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compute", parents=[common], help="compute an invariant")
    p.add_argument("quantity", choices=("grundy", "b", "m", "girth"))
    p.add_argument("file")
    p.add_argument("--certificate", help="write the optimal coloring here")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", parents=[common], help="test a property")
    p.add_argument("property", choices=("cactus", "b-monotone", "pivoted", "k4ec4", "grundy-valid", "b-valid"))
    p.add_argument("file")
    p.add_argument("coloring", nargs="?")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("recolor", parents=[common], help="turn a Grundy coloring into a b-coloring certificate")
    p.add_argument("kind", choices=tuple(_RECOLOR))
    p.add_argument("file")
    p.add_argument("coloring")
    p.add_argument("--trace", action="store_true", help="print the recoloring trace first")
    p.set_defaults(func=cmd_recolor)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=tuple(verify.SUITES) + ("all",))
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], help="write Graphviz DOT source")
    p.add_argument("file")
    p.add_argument("coloring", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CertificateCheckFailed as exc:
        print(f"error: certificate check failed: {exc}", file=sys.stderr)
        return FAILED
    except (ParseError, GraphError, ColoringError, BadParameters, PreconditionViolated,
            SearchLimitExceeded, UnknownSuite, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
