"""Command-line front end.

Subcommands:

  indices FILE      all six descriptors of a graph, both computation routes
  hosoya FILE       Hosoya polynomial
  edge-hosoya FILE  edge-Hosoya polynomial (line-graph or tree-identity route)
  linegraph FILE    line graph as an edge list, with the vertex label map
  dendrimer         regular dendrimer: its edges or closed-form descriptors
  verify            random-tree identity verification report

FILE may be `-` for standard input. Exit status is 0 on success, 1 when an
identity verification fails, 2 on parse or validation errors.
"""

import argparse
import json
import sys

from .dendrimers import (
    DendrimerParams,
    dendrimer_edge_hosoya,
    dendrimer_edge_hyper_wiener,
    dendrimer_edge_wiener,
    generate_dendrimer,
)
from .errors import HosoyaError
from .graphs import format_edge_list, line_graph, parse_edge_list
from .indices import (
    edge_hosoya_polynomial,
    hosoya_polynomial,
    index_identity_discrepancies,
    index_report,
)
from .polynomials import format_coefficients, format_pretty
from .trees import Tree, edge_hosoya_from_hosoya, verify_identities

_JSON_SEPARATORS = (",", ":")


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path):
    return parse_edge_list(_read_input(path))


def _poly_payload(p):
    return {"coeffs": [str(c) for c in p.coeffs]}


def _dump(payload):
    print(json.dumps(payload, separators=_JSON_SEPARATORS))


def _emit_polynomial(p, fmt):
    if fmt == "json":
        _dump(_poly_payload(p))
    else:
        print(format_coefficients(p))
        print(format_pretty(p, mul="*"))


def _cmd_hosoya(args):
    _emit_polynomial(hosoya_polynomial(_load_graph(args.file)), args.format)
    return 0


def _cmd_edge_hosoya(args):
    g = _load_graph(args.file)
    if args.route == "tree-identity":
        Tree(g)  # raises NotATreeError outside the tree domain
        p = edge_hosoya_from_hosoya(hosoya_polynomial(g), g.n)
    else:
        p = edge_hosoya_polynomial(g)
    _emit_polynomial(p, args.format)
    return 0


def _cmd_indices(args):
    g = _load_graph(args.file)
    report = index_report(g)
    pairs = [
        ("wiener", report.wiener),
        ("edge_wiener", report.edge_wiener),
        ("hyper_wiener", report.hyper_wiener),
        ("edge_hyper_wiener", report.edge_hyper_wiener),
    ]
    if args.format == "json":
        payload = {"n": g.n, "m": g.m}
        payload.update((name, str(value)) for name, value in pairs)
        payload["hosoya"] = _poly_payload(report.hosoya)
        payload["edge_hosoya"] = _poly_payload(report.edge_hosoya)
        _dump(payload)
    else:
        print(f"n = {g.n}")
        print(f"m = {g.m}")
        for name, value in pairs:
            print(f"{name} = {value}")
        print(f"hosoya = {format_pretty(report.hosoya, mul='*')}")
        print(f"edge_hosoya = {format_pretty(report.edge_hosoya, mul='*')}")
    discrepancies = index_identity_discrepancies(report)
    for message in discrepancies:
        print(f"discrepancy: {message}", file=sys.stderr)
    return 1 if discrepancies else 0


def _cmd_linegraph(args):
    g = _load_graph(args.file)
    lg, edge_map = line_graph(g)
    if args.format == "json":
        _dump(
            {
                "vertices": {
                    label: [str(u), str(v)]
                    for label, (u, v) in zip(lg.labels, edge_map)
                },
                "edges": [
                    [lg.labels[u], lg.labels[v]] for u, v in lg.edges()
                ],
            }
        )
    else:
        for label, (u, v) in zip(lg.labels, edge_map):
            print(f"# {label} = {u} {v}")
        sys.stdout.write(format_edge_list(lg))
    return 0


def _check_dendrimer(params):
    """Brute-force cross-check; returns discrepancy messages."""
    g = generate_dendrimer(params).graph
    report = index_report(g)
    checks = [
        ("n", params.vertex_count, g.n),
        ("edge_hosoya", dendrimer_edge_hosoya(params), report.edge_hosoya),
        ("edge_wiener", dendrimer_edge_wiener(params), report.edge_wiener),
        (
            "edge_hyper_wiener",
            dendrimer_edge_hyper_wiener(params),
            report.edge_hyper_wiener,
        ),
    ]
    return [
        f"{name}: closed form {closed} != brute force {brute}"
        for name, closed, brute in checks
        if closed != brute
    ]


def _cmd_dendrimer(args):
    if args.k < 0:
        raise ValueError("--k must be at least 0")
    if args.d < 3:
        raise ValueError("--d must be at least 3 (d = 2 is a path)")
    params = DendrimerParams(generations=args.k, degree=args.d)
    if args.check:
        problems = _check_dendrimer(params)
        if problems:
            for message in problems:
                print(f"check failed: {message}", file=sys.stderr)
            return 1
        print(
            f"check: closed forms match brute force (n={params.vertex_count})",
            file=sys.stderr,
        )
    if args.emit == "edges":
        g = generate_dendrimer(params).graph
        if args.format == "json":
            _dump(
                {
                    "n": g.n,
                    "edges": [
                        [str(g.labels[u]), str(g.labels[v])]
                        for u, v in g.edges()
                    ],
                }
            )
        else:
            sys.stdout.write(format_edge_list(g))
    elif args.emit == "polynomial":
        _emit_polynomial(dendrimer_edge_hosoya(params), args.format)
    else:
        n = params.vertex_count
        values = [
            ("edge_wiener", dendrimer_edge_wiener(params)),
            ("edge_hyper_wiener", dendrimer_edge_hyper_wiener(params)),
        ]
        p = dendrimer_edge_hosoya(params)
        if args.format == "json":
            payload = {"n": n, "m": n - 1}
            payload.update((name, str(value)) for name, value in values)
            payload["edge_hosoya"] = _poly_payload(p)
            _dump(payload)
        else:
            print(f"n = {n}")
            print(f"m = {n - 1}")
            for name, value in values:
                print(f"{name} = {value}")
            print(f"edge_hosoya = {format_pretty(p, mul='*')}")
    return 0


def _cmd_verify(args):
    if args.nmax < 1:
        raise ValueError("--nmax must be at least 1")
    if args.trials < 1:
        raise ValueError("--trials must be at least 1")
    if args.seed < 0:
        raise ValueError("--seed must be non-negative")
    report = verify_identities(args.nmax, args.trials, args.seed)
    print(report.to_json())
    return 0 if report.ok() else 1


def _add_format_flag(sub):
    sub.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hosoya",
        description="Distance polynomials and Wiener-type indices of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indices", help="all descriptors of an edge-list file")
    p.add_argument("file", help="edge-list file, or - for stdin")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_indices)

    p = sub.add_parser("hosoya", help="Hosoya polynomial of an edge-list file")
    p.add_argument("file", help="edge-list file, or - for stdin")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_hosoya)

    p = sub.add_parser(
        "edge-hosoya", help="edge-Hosoya polynomial of an edge-list file"
    )
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument(
        "--route",
        choices=("line-graph", "tree-identity"),
        default="line-graph",
        help="computation route; tree-identity requires a tree input",
    )
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_edge_hosoya)

    p = sub.add_parser("linegraph", help="line graph of an edge-list file")
    p.add_argument("file", help="edge-list file, or - for stdin")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_linegraph)

    p = sub.add_parser(
        "dendrimer", help="regular dendrimer tree and closed-form descriptors"
    )
    p.add_argument("--k", type=int, required=True, help="generations, k >= 0")
    p.add_argument("--d", type=int, required=True, help="degree, d >= 3")
    p.add_argument(
        "--emit",
        choices=("edges", "polynomial", "indices"),
        default="edges",
        help="what to print (default: edges)",
    )
    p.add_argument(
        "--check",
        action="store_true",
        help="cross-check closed forms against brute force before emitting",
    )
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_dendrimer)

    p = sub.add_parser(
        "verify", help="verify tree identities on random trees, emit JSON"
    )
    p.add_argument("--nmax", type=int, required=True, help="largest tree size")
    p.add_argument("--trials", type=int, required=True, help="number of trees")
    p.add_argument("--seed", type=int, required=True, help="master RNG seed")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (HosoyaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
