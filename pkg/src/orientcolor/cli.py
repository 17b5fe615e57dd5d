"""Command-line front end.

Exit status: 0 success (or colorable under --exit-verdict), 1 not colorable
under --exit-verdict or a failed verify, 2 usage/input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import census, criteria, field, poly
from .errors import CapExceeded, GraphFormatError
from .graph import parse_graph


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _tuple(key):
    return "(" + ",".join(map(str, key)) + ")"


def _int_list(text):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--verbose", action="store_true", help="timing on stderr")
    common.add_argument("--max-edges", type=_positive, default=census.DEFAULT_MAX_EDGES)
    common.add_argument("--max-terms", type=_positive, default=poly.DEFAULT_MAX_TERMS)
    common.add_argument("--max-points", type=_positive, default=field.DEFAULT_MAX_POINTS)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
    graph_in.add_argument("--format", choices=("edgelist", "dimacs", "auto"), default="auto")
    graph_in.add_argument("-k", type=_positive, required=True, help="number of colors")
    graph_in.add_argument("--workers", type=_positive, default=1)

    parser = _Parser(prog="orientcolor",
                     description="k-colorability via orientation classes modulo k")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common, graph_in], help="verdict and l-profile")
    p.add_argument("-l", type=_int_list, default=list(criteria.DEFAULT_LS), help="l values, e.g. 2,3,5")
    p.add_argument("--exit-verdict", action="store_true")
    sub.add_parser("classes", parents=[common, graph_in], help="orientation class table")
    sub.add_parser("poly", parents=[common, graph_in], help="reduced characteristic polynomial")
    p = sub.add_parser("oracle", parents=[common, graph_in], help="backtracking coloring")
    p.add_argument("--count", action="store_true", help="also count all proper colorings")
    p.add_argument("--exit-verdict", action="store_true")
    sub.add_parser("verify", parents=[common, graph_in], help="cross-check both engines and the oracle")
    p = sub.add_parser("field", parents=[common], help="inspect GF(p^t) and its color set")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-t", type=_positive, default=1)
    p.add_argument("-k", type=_positive, default=None)
    return parser


def _read_graph(args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text, args.format)


def _cmd_analyze(args, g):
    verdict = criteria.decide_colorable(g, args.k, args.max_edges, args.max_terms, args.workers)
    parity = None
    if verdict.engine == "census":
        table = census.build_class_table(g, args.k, args.max_edges, args.workers)
        profile = criteria.necessary_profile(table, args.l)
        if args.k % 2:
            parity = criteria.odd_k_parity(table)
    else:
        reduced = poly.reduced_graph_polynomial(g, args.k, args.max_terms)
        profile = criteria.profile_from_coefficients(reduced.terms, args.k, args.l)
    if args.json:
        out = {"n": g.n, "m": g.m, "k": args.k, "verdict": verdict.to_dict(),
               "profile": profile.to_dict(), "odd_k_parity": parity}
        print(json.dumps(out, indent=2))
    else:
        print(f"graph: n={g.n} m={g.m} k={args.k}")
        print(f"colorable: {'yes' if verdict.colorable else 'no'}")
        print(f"engine: {verdict.engine}")
        w = verdict.witness
        if w is not None:
            extra = "" if w.agree is None else f" agree {w.agree} disagree {w.disagree}"
            print(f"witness: class {_tuple(w.residues)} coefficient {w.coefficient}{extra}")
        print("profile:")
        for r in profile.rows:
            line = (f"  l={r.l} coprime={'yes' if r.coprime_to_k else 'no'} "
                    f"satisfied={'yes' if r.satisfied else 'no'}")
            if r.witness is not None:
                line += f" witness {_tuple(r.witness)}"
            print(line)
        if parity is not None:
            print(f"odd-k parity: {'odd class found' if parity else 'all classes even'}")
    if args.exit_verdict:
        return 0 if verdict.colorable else 1
    return 0


def _cmd_classes(args, g):
    table = census.build_class_table(g, args.k, args.max_edges, args.workers)
    print(table.to_json() if args.json else table.to_text())
    return 0


def _cmd_poly(args, g):
    reduced = poly.reduced_graph_polynomial(g, args.k, args.max_terms)
    if args.json:
        print(json.dumps({"n": g.n, "k": args.k, "terms": reduced.to_records()}, indent=2))
    else:
        print(reduced.to_text())
    return 0


def _cmd_oracle(args, g):
    coloring = criteria.find_coloring(g, args.k)
    count = criteria.count_colorings(g, args.k) if args.count else None
    if args.json:
        out = {"k": args.k, "colorable": coloring is not None,
               "coloring": [c + 1 for c in coloring] if coloring is not None else None}
        if count is not None:
            out["count"] = count
        print(json.dumps(out, indent=2))
    else:
        if coloring is None:
            print("colorable: no")
        else:
            print("colorable: yes")
            print("coloring: " + " ".join(str(c + 1) for c in coloring))
        if count is not None:
            print(f"count: {count}")
    if args.exit_verdict:
        return 0 if coloring is not None else 1
    return 0


def _cmd_verify(args, g):
    report = criteria.cross_check(g, args.k, args.max_edges, args.max_terms, strict=False)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.summary())
        print(f"colorable: {'yes' if report.verdict.colorable else 'no'}")
        print(f"nonzero classes: {len(report.polynomial)}")
        for key in report.mismatched:
            print(f"mismatch {_tuple(key)}: census {report.census.get(key, 0)} "
                  f"polynomial {report.polynomial.get(key, 0)}")
    return 0 if report.ok else 1


def _cmd_field(args):
    f = field.make_field(args.p, args.t)
    colors = None
    if args.k is not None:
        if (f.q - 1) % args.k:
            raise ValueError(f"k={args.k} does not divide q-1={f.q - 1}")
        colors = sorted(field.color_set(f, args.k))
    if args.json:
        out = {"p": f.p, "t": f.t, "q": f.q, "modulus": list(f.modulus),
               "elements": [f.format_element(a) for a in range(f.q)]}
        if colors is not None:
            out["k"] = args.k
            out["m"] = (f.q - 1) // args.k
            out["color_set"] = [str(c) for c in colors]
        print(json.dumps(out, indent=2))
        return 0
    print(f.describe())
    print("elements: " + ", ".join(f.format_element(a) for a in range(f.q)))
    if f.q <= 16:
        print("multiplication table (by element index):")
        for a in range(f.q):
            print("  " + " ".join(f"{f.mul(a, b):>2}" for b in range(f.q)))
    if colors is not None:
        print(f"color set (k={args.k}, m={(f.q - 1) // args.k}): {{{', '.join(map(str, colors))}}}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        if args.command == "field":
            status = _cmd_field(args)
        else:
            g = _read_graph(args)
            handler = {"analyze": _cmd_analyze, "classes": _cmd_classes, "poly": _cmd_poly,
                       "oracle": _cmd_oracle, "verify": _cmd_verify}[args.command]
            status = handler(args, g)
    except CapExceeded as exc:
        print(f"orientcolor: cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"orientcolor: error: {exc}", file=sys.stderr)
        return 2
    if args.verbose:
        print(f"{args.command} finished in {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
