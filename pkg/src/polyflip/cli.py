"""Command line front end: enumerate, poset export, verify, series.

stdout carries only the requested data (JSON, CSV, or DOT) and is
byte-stable for fixed arguments; progress and timing go to stderr.  Exit
codes: 0 success, 1 failed verification or domain error, 2 usage or size
guard.
"""

import argparse
import csv
import io
import json
import os
import sys

from .bijection import phi
from .dissections import DEFAULT_MAX_MN, enumerate_dissections, is_final
from .errors import PolyflipError, SizeGuardExceeded
from .polynomials import leading_monomial, poly_for_dissection
from .poset import build_poset, to_dot, to_json_dict
from .series import series_F, series_G, series_I, series_T
from .verify import run_suite

ENV_MAX_MN = "POLYFLIP_MAX_MN"


def _max_mn() -> int:
    return int(os.environ.get(ENV_MAX_MN, DEFAULT_MAX_MN))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_enumerate(args) -> int:
    rows = []
    for q in enumerate_dissections(args.m, args.n, _max_mn()):
        if args.final and not is_final(q):
            continue
        p = poly_for_dissection(q)
        rows.append(
            {
                "diagonals": [list(d) for d in q.diagonals],
                "rank": q.rank,
                "vector": list(phi(q)),
                "poly": p.text(),
                "leading": leading_monomial(p).text(),
            }
        )
    if args.format == "json":
        _emit_json({"m": args.m, "n": args.n, "count": len(rows), "items": rows})
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rank", "diagonals", "vector", "poly", "leading"])
        for r in rows:
            writer.writerow(
                [
                    r["rank"],
                    " ".join(f"({a},{b})" for a, b in r["diagonals"]),
                    " ".join(str(x) for x in r["vector"]),
                    r["poly"],
                    r["leading"],
                ]
            )
        sys.stdout.write(out.getvalue())
    return 0


def cmd_poset(args) -> int:
    poset = build_poset(args.m, args.n, _max_mn())
    if args.emit == "dot":
        sys.stdout.write(to_dot(poset, label=args.label))
    else:
        _emit_json(to_json_dict(poset))
    return 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.m, args.n)
    _emit_json([r.to_json() for r in reports])
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.suite}: {status} in {r.seconds:.2f}s", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def _series_payload(which: str, m: int, order: int):
    if which == "T":
        return [series_T(m, order).coefficient(k) for k in range(1, order + 1)]
    if which == "F":
        return [series_F(m, order).coefficient(k) for k in range(1, order + 1)]
    if which == "I":
        return [series_I(m, order).coefficient(k) for k in range(1, order + 1)]
    g = series_G(m, order)
    return [list(g.coefficient(k).int_coeffs()) for k in range(1, order + 1)]


def cmd_series(args) -> int:
    coeffs = _series_payload(args.which, args.m, args.order)
    if args.format == "json":
        _emit_json(
            {
                "m": args.m,
                "which": args.which,
                "order": args.order,
                "coefficients": coeffs,
            }
        )
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "coefficient"])
        for k, c in enumerate(coeffs, start=1):
            writer.writerow([k, " ".join(str(x) for x in c) if isinstance(c, list) else c])
        sys.stdout.write(out.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyflip",
        description="Exact combinatorics of polygon dissection flip orders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all dissections for (m, n)")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--final", action="store_true", help="final dissections only")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poset", help="export the flip order")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--emit", choices=["dot", "json"], default="dot")
    p.add_argument(
        "--label", choices=["poly", "diagonals", "dyck"], default="poly"
    )
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument(
        "--suite",
        choices=[
            "all",
            "poset",
            "bijection",
            "divisibility",
            "qsym",
            "intervals",
            "series",
        ],
        default="all",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="print exact series coefficients")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--which", choices=["T", "F", "G", "I"], default="T")
    p.add_argument("--order", type=_positive, default=8)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardExceeded as exc:
        print(f"size guard: {exc} (override with {ENV_MAX_MN})", file=sys.stderr)
        return 2
    except PolyflipError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
