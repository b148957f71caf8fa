"""Command line interface, a thin client over the service.

All computation happens behind the service endpoints; the CLI only parses
arguments, forwards a request (in-process unless --server is given) and
formats the response.  Exit codes: 0 success, 1 a verification or
cross-check failed, 2 bad input, 3 internal or transport error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .client import ClientInputError, ServiceClient, ServiceError
from .verify import SUITES

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _csv_int_tuple(text: str, n: int, what: str) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != n:
        raise argparse.ArgumentTypeError(
            f"{what} needs {n} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{what} needs integers, got {text!r}")


def _top(text: str) -> tuple[int, ...]:
    return _csv_int_tuple(text, 3, "a weight")


def _pattern(text: str) -> dict:
    k1, k2, bot = _csv_int_tuple(text, 3, "a pattern")
    return {"mid": [k1, k2], "bot": bot}


def _label(text: str) -> tuple[int, ...]:
    return _csv_int_tuple(text, 8, "a label")


def _add_common(p: argparse.ArgumentParser, formats=("plain", "json")) -> None:
    p.add_argument("--format", choices=formats, default="plain",
                   help="output format")
    p.add_argument("--server", default=None, metavar="URL",
                   help="send requests to a running service instead of "
                        "computing in-process")
    p.add_argument("--cache-dir", default=None,
                   help="cache responses here (defaults to $GL3CG_CACHE_DIR)")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in the response")
    p.add_argument("--verbose", action="store_true",
                   help="echo the request payload to stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gl3cg",
        description="Exact coupling coefficients for rank-three matrix groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    pj = sub.add_parser("threej", help="one coupling coefficient")
    pj.add_argument("--v", type=_top, required=True, metavar="M1,M2,M3")
    pj.add_argument("--w", type=_top, required=True, metavar="M1,M2,M3")
    pj.add_argument("--u", type=_top, required=True, metavar="M1,M2,M3")
    pj.add_argument("--pv", type=_pattern, required=True, metavar="K1,K2,S")
    pj.add_argument("--pw", type=_pattern, required=True, metavar="K1,K2,S")
    pj.add_argument("--pu", type=_pattern, required=True, metavar="K1,K2,S")
    grp = pj.add_mutually_exclusive_group()
    grp.add_argument("--label", type=_label, metavar="8 ints")
    grp.add_argument("--label-index", type=int, metavar="N")
    pj.add_argument("--method", choices=("formula", "oracle", "both"),
                    default="formula")
    pj.add_argument("--convention", default="recurrence")
    _add_common(pj)

    pt = sub.add_parser("table", help="all coefficients of a weight triple, "
                                      "or the decomposition if --u is omitted")
    pt.add_argument("--v", type=_top, required=True, metavar="M1,M2,M3")
    pt.add_argument("--w", type=_top, required=True, metavar="M1,M2,M3")
    pt.add_argument("--u", type=_top, default=None, metavar="M1,M2,M3")
    grp = pt.add_mutually_exclusive_group()
    grp.add_argument("--label", type=_label, metavar="8 ints")
    grp.add_argument("--label-index", type=int, metavar="N")
    pt.add_argument("--nonzero-only", action="store_true")
    pt.add_argument("--method", choices=("formula", "oracle", "both"),
                    default="formula")
    pt.add_argument("--convention", default="recurrence")
    _add_common(pt, formats=("plain", "json", "csv"))

    pv = sub.add_parser("verify", help="run the verification suites")
    pv.add_argument("--suite", action="append", choices=SUITES, default=None,
                    help="restrict to one suite (repeatable)")
    pv.add_argument("--max-weight", type=int, default=2)
    pv.add_argument("--jobs", type=int, default=1)
    _add_common(pv)

    ps = sub.add_parser("serve", help="run the HTTP service")
    ps.add_argument("--host", default="127.0.0.1")
    ps.add_argument("--port", type=int, default=8000)
    return parser


def _client(args) -> ServiceClient:
    return ServiceClient(args.server, args.cache_dir)


def _emit_payload(args, payload: dict) -> None:
    if args.verbose:
        print(f"request: {json.dumps(payload, sort_keys=True)}",
              file=sys.stderr)


def _emit_timings(args, data: dict) -> None:
    if args.timings and args.format != "json" and data.get("timings"):
        for name, secs in sorted(data["timings"].items()):
            print(f"timing {name}: {secs:.3f}s", file=sys.stderr)


def _cmd_threej(args) -> int:
    payload = {
        "v": args.v, "w": args.w, "u": args.u,
        "pv": args.pv, "pw": args.pw, "pu": args.pu,
        "label": args.label, "label_index": args.label_index,
        "method": args.method, "convention": args.convention,
        "timings": args.timings,
    }
    _emit_payload(args, payload)
    data = _client(args).threej(payload)
    _emit_timings(args, data)
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(data["value"])
        if args.method == "both":
            print(f"formula={data['formula_value']} "
                  f"oracle={data['oracle_value']} "
                  f"agree={data['agree']}", file=sys.stderr)
    if args.method == "both" and not data["agree"]:
        return EXIT_FAIL
    return EXIT_OK


def _fmt_pattern(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def _cmd_table(args) -> int:
    payload = {
        "v": args.v, "w": args.w, "u": args.u,
        "label": args.label, "label_index": args.label_index,
        "nonzero_only": args.nonzero_only,
        "method": args.method, "convention": args.convention,
        "timings": args.timings,
    }
    _emit_payload(args, payload)
    data = _client(args).table(payload)
    _emit_timings(args, data)
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    elif data.get("constituents") is not None:
        if args.format == "csv":
            writer = csv.writer(sys.stdout)
            writer.writerow(["u", "multiplicity", "labels"])
            for c in data["constituents"]:
                writer.writerow([_fmt_pattern(c["u"]), c["multiplicity"],
                                 ";".join(_fmt_pattern(l) for l in c["labels"])])
        else:
            for c in data["constituents"]:
                labels = " ".join("(" + _fmt_pattern(l) + ")"
                                  for l in c["labels"])
                print(f"u={_fmt_pattern(c['u'])} "
                      f"multiplicity={c['multiplicity']} labels: {labels}")
    else:
        rows = data["rows"]
        if args.format == "csv":
            writer = csv.writer(sys.stdout)
            header = ["v_pattern", "w_pattern", "u_pattern", "label", "value"]
            if args.method == "both":
                header.append("oracle_value")
            writer.writerow(header)
            for r in rows:
                out = [_fmt_pattern(r["v_pattern"]), _fmt_pattern(r["w_pattern"]),
                       _fmt_pattern(r["u_pattern"]), _fmt_pattern(r["label"]),
                       r["value"]]
                if args.method == "both":
                    out.append(r["oracle_value"])
                writer.writerow(out)
        else:
            for r in rows:
                line = (f"pv={_fmt_pattern(r['v_pattern'])} "
                        f"pw={_fmt_pattern(r['w_pattern'])} "
                        f"pu={_fmt_pattern(r['u_pattern'])} "
                        f"label={_fmt_pattern(r['label'])} value={r['value']}")
                if args.method == "both":
                    line += f" oracle={r['oracle_value']}"
                print(line)
    if args.method == "both" and data.get("agree") is False:
        return EXIT_FAIL
    return EXIT_OK


def _cmd_verify(args) -> int:
    payload = {
        "suites": args.suite,
        "max_weight": args.max_weight,
        "jobs": args.jobs,
        "timings": args.timings,
    }
    _emit_payload(args, payload)
    data = _client(args).verify(payload)
    _emit_timings(args, data)
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        sys.stdout.write(data["report"])
    return EXIT_OK if data["passed"] else EXIT_FAIL


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_HANDLERS = {
    "threej": _cmd_threej,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "serve": _cmd_serve,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ClientInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ServiceError as exc:
        print(f"service error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
