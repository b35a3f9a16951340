"""Command-line client for the service layer.

The CLI owns no domain logic: it parses arguments, obtains response models
(from the in-process handlers by default, or over HTTP with ``--server``)
and renders them as TSV or JSON.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import UsageError
from .service import handlers
from .service.models import (
    MaxResponse,
    ReportEntryModel,
    TableResponse,
    ThresholdResponse,
    ValueResponse,
)

_VERIFY_SUITES = ("tables", "lemmas", "bounds", "constants", "all")


def _parse_range(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"bad range {text!r}; expected A..B")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected integers A..B") from exc


def _http_get(server: str, path: str, params: dict) -> dict | list:
    import httpx

    response = httpx.get(f"{server.rstrip('/')}{path}", params=params, timeout=600.0)
    if response.status_code == 422:
        raise UsageError(response.json().get("detail", "bad request"))
    response.raise_for_status()
    return response.json()


def _dump(model) -> str:
    if isinstance(model, list):
        return json.dumps([m.model_dump() for m in model], indent=2, ensure_ascii=False)
    return model.model_dump_json(indent=2, exclude_none=True)


# --- subcommand handlers ------------------------------------------------------


def _cmd_value(args) -> int:
    if args.server:
        model = ValueResponse.model_validate(
            _http_get(args.server, f"/value/{args.fn}/{args.n}", {})
        )
    else:
        model = handlers.value_response(args.fn, args.n)
    if args.format == "json":
        print(_dump(model))
    else:
        print(model.value)
    return 0


def _cmd_table(args) -> int:
    rng = _parse_range(args.range)
    if args.server:
        params = {}
        if rng:
            params = {"lo": rng[0], "hi": rng[1]}
        model = TableResponse.model_validate(
            _http_get(args.server, f"/table/{args.which}", params)
        )
    else:
        model = handlers.table_response(args.which, rng)
    if args.format == "json":
        print(_dump(model))
        return 0
    rows = model.rows
    if args.which == 1:
        print("n_mod_4\tpi\tbeta")
        for row in rows:
            print(f"{row.residue}\t{row.pi}\t{row.beta}")
    elif args.which == 2:
        print("n\tbeta\talpha\talpha_plus\talpha_minus")
        for row in rows:
            print(f"{row.n}\t{row.beta}\t{row.alpha}\t{row.alpha_plus}\t{row.alpha_minus}")
    elif args.which == 3:
        print("n\taa\ta_plus")
        for row in rows:
            print(f"{row.n}\t{row.aa.display}\t{row.a_plus.display}")
    else:
        print("n\tplusplus\tplus_minus")
        for row in rows:
            print(f"{row.n}\t{row.plusplus.display}\t{row.plus_minus.display}")
    return 0


def _cmd_max(args) -> int:
    if args.server:
        params = {"family": args.family, "n": args.n, "witnesses": args.witnesses}
        if args.parity:
            params["parity"] = args.parity
        model = MaxResponse.model_validate(_http_get(args.server, "/max", params))
    else:
        model = handlers.max_response(args.family, args.parity, args.n, args.witnesses)
    if args.format == "json":
        print(_dump(model))
        return 0
    print(f"max\t{model.value}")
    if model.witnesses is not None:
        for witness in model.witnesses:
            print(f"witness\t{witness.text}")
    for t in model.thresholds:
        side = f"\t{t.side_condition}" if t.side_condition else ""
        print(f"threshold[{t.shape_class}]\t{t.inequality}{side}")
    return 0


def _cmd_threshold(args) -> int:
    if args.server:
        params = {"family": args.family, "n": args.n}
        if args.parity:
            params["parity"] = args.parity
        model = ThresholdResponse.model_validate(_http_get(args.server, "/threshold", params))
    else:
        model = handlers.threshold_response(args.family, args.parity, args.n)
    for t in model.thresholds:
        side = f"\t{t.side_condition}" if t.side_condition else ""
        print(f"{t.shape_class}\t{t.inequality}{side}")
    return 0


def _cmd_verify(args) -> int:
    if args.server:
        raw = _http_get(args.server, "/verify", {"suite": args.suite})
        entries = [ReportEntryModel.model_validate(item) for item in raw]
    else:
        entries = handlers.verify_entries(args.suite)
    failed = [e for e in entries if e.status == "failed"]
    flagged = [e for e in entries if e.status == "flagged"]
    if args.format == "json":
        print(_dump(entries))
        return 1 if failed else 0
    for entry in flagged:
        print(f"# FLAGGED {entry.claim_id}: expected {entry.expected}, "
              f"computed {entry.actual} ({entry.location})")
    print("claim_id\tstatus\texpected\tactual\tlocation")
    for entry in entries:
        print(f"{entry.claim_id}\t{entry.status}\t{entry.expected}\t"
              f"{entry.actual}\t{entry.location}")
    print(
        f"# summary: {len(entries)} checks, {len(entries) - len(failed) - len(flagged)} "
        f"verified, {len(failed)} failed, {len(flagged)} flagged"
    )
    return 1 if failed else 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="talk to a running service instead of computing in-process",
    )

    parser = argparse.ArgumentParser(
        prog="lusztig-series",
        description="Exact maximal Lusztig-series sizes: tables, values, maxima, "
        "attainment thresholds, and golden-table verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common],
                       help="regenerate one of the four reference tables")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--range", metavar="A..B", help="row window, e.g. 1..43")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("value", parents=[common], help="print one exact value")
    p.add_argument("fn", choices=handlers.VALUE_FN_NAMES)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(handler=_cmd_value)

    p = sub.add_parser("max", parents=[common],
                       help="maximal series size for a family and rank")
    p.add_argument("family", help="GL, U, B, C, D+ or D-")
    p.add_argument("parity", choices=("even", "odd", "any"),
                   help="characteristic parity; 'any' for GL/U")
    p.add_argument("n", type=int)
    p.add_argument("--witnesses", action="store_true", help="print all witness shapes")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(handler=_cmd_max)

    p = sub.add_parser("verify", parents=[common],
                       help="diff regenerated values against the golden tables")
    p.add_argument("--suite", choices=_VERIFY_SUITES, default="all")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("threshold", parents=[common],
                       help="sufficient q for the maximum to be attained")
    p.add_argument("family", help="GL, U, B, C, D+ or D-")
    p.add_argument("parity", choices=("even", "odd", "any"),
                   help="characteristic parity; 'any' for GL/U")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_threshold)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
