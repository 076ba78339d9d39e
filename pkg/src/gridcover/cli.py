"""Command-line client for the counting service.

Every subcommand builds the same request document the HTTP endpoints
accept and either runs it in process (default) or posts it to a running
service given with --server.  Exit status: 0 success, 1 usage error,
2 resource-guard rejection, 3 failed cross-check.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import CrossCheckError, GuardError
from .service.app import RUNNERS
from .service.schemas import parse_rational

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_CROSSCHECK = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the guard status owns 2
    # here, so usage problems are rerouted through UsageError instead.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _split_ints(text: str, count: int, what: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"{what} needs {count} comma-separated integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"{what} must be integers, got {text!r}") from None


def _split_weights(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"--weights needs v,x,y, got {text!r}")
    for part in parts:
        try:
            parse_rational(part)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return parts


def _load_sites(path: str, what: str) -> list[list[int]]:
    try:
        with open(path) as handle:
            data = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read {what} file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} file is not valid JSON: {exc}") from None
    if not isinstance(data, list) or any(
        not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(v, int) for v in pair)
        for pair in data
    ):
        raise UsageError(f"{what} file must be a JSON array of [column, row] pairs")
    return data


def build_parser() -> _Parser:
    parser = _Parser(prog="gridcover", description=__doc__.splitlines()[0])

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--server", metavar="URL", help="post the job to a running service")

    grid = argparse.ArgumentParser(add_help=False, parents=[common])
    grid.add_argument("--m", type=int, required=True, help="columns")
    grid.add_argument("--n", type=int, required=True, help="rows")
    grid.add_argument("--max-state-bits", type=int, default=None)
    grid.add_argument("--verify", action="store_true",
                      help="cross-check against direct enumeration when small enough")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", parents=[grid], help="partition polynomial or its value")
    p.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")
    p.add_argument("--weights", default="1,1,1", metavar="V,X,Y",
                   help="exact rational weights for numeric mode")

    sub.add_parser("matching-poly", parents=[grid], help="matching polynomial in z")
    sub.add_parser("hosoya", parents=[grid], help="number of matchings")

    p = sub.add_parser("dimer", parents=[grid], help="perfect matching count or weighted sum")
    p.add_argument("--x-weight", default="1", metavar="P/Q")
    p.add_argument("--y-weight", default="1", metavar="P/Q")

    p = sub.add_parser("monomer-boundary", parents=[grid],
                       help="dimer coverings with one fixed corner monomer")
    p.add_argument("--no-entry-check", action="store_true",
                   help="skip the equality check across equivalent matrix entries")

    p = sub.add_parser("fixed", parents=[grid], help="coverings with monomers exactly at sites")
    p.add_argument("--sites", metavar="FILE", help="JSON array of [column, row] pairs")

    p = sub.add_parser("aztec", parents=[grid], help="domino tilings of an Aztec octagon")
    p.add_argument("--orders", default="1,1,1,1", metavar="P,Q,R,S",
                   help="clockwise corner orders from top-left")
    p.add_argument("--holes", metavar="FILE", help="JSON array of [column, row] pairs")

    p = sub.add_parser("growth", parents=[common], help="per-site growth table")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--mode", choices=("hosoya", "pure-dimer"), default="hosoya")
    p.add_argument("--max-state-bits", type=int, default=None)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run the internal cross-check battery")
    p.add_argument("--max-m", type=int, default=5, help="operator size for dense checks (<= 8)")

    return parser


def _payload(args: argparse.Namespace) -> dict:
    cmd = args.command
    if cmd == "growth":
        return {
            "max_m": args.max_m,
            "max_n": args.max_n,
            "mode": args.mode,
            "max_state_bits": args.max_state_bits,
            "verify": args.verify,
        }
    if cmd == "verify":
        return {"max_m": args.max_m}
    doc = {
        "m": args.m,
        "n": args.n,
        "max_state_bits": args.max_state_bits,
        "verify": args.verify,
    }
    if cmd == "partition":
        doc["mode"] = args.mode
        doc["weights"] = _split_weights(args.weights)
    elif cmd == "dimer":
        doc["x_weight"] = args.x_weight
        doc["y_weight"] = args.y_weight
    elif cmd == "monomer-boundary":
        doc["check_entries"] = not args.no_entry_check
    elif cmd == "fixed":
        doc["sites"] = _load_sites(args.sites, "site") if args.sites else []
    elif cmd == "aztec":
        doc["orders"] = _split_ints(args.orders, 4, "--orders")
        doc["holes"] = _load_sites(args.holes, "hole") if args.holes else []
    return doc


def _run_local(command: str, payload: dict) -> dict:
    model_cls, runner = RUNNERS[command]
    request = model_cls(**payload)
    return runner(request).model_dump()


def _run_remote(server: str, command: str, payload: dict) -> dict:
    import httpx

    url = f"{server.rstrip('/')}/{command}"
    try:
        response = httpx.post(url, json=payload, timeout=None)
    except httpx.HTTPError as exc:
        raise UsageError(f"cannot reach service at {url}: {exc}") from None
    if response.status_code == 200:
        return response.json()
    try:
        body = response.json()
    except ValueError:
        body = {}
    detail = body.get("detail", response.text)
    kind = body.get("kind", "usage")
    if kind == "guard":
        raise GuardError(detail)
    if kind == "crosscheck":
        raise CrossCheckError(detail)
    raise UsageError(str(detail))


def _render_growth_text(result: dict) -> str:
    lines = [f"{'m':>3} {'n':>3} {'digits':>7}  {'per-site root':<24} running sup"]
    for row in result["entries"]:
        lines.append(
            f"{row['m']:>3} {row['n']:>3} {row['exact_count_digits']:>7}  "
            f"{row['per_site_root']:<24} {row['running_sup']}"
        )
    lines.append(f"certified lower bound: {result['sup_lower_bound']}")
    best = result["best_diagonal"]
    if best is not None:
        lines.append(f"best diagonal ({best['size']}x{best['size']}): {best['per_site_root']}")
    return "\n".join(lines)


def _render_growth_csv(result: dict) -> str:
    lines = ["m,n,exact_count_digits,per_site_root,running_sup"]
    for row in result["entries"]:
        lines.append(
            f"{row['m']},{row['n']},{row['exact_count_digits']},"
            f"{row['per_site_root']},{row['running_sup']}"
        )
    return "\n".join(lines)


def _render_checks_text(result: dict) -> str:
    lines = []
    for check in result["checks"]:
        mark = "ok  " if check["ok"] else "FAIL"
        suffix = f": {check['detail']}" if check["detail"] else ""
        lines.append(f"{mark} {check['name']}{suffix}")
    lines.append("all checks passed" if result["passed"] else "cross-check battery FAILED")
    return "\n".join(lines)


def _render(command: str, fmt: str, doc: dict) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    result = doc["result"]
    if fmt == "csv":
        if command != "growth":
            raise UsageError("csv output is only available for growth tables")
        return _render_growth_csv(result)
    if command == "growth":
        return _render_growth_text(result)
    if command == "verify":
        return _render_checks_text(result)
    return str(result)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = _payload(args)
        if args.server:
            doc = _run_remote(args.server, args.command, payload)
        else:
            doc = _run_local(args.command, payload)
        print(_render(args.command, args.format, doc))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(loc) for loc in first["loc"])
        print(f"error: invalid {where}: {first['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    if doc.get("verified") is False:
        print("error: result disagrees with the oracle cross-check", file=sys.stderr)
        return EXIT_CROSSCHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
