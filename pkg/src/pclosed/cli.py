"""Thin-client CLI over the service.

The CLI only serializes the problem file and command options, posts them
to the service, prints the returned report and exits with the returned
code.  Without --url it talks to the FastAPI app in-process, so no
server needs to be running for local use; with --url it goes over HTTP.
"""

from __future__ import annotations

import argparse
import sys


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pclosed",
        description=(
            "Foliation closures, algebraic solutions and ideal classes for "
            "derivations in characteristic p."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_file=True, needs_expr=False):
        cmd = sub.add_parser(name, help=help_text)
        if needs_file:
            cmd.add_argument(
                "problem", help="problem file path, or - for stdin"
            )
        if needs_expr:
            cmd.add_argument("expr", help="polynomial expression to check")
        cmd.add_argument("--max-deg", type=int, default=None,
                         help="override the enumeration degree")
        cmd.add_argument("--url", default=None,
                         help="base URL of a running service (default: in-process)")
        return cmd

    add("closure", "smallest foliation containing the declared derivations")
    add("pi", "basis and dimension bounds of the solution quotient group")
    add("check", "test an expression for solution/first-integral status",
        needs_expr=True)
    add("assoc", "associated polynomials and structural checks")
    add("bound", "dimension bound from the generator degrees")
    add("theta", "class of the declared ideal under the theta map")
    add("selftest", "run the built-in example suite", needs_file=False)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _read_problem(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _post(command: str, payload: dict, url: str | None):
    if url:
        import httpx

        resp = httpx.post(f"{url.rstrip('/')}/v1/{command}", json=payload)
        resp.raise_for_status()
        return resp.json()
    from fastapi.testclient import TestClient

    from .service import app

    with TestClient(app) as client:
        resp = client.post(f"/v1/{command}", json=payload)
        resp.raise_for_status()
        return resp.json()


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    payload = {"problem": "", "expr": None, "max_deg": args.max_deg}
    if args.command != "selftest":
        try:
            payload["problem"] = _read_problem(args.problem)
        except OSError as exc:
            print(f"error = {exc}", file=sys.stderr)
            return 1
    if args.command == "check":
        payload["expr"] = args.expr

    body = _post(args.command, payload, args.url)
    sys.stdout.write(body["report"])
    return int(body["exit_code"])


if __name__ == "__main__":
    sys.exit(main())
