"""Command-line client for the dynlz service.

All subcommands talk to the HTTP API: against --url (or DYNLZ_URL) if given,
otherwise against an in-process application instance, so no server needs to
be running for batch use.

Exit codes: 0 success, 1 usage or parse failure, 2 oracle mismatch,
3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ORACLE = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _env(name: str, default=None):
    return os.environ.get(f"DYNLZ_{name}", default)


def _env_int(name: str, default=None):
    raw = _env(name)
    return int(raw) if raw is not None else default


def make_client(url: str | None):
    import httpx
    if url:
        return httpx.Client(base_url=url, timeout=None)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service.app import create_app
    return TestClient(create_app())


def _write_out(payload: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def build_parser() -> _Parser:
    p = _Parser(prog="dynlz", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--url", default=_env("URL"),
                   help="service base URL (default: run in-process)")
    sub = p.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute an edit script")
    run_p.add_argument("script", help="script file path, or - for stdin")
    run_p.add_argument("--backend", choices=["naive", "fast"],
                       default=_env("BACKEND", "fast"))
    run_p.add_argument("--check-oracle", action="store_true",
                       default=_env("CHECK_ORACLE", "") not in ("", "0"))
    run_p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    run_p.add_argument("--lmax", type=int, default=_env_int("LMAX"))
    run_p.add_argument("--report", choices=["json", "csv"],
                       default=_env("REPORT", "json"))
    run_p.add_argument("--out", default=_env("OUT"))
    run_p.add_argument("--debug-checks", action="store_true",
                       default=_env("DEBUG", "") not in ("", "0"),
                       help="run internal invariant sweeps every step")

    gen_p = sub.add_parser("gen", help="generate a workload script")
    gen_p.add_argument("--kind", choices=["random", "periodic",
                                          "adversarial-edge"],
                       default="random")
    gen_p.add_argument("--n", type=int, default=64)
    gen_p.add_argument("--steps", type=int, default=32)
    gen_p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    gen_p.add_argument("--alphabet", type=int, default=4)
    gen_p.add_argument("--out", default=_env("OUT"))

    sc_p = sub.add_parser("scaling", help="primitive-call scaling report")
    sc_p.add_argument("--n", required=True,
                      help="comma-separated lengths, e.g. 1024,4096,16384")
    sc_p.add_argument("--steps", type=int, default=50)
    sc_p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    sc_p.add_argument("--backend", choices=["naive", "fast"],
                      default=_env("BACKEND", "fast"))
    sc_p.add_argument("--lmax", type=int, default=_env_int("LMAX"))
    sc_p.add_argument("--report", choices=["json", "csv"],
                      default=_env("REPORT", "json"))
    sc_p.add_argument("--out", default=_env("OUT"))

    ov_p = sub.add_parser("ov", help="orthogonal-vectors driver")
    ov_p.add_argument("--a-file", required=True,
                      help="one vector per line, characters 0/1")
    ov_p.add_argument("--b-file", required=True)
    ov_p.add_argument("--backend", choices=["naive", "fast"],
                      default=_env("BACKEND", "naive"))
    ov_p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    ov_p.add_argument("--out", default=_env("OUT"))

    serve_p = sub.add_parser("serve", help="start the HTTP service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8008)
    return p


def _read_vectors(path: str) -> list[list[int]]:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    vecs = []
    for ln in lines:
        if any(c not in "01" for c in ln):
            raise ValueError(f"bad vector line {ln!r}")
        vecs.append([int(c) for c in ln])
    return vecs


def cmd_run(client, args) -> int:
    if args.script == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.script) as fh:
                text = fh.read()
        except OSError as exc:
            print(f"cannot read script: {exc}", file=sys.stderr)
            return EXIT_USAGE
    resp = client.post("/run", json={
        "script": text, "backend": args.backend, "seed": args.seed,
        "lmax": args.lmax, "check_oracle": args.check_oracle,
        "debug_checks": args.debug_checks, "report": args.report,
    })
    body = resp.json()
    if not body["ok"]:
        failure = body.get("failure")
        detail = body.get("detail") or {}
        if failure == "oracle":
            print("oracle mismatch:", file=sys.stderr)
            trimmed = {k: detail[k] for k in
                       ("step", "what", "string", "expected", "actual",
                        "history") if k in detail}
            print(_json_dumps(trimmed), file=sys.stderr)
            if body.get("report"):
                _write_out(_json_dumps(body["report"]), args.out)
            return EXIT_ORACLE
        if failure == "internal":
            print(f"internal error: {detail.get('message')}", file=sys.stderr)
            return EXIT_INTERNAL
        print(f"script error: {detail.get('message')}", file=sys.stderr)
        if body.get("report"):
            # prior steps are still reported
            payload = body["report"] if args.report == "json" else body["csv"]
            _write_out(_json_dumps(payload) if args.report == "json"
                       else payload, args.out)
        return EXIT_USAGE
    if args.report == "csv":
        _write_out(body["csv"], args.out)
    else:
        _write_out(_json_dumps(body["report"]), args.out)
    return EXIT_OK


def cmd_gen(client, args) -> int:
    resp = client.post("/workload", json={
        "kind": args.kind, "n": args.n, "steps": args.steps,
        "seed": args.seed, "alphabet": args.alphabet,
    })
    if resp.status_code != 200:
        print(resp.text, file=sys.stderr)
        return EXIT_USAGE
    _write_out(resp.json()["script"], args.out)
    return EXIT_OK


def cmd_scaling(client, args) -> int:
    try:
        n_list = [int(tok) for tok in args.n.split(",") if tok]
    except ValueError:
        print(f"bad --n list: {args.n!r}", file=sys.stderr)
        return EXIT_USAGE
    resp = client.post("/scaling", json={
        "n_list": n_list, "steps": args.steps, "seed": args.seed,
        "backend": args.backend, "lmax": args.lmax,
    })
    if resp.status_code != 200:
        print(resp.text, file=sys.stderr)
        return EXIT_USAGE
    body = resp.json()
    if args.report == "csv":
        _write_out(body["csv"], args.out)
    else:
        _write_out(_json_dumps(body["report"]), args.out)
    return EXIT_OK


def cmd_ov(client, args) -> int:
    try:
        a = _read_vectors(args.a_file)
        b = _read_vectors(args.b_file)
    except (OSError, ValueError) as exc:
        print(f"cannot read vectors: {exc}", file=sys.stderr)
        return EXIT_USAGE
    resp = client.post("/ov", json={"a": a, "b": b, "backend": args.backend,
                                    "seed": args.seed})
    if resp.status_code != 200:
        print(resp.text, file=sys.stderr)
        return EXIT_USAGE
    body = resp.json()
    _write_out(_json_dumps(body), args.out)
    verdict = "orthogonal pair found" if body["orthogonal_found"] \
        else "no orthogonal pair"
    print(verdict, file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service.app import create_app
        uvicorn.run(create_app(), host=args.host, port=args.port)
        return EXIT_OK
    client = make_client(args.url)
    try:
        if args.command == "run":
            return cmd_run(client, args)
        if args.command == "gen":
            return cmd_gen(client, args)
        if args.command == "scaling":
            return cmd_scaling(client, args)
        if args.command == "ov":
            return cmd_ov(client, args)
    finally:
        client.close()
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
