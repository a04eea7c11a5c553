"""Command-line front end.

A thin client over the service layer: each subcommand builds the same
pydantic request the HTTP API accepts and either runs the handler in
process (default) or posts it to a running server via --server.

Exit codes: 0 success, 1 internal error or failed verification,
2 bad arguments or malformed input, 3 curvature violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any

import httpx
from pydantic import BaseModel, ValidationError

from .errors import ContinuityViolation, CurvatureViolation
from .service import handlers
from .service.schemas import (
    ClassifyRequest,
    NormaliseRequest,
    PoseModel,
    ProfileRequest,
    SolveRequest,
    VerifyRequest,
)


def _parse_pose(text: str, degrees: bool) -> PoseModel:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"pose must be 'x,y,theta', got {text!r}")
    x, y, theta = (float(p) for p in parts)
    if degrees:
        theta = math.radians(theta)
    return PoseModel(x=x, y=y, theta=theta)


def _parse_n(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    n = int(text)
    return n, n


def _round_floats(obj: Any) -> Any:
    """Limit every float to 12 significant digits for printing."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round_floats(v) for v in obj]
    return obj


def _print_json(data: Any) -> None:
    print(json.dumps(_round_floats(data), indent=2))


def _dispatch(server: str | None, route: str, request: BaseModel, response_cls):
    if server is None:
        handler = {
            "/solve": handlers.handle_solve,
            "/profile": handlers.handle_profile,
            "/classify": handlers.handle_classify,
            "/normalise": handlers.handle_normalise,
            "/verify": handlers.handle_verify,
        }[route]
        return handler(request)
    resp = httpx.post(server.rstrip("/") + route, json=request.model_dump(mode="json"), timeout=600.0)
    resp.raise_for_status()
    return response_cls.model_validate(resp.json())


def _write_svg(svg: str | None, target: str | None) -> None:
    if svg and target:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(svg)


def cmd_solve(args: argparse.Namespace) -> int:
    start = _parse_pose(args.start, args.deg)
    end = _parse_pose(args.end, args.deg)
    lo, hi = _parse_n(args.n)
    from .service.schemas import ProfileResponse, SolveResponse

    if lo == hi:
        req = SolveRequest(start=start, end=end, kappa=args.kappa, n=lo,
                           include_svg=bool(args.svg), proximity_seed=args.seed)
        resp = _dispatch(args.server, "/solve", req, SolveResponse)
        _write_svg(resp.svg, args.svg)
        _print_json(resp.model_dump(by_alias=True, exclude={"svg"}, exclude_none=True))
        return 0
    req = ProfileRequest(start=start, end=end, kappa=args.kappa, n_min=lo, n_max=hi,
                         include_svg=bool(args.svg), proximity_seed=args.seed)
    resp = _dispatch(args.server, "/profile", req, ProfileResponse)
    _write_svg(resp.svg, args.svg)
    _print_json([r.model_dump(by_alias=True, exclude_none=True) for r in resp.rows])
    return 0


def cmd_profile(args: argparse.Namespace) -> int:
    return cmd_solve(args)


def cmd_classify(args: argparse.Namespace) -> int:
    from .service.schemas import ProximityModel

    req = ClassifyRequest(
        start=_parse_pose(args.start, args.deg),
        end=_parse_pose(args.end, args.deg),
        kappa=args.kappa,
        seed=args.seed,
    )
    resp = _dispatch(args.server, "/classify", req, ProximityModel)
    _print_json(resp.model_dump())
    return 0


def cmd_normalise(args: argparse.Namespace) -> int:
    from .service.schemas import NormaliseResponse, SampleRecord

    with open(args.input, encoding="utf-8") as fh:
        records = json.load(fh)
    if not isinstance(records, list):
        raise ValueError("sampled path file must be a JSON array of {s, x, y, theta}")
    req = NormaliseRequest(samples=[SampleRecord(**r) for r in records], kappa=args.kappa)
    resp = _dispatch(args.server, "/normalise", req, NormaliseResponse)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(_round_floats(resp.path.model_dump(exclude_none=True)), fh, indent=2)
    _print_json(resp.model_dump(exclude={"path"}))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    from .service.schemas import VerifyResponse

    lo, hi = _parse_n(args.n)
    req = VerifyRequest(seed=args.seed, trials=args.trials, n_min=lo, n_max=hi,
                        restarts=args.restarts, max_pieces=args.pieces)
    resp = _dispatch(args.server, "/verify", req, VerifyResponse)
    print(f"{'trial':>5} {'n':>3} {'enumerated':>16} {'oracle':>16} {'gap':>12} agree")
    for row in resp.rows:
        print(f"{row.trial:>5} {row.n:>3} {row.enumerated:>16.9f} {row.oracle:>16.9f} "
              f"{row.gap:>12.3e} {'yes' if row.agree else 'NO'}")
    _print_json(resp.model_dump(exclude={"rows"}))
    return 0 if resp.hard_failures == 0 else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--start", required=True, help="start pose 'x,y,theta'")
    p.add_argument("--end", required=True, help="end pose 'x,y,theta'")
    p.add_argument("--kappa", type=float, default=1.0, help="curvature bound (default 1)")
    p.add_argument("--deg", action="store_true", help="pose angles are in degrees")
    p.add_argument("--seed", type=int, default=0, help="seed for the C/D heuristic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvebound",
        description="Length-minimising bounded-curvature paths per homotopy class",
    )
    parser.add_argument("--server", default=None, help="base URL of a running curvebound server")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimise in one class or a range of classes")
    _add_instance_args(p)
    p.add_argument("--n", required=True, help="class index, e.g. '0' or '-3..3'")
    p.add_argument("--svg", default=None, help="write an SVG plot to this file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("profile", help="length profile over a range of classes")
    _add_instance_args(p)
    p.add_argument("--n", required=True, help="class range, e.g. '-3..3'")
    p.add_argument("--svg", default=None)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("classify", help="proximity condition and A/B/C/D label")
    _add_instance_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("normalise", help="normalise a sampled path file into a cs path")
    p.add_argument("--input", required=True, help="JSON array of {s, x, y, theta}")
    p.add_argument("--output", default=None, help="write the cs path JSON here")
    p.add_argument("--kappa", type=float, default=1.0)
    p.set_defaults(func=cmd_normalise)

    p = sub.add_parser("verify", help="compare the enumerated minimiser against the oracle")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--n", default="-2..2", help="class range, e.g. '-2..2'")
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--pieces", type=int, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def _merge_n_values(argv: list[str]) -> list[str]:
    """Join '--n -3..3' into '--n=-3..3' so argparse accepts the leading dash."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--n" and i + 1 < len(argv):
            out.append(f"--n={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_merge_n_values(list(argv if argv is not None else sys.argv[1:])))
    try:
        return args.func(args)
    except CurvatureViolation as exc:
        print(f"curvature violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ValidationError, json.JSONDecodeError, OSError, httpx.HTTPError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, ContinuityViolation) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
