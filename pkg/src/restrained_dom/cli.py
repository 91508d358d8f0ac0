"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 unsupported graph class,
3 internal certificate failure (solver bug), 4 witness rejected by ``check``.
"""

from __future__ import annotations

import argparse
import json
import logging
import secrets
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .block_dp import NotBlockGraphError, is_block_graph, solve_block_graph
from .chain import NotChainError, solve_chain
from .cograph import NotCographError, solve_cograph
from .graph import (
    Graph,
    GraphParseError,
    RdsResult,
    format_graph,
    is_connected,
    parse_graph,
    rds_violation,
    result_from_json,
    result_to_json,
)
from .oracle import OracleLimit, OracleSizeError, brute_force_gamma_r
from .randomized import randomized_rds, upper_bound
from .reductions import gen_gp_graph, gen_x3c_graph, parse_x3c
from .threshold import NotThresholdError, recognize_threshold, solve_threshold

__all__ = ["SolveRequest", "UnsupportedClassError", "CertificateError", "solve_graph", "dispatch", "check", "main"]

log = logging.getLogger(__name__)

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_CERTIFICATE, EXIT_REJECTED = range(5)
SOLVE_METHODS = ("auto", "oracle", "block", "threshold", "cograph", "chain", "random")


class UnsupportedClassError(ValueError):
    pass


class CertificateError(RuntimeError):
    pass


@dataclass(frozen=True)
class SolveRequest:
    input: str
    method: str = "auto"
    seed: int | None = None
    json: bool = False


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _try(method: str, g: Graph) -> RdsResult:
    try:
        if method == "block":
            return solve_block_graph(g)
        if method == "threshold":
            return solve_threshold(g)
        if method == "cograph":
            return solve_cograph(g)
        if method == "chain":
            return solve_chain(g)
    except (NotBlockGraphError, NotThresholdError, NotCographError, NotChainError, ValueError) as exc:
        raise UnsupportedClassError(f"{method}: {exc}") from exc
    raise ValueError(f"unknown method {method!r}")


def _auto(g: Graph, limit: OracleLimit) -> RdsResult:
    if not is_connected(g) or g.n == 0:
        raise UnsupportedClassError("auto routing needs a connected graph; try --method cograph or oracle")
    if g.n <= 2:
        return RdsResult(g.n, frozenset(range(g.n)), "trivial")
    if _is_complete(g):
        return RdsResult(1, frozenset((0,)), "trivial")
    if is_block_graph(g):
        return solve_block_graph(g)
    try:
        recognize_threshold(g)
    except NotThresholdError:
        pass
    else:
        return solve_threshold(g)
    for method in ("cograph", "chain"):
        try:
            return _try(method, g)
        except UnsupportedClassError:
            log.debug("auto: not a %s graph", method)
    if g.n <= limit.max_n:
        return brute_force_gamma_r(g, limit)
    raise UnsupportedClassError("class not supported, use --method random")


def solve_graph(g: Graph, method: str = "auto", seed: int | None = None, limit: OracleLimit | None = None) -> RdsResult:
    """Route ``g`` to a solver and certify the answer before returning it."""
    limit = limit or OracleLimit()
    if method == "auto":
        result = _auto(g, limit)
    elif method == "oracle":
        try:
            result = brute_force_gamma_r(g, limit)
        except OracleSizeError as exc:
            raise UnsupportedClassError(str(exc)) from exc
    elif method == "random":
        if seed is None:
            raise ValueError("method 'random' needs a seed")
        try:
            run = randomized_rds(g, seed)
        except ValueError as exc:
            raise UnsupportedClassError(f"random: {exc}") from exc
        result = RdsResult(len(run.result), run.result, "randomized")
    else:
        result = _try(method, g)
    bad = rds_violation(g, result.witness)
    if bad is not None:
        raise CertificateError(f"{result.method} returned an invalid witness: vertex {bad[0] + 1} has {bad[1]}")
    return result


def dispatch(req: SolveRequest) -> RdsResult:
    g = parse_graph(Path(req.input).read_text(encoding="utf-8"))
    return solve_graph(g, req.method, req.seed)


def check(input_path: str, witness_path: str) -> tuple[bool, tuple[int, str] | None]:
    """Verdict on a witness file plus the first violation (0-based vertex, clause)."""
    g = parse_graph(Path(input_path).read_text(encoding="utf-8"))
    result = result_from_json(Path(witness_path).read_text(encoding="utf-8"))
    bad = rds_violation(g, result.witness)
    return bad is None, bad


def _emit(result: RdsResult, as_json: bool, label: str | None = None) -> None:
    if as_json:
        if label is None:
            print(result_to_json(result))
        else:
            payload = json.loads(result_to_json(result))
            print(json.dumps({"file": label, **payload}))
        return
    prefix = f"{label}: " if label else ""
    members = " ".join(str(v + 1) for v in sorted(result.witness))
    print(f"{prefix}gamma_r = {result.gamma_r}\n{prefix}witness = {members}\n{prefix}method = {result.method}")


def _write_roles(roles: dict[str, str], graph_out: str | None, roles_out: str | None) -> None:
    target = roles_out or (f"{graph_out}.roles.json" if graph_out else None)
    if target:
        Path(target).write_text(json.dumps(roles, indent=1) + "\n", encoding="utf-8")


def _write_graph(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _cmd_solve(args) -> int:
    seed = args.seed
    if args.method == "random" and seed is None:
        seed = secrets.randbits(64)
        print(f"seed: {seed}", file=sys.stderr if args.json else sys.stdout)
    paths = sorted(Path(args.dir).glob(args.glob)) if args.dir else [Path(args.input)]
    status = EXIT_OK
    for path in paths:
        g = parse_graph(path.read_text(encoding="utf-8"))
        result = solve_graph(g, args.method, seed, OracleLimit(args.limit))
        _emit(result, args.json, str(path) if args.dir else None)
    return status


def _cmd_oracle(args) -> int:
    g = parse_graph(Path(args.input).read_text(encoding="utf-8"))
    _emit(solve_graph(g, "oracle", limit=OracleLimit(args.limit)), args.json)
    return EXIT_OK


def _cmd_check(args) -> int:
    ok, bad = check(args.input, args.witness)
    if args.json:
        payload = {"valid": ok}
        if bad:
            payload.update(violator=bad[0] + 1, clause=bad[1])
        print(json.dumps(payload))
    elif ok:
        print("valid restrained dominating set")
    else:
        print(f"invalid: vertex {bad[0] + 1} has {bad[1]}")
    return EXIT_OK if ok else EXIT_REJECTED


def _cmd_gen_x3c(args) -> int:
    inst = parse_x3c(Path(args.instance).read_text(encoding="utf-8"))
    red = gen_x3c_graph(inst)
    _write_graph(format_graph(red.graph, [f"x3c reduction q={inst.q} m={inst.m} k={red.k}"]), args.output)
    _write_roles(red.role_map(), args.output, args.roles)
    return EXIT_OK


def _cmd_gen_gp(args) -> int:
    h = parse_graph(Path(args.input).read_text(encoding="utf-8"))
    gp = gen_gp_graph(h)
    _write_graph(format_graph(gp.graph, [f"gp graph from base n={h.n}"]), args.output)
    _write_roles(gp.role_map(), args.output, args.roles)
    return EXIT_OK


def _cmd_random(args) -> int:
    g = parse_graph(Path(args.input).read_text(encoding="utf-8"))
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"seed: {seed}", file=sys.stderr if args.json else sys.stdout)
    result = solve_graph(g, "random", seed)
    _emit(result, args.json)
    if not args.json:
        run = randomized_rds(g, seed)
        print(f"|A| = {len(run.a_set)}  |B_A| = {len(run.b_set)}  |C_A| = {len(run.c_set)}")
    return EXIT_OK


def _cmd_bound(args) -> int:
    report = upper_bound(args.n, args.delta)
    if args.json:
        print(json.dumps(asdict(report)))
    else:
        print(f"p = {report.p:.6f}\nbound(p) = {report.bound:.6f}\nclosed form = {report.closed_form:.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdom", description="Minimum restrained domination solvers")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one graph file or a directory of them")
    p.add_argument("input", nargs="?")
    p.add_argument("--method", choices=SOLVE_METHODS, default="auto")
    p.add_argument("--seed", type=int)
    p.add_argument("--dir", help="solve every matching file in this directory")
    p.add_argument("--glob", default="*.graph")
    p.add_argument("--limit", type=int, default=20, help="oracle vertex limit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="verify a witness JSON file against a graph")
    p.add_argument("input")
    p.add_argument("witness")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("oracle", help="exhaustive search (small graphs)")
    p.add_argument("input")
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen-x3c", help="reduction graph from an X3C instance file")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.add_argument("--roles")
    p.set_defaults(func=_cmd_gen_x3c)

    p = sub.add_parser("gen-gp", help="GP graph from a base graph file")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--roles")
    p.set_defaults(func=_cmd_gen_gp)

    p = sub.add_parser("random-rds", help="one run of the randomized construction")
    p.add_argument("input")
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("bound", help="evaluate the probabilistic upper bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if args.command == "solve" and not (args.input or args.dir):
        parser.error("solve needs an input file or --dir")
    try:
        return args.func(args)
    except (GraphParseError, json.JSONDecodeError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedClassError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
