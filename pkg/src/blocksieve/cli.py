"""Command-line front end.

Subcommands: bound, check, solve, scan, orders, analyze.  Exit codes follow
one contract everywhere: 0 for feasible / all rules pass, 1 for infeasible /
violations found, 2 for usage or input errors (including search-cap refusals).
Output is byte-identical across runs for the same inputs, format, and any
parallelism degree.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .blocks import (
    BlockSystemParseError,
    ModeFlags,
    parse_block_system,
    total_dim,
)
from .coalgebra import CoalgebraParseError, parse_coalgebra
from .analyzer import CoalgebraInvalidError, NonSplitCoradicalError, analyze
from .rules import check, explain
from .solver import (
    BoundsError,
    FeasibilityProblem,
    GridBounds,
    SearchCapExceeded,
    admissible_group_orders,
    lower_bound,
    scan,
    solve,
)

NODE_CAP_ENV = "BLOCKSIEVE_NODE_CAP"
FORMATS = ("text", "json", "csv", "markdown")


@dataclass(frozen=True)
class CliConfig:
    command: str
    dim: int | None = None
    group_order: int | None = None
    t_max: int | None = None
    inputs: tuple[str, ...] = ()
    flags: ModeFlags = ModeFlags()
    fmt: str = "text"
    max_level: int | None = None
    max_d: int | None = None
    jobs: int = 1
    node_cap: int | None = None


def _flags_from(ns) -> ModeFlags:
    return ModeFlags(
        non_cosemisimple=getattr(ns, "non_cosemisimple", False),
        no_skew_primitives=getattr(ns, "no_skew_primitives", False),
        auto_nsp=getattr(ns, "auto_nsp", False),
    )


def _bounds_from(config: CliConfig) -> GridBounds | None:
    if config.max_level is None and config.max_d is None:
        return None
    if config.max_level is None or config.max_d is None:
        raise SystemExit2("--max-level and --max-d must be given together")
    return GridBounds(config.max_level, config.max_d)


class SystemExit2(Exception):
    """Usage or input error; maps to exit code 2."""


def _regime_header(cert_stats: dict) -> str:
    regime = cert_stats.get("regime", {})
    parts = []
    if regime.get("no_skew_primitives"):
        parts.append("no nontrivial skew-primitives")
        if regime.get("auto_nsp_applied"):
            parts.append("(derived: gcd(r, N/r) = 1)")
        else:
            parts.append("(requested; conclusion conditional on that hypothesis)")
    elif regime.get("non_cosemisimple"):
        parts.append("non-cosemisimple, skew-primitives allowed")
    else:
        parts.append("all coalgebras allowed")
    return "# regime: " + " ".join(parts)


def _witness_lines(witness) -> list[str]:
    lines = ["  level d1 d2    dim"]
    for (n, a, b, v) in witness.entries():
        lines.append(f"  {n:>5} {a:>2} {b:>2} {v:>6}")
    return lines


def _cmd_bound(config: CliConfig, out) -> int:
    n_min, ds = lower_bound(config.group_order)
    if config.fmt == "json":
        out.write(json.dumps({"N_min": n_min, "d": sorted(ds)}, sort_keys=True) + "\n")
    else:
        out.write(f"N_min = {n_min}, d in {{{','.join(str(d) for d in sorted(ds))}}}\n")
    return 0


def _cmd_solve(config: CliConfig, out) -> int:
    problem = FeasibilityProblem(
        config.dim, config.group_order, config.flags, _bounds_from(config)
    )
    cert = solve(problem, node_cap=config.node_cap)
    if config.fmt == "json":
        out.write(json.dumps(cert.as_json_dict(), sort_keys=True) + "\n")
    else:
        out.write(_regime_header(cert.stats) + "\n")
        out.write(
            f"dim {config.dim}, group order {config.group_order}: {cert.verdict}\n"
        )
        if cert.witness is not None:
            out.write("\n".join(_witness_lines(cert.witness)) + "\n")
        elif cert.refutation_summary:
            for line in cert.refutation_summary:
                out.write(f"  {line}\n")
    return 0 if cert.feasible else 1


def _scan_worker(args):
    t, r, flags, node_cap = args
    cert = solve(FeasibilityProblem(t * r, r, flags), node_cap=node_cap)
    return t, cert


def _closing_summary(cert) -> str:
    if cert.feasible:
        return "witness found"
    closed = cert.stats.get("closed", {})
    return " ".join(f"{k}:{v}" for k, v in sorted(closed.items())) or "empty search space"


def _cmd_scan(config: CliConfig, out) -> int:
    r, t_max = config.group_order, config.t_max
    if config.jobs > 1:
        tasks = [(t, r, config.flags, config.node_cap) for t in range(1, t_max + 1)]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_scan_worker, tasks))
        rows = [(t, cert.verdict, cert) for (t, cert) in results]
    else:
        rows = scan(r, t_max, config.flags, node_cap=config.node_cap)
    if config.fmt == "json":
        payload = [
            {"t": t, "N": t * r, "verdict": verdict, "summary": _closing_summary(cert)}
            for (t, verdict, cert) in rows
        ]
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0
    header = ("t", "N", "verdict", "closing-rule summary")
    table = [
        (str(t), str(t * r), verdict, _closing_summary(cert))
        for (t, verdict, cert) in rows
    ]
    _write_table(out, header, table, config.fmt)
    return 0


def _orders_worker(args):
    r, N, flags, node_cap = args
    cert = solve(FeasibilityProblem(N, r, flags), node_cap=node_cap)
    return r, cert.feasible


def _cmd_orders(config: CliConfig, out) -> int:
    N = config.dim
    divisors = [r for r in range(2, N) if N % r == 0]
    if config.jobs > 1:
        tasks = [(r, N, config.flags, config.node_cap) for r in divisors]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            feasible = {r for (r, ok) in pool.map(_orders_worker, tasks) if ok}
    else:
        feasible = admissible_group_orders(N, config.flags, node_cap=config.node_cap)
    if config.fmt == "json":
        out.write(
            json.dumps(
                {"dim": N, "admissible_group_orders": sorted(feasible),
                 "surveyed": divisors},
                sort_keys=True,
            )
            + "\n"
        )
        return 0
    header = ("r", "verdict")
    table = [
        (str(r), "feasible" if r in feasible else "infeasible") for r in divisors
    ]
    _write_table(out, header, table, config.fmt)
    if not feasible:
        out.write(f"no admissible group order 1 < r < {N} divides {N}\n")
    return 0


def _cmd_check(config: CliConfig, out) -> int:
    path = config.inputs[0]
    system = parse_block_system(_read(path))
    violations = check(system, config.flags)
    if config.fmt == "json":
        payload = [
            {
                "rule": v.rule,
                "indices": [[i.level, i.d1, i.d2] for i in v.indices],
                "message": v.message,
            }
            for v in violations
        ]
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(
            f"block system: group order {system.group_order}, "
            f"total dim {total_dim(system)}\n"
        )
        if violations:
            for v in violations:
                out.write(explain(v) + "\n")
        else:
            out.write("all activated rules pass\n")
    return 1 if violations else 0


def _cmd_analyze(config: CliConfig, out) -> int:
    path = config.inputs[0]
    coalgebra = parse_coalgebra(_read(path))
    result = analyze(coalgebra, config.flags)
    if config.fmt == "json":
        out.write(json.dumps(result.as_json_dict(), sort_keys=True) + "\n")
        return 1 if result.rule_report else 0
    out.write(f"coalgebra of dimension {coalgebra.dim}\n")
    out.write(
        "components: "
        + ", ".join(f"{s.label} (d={s.d})" for s in result.components)
        + f"; group order {result.block_system.group_order}\n"
    )
    out.write("filtration dims: " + " <= ".join(str(d) for d in result.filtration.dims) + "\n")
    out.write("blocks:\n")
    out.write("\n".join(_witness_lines(result.block_system)) + "\n")
    if result.q_table:
        out.write("isotypic table:\n")
        for (n, tau, mu), v in sorted(result.q_table.items()):
            out.write(f"  level {n}: ({tau}, {mu}) -> {v}\n")
    if result.rule_report:
        for v in result.rule_report:
            out.write(explain(v) + "\n")
    out.write(result.verdict + "\n")
    return 1 if result.rule_report else 0


def _write_table(out, header, rows, fmt: str):
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(str(x).replace(",", ";") for x in row) + "\n")
    elif fmt == "markdown":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "|".join("---" for _ in header) + "|\n")
        for row in rows:
            out.write("| " + " | ".join(str(x) for x in row) + " |\n")
    else:
        widths = [
            max(len(str(header[i])), *(len(str(r[i])) for r in rows)) if rows else len(header[i])
            for i in range(len(header))
        ]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise SystemExit2(f"cannot read {path}: {exc}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blocksieve",
        description="Admissibility sieve for coalgebra block systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_flags(p, modes=True, fmt=True):
        if modes:
            p.add_argument("--non-cosemisimple", action="store_true",
                           help="require a block above level 0")
            p.add_argument("--no-skew-primitives", action="store_true",
                           help="activate the skew-primitive-free rules (implies --non-cosemisimple)")
            p.add_argument("--auto-nsp", action="store_true",
                           help="derive --no-skew-primitives from gcd(r, N/r) = 1")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="text", dest="fmt")

    p = sub.add_parser("bound", help="minimum dimension over all block shapes for a group order")
    p.add_argument("--group-order", type=int, required=True)
    add_flags(p, modes=False)

    p = sub.add_parser("solve", help="decide feasibility of one (dim, group order) pair")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--group-order", type=int, required=True)
    p.add_argument("--max-level", type=int)
    p.add_argument("--max-d", type=int)
    add_flags(p)

    p = sub.add_parser("scan", help="feasibility of N = t*r for t = 1..t_max")
    p.add_argument("--group-order", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_flags(p)

    p = sub.add_parser("orders", help="survey group orders 1 < r < N dividing N")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_flags(p)

    p = sub.add_parser("check", help="run the rule engine on a block-system JSON file")
    p.add_argument("input", help="path to block-system JSON")
    add_flags(p)

    p = sub.add_parser("analyze", help="full coradical analysis of a coalgebra JSON file")
    p.add_argument("input", help="path to coalgebra JSON")
    add_flags(p)

    return parser


def _config_from(ns) -> CliConfig:
    node_cap = None
    raw = os.environ.get(NODE_CAP_ENV)
    if raw is not None:
        try:
            node_cap = int(raw)
        except ValueError as exc:
            raise SystemExit2(f"{NODE_CAP_ENV} must be an integer, got {raw!r}") from exc
    return CliConfig(
        command=ns.command,
        dim=getattr(ns, "dim", None),
        group_order=getattr(ns, "group_order", None),
        t_max=getattr(ns, "t_max", None),
        inputs=(ns.input,) if hasattr(ns, "input") else (),
        flags=_flags_from(ns),
        fmt=getattr(ns, "fmt", "text"),
        max_level=getattr(ns, "max_level", None),
        max_d=getattr(ns, "max_d", None),
        jobs=getattr(ns, "jobs", 1),
        node_cap=node_cap,
    )


_DISPATCH = {
    "bound": _cmd_bound,
    "solve": _cmd_solve,
    "scan": _cmd_scan,
    "orders": _cmd_orders,
    "check": _cmd_check,
    "analyze": _cmd_analyze,
}


def run(config: CliConfig, out=None) -> int:
    """Dispatch one parsed command; returns the exit code."""
    out = out if out is not None else sys.stdout
    try:
        return _DISPATCH[config.command](config, out)
    except (
        SystemExit2,
        BlockSystemParseError,
        CoalgebraParseError,
        CoalgebraInvalidError,
        NonSplitCoradicalError,
        BoundsError,
        SearchCapExceeded,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        config = _config_from(ns)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
