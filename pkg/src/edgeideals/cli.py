"""Command line front end: file ingestion, suite runs, and printers.

Verbs: `check` runs verification suites and exits nonzero iff a check
failed; `sympow`, `reg`, and `invariants` print symbolic-power generators,
Betti tables, and the alpha/Waldschmidt/resurgence data for graph files.
Graph files use one record per line: `n <count>`, `e <u> <v>`, and optional
`c <v1> <v2> ...` designated-cycle lines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .betti import betti_table
from .errors import GraphFormatError, LimitExceeded
from .graphs import parse_graph_text
from .monomials import alpha_degree
from .reports import FORMATS, SUITE_NAMES, RunConfig, emit_report, exit_code
from .suites import GraphInstance, default_instances, run_suite
from .symbolic import CycleDecomposition, asymptotic_invariants, symbolic_power


def _parse_field(value: str) -> tuple[str, int]:
    """'rational' or a prime number p for coefficients mod p."""
    if value == "rational":
        return ("rational", 32003)
    try:
        p = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"field must be 'rational' or a prime, not {value!r}"
        )
    if p < 2:
        raise argparse.ArgumentTypeError(f"{p} is not a usable prime")
    return ("prime", p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeideals",
        description="Exact symbolic-power and regularity checks for edge ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, files_required: bool) -> None:
        sp.add_argument(
            "files",
            nargs="+" if files_required else "*",
            help="graph files (n/e/c records); check uses a built-in catalog "
            "when none are given",
        )
        sp.add_argument("--s-min", type=int, default=1, metavar="S")
        sp.add_argument("--s-max", type=int, default=3, metavar="S")
        sp.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        sp.add_argument("--max-vertices", type=int, default=16, metavar="N")

    check = sub.add_parser("check", help="run verification suites")
    common(check, files_required=False)
    check.add_argument(
        "--suite",
        action="append",
        choices=SUITE_NAMES + ("all",),
        help="suite to run (repeatable; default all)",
    )
    check.add_argument("--field", type=_parse_field, default=("rational", 32003))
    check.add_argument("--seed", type=int, default=2024)
    check.add_argument("--format", choices=FORMATS, default="text")
    check.add_argument("--max-generators", type=int, default=200, metavar="N")
    check.set_defaults(func=_cmd_check)

    sympow = sub.add_parser("sympow", help="print symbolic power generators")
    common(sympow, files_required=True)
    sympow.set_defaults(func=_cmd_sympow)

    reg = sub.add_parser("reg", help="print Betti tables and regularity")
    common(reg, files_required=True)
    reg.add_argument("--field", type=_parse_field, default=("rational", 32003))
    reg.add_argument("--max-generators", type=int, default=200, metavar="N")
    reg.set_defaults(func=_cmd_reg)

    inv = sub.add_parser("invariants", help="print alpha sequence and closed forms")
    common(inv, files_required=True)
    inv.set_defaults(func=_cmd_invariants)

    return parser


def _read_instance(path: str, max_vertices: int) -> GraphInstance:
    g, certs = parse_graph_text(Path(path).read_text())
    if g.vertex_count > max_vertices:
        raise LimitExceeded(
            f"{path}: {g.vertex_count} vertices exceed the {max_vertices} cap"
        )
    return GraphInstance(g, certs, label=Path(path).name)


def _write(data: bytes, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def _cmd_check(args) -> int:
    field, prime = args.field
    cfg = RunConfig(
        s_min=args.s_min,
        s_max=args.s_max,
        suites=tuple(args.suite) if args.suite else ("all",),
        field=field,
        prime=prime,
        seed=args.seed,
        max_vertices=args.max_vertices,
        max_generators=args.max_generators,
        output_format=args.format,
        out_path=args.out,
    )
    if args.files:
        instances = [_read_instance(p, args.max_vertices) for p in args.files]
    else:
        instances = default_instances(cfg)
    reports = run_suite(cfg, instances)
    _write(emit_report(reports, cfg.output_format), args.out)
    return exit_code(reports)


def _cmd_sympow(args) -> int:
    lines = []
    for path in args.files:
        inst = _read_instance(path, args.max_vertices)
        for s in range(args.s_min, args.s_max + 1):
            ideal = symbolic_power(inst.graph, s, args.max_vertices)
            lines.append(
                f"# {path} s={s}: {len(ideal.gens)} minimal generators, "
                f"alpha={alpha_degree(ideal)}"
            )
            lines.extend(m.render() for m in ideal.gens)
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def _cmd_reg(args) -> int:
    field, prime = args.field
    lines = []
    for path in args.files:
        inst = _read_instance(path, args.max_vertices)
        for s in range(args.s_min, args.s_max + 1):
            table = betti_table(
                symbolic_power(inst.graph, s, args.max_vertices),
                field=field,
                prime=prime,
                max_generators=args.max_generators,
            )
            lines.append(f"# {path} s={s}: regularity {table.regularity} ({field})")
            for (i, j), rank in sorted(table.graded().items()):
                lines.append(f"beta[{i}][{j}] = {rank}")
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def _cmd_invariants(args) -> int:
    lines = []
    for path in args.files:
        inst = _read_instance(path, args.max_vertices)
        if not inst.cycles:
            print(f"error: {path}: no designated cycle ('c' line) present", file=sys.stderr)
            return 2
        cd = CycleDecomposition.from_graph(inst.graph, inst.cycles)
        inv = asymptotic_invariants(inst.graph, cd, args.s_max)
        lines.append(f"# {path}: n={inv.n}")
        for (s, a), (_, f) in zip(inv.alpha_by_s, inv.formula_by_s):
            marker = "" if a == f else f"  (formula says {f})"
            lines.append(f"alpha(s={s}) = {a}{marker}")
        lines.append(f"formula agreement: {inv.formula_ok}")
        lines.append(f"waldschmidt = {inv.waldschmidt}")
        lines.append(f"resurgence = {inv.resurgence}")
    _write(("\n".join(lines) + "\n").encode(), args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
