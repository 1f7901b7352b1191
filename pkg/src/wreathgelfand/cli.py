"""Command-line front end.

Groups are written ``symmetric:5``, ``cyclic:4``, ``dihedral:7`` or
``file:gl23.json`` (a path, or the name of a bundled table).  Irreps of
symmetric groups are addressed by partition, e.g. ``3.1.1``; other tables
use their row labels or 0-based row indices.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import asymptotics, crack, oracle, wreath
from .chartable import (
    CharacterTable,
    NumericalIntegralityError,
    TableParseError,
    TableValidationError,
    cyclic_table,
    dihedral_table,
    load_table,
    symmetric_table,
    table_from_dict,
    validate,
)
from .partitions import SizeLimitError

DATA_DIR = Path(__file__).parent / "data"

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


def resolve_group(spec: str) -> CharacterTable:
    kind, _, arg = spec.partition(":")
    if not arg:
        raise UsageError(f"group must look like kind:arg, got {spec!r}")
    if kind == "file":
        path = Path(arg)
        if not path.exists() and (DATA_DIR / arg).exists():
            path = DATA_DIR / arg
        if not path.exists():
            raise UsageError(f"table file {arg!r} not found")
        return load_table(path.read_text(encoding="utf-8"))
    try:
        m = int(arg)
    except ValueError:
        raise UsageError(f"group size must be an integer in {spec!r}") from None
    try:
        if kind == "symmetric":
            return symmetric_table(m)
        if kind == "cyclic":
            return cyclic_table(m)
        if kind == "dihedral":
            return dihedral_table(m)
    except (ValueError, SizeLimitError) as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown group kind {kind!r}")


def resolve_irrep(table: CharacterTable, label: str) -> int:
    try:
        return table.irrep_index(label)
    except KeyError:
        pass
    if label.endswith("dim") and label[:-3].isdigit():
        hits = [i for i, d in enumerate(table.dimensions) if d == int(label[:-3])]
        if len(hits) == 1:
            return hits[0]
        raise UsageError(f"{table.name} has {len(hits)} irreps of dimension {label[:-3]}")
    try:
        i = int(label)
    except ValueError:
        raise UsageError(f"{table.name} has no irrep {label!r}") from None
    if not 0 <= i < len(table.irreps):
        raise UsageError(f"irrep index {i} out of range for {table.name}")
    return i


def _fmt(v, tol: float = 1e-9) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else str(v)
    if isinstance(v, int):
        return str(v)
    z = complex(v)
    re = 0.0 if abs(z.real) < tol else z.real
    im = 0.0 if abs(z.imag) < tol else z.imag
    if im == 0:
        return f"{re:.6g}"
    if re == 0:
        return f"{im:.6g}i"
    return f"{re:.6g}{im:+.6g}i"


def _json_scalar(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else [v.numerator, v.denominator]
    if isinstance(v, int):
        return v
    z = complex(v)
    return [z.real, z.imag]


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in rows
    )


# -- subcommands ------------------------------------------------------------


def cmd_chartable(args, out):
    table = resolve_group(args.group)
    if args.json:
        from .chartable import table_to_dict

        return table_to_dict(table)
    rows = [["", *[c.label for c in table.classes]], ["size", *[str(c.size) for c in table.classes]]]
    rows += [[r.label, *[_fmt(v) for v in r.values]] for r in table.irreps]
    out.append(f"{table.name}  order {table.order}  ({table.backend})")
    out.append(_grid(rows))


def cmd_validate_table(args, out):
    path = Path(args.file)
    if not path.exists() and (DATA_DIR / args.file).exists():
        path = DATA_DIR / args.file
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise TableParseError(str(exc)) from None
    report = validate(table_from_dict(doc))
    if args.json:
        result = report.as_dict()
    else:
        out.append(f"table {report.name}: {'PASS' if report.passed else 'FAIL'}")
        out.append(f"  row orthogonality residual     {report.row_residual:.3g}")
        out.append(f"  column orthogonality residual  {report.column_residual:.3g}")
        out.append(f"  class sizes sum to order       {report.size_sum_ok}")
        out.append(f"  dimension squares sum to order {report.dimension_sum_ok}")
        out.append(f"  power maps consistent          {report.power_maps_ok}")
        out.extend(f"  failure: {f}" for f in report.failures)
        result = None
    if not report.passed:
        args.status = EXIT_INVALID
    return result


def cmd_kron(args, out):
    table = resolve_group(args.group)
    sources = [resolve_irrep(table, s) for s in args.sources.split(",")]
    target = resolve_irrep(table, args.target)
    try:
        mult = wreath.kron_multiplicity(table, sources, target, args.tol)
    except wreath.HypothesisError as exc:
        raise UsageError(str(exc)) from None
    names = [table.irreps[i].label for i in sources]
    if args.json:
        return {"gamma": table.name, "sources": names, "target": table.irreps[target].label,
                "multiplicity": mult}
    out.append(f"multiplicity of {table.irreps[target].label} in {' x '.join(names)}: {mult}")


def cmd_mpi(args, out):
    table = resolve_group(args.group)
    labels = [resolve_irrep(table, s) for s in args.labels.split(",")]
    if len(labels) != args.n:
        raise UsageError(f"-n {args.n} but {len(labels)} labels given")
    pi = wreath.PiMultiset(table, labels)
    young = wreath.stabilizer(pi)
    values = wreath.m_pi_function(pi).values
    coeffs = wreath.decompose_m_pi(pi, args.tol)
    filt = wreath.dimension_sum_filter(pi, args.tol)
    if args.json:
        return {
            "gamma": table.name,
            "pi": list(pi.label_names()),
            "stabilizer": list(young.block_sizes),
            "values": [
                {"class": wreath.rho_label(c), "size": young.class_size(c), "value": _json_scalar(v)}
                for c, v in values.items()
            ],
            "decomposition": [
                {"rho": wreath.rho_label(r), "dim": young.dimension(r), "coeff": a}
                for r, a in coeffs.items()
            ],
            "dimension_sum_filter": filt,
        }
    out.append(f"pi = {' (x) '.join(pi.label_names())} over {table.name}")
    out.append(f"stabilizer blocks {young.block_sizes}, order {young.order}")
    rows = [["class", "size", "M_pi"]]
    rows += [[wreath.rho_label(c), str(young.class_size(c)), _fmt(v)] for c, v in values.items()]
    out.append(_grid(rows))
    rows = [["rho", "dim", "coeff"]]
    rows += [[wreath.rho_label(r), str(young.dimension(r)), str(a)] for r, a in coeffs.items()]
    out.append(_grid(rows))
    out.append(f"dimension-sum filter fires: {filt}")


def _render_gelfand(rep: crack.GelfandReport) -> list[str]:
    lines = [f"{rep.gamma}  n={rep.n}  {rep.verdict}"]
    if rep.witness:
        w = rep.witness
        lines.append(f"  witness pi=({', '.join(w.pi)})  rho={w.rho}  coeff={w.coeff}")
    lines.append(
        f"  examined {rep.examined}  filter {rep.by_filter}  kron {rep.by_kron}  "
        f"decomposed {rep.decomposed}"
    )
    return lines


def cmd_gelfand(args, out):
    table = resolve_group(args.group)
    rep = crack.is_gelfand(table, args.n, exhaustive=args.exhaustive, workers=args.workers, tol=args.tol)
    if args.json:
        return rep.as_dict()
    out.extend(_render_gelfand(rep))


def cmd_crack(args, out):
    table = resolve_group(args.group)
    rep = crack.cracking_point(table, args.n_max, workers=args.workers, tol=args.tol)
    if args.json:
        return rep.as_dict()
    for level in rep.levels:
        out.extend(_render_gelfand(level))
    out.append(rep.as_dict()["result"])


def cmd_bound(args, out):
    try:
        rows = asymptotics.bound_table(args.k_from, args.k_to)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        return [r.as_dict() for r in rows]
    grid = [["k", "dim_max", "2p(k)+2", "vk_lower", "hr_upper", "r(k)", "holds"]]
    grid += [
        [str(r.k), str(r.dim_max), str(r.threshold), f"{r.vk_lower:.6g}", f"{r.hr_upper:.6g}",
         f"{r.r:.6g}", "yes" if r.eq4_holds else "no"]
        for r in rows
    ]
    out.append(_grid(grid))


def cmd_oracle(args, out):
    kind, _, arg = args.group.partition(":")
    try:
        size = int(arg)
        G, K = oracle.build_wreath(kind, size, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = resolve_group(args.group)
    brute = oracle.convolution_commutes(G, K)
    rep = crack.is_gelfand(table, args.n, workers=args.workers, tol=args.tol)
    squares = crack.multiplicity_square_sum(table, args.n, args.tol)
    reps = ["perm"] * min(args.n, 3)
    trace_ok = oracle.wreath_char_check(reps, len(reps), trials=100, seed=args.seed)
    agree = brute.commutes == rep.is_gelfand and brute.double_cosets == squares and trace_ok
    result = {
        "gamma": table.name,
        "n": args.n,
        "group_order": G.order,
        "subgroup_order": len(K),
        "double_cosets": brute.double_cosets,
        "convolution_commutes": brute.commutes,
        "counterexample": list(brute.counterexample) if brute.counterexample else None,
        "character_verdict": rep.verdict,
        "sum_of_squared_multiplicities": squares,
        "trace_rule_check": trace_ok,
        "agree": agree,
    }
    if not args.json:
        out.append(f"{table.name} wr S{args.n}: |G|={G.order} |K|={len(K)}")
        out.append(f"  double cosets {brute.double_cosets}, sum of a^2 {squares}")
        out.append(f"  convolution commutes: {brute.commutes}   character verdict: {rep.verdict}")
        if brute.counterexample:
            i, j, x = brute.counterexample
            out.append(f"  counterexample: f_{i} * f_{j} != f_{j} * f_{i} at element {x}")
        out.append(f"  trace rule check (seed {args.seed}): {trace_ok}")
        out.append(f"  agree: {agree}")
    if not agree:
        args.status = EXIT_DISAGREE
    return result if args.json else None


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured output")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="integrality tolerance for approximate tables (default 1e-6)")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes; never changes results")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for oracle random trials (default 0)")

    parser = argparse.ArgumentParser(prog="wreathgelfand", parents=[common], description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", parents=[common], help="print a character table")
    p.add_argument("group")
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("validate-table", parents=[common], help="validate a table file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate_table)

    p = sub.add_parser("kron", parents=[common], help="tensor-product multiplicity")
    p.add_argument("group")
    p.add_argument("--sources", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("mpi", parents=[common], help="M_pi values and decomposition")
    p.add_argument("group")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--labels", required=True)
    p.set_defaults(func=cmd_mpi)

    p = sub.add_parser("gelfand", parents=[common], help="Gelfand verdict at one level")
    p.add_argument("group")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_gelfand)

    p = sub.add_parser("crack", parents=[common], help="search for the cracking point")
    p.add_argument("group")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_crack)

    p = sub.add_parser("bound", parents=[common], help="dimension vs partition-count table")
    p.add_argument("--from", dest="k_from", type=int, required=True)
    p.add_argument("--to", dest="k_to", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-check")
    p.add_argument("group")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.json = getattr(args, "json", False)
    args.tol = getattr(args, "tol", wreath.MULTIPLICITY_TOL)
    args.workers = max(1, getattr(args, "workers", 1))
    args.seed = getattr(args, "seed", 0)

    args.status = EXIT_OK
    out: list[str] = []
    payload = None
    try:
        payload = args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TableParseError, TableValidationError, NumericalIntegralityError,
            wreath.NegativeCoefficientError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json and payload is not None:
        stdout.write(json.dumps(payload, indent=2) + "\n")
    elif out:
        stdout.write("\n".join(out) + "\n")
    return args.status


if __name__ == "__main__":
    sys.exit(main())
