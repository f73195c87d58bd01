"""Command-line front end.

Subcommands: witt, zeta, orbits, explicit-formula, linking, redei,
product-formula. Every run echoes its resolved configuration; output
goes to stdout or --out. Formats: plain (default), json (validates
against schemas/cli_output.schema.json), csv (tabular results only).
Exit codes: 0 success, 1 computation error, 2 usage error.

Identical invocations produce byte-identical output: no timestamps,
sorted JSON keys, fixed summation orders in the underlying modules.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import counting, explicit, orbits, reciprocity, zeta
from . import parser as wparser
from . import witt as wmod
from .poly import format_poly

TABULAR_COMMANDS = {"linking table", "zeta ledger"}


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sub.add_argument("--out", default="-", help="output file, - for stdout")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker count for partitioned work (currently 1)")


def _pretty_witt(w: wmod.WittVector) -> str:
    num, den = format_poly(w.num), format_poly(w.den)
    if w.den.degree <= 0:
        return num
    return f"({num}) / ({den})"


def _witt_result(w: wmod.WittVector) -> dict:
    data = w.to_json()
    data["pretty"] = _pretty_witt(w)
    return data


def _parse_bump(text: str) -> explicit.TestFunction:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"bump must be '<c>,<r>', got {text!r}")
    return explicit.TestFunction(float(parts[0]), float(parts[1]))


def _parse_coeff_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


# each handler returns (result_object, plain_lines, csv_rows_or_None)

def _run_witt(args) -> tuple:
    op = args.verb
    if op in ("add", "mul", "sub"):
        f, g = wparser.parse_witt(args.series[0]), wparser.parse_witt(args.series[1])
        w = {"add": wmod.witt_add, "mul": wmod.witt_mul, "sub": wmod.witt_sub}[op](f, g)
        return _witt_result(w), [_pretty_witt(w)], None
    f = wparser.parse_witt(args.series[0])
    if op in ("parse", "neg"):
        w = f if op == "parse" else wmod.witt_neg(f)
        return _witt_result(w), [_pretty_witt(w)], None
    if op in ("frobenius", "verschiebung"):
        fn = wmod.frobenius if op == "frobenius" else wmod.verschiebung
        w = fn(f, args.nu)
        return _witt_result(w), [_pretty_witt(w)], None
    if op == "ghost":
        values = [f.ring.to_json(g) for g in wmod.ghost(f, args.order)]
        return {"ghost": values}, [" ".join(str(v) for v in values)], None
    if op == "project":
        value = f.ring.to_json(wmod.canonical_projection(f))
        return {"value": value}, [str(value)], None
    raise AssertionError(op)


def _load_variety(path: str) -> counting.AffineVariety:
    with open(path) as fh:
        return counting.AffineVariety.from_json(json.load(fh))


def _run_zeta(args) -> tuple:
    if args.verb == "count":
        X = _load_variety(args.variety)
        count = counting.count_points(X, args.n, cap=args.cap)
        result = {"p": X.p, "n": args.n, "count": count}
        return result, [f"points over F_{X.p}^{args.n}: {count}"], None
    if args.verb == "rational":
        X = _load_variety(args.variety)
        table = zeta.PointCountTable(
            p=X.p, counts=tuple(counting.point_count_table(X, args.max_n, cap=args.cap))
        )
        w = zeta.zeta_rational(table, args.dnum, args.dden)
        result = _witt_result(w)
        result["counts"] = list(table.counts)
        lines = [_pretty_witt(w), "counts: " + " ".join(str(c) for c in table.counts)]
        return result, lines, None
    if args.verb == "ledger":
        ledger = zeta.closed_points(args.source, args.bound)
        entries = [
            {"norm": e.norm, "length": e.length, "multiplicity": e.multiplicity}
            for e in ledger.entries
        ]
        result = {"source": ledger.source, "bound": ledger.bound, "entries": entries}
        lines = [f"{e.norm} {e.length!r} {e.multiplicity}" for e in ledger.entries]
        rows = [["norm", "length", "multiplicity"]] + [
            [e.norm, repr(e.length), e.multiplicity] for e in ledger.entries
        ]
        return result, lines, rows
    if args.verb == "euler":
        ledger = zeta.closed_points(args.source, args.bound)
        euler, ruelle = zeta.euler_vs_ruelle(ledger, args.s, args.bound)
        reference = zeta.zeta_reference(args.s)
        result = {
            "euler": euler,
            "ruelle": ruelle,
            "ulps": zeta.ulp_distance(euler, ruelle),
            "reference": reference,
            "gap": abs(euler - reference),
        }
        lines = [f"{k} = {v!r}" for k, v in result.items()]
        return result, lines, None
    raise AssertionError(args.verb)


def _run_orbits(args) -> tuple:
    report = orbits.packet_report(args.p, args.n, list_limit=args.list_limit)
    lines = [
        f"p = {report['p']}, n = {report['n']}",
        f"faithful characters: {report['faithful_count']}",
        f"orbits: {report['orbit_count']} of length {report['orbit_length']}",
        f"suspension length: {report['suspension_length']!r}",
    ]
    return report, lines, None


def _run_explicit(args) -> tuple:
    phi = _parse_bump(args.bump)
    zeros = explicit.load_zeros(args.zeros) if args.zeros else explicit.load_bundled_zeros()
    report = explicit.explicit_formula_defect(
        phi, zeros, args.max_zeros, args.prime_bound
    )
    lines = [
        f"zero side  = {report['zero_side']!r}",
        f"prime side = {report['prime_side']!r}",
        f"defect     = {report['defect']!r}",
    ] + [f"K={row['K']}: defect {row['defect']!r}" for row in report["convergence"]]
    return report, lines, None


def _run_linking(args) -> tuple:
    table = reciprocity.linking_table(args.bound)
    rows = [["p", "l", "p_mod4", "l_mod4", "sym_pl", "sym_lp", "relation_ok"]]
    entries = []
    for e in table:
        entries.append(
            {
                "p": e.p, "l": e.l, "p_mod4": e.p_mod4, "l_mod4": e.l_mod4,
                "sym_pl": e.symbol_pl, "sym_lp": e.symbol_lp,
                "relation_ok": e.relation_ok,
            }
        )
        rows.append([e.p, e.l, e.p_mod4, e.l_mod4, e.symbol_pl, e.symbol_lp,
                     e.relation_ok])
    result = {"bound": args.bound, "rows": entries}
    lines = [" ".join(str(c) for c in row) for row in rows]
    return result, lines, rows


def _run_redei(args) -> tuple:
    detail = reciprocity.redei_symbol(args.p, args.l, args.q, details=True)
    symbol = detail.symbol
    result = {
        "p": args.p, "l": args.l, "q": args.q, "symbol": symbol,
        "solution": list(detail.solution),
        "solutions_checked": detail.solutions_checked,
    }
    lines = [
        f"redei({args.p}, {args.l}, {args.q}) = {symbol}",
        "solution (x, y, z) = {} {} {}".format(*detail.solution),
    ]
    return result, lines, None


def _run_product_formula(args) -> tuple:
    if args.verb == "rational":
        value = Fraction(args.value)
        orders = zeta.rational_orders(value)
        result = {
            "value": str(value),
            "orders": {str(p): e for p, e in sorted(orders.items())},
            "defect": zeta.product_formula_defect(value),
            "scale": zeta.product_formula_scale(value),
        }
        lines = [f"{k} = {v}" for k, v in result.items()]
        return result, lines, None
    from .rings import GF
    from .poly import Polynomial

    ring = GF(args.p)
    num = Polynomial(ring, [ring.coerce(c) for c in _parse_coeff_list(args.num)])
    den = Polynomial(ring, [ring.coerce(c) for c in _parse_coeff_list(args.den)])
    total = zeta.function_field_product_formula(num, den)
    result = {
        "p": args.p,
        "num": _parse_coeff_list(args.num),
        "den": _parse_coeff_list(args.den),
        "sum": total,
    }
    return result, [f"weighted order sum = {total}"], None


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="wittkit",
        description="Witt vectors, zeta functions, orbit packets, and "
        "arithmetic linking symbols.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_witt = sub.add_parser("witt", help="rational Witt vector arithmetic")
    witt_sub = p_witt.add_subparsers(dest="verb", required=True)
    for verb, nargs in (
        ("parse", 1), ("add", 2), ("mul", 2), ("sub", 2), ("neg", 1),
        ("frobenius", 1), ("verschiebung", 1), ("ghost", 1), ("project", 1),
    ):
        p = witt_sub.add_parser(verb)
        p.add_argument("series", nargs=nargs,
                       help="power series as rational expressions in t")
        if verb in ("frobenius", "verschiebung"):
            p.add_argument("nu", type=int)
        if verb == "ghost":
            p.add_argument("--order", type=int, default=8)
        _common_flags(p)
        p.set_defaults(func=_run_witt)

    p_zeta = sub.add_parser("zeta", help="point counts, zeta series, ledgers")
    zeta_sub = p_zeta.add_subparsers(dest="verb", required=True)
    p = zeta_sub.add_parser("count")
    p.add_argument("--variety", required=True, help="variety description (JSON file)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=counting.DEFAULT_ENUM_CAP)
    _common_flags(p)
    p.set_defaults(func=_run_zeta)
    p = zeta_sub.add_parser("rational")
    p.add_argument("--variety", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--dnum", type=int, required=True)
    p.add_argument("--dden", type=int, required=True)
    p.add_argument("--cap", type=int, default=counting.DEFAULT_ENUM_CAP)
    _common_flags(p)
    p.set_defaults(func=_run_zeta)
    p = zeta_sub.add_parser("ledger")
    p.add_argument("--source", required=True,
                   help="'spec Z', 'quadratic:<d>', or 'curve:<q>'")
    p.add_argument("--bound", type=float, required=True)
    _common_flags(p)
    p.set_defaults(func=_run_zeta)
    p = zeta_sub.add_parser("euler")
    p.add_argument("--source", required=True)
    p.add_argument("--bound", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    _common_flags(p)
    p.set_defaults(func=_run_zeta)

    p_orb = sub.add_parser("orbits", help="finite-level orbit packets")
    orb_sub = p_orb.add_subparsers(dest="verb", required=True)
    p = orb_sub.add_parser("packet")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--list-limit", type=int, default=10**4)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="json")
    p.add_argument("--out", default="-")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_run_orbits)

    p_exp = sub.add_parser("explicit-formula", help="zero side vs prime side")
    exp_sub = p_exp.add_subparsers(dest="verb", required=True)
    p = exp_sub.add_parser("run")
    p.add_argument("--zeros", default=None,
                   help="zero table file; default: bundled first 1000 zeros")
    p.add_argument("--bump", default="1.5,0.7", help="test function as '<c>,<r>'")
    p.add_argument("--max-zeros", type=int, default=100)
    p.add_argument("--prime-bound", type=int, default=10**4)
    _common_flags(p)
    p.set_defaults(func=_run_explicit)

    p_link = sub.add_parser("linking", help="mod-2 linking of odd prime pairs")
    link_sub = p_link.add_subparsers(dest="verb", required=True)
    p = link_sub.add_parser("table")
    p.add_argument("--bound", type=int, required=True)
    _common_flags(p)
    p.set_defaults(func=_run_linking)

    p_redei = sub.add_parser("redei", help="triple symbol of three primes")
    p_redei.add_argument("p", type=int)
    p_redei.add_argument("l", type=int)
    p_redei.add_argument("q", type=int)
    _common_flags(p_redei)
    p_redei.set_defaults(func=_run_redei, verb=None)

    p_pf = sub.add_parser("product-formula", help="sum of weighted valuations")
    pf_sub = p_pf.add_subparsers(dest="verb", required=True)
    p = pf_sub.add_parser("rational")
    p.add_argument("value", help="rational number, e.g. 12/5 or -360/77")
    _common_flags(p)
    p.set_defaults(func=_run_product_formula)
    p = pf_sub.add_parser("function-field")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--num", required=True, help="ascending coefficients, e.g. 1,0,1")
    p.add_argument("--den", required=True, help="ascending coefficients")
    _common_flags(p)
    p.set_defaults(func=_run_product_formula)

    return top


def _command_name(args) -> str:
    if getattr(args, "verb", None):
        return f"{args.command} {args.verb}"
    return args.command


def _config_dict(args) -> dict:
    skip = {"func", "command", "verb"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _render(args, result, plain_lines, csv_rows) -> str:
    name = _command_name(args)
    config = _config_dict(args)
    if args.format == "json":
        doc = {"command": name, "config": config, "result": result}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    header = [f"# wittkit {name}"]
    header.append(
        "# config: " + " ".join(f"{k}={v}" for k, v in config.items())
    )
    if args.format == "csv":
        if csv_rows is None:
            raise SystemExit(
                f"csv output is not available for '{name}'; tabular commands: "
                + ", ".join(sorted(TABULAR_COMMANDS))
            )
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(csv_rows)
        return "\n".join(header) + "\n" + buf.getvalue()
    return "\n".join(header + plain_lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, plain_lines, csv_rows = args.func(args)
        text = _render(args, result, plain_lines, csv_rows)
    except SystemExit as exc:  # csv-on-nontabular: usage error
        print(exc, file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, AssertionError, ArithmeticError, OSError) as exc:
        print(f"wittkit: error: {exc}", file=sys.stderr)
        return 1
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
