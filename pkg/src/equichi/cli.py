"""Command line interface.

    equichi mgn --genus 2 --max-points 4 --basis schur
    equichi coeffs --genus 3 --format latex
    equichi nfun 10 1 2 5 --verify
    equichi orbchi 1 2
    equichi confspace --input model.json --max-points 4
    equichi selftest

Exit codes: 0 success, 1 usage error, 2 computation or invariant failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .arith import format_rational
from .confspace import GroupActionData, SchemaError, Stratum, equivariant_config_series, strata_combine
from .conventions import DEFAULT, VARIANTS
from .cyclic import BudgetExceeded, count_residue_tuples, count_residue_tuples_bruteforce
from .moduli import UnstableError, genus2_reference_table, genus_coefficients, mgn_series, orb_chi_moduli
from .selftest import run_selftest
from .symfunc import TruncatedSeries, p_to_schur, specialize_plain_euler, specialize_quotient_euler

DEFAULT_MAX_POINTS = 10
MAX_POINTS_CAP = 30


class UsageError(Exception):
    pass


class ComputationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- documents

def _document(command: str, arguments: dict, payload) -> dict:
    return {"command": command, "arguments": arguments, "version": __version__, "payload": payload}


def _partition_str(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _series_payload(series: TruncatedSeries, basis: str) -> dict:
    series.check_graded()
    rows = []
    for n, coeff in enumerate(series.coeffs):
        if basis == "p":
            rows.append({"n": n, "terms": coeff.to_json()})
            continue
        mults = p_to_schur(coeff, n)
        for lam, m in mults.items():
            if m.denominator != 1:
                raise ComputationError(f"non-integral Schur multiplicity {m} for n={n}, lambda={lam}")
        rows.append({
            "n": n,
            "schur": [{"partition": list(lam), "multiplicity": m.numerator} for lam, m in mults.items()],
            "plain_euler": format_rational(specialize_plain_euler(coeff, n)),
            "quotient_euler": format_rational(specialize_quotient_euler(coeff)),
        })
    return {"basis": basis, "coefficients": rows}


def _latex_poly(terms) -> str:
    if not terms:
        return "0"
    out = []
    for t in terms:
        c = format_rational(t["coefficient"])
        mono = "".join(
            f"p_{{{j}}}" if e == 1 else f"p_{{{j}}}^{{{e}}}" for j, e in t["exponents"].items()
        )
        num, _, den = c.lstrip("-").partition("/")
        head = rf"\frac{{{num}}}{{{den}}}" if den else num
        if mono and head == "1":
            head = ""
        out.append(("-" if c.startswith("-") else "+") + head + mono)
    text = "".join(out)
    return text[1:] if text.startswith("+") else text


def _signed_multiple(m: int) -> str:
    if abs(m) == 1:
        return "+" if m > 0 else "-"
    return f"{m:+d}"


def _render_series(doc: dict, fmt: str) -> str:
    payload = doc["payload"]
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    rows = payload["coefficients"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if payload["basis"] == "p":
            w.writerow(["n", "monomial", "coefficient"])
            for row in rows:
                for t in row["terms"]:
                    mono = "*".join(f"p{j}^{e}" for j, e in t["exponents"].items()) or "1"
                    w.writerow([row["n"], mono, t["coefficient"]])
        else:
            w.writerow(["n", "partition", "multiplicity"])
            for row in rows:
                for entry in row["schur"]:
                    w.writerow([row["n"], _partition_str(entry["partition"]), entry["multiplicity"]])
        return buf.getvalue()
    lines = []
    for row in rows:
        if payload["basis"] == "p":
            body = _latex_poly(row["terms"])
        else:
            parts = [
                _signed_multiple(e["multiplicity"]) + f"s_{{{_partition_str(e['partition'])}}}"
                for e in row["schur"] if e["multiplicity"]
            ]
            body = "".join(parts).lstrip("+") or "0"
        lines.append(f"t^{{{row['n']}}}: {body}")
    return "\n".join(lines) + "\n"


def _render_records(doc: dict, records, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "latex":
        return "\n".join(r.latex() for r in records) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["order", "k", "h", "s", "l", "orb_chi", "monodromy_count", "n_value",
                "denominator", "coefficient"])
    for r in records:
        sig = r.signature
        w.writerow([
            sig.order, " ".join(f"{j}:{v}" for j, v in sig.exponents.items()), sig.h, sig.s,
            " ".join(map(str, sig.l)), format_rational(r.orb_chi), r.monodromy_count, r.n_value,
            r.denominator, format_rational(r.coefficient),
        ])
    return buf.getvalue()


def _render_scalar(doc: dict, fmt: str, latex: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "latex":
        return latex + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    keys = list(doc["payload"])
    w.writerow(keys)
    w.writerow([doc["payload"][k] for k in keys])
    return buf.getvalue()


# ---------------------------------------------------------------- commands

def _truncation(args) -> int:
    n = args.max_points
    if n < 0:
        raise UsageError("--max-points must be non-negative")
    if n > MAX_POINTS_CAP and not args.allow_large:
        raise UsageError(f"--max-points above {MAX_POINTS_CAP} needs --allow-large")
    return n


def _genus(args) -> int:
    if args.genus < 2:
        raise UsageError(
            "genus must be at least 2: the formula needs every curve to have a finite automorphism group"
        )
    return args.genus


def cmd_mgn(args) -> str:
    g, n = _genus(args), _truncation(args)
    series = mgn_series(g, n)
    doc = _document("mgn", {"genus": g, "max_points": n, "basis": args.basis},
                    _series_payload(series, args.basis))
    return _render_series(doc, args.format)


def cmd_coeffs(args) -> str:
    g = _genus(args)
    records = genus_coefficients(g)
    if g == 2:
        ref = {r.signature: r for r in genus2_reference_table()}
        if {r.signature: r for r in records} != ref:
            raise ComputationError("genus-2 coefficients differ from the reference table")
    doc = _document("coeffs", {"genus": g}, {"records": [r.to_json() for r in records]})
    return _render_records(doc, records, args.format)


def cmd_nfun(args) -> str:
    try:
        value = count_residue_tuples(args.k, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"k": args.k, "l": " ".join(map(str, args.l)), "value": value}
    if args.verify:
        try:
            brute = count_residue_tuples_bruteforce(args.k, args.l)
        except BudgetExceeded as exc:
            raise UsageError(str(exc)) from exc
        payload["bruteforce"] = brute
        payload["agree"] = brute == value
        if brute != value:
            raise ComputationError(f"closed form {value} != brute force {brute}")
    doc = _document("nfun", {"k": args.k, "l": list(args.l), "verify": args.verify}, payload)
    if args.format == "json":
        doc["payload"]["l"] = list(args.l)
    latex = f"N({args.k};{','.join(map(str, args.l))})={value}"
    return _render_scalar(doc, args.format, latex)


def cmd_orbchi(args) -> str:
    try:
        value = orb_chi_moduli(args.h, args.s)
    except UnstableError as exc:
        raise ComputationError(str(exc)) from exc
    doc = _document("orbchi", {"h": args.h, "s": args.s}, {"h": args.h, "s": args.s,
                                                          "value": format_rational(value)})
    v = value
    body = str(v.numerator) if v.denominator == 1 else rf"\frac{{{v.numerator}}}{{{v.denominator}}}"
    if v < 0 and v.denominator != 1:
        body = rf"-\frac{{{-v.numerator}}}{{{v.denominator}}}"
    return _render_scalar(doc, args.format, rf"\chi^{{orb}}(\mathcal{{M}}_{{{args.h},{args.s}}})={body}")


def cmd_confspace(args) -> str:
    n = _truncation(args)
    try:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.input} is not valid JSON: {exc}") from exc
    try:
        if isinstance(data, dict) and "strata" in data:
            strata = [Stratum.from_json(s) for s in data["strata"]]
            series = strata_combine(strata, n)
        elif isinstance(data, dict) and "group_order" in data:
            series = equivariant_config_series(GroupActionData.from_json(data), n)
        else:
            raise SchemaError('expected an object with "strata" or "group_order"')
    except SchemaError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise ComputationError(str(exc)) from exc
    doc = _document("confspace", {"input": args.input, "max_points": n, "basis": args.basis},
                    _series_payload(series, args.basis))
    return _render_series(doc, args.format)


def cmd_selftest(args) -> tuple[str, bool]:
    conventions = DEFAULT
    for name in args.flip or ():
        conventions = conventions.flipped(**{VARIANTS[name]: True})
    results = run_selftest(conventions)
    lines = [r.line() for r in results]
    failed = [r for r in results if not r.passed]
    if failed:
        lines.append(f"first divergence: {failed[0].name}: {failed[0].detail}")
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", not failed


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equichi", description="S_n-equivariant Euler characteristics of M_{g,n}.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    def series_flags(p):
        p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
        p.add_argument("--basis", choices=("p", "schur"), default="p")
        p.add_argument("--allow-large", action="store_true",
                       help=f"permit --max-points above {MAX_POINTS_CAP}")
        fmt(p)

    p = sub.add_parser("mgn", help="generating series of chi^{S_n}(M_{g,n})")
    p.add_argument("--genus", type=int, required=True)
    series_flags(p)
    p.set_defaults(func=cmd_mgn)

    p = sub.add_parser("coeffs", help="per-signature coefficients with breakdown")
    p.add_argument("--genus", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("nfun", help="number of zero-sum residue tuples N(k; l...)")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int, nargs="*")
    p.add_argument("--verify", action="store_true", help="also run the brute-force count")
    fmt(p)
    p.set_defaults(func=cmd_nfun)

    p = sub.add_parser("orbchi", help="orbifold Euler characteristic of M_{h,s}")
    p.add_argument("h", type=int)
    p.add_argument("s", type=int)
    fmt(p)
    p.set_defaults(func=cmd_orbchi)

    p = sub.add_parser("confspace", help="series from group-action or strata JSON")
    p.add_argument("--input", required=True)
    series_flags(p)
    p.set_defaults(func=cmd_confspace)

    p = sub.add_parser("selftest", help="oracle and regression checks")
    p.add_argument("--flip", action="append", choices=sorted(VARIANTS),
                   help="use a typeset formula variant instead of the corrected one (diagnostic)")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"equichi {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except (ComputationError, AssertionError, ArithmeticError) as exc:
        print(f"equichi {args.command}: computation failed: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, tuple):
        text, ok = result
        sys.stdout.write(text)
        return 0 if ok else 2
    sys.stdout.write(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
