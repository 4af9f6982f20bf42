"""
Command-line front end.

    garside-census <command> [args] [--format plain|csv|json] [--out FILE]

Commands: count, matrix, charpoly, normalize, oracle, table, conjecture,
verify.  All integers are emitted as decimal strings in JSON output, and
identical invocations produce byte-identical output.  Exit status is 0 on
success, 1 on a verification mismatch, 2 on usage errors.  The GC_THREADS
environment variable sets the worker count for the brute-force oracle.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import formulas, matrices, oracle, permutations, reference, spectral, words


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=2), out)


def _emit_csv(rows: list[list[str]], out: str | None) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    _emit(buf.getvalue(), out)


def _parse_last(tokens: list[str] | None, n: int):
    """--last is either a bracketed permutation or 'delta R' with R counting
    the strands excluded from the sub-twist."""
    if not tokens:
        return None, None
    if tokens[0] == "delta":
        if len(tokens) != 2:
            raise ValueError("--last delta takes exactly one integer argument")
        r = int(tokens[1])
        return None, r
    if len(tokens) != 1:
        raise ValueError("--last takes one permutation or 'delta R'")
    return permutations.parse_permutation(tokens[0]), None


def _cmd_count(args) -> int:
    last_perm, r = _parse_last(args.last, args.n)
    if r is not None:
        value = matrices.b_delta(args.n, args.d, r)
        label = f"delta {r}"
    elif last_perm is not None:
        value = matrices.b_of_simple(args.n, args.d, last_perm, via=args.via)
        label = permutations.format_permutation(last_perm)
    else:
        value = matrices.b_total(args.n, args.d)
        label = None
    if args.format == "json":
        obj = {"n": str(args.n), "d": str(args.d), "value": str(value)}
        if label is not None:
            obj["last"] = label
        _emit_json(obj, args.out)
    elif args.format == "csv":
        _emit_csv([["n", "d", "last", "value"], [str(args.n), str(args.d), label or "", str(value)]], args.out)
    else:
        _emit(str(value), args.out)
    return 0


def _build_matrix(kind: str, n: int, cap: int | None):
    if kind == "M":
        return matrices.build_M(n, cap=cap if cap is not None else matrices.DEFAULT_FACTORIAL_CAP)
    builder = matrices.build_Mprime if kind == "Mprime" else matrices.build_Mbar
    return builder(n, cap=cap if cap is not None else matrices.DEFAULT_SUBSET_CAP)


def _cmd_matrix(args) -> int:
    m = _build_matrix(args.kind, args.n, args.cap_factorial)
    if args.format == "json":
        _emit_json(m.to_json_obj(), args.out)
    elif args.format == "csv":
        _emit_csv(m.to_csv_rows(), args.out)
    else:
        labels = m.label_strings()
        width = max(len(s) for s in labels)
        cols = [max(len(str(m.rows[i][j])) for i in range(m.size)) for j in range(m.size)]
        lines = []
        for label, row in zip(labels, m.rows):
            cells = " ".join(str(e).rjust(cols[j]) for j, e in enumerate(row))
            lines.append(f"{label.ljust(width)}  {cells}")
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_charpoly(args) -> int:
    if args.kind == "M" and args.n > 5:
        raise ValueError(
            "the full matrix is too large for an exact characteristic polynomial "
            "beyond n=5; its nonzero spectrum equals that of kind Mbar"
        )
    m = _build_matrix(args.kind, args.n, None)
    poly = spectral.charpoly(m)
    factors = None
    if args.kind == "Mbar" and not args.raw:
        parts = []
        prev: tuple[int, ...] = (1,)
        ok = True
        for k in range(1, args.n + 1):
            cur = spectral.charpoly(matrices.build_Mbar(k))
            q = spectral.exact_quotient(prev, cur)
            if q is None:
                ok = False
                break
            parts.append(q)
            prev = cur
        if ok:
            factors = parts
    if args.format == "json":
        obj = {
            "n": str(args.n),
            "kind": args.kind,
            "coefficients_constant_first": [str(c) for c in poly],
        }
        if factors is not None:
            obj["factors"] = [[str(c) for c in f] for f in factors]
        _emit_json(obj, args.out)
    else:
        lines = [f"coefficients (constant first): {' '.join(str(c) for c in poly)}"]
        if factors is not None and not args.raw:
            lines.append(
                "factored: " + " * ".join(f"({spectral.poly_str(f)})" for f in factors)
            )
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_normalize(args) -> int:
    word = words.parse_word(args.word, args.n)
    seq = words.normalize(word)
    factor_info = [
        {
            "permutation": [str(v) for v in x],
            "d_left": [str(i) for i in sorted(permutations.d_left(x))],
            "d_right": [str(i) for i in sorted(permutations.d_right(x))],
        }
        for x in seq.factors
    ]
    if args.json or args.format == "json":
        obj = {
            "n": str(args.n),
            "word": args.word,
            "degree": str(words.degree(seq)),
            "factors": factor_info,
        }
        _emit_json(obj, args.out)
    else:
        lines = [f"degree {words.degree(seq)}"]
        for k, x in enumerate(seq.factors, start=1):
            lines.append(
                f"factor {k}: {permutations.format_permutation(x)}"
                f"  d_left={permutations.format_descent_set(permutations.d_left(x))}"
                f"  d_right={permutations.format_descent_set(permutations.d_right(x))}"
            )
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_oracle(args) -> int:
    last_perm, r = _parse_last(args.last, args.n)
    if r is not None:
        last_perm = permutations.partial_flip(args.n, args.n - r)
    workers = int(os.environ.get("GC_THREADS", "1"))
    if args.engine == "brute":
        value = oracle.brute_count(args.n, args.d, last=last_perm, budget=args.budget, workers=workers)
    else:
        value = oracle.dp_count(args.n, args.d, last=last_perm)
    if args.format == "json":
        obj = {
            "n": str(args.n),
            "d": str(args.d),
            "engine": args.engine,
            "value": str(value),
        }
        if last_perm is not None:
            obj["last"] = permutations.format_permutation(last_perm)
        _emit_json(obj, args.out)
    else:
        _emit(str(value), args.out)
    return 0


def _table_rows(nmax: int, dmax: int):
    rows = []
    for n in range(2, nmax + 1):
        for rho in range(1, n):
            values = tuple(matrices.b_delta(n, d, n - rho) for d in range(1, dmax + 1))
            flags = []
            for d in range(1, dmax + 1):
                note = reference.TABLE1_FLAGGED_CELLS.get((n, rho, d))
                if note is not None:
                    flags.append({"d": str(d), "flag": reference.PAPER_DISCREPANCY, "note": note})
            row_note = reference.TABLE1_ROW_NOTES.get((n, rho))
            if row_note is not None:
                flags.append({"flag": reference.PAPER_DISCREPANCY, "note": row_note})
            label = "b_{%d,d}(1)" % n if rho == 1 else "b_{%d,d}(Delta_%d)" % (n, rho)
            rows.append({"n": n, "rho": rho, "label": label, "values": values, "flags": flags})
    return rows


def _cmd_table(args) -> int:
    if args.nmax > args.cap:
        raise ValueError(f"nmax={args.nmax} exceeds the table cap {args.cap}")
    rows = _table_rows(args.nmax, args.dmax)
    if args.format == "json":
        obj = [
            {
                "n": str(r["n"]),
                "rho": str(r["rho"]),
                "label": r["label"],
                "values": [str(v) for v in r["values"]],
                "flags": r["flags"],
            }
            for r in rows
        ]
        _emit_json(obj, args.out)
    elif args.format == "csv":
        out = [["label"] + [f"d={d}" for d in range(1, args.dmax + 1)] + ["flags"]]
        for r in rows:
            notes = "; ".join(f["note"] for f in r["flags"])
            out.append([r["label"]] + [str(v) for v in r["values"]] + [notes])
        _emit_csv(out, args.out)
    else:
        width = max(len(r["label"]) for r in rows)
        lines = []
        footnotes = []
        for r in rows:
            cells = " ".join(str(v).rjust(12) for v in r["values"])
            mark = ""
            if r["flags"]:
                mark = " *"
                for f in r["flags"]:
                    footnotes.append(f"* {r['label']}: {f['note']}")
            lines.append(f"{r['label'].ljust(width)}  {cells}{mark}")
        lines.extend(footnotes)
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_conjecture(args) -> int:
    rows = []
    all_ok = True
    for n in range(2, args.nmax + 1):
        rep = spectral.new_factor_simple_roots(n)
        rho = spectral.rho_max(matrices.build_Mbar(n))
        all_ok = all_ok and rep.all_ok
        rows.append((rep, rho))
    if args.format == "json":
        obj = [
            {
                "n": str(rep.n),
                "divides": rep.divides,
                "quotient_constant_first": [str(c) for c in (rep.quotient or ())],
                "expected_degree": str(rep.expected_degree),
                "degree_ok": rep.degree_ok,
                "constant_nonzero": rep.constant_nonzero,
                "squarefree": rep.squarefree,
                "coprime_with_previous": rep.coprime_with_previous,
                "rho_max": f"{rho:.6f}",
            }
            for rep, rho in rows
        ]
        _emit_json(obj, args.out)
    else:
        lines = []
        for rep, rho in rows:
            verdict = "ok" if rep.all_ok else "FAIL"
            q = spectral.poly_str(rep.quotient) if rep.quotient else "-"
            lines.append(
                f"n={rep.n}: {verdict} divides={rep.divides}"
                f" quotient={q} degree={rep.expected_degree}"
                f" squarefree={rep.squarefree} coprime={rep.coprime_with_previous}"
                f" rho={rho:.3f}"
            )
        _emit("\n".join(lines), args.out)
    return 0 if all_ok else 1


def _cmd_verify(args) -> int:
    reports = formulas.verify_all(nmax=args.nmax, dmax=args.dmax)
    if args.formula is not None:
        reports = tuple(r for r in reports if r.formula == args.formula)
        if not reports:
            raise ValueError(f"unknown formula id {args.formula!r}")
    failed = any(not r.ok for r in reports)
    if args.format == "json":
        obj = [
            {
                "formula": r.formula,
                "ok": r.ok,
                "checks": [
                    {
                        "label": c.label,
                        "expected": c.expected,
                        "computed": c.computed,
                        "match": c.match,
                        **({"flag": c.flag} if c.flag else {}),
                    }
                    for c in r.checks
                ],
            }
            for r in reports
        ]
        _emit_json(obj, args.out)
    elif args.format == "csv":
        out = [["formula", "label", "expected", "computed", "status"]]
        for r in reports:
            for c in r.checks:
                status = "ok" if c.match else ("flagged" if c.flag else "MISMATCH")
                out.append([r.formula, c.label, c.expected, c.computed, status])
        _emit_csv(out, args.out)
    else:
        lines = []
        for r in reports:
            lines.append(f"{r.formula}: {'ok' if r.ok else 'FAIL'} ({len(r.checks)} checks)")
            for c in r.checks:
                if not c.match:
                    status = "flagged" if c.flag else "MISMATCH"
                    lines.append(
                        f"  {status} {c.label}: expected {c.expected}, computed {c.computed}"
                    )
        _emit("\n".join(lines), args.out)
    return 1 if failed else 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.add_argument("--out", default=None, help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside-census",
        description="Exact counting of normal sequences of positive braids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count braids of degree at most d, optionally by last factor")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--last", nargs="+", default=None, metavar="PERM|delta R",
                   help="pin the last factor: a permutation like [3,1,2], or 'delta R' for the half twist on the first n-R strands")
    p.add_argument("--via", choices=["Mbar", "Mprime", "M22", "M23"], default="Mbar")
    _add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("matrix", help="emit an incidence matrix")
    p.add_argument("kind", choices=["M", "Mprime", "Mbar"])
    p.add_argument("n", type=int)
    p.add_argument("--cap-factorial", type=int, default=None, help="override the size cap")
    _add_common(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a counting matrix")
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=["M", "Mprime", "Mbar"], default="Mbar")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--raw", action="store_true", help="coefficient list only")
    g.add_argument("--factored", action="store_true", help="factor against the smaller-n polynomials")
    _add_common(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("normalize", help="normal form of a positive braid word")
    p.add_argument("-n", dest="n", type=int, required=True)
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("oracle", help="brute-force or dp count of normal sequences")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--last", nargs="+", default=None, metavar="PERM|delta R")
    p.add_argument("--engine", choices=["brute", "dp"], default="dp")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    _add_common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("table", help="grid of counts by last half twist")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--cap", type=int, default=8, help="refuse nmax beyond this")
    _add_common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("conjecture", help="nested-spectrum check for consecutive n")
    p.add_argument("--nmax", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("verify", help="evaluate every closed formula against the pipeline")
    p.add_argument("--formula", default=None)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--dmax", type=int, default=20)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
