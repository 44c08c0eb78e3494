"""Command-line front end: seq, quat, audit, binet, series, matrix, pow.

Every subcommand is a thin adapter over the library modules; no arithmetic
happens here.  Exit codes: 0 success (and all audited identities passing),
1 mathematical mismatch or failing identity, 2 usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from mpmath import mp

from . import audit as audit_mod
from .binet import (
    PrecisionError,
    binet_quaternion,
    binet_scalar,
    policy_precision_bits,
    rounding_residue,
)
from .matrices import det2, fast_seq, phi
from .quat import QuatSeqKind, as_quat_kind, qnorm, seq_quaternion
from .seqcore import IndexDomainError, as_kind, sequence_value
from .series import builtin_series, expand

PRECISION_ENV = "TRIBQ_PRECISION_BITS"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tribq-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render(fmt: str, command: str, meta: dict, columns, rows) -> str:
    if fmt == "json":
        doc = {"version": 1, "command": command}
        doc.update(meta)
        doc["rows"] = rows
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
        return buf.getvalue()
    lines = [f"{key}: {value}" for key, value in meta.items()]
    if rows:
        widths = {
            c: max(len(str(c)), max(len(str(row[c])) for row in rows))
            for c in columns
        }
        lines.append("  ".join(str(c).ljust(widths[c]) for c in columns).rstrip())
        for row in rows:
            lines.append(
                "  ".join(str(row[c]).ljust(widths[c]) for c in columns).rstrip()
            )
    return "\n".join(lines) + "\n"


def _emit(args, command, meta, columns, rows) -> None:
    text = _render(args.format, command, meta, columns, rows)
    if getattr(args, "out", None):
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_seq(args) -> int:
    kind = as_kind(args.kind)
    if args.start > args.stop:
        raise ValueError(f"empty index range {args.start}..{args.stop}")
    rows = [
        {"n": n, kind.value: str(sequence_value(kind, n))}
        for n in range(args.start, args.stop + 1)
    ]
    _emit(args, "seq", {"kind": kind.value}, ["n", kind.value], rows)
    return 0


def cmd_quat(args) -> int:
    kind = as_quat_kind(args.kind)
    q = seq_quaternion(kind, args.n)
    row = {"kind": kind.value, "n": args.n}
    row.update(q.to_json())
    row["display"] = str(q)
    row["norm"] = str(qnorm(q))
    columns = ["kind", "n", "a0", "a1", "a2", "a3", "display", "norm"]
    _emit(args, "quat", {}, columns, [row])
    return 0


def _resolve_precision(args) -> int:
    if args.precision is not None:
        return args.precision
    bits = policy_precision_bits(args.n)
    env = os.environ.get(PRECISION_ENV)
    if env is not None:
        try:
            floor = int(env)
        except ValueError:
            raise ValueError(f"{PRECISION_ENV} must be an integer, got {env!r}")
        bits = max(bits, floor)
    return bits


def cmd_binet(args) -> int:
    bits = _resolve_precision(args)
    rows = []
    if args.kind in ("T", "K"):
        approx, rounded = binet_scalar(args.kind, args.n, bits)
        exact = sequence_value(args.kind, args.n)
        rows.append(
            {
                "component": "value",
                "approx": mp.nstr(approx, 25),
                "residue": mp.nstr(mp.mpf(rounding_residue(approx)), 6),
                "rounded": str(rounded),
                "exact": str(exact),
                "match": "MATCH" if rounded == exact else "MISMATCH",
            }
        )
    else:
        approx, rounded = binet_quaternion(args.kind, args.n, bits)
        exact = seq_quaternion(args.kind, args.n)
        for name, a, r, e in zip(
            ("a0", "a1", "a2", "a3"),
            approx.components(),
            rounded.components(),
            exact.components(),
        ):
            rows.append(
                {
                    "component": name,
                    "approx": mp.nstr(a, 25),
                    "residue": mp.nstr(mp.mpf(rounding_residue(a)), 6),
                    "rounded": str(r),
                    "exact": str(e),
                    "match": "MATCH" if r == e else "MISMATCH",
                }
            )
    ok = all(row["match"] == "MATCH" for row in rows)
    meta = {
        "kind": args.kind,
        "n": args.n,
        "precision_bits": bits,
        "status": "MATCH" if ok else "MISMATCH",
    }
    columns = ["component", "approx", "residue", "rounded", "exact", "match"]
    _emit(args, "binet", meta, columns, rows)
    return 0 if ok else 1


def cmd_series(args) -> int:
    coeffs = expand(builtin_series(args.name), args.count)
    scalar_only = all(c.a1 == 0 and c.a2 == 0 and c.a3 == 0 for c in coeffs)
    rows = []
    for n, c in enumerate(coeffs):
        if scalar_only:
            rows.append({"n": n, "coefficient": str(c.a0)})
        else:
            rows.append({"n": n, "coefficient": str(c)})
    _emit(args, "series", {"name": args.name}, ["n", "coefficient"], rows)
    return 0


def cmd_matrix(args) -> int:
    q = seq_quaternion(QuatSeqKind.Q, args.n)
    m = phi(q)
    det = det2(m)
    nrm = qnorm(q)
    rows = [
        {"row": i, "col0": str(m.rows[i][0]), "col1": str(m.rows[i][1])}
        for i in range(2)
    ]
    ok = det.im == 0 and det.re == nrm
    meta = {
        "n": args.n,
        "det": str(det),
        "norm": str(nrm),
        "det_equals_norm": "yes" if ok else "no",
    }
    _emit(args, "matrix", meta, ["row", "col0", "col1"], rows)
    return 0 if ok else 1


def cmd_pow(args) -> int:
    value = fast_seq(args.kind, args.n)
    digits = len(str(abs(value))) if value else 1
    rows = [{"kind": args.kind, "n": args.n, "value": str(value), "digits": digits}]
    _emit(args, "pow", {}, ["kind", "n", "value", "digits"], rows)
    return 0


def cmd_audit(args) -> int:
    ids = None
    if args.ids:
        ids = [token.strip() for token in args.ids.split(",") if token.strip()]
        if not ids:
            raise ValueError("empty --ids filter")
    reports = audit_mod.run_audit(
        single_max=args.max_n, double_max=args.max_m, ids=ids
    )
    text = audit_mod.render_report(
        reports, single_max=args.max_n, double_max=args.max_m, stable=args.stable
    )
    _atomic_write(args.out, text)
    failing = [r for r in reports if r.status == "fail"]
    if args.format == "json":
        sys.stdout.write(text)
    else:
        columns = ["id", "status", "counterexamples", "minimal"]
        rows = []
        for r in reports:
            rows.append(
                {
                    "id": r.id,
                    "status": r.status,
                    "counterexamples": r.counterexample_count,
                    "minimal": (
                        json.dumps(r.minimal_counterexample, sort_keys=True)
                        if r.minimal_counterexample
                        else "-"
                    ),
                }
            )
        summary = _render(args.format, "audit", {"report": args.out}, columns, rows)
        sys.stdout.write(summary)
        sys.stdout.write(
            f"{len(reports) - len(failing)} pass, {len(failing)} fail "
            f"(a fail records a refuted statement, not a checker error)\n"
        )
    return 1 if failing else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribq",
        description=(
            "Exact Tribonacci and Tribonacci-Lucas quaternion toolkit: "
            "sequences, quaternion algebra, closed forms, generating functions, "
            "matrix representations, and a machine-checked identity audit."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--format",
            choices=("table", "json", "csv"),
            default="table",
            help="output format (default: table)",
        )
        p.add_argument("--out", help="write output to this path instead of stdout")

    p_seq = sub.add_parser("seq", help="print a sequence over an index range")
    p_seq.add_argument("kind", choices=("T", "K", "R", "U", "C", "S"))
    p_seq.add_argument("start", type=int)
    p_seq.add_argument("stop", type=int)
    add_common(p_seq)
    p_seq.set_defaults(func=cmd_seq)

    p_quat = sub.add_parser("quat", help="print one sequence quaternion")
    p_quat.add_argument(
        "kind", choices=("Q", "Qtilde", "Rtilde", "Utilde", "Cunder")
    )
    p_quat.add_argument("n", type=int)
    add_common(p_quat)
    p_quat.set_defaults(func=cmd_quat)

    p_audit = sub.add_parser("audit", help="run the identity audit")
    p_audit.add_argument("--ids", help="comma-separated identity ids (default: all)")
    p_audit.add_argument("--max-n", type=int, default=audit_mod.DEFAULT_SINGLE_MAX)
    p_audit.add_argument("--max-m", type=int, default=audit_mod.DEFAULT_DOUBLE_MAX)
    p_audit.add_argument(
        "--stable",
        action="store_true",
        help="omit the timestamp and zero elapsed times for byte-identical runs",
    )
    p_audit.add_argument("--out", default="audit_report.json")
    p_audit.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p_audit.set_defaults(func=cmd_audit)

    p_binet = sub.add_parser("binet", help="closed-form evaluation with rounding check")
    p_binet.add_argument("kind", choices=("T", "K", "Q", "Qtilde"))
    p_binet.add_argument("n", type=int)
    p_binet.add_argument(
        "--precision",
        type=int,
        help=f"working precision in bits (default: policy; {PRECISION_ENV} raises the floor)",
    )
    add_common(p_binet)
    p_binet.set_defaults(func=cmd_binet)

    p_series = sub.add_parser("series", help="expand a built-in generating function")
    p_series.add_argument("name", choices=("f", "h", "G", "normT"))
    p_series.add_argument("count", type=int)
    add_common(p_series)
    p_series.set_defaults(func=cmd_series)

    p_matrix = sub.add_parser("matrix", help="2x2 complex image of Q(n)")
    p_matrix.add_argument("n", type=int)
    add_common(p_matrix)
    p_matrix.set_defaults(func=cmd_matrix)

    p_pow = sub.add_parser("pow", help="log-time sequence evaluation")
    p_pow.add_argument("kind", choices=("T", "K"))
    p_pow.add_argument("n", type=int)
    add_common(p_pow)
    p_pow.set_defaults(func=cmd_pow)

    return parser


def main(argv=None) -> int:
    # decimal output is part of the contract at any magnitude
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionError as exc:
        print(f"tribq: {exc}", file=sys.stderr)
        return 1
    except (IndexDomainError, ValueError, ZeroDivisionError) as exc:
        print(f"tribq: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
