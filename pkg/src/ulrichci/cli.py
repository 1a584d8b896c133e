"""Command-line front end: verification suites, invariant tables, certificates, scans.

Exit codes: 0 success (all identities pass / certificate conclusive), 1 a
check failed or the certificate is inconclusive, 2 invalid usage.  Structured
output is a single JSON document per invocation with a schema version field;
worker counts affect wall time only, never any reported value or ordering.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .ci_invariants import (
    EXCLUDED,
    INCONCLUSIVE,
    NON_EXISTENCE,
    CIConfig,
    ParityError,
    c2X_coeff,
    c2_E_coeff,
    canonical_coeff,
    certify,
    chi_E,
    chi_OX,
    chi_OZ,
    deg_Z,
    det_twist,
    parity_obstruction,
)
from .report import CheckResult, all_ok, summarize
from .symfunc import verify_tf2_table, verify_tf2bis
from .ulrich_functions import (
    SUPPORTED_PAIRS,
    ScanReport,
    verify_cg_induction,
    verify_cg_scan,
    verify_gl1,
    verify_gl2,
    verify_gl4,
    verify_tf0,
    verify_tf1,
)

SCHEMA_VERSION = 1

SUITES = ("all", "tf0", "tf1", "tf2", "tf2bis", "gl1", "gl2", "gl4", "cg")

#: Default s-ranges per suite; chosen so the full default run stays well
#: under a minute on commodity hardware.  Deeper ranges are opt-in.
_DEFAULT_RANGES = {
    "tf0": (1, 6),
    "tf1": (1, 6),
    "tf2": (4, 6),
    "tf2bis": (5, 6),
    "gl1": (4, 6),
    "gl2": (1, 6),
    "gl4": (4, 6),
}
_MIN_S = {"tf0": 1, "tf1": 1, "tf2": 1, "tf2bis": 5, "gl1": 4, "gl2": 1, "gl4": 4}


def _parse_range(text: str) -> tuple[int, int]:
    """Parse "4..8" or "5" into an inclusive (low, high) pair."""
    if ".." in text:
        low_s, _, high_s = text.partition("..")
        low, high = int(low_s), int(high_s)
    else:
        low = high = int(text)
    if low > high:
        raise ValueError(f"empty range {text!r}")
    return low, high


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _default_workers() -> int:
    env = os.environ.get("ULRICHCI_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _emit(doc: dict, text: str, args) -> None:
    payload = json.dumps(doc, indent=2) if args.format == "json" else text
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)


def _base_doc(command: str, parameters: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": command,
        "parameters": parameters,
    }


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _run_suite(suite: str, args) -> list[CheckResult]:
    results: list[CheckResult] = []
    if suite in _DEFAULT_RANGES:
        low, high = args.s if args.s else _DEFAULT_RANGES[suite]
        if low < _MIN_S[suite]:
            raise ValueError(f"suite {suite} requires s >= {_MIN_S[suite]}")
    if suite == "tf0":
        for s in range(low, high + 1):
            for r, m in SUPPORTED_PAIRS:
                results.extend(verify_tf0(s, r, m))
    elif suite == "tf1":
        for s in range(low, high + 1):
            for r, m in SUPPORTED_PAIRS:
                results.extend(verify_tf1(s, r, m))
    elif suite == "tf2":
        for s in range(low, high + 1):
            results.extend(verify_tf2_table(s))
    elif suite == "tf2bis":
        for s in range(low, high + 1):
            results.extend(verify_tf2bis(s, samples=args.samples, seed=args.seed))
    elif suite == "gl1":
        for s in range(low, high + 1):
            results.extend(verify_gl1(s))
    elif suite == "gl2":
        for s in range(low, high + 1):
            results.extend(verify_gl2(s))
    elif suite == "gl4":
        for s in range(low, high + 1):
            results.extend(verify_gl4(s))
    elif suite == "cg":
        report = verify_cg_scan(args.s_max, args.d_max, workers=args.workers)
        results.extend(_scan_checks(report))
        for s in range(2, args.s_max + 1):
            for b in (8, 9):
                results.extend(verify_cg_induction(s, b))
    else:  # pragma: no cover - guarded by argparse choices
        raise ValueError(f"unknown suite {suite!r}")
    return results


def _scan_checks(report: ScanReport) -> list[CheckResult]:
    checks = []
    for cell in report.cells:
        witness = {
            "tuples_checked": cell.tuples_checked,
            "min_q": cell.min_q,
            "min_tuple": list(cell.min_tuple) if cell.min_tuple else None,
        }
        if cell.violations:
            witness["violations"] = [
                {"degrees": list(t), "q": q} for t, q in cell.violations
            ]
        checks.append(
            CheckResult(
                lemma="cg/scan",
                parameters={"b": cell.b, "s": cell.s, "d_max": report.d_max},
                status="pass" if cell.ok else "fail",
                witness=witness,
            )
        )
    return checks


def _cmd_verify(args) -> int:
    suites = list(SUITES[1:]) if args.suite == "all" else [args.suite]
    results: list[CheckResult] = []
    for suite in suites:
        results.extend(_run_suite(suite, args))
    summary = summarize(results)
    status = "pass" if all_ok(results) else "fail"
    doc = _base_doc(
        "verify",
        {
            "suite": args.suite,
            "s": list(args.s) if args.s else None,
            "s_max": args.s_max,
            "d_max": args.d_max,
            "samples": args.samples,
            "seed": args.seed,
            "workers": args.workers,
        },
    )
    doc["results"] = [r.to_dict() for r in results]
    doc["summary"] = summary
    doc["status"] = status
    lines = []
    for r in results:
        params = " ".join(f"{k}={v}" for k, v in r.parameters.items())
        lines.append(f"{r.status.upper():4s} {r.lemma} {params}")
    lines.append(
        f"{summary['passed']}/{summary['total']} checks passed"
        + (f", {summary['failed']} FAILED" if summary["failed"] else "")
    )
    _emit(doc, "\n".join(lines), args)
    return 0 if status == "pass" else 1


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def _cmd_invariants(args) -> int:
    cfg = CIConfig(args.n, _parse_int_list(args.degrees), args.r)
    u = det_twist(cfg)
    obstructed = parity_obstruction(cfg)
    e, e_integral = c2_E_coeff(cfg)
    m_low, m_high = args.m if args.m else (0, cfg.n)
    table = []
    for m in range(m_low, m_high + 1):
        row = {
            "m": m,
            "chi_OX": chi_OX(cfg, m),
            "chi_OZ": None if obstructed else chi_OZ(cfg, m),
            "chi_E": chi_E(cfg, m),
        }
        table.append(row)
    invariants = {
        "K_X_coefficient": canonical_coeff(cfg),
        "c2_X_coefficient": c2X_coeff(cfg),
        "u": int(u) if u.denominator == 1 else str(u),
        "parity_obstruction": obstructed,
        "deg_Z": int(deg_Z(cfg)) if deg_Z(cfg).denominator == 1 else str(deg_Z(cfg)),
        "e": int(e) if e_integral else str(e),
        "e_integral": e_integral,
    }
    doc = _base_doc(
        "invariants",
        {"n": cfg.n, "degrees": list(cfg.degrees), "r": cfg.r, "m": [m_low, m_high]},
    )
    doc["invariants"] = invariants
    doc["euler_table"] = table
    lines = [
        f"complete intersection: n={cfg.n} degrees={cfg.degrees} r={cfg.r}",
        f"  K_X coefficient      {invariants['K_X_coefficient']}",
        f"  c2(X) coefficient    {invariants['c2_X_coefficient']}",
        f"  u = r(S-s)/2         {invariants['u']}"
        + ("  (parity obstruction: no integral determinant)" if obstructed else ""),
        f"  deg Z                {invariants['deg_Z']}",
        f"  e = c2(E) coeff      {invariants['e']}"
        + ("" if e_integral else "  (non-integral)"),
        f"  {'m':>4s} {'chi(O_X(m))':>14s} {'chi(O_Z(m))':>14s} {'chi(E(m))':>14s}",
    ]
    for row in table:
        chi_oz = "n/a" if row["chi_OZ"] is None else str(row["chi_OZ"])
        lines.append(
            f"  {row['m']:>4d} {row['chi_OX']:>14d} {chi_oz:>14s} {row['chi_E']:>14d}"
        )
    _emit(doc, "\n".join(lines), args)
    return 0


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------


def _cmd_certify(args) -> int:
    certificate = certify(args.n, _parse_int_list(args.degrees), args.r)
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(certificate.to_dict())
    lines = [
        f"verdict: {certificate.verdict}",
        f"reason: {certificate.reason}",
    ]
    for key, value in certificate.witnesses.items():
        lines.append(f"  {key}: {value}")
    if certificate.hypotheses:
        lines.append("conditional on: " + "; ".join(certificate.hypotheses))
    _emit(doc, "\n".join(lines), args)
    if certificate.verdict in (NON_EXISTENCE, EXCLUDED):
        return 0
    return 1


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def _cmd_scan(args) -> int:
    report = verify_cg_scan(
        args.s_max,
        args.d_max,
        b_values=_parse_int_list(args.b),
        workers=args.workers,
        per_tuple=args.list_tuples,
    )
    doc = _base_doc(
        "scan",
        {
            "s_max": args.s_max,
            "d_max": args.d_max,
            "b": list(_parse_int_list(args.b)),
            "workers": args.workers,
        },
    )
    doc.update(report.to_dict())
    lines = []
    for cell in report.cells:
        lines.append(
            f"b={cell.b} s={cell.s}: {cell.tuples_checked} tuples, "
            f"min q = {cell.min_q} at {cell.min_tuple}"
            + (f", {len(cell.violations)} VIOLATIONS" if cell.violations else "")
        )
        if cell.per_tuple is not None:
            for tup, q in cell.per_tuple:
                lines.append(f"    q{tuple(tup)} = {q}")
    lines.append(
        f"total: {report.total_tuples} tuples (weakly decreasing, product >= 2, "
        f"all-ones excluded); status: {'ok' if report.ok else 'VIOLATIONS FOUND'}"
    )
    _emit(doc, "\n".join(lines), args)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulrichci",
        description="Exact verification of the symmetric-function identities and "
        "non-existence certificates for low-rank Ulrich bundles on complete "
        "intersections.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("--output", help="write output to this path instead of stdout")

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run identity verification suites"
    )
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument(
        "--s", type=_parse_range, default=None, help='s range, e.g. "4..8" or "5"'
    )
    p_verify.add_argument("--s-max", type=int, default=6, help="scan: largest s")
    p_verify.add_argument("--d-max", type=int, default=6, help="scan: largest degree")
    p_verify.add_argument(
        "--samples", type=int, default=25, help="random polynomials per s (tf2bis)"
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--workers", type=int, default=_default_workers())
    p_verify.set_defaults(func=_cmd_verify)

    p_inv = sub.add_parser(
        "invariants", parents=[common], help="print invariant and Euler tables"
    )
    p_inv.add_argument("--n", type=int, required=True)
    p_inv.add_argument("--degrees", required=True, help='comma separated, e.g. "2,3"')
    p_inv.add_argument("--r", type=int, required=True)
    p_inv.add_argument(
        "--m", type=_parse_range, default=None, help='twist range, e.g. "0..4"'
    )
    p_inv.set_defaults(func=_cmd_invariants)

    p_cert = sub.add_parser(
        "certify", parents=[common], help="emit a non-existence certificate"
    )
    p_cert.add_argument("--n", type=int, required=True)
    p_cert.add_argument("--degrees", required=True)
    p_cert.add_argument("--r", type=int, required=True)
    p_cert.set_defaults(func=_cmd_certify)

    p_scan = sub.add_parser(
        "scan", parents=[common], help="exhaustive positivity scan of q_{s,b}"
    )
    p_scan.add_argument("--s-max", type=int, required=True)
    p_scan.add_argument("--d-max", type=int, required=True)
    p_scan.add_argument("--b", default="8,9", help='comma separated, e.g. "8,9"')
    p_scan.add_argument("--workers", type=int, default=_default_workers())
    p_scan.add_argument(
        "--list-tuples",
        action="store_true",
        help="include per-tuple q values (small scans only)",
    )
    p_scan.set_defaults(func=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as exc:  # bad range syntax inside type converters
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, ParityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
