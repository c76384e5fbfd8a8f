"""Command-line interface.

Pair commands always mean ``K # mirror(L)`` and ``L # mirror(K)``; there is no
general connected-sum syntax because the formulas only cover these sums.

Exit codes: 0 success, 1 usage error, 2 rejected input or precondition,
3 mismatch (reference table row or oracle disagreement).
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from typing import Optional

from .errors import InvalidKnotData, PreconditionError, TruncationError
from .nu_plus import fraction_str, nu_plus_sum, surgery_d_invariants, v_sequence_single, v_sequence_sum
from .obstructions import cobordism_genus_bound, concordance_bounds, gordian_bound, semicontinuity
from .oracle import min_truncation, v_sequence_oracle
from .parsing import KnotSpec, ParseError, parse_knot
from .semigroups import to_alexander
from .staircase import staircase_from_gamma
from .tables import reference_tables

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_MISMATCH = 0, 1, 2, 3

log = logging.getLogger("nuplus")


def cmd_invariants(k: KnotSpec) -> dict:
    g = k.resolved
    v = v_sequence_single(g)
    return {
        "knot": k.render(),
        "delta": g.delta,
        "semigroup_prefix": list(g.prefix),
        "gaps": list(g.gaps()),
        "semigroup_closed": g.semigroup_closed,
        "staircase": staircase_from_gamma(g).to_dict(),
        "alexander_exponents": list(to_alexander(g).exponents),
        "v_sequence": v.to_dict(),
        "nu_plus": v.nu_plus,
    }


def cmd_pair(k1: KnotSpec, k2: KnotSpec, surgery: Optional[int] = None, max_n: Optional[int] = None) -> dict:
    K, L = k1.resolved, k2.resolved
    v_kl, v_lk = v_sequence_sum(K, L, max_n), v_sequence_sum(L, K, max_n)
    d = None
    if surgery is not None:
        d = {
            "K#mL": [fraction_str(x) for x in surgery_d_invariants(v_kl, surgery)],
            "L#mK": [fraction_str(x) for x in surgery_d_invariants(v_lk, surgery)],
        }
    return {
        "k": k1.render(),
        "l": k2.render(),
        "nu_kl": nu_plus_sum(K, L, max_n),
        "nu_lk": nu_plus_sum(L, K, max_n),
        "v_kl": v_kl.to_dict(),
        "v_lk": v_lk.to_dict(),
        "cobordism_genus_bound": cobordism_genus_bound(K, L),
        "gordian_bound": gordian_bound(K, L),
        "concordance_bounds": concordance_bounds(K, L).to_dict(),
        "surgery_n": surgery,
        "d_invariants": d,
    }


def cmd_deform(k_central: KnotSpec, k_perturbed: KnotSpec) -> dict:
    return semicontinuity(k_central.resolved, k_perturbed.resolved).to_dict()


def cmd_oracle(k1: KnotSpec, k2: KnotSpec, trunc: Optional[int] = None) -> dict:
    K, L = k1.resolved, k2.resolved
    sL = staircase_from_gamma(L)
    # an override may only raise the truncation
    N = max(trunc or 0, min_truncation(K, sL))
    oracle = v_sequence_oracle(K, sL, N)
    formula = v_sequence_sum(K, L)
    return {
        "k": k1.render(),
        "l": k2.render(),
        "N": N,
        "oracle": oracle.to_dict(),
        "formula": formula.to_dict(),
        "status": "PASS" if oracle == formula else "FAIL",
    }


def cmd_paper_tables(include_grid: bool = True) -> list[dict]:
    return [row.to_dict() for row in reference_tables(include_grid)]


# --- output ---------------------------------------------------------------

def _flatten(prefix: str, value, out: list):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(value, list):
        out.append((prefix, " ".join(map(str, value))))
    else:
        out.append((prefix, value))


def emit(report, fmt: str, subject: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump(report, stream, indent=2)
        stream.write("\n")
        return
    if fmt == "csv":
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(["subject", "quantity", "value"])
        if isinstance(report, list):
            for row in report:
                w.writerow([row["row"], "status", row["status"]])
                w.writerow([row["row"], "computed", json.dumps(row["computed"])])
                w.writerow([row["row"], "expected", json.dumps(row["expected"])])
        else:
            flat: list = []
            _flatten("", report, flat)
            for k, v in flat:
                w.writerow([subject, k, v])
        return
    if isinstance(report, list):
        width = max(len(r["row"]) for r in report)
        for r in report:
            stream.write(f"{r['status']:4}  {r['row']:<{width}}  computed={r['computed']}  expected={r['expected']}\n")
        return
    flat = []
    _flatten("", report, flat)
    width = max(len(k) for k, _ in flat)
    for k, v in flat:
        stream.write(f"{k:<{width}}  {'-' if v is None else v}\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output")
    common.add_argument("-v", "--verbose", action="store_true", help="log resolved inputs and timing to stderr")

    parser = _Parser(
        prog="nuplus",
        description="nu+ of K # mirror(L) for L-space knots, and the bounds it gives.",
        epilog="Knots: U | T(p,q) | S{g1,g2,...} | A[e0,e1,...] | G[v0,...,vd;d]",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="semigroup, staircase, V-sequence of one knot")
    p.add_argument("knot")

    p = sub.add_parser("pair", parents=[common], help="nu+ both ways and derived bounds for K, L")
    p.add_argument("k")
    p.add_argument("l")
    p.add_argument("--surgery", type=int, metavar="n", help="also emit d(S^3_n) of both sums")
    p.add_argument("--max-n", type=int, metavar="B", help="extend the scan range of the maxima")

    p = sub.add_parser("deform", parents=[common], help="semicontinuity obstruction for central K -> perturbed L")
    p.add_argument("k")
    p.add_argument("l")

    p = sub.add_parser("oracle", parents=[common], help="chain-level check of V(K # mirror L)")
    p.add_argument("k")
    p.add_argument("l")
    p.add_argument("--trunc", type=int, metavar="N", help="U-power truncation (never below the safe floor)")

    p = sub.add_parser("tables", parents=[common], help="recompute every reference value with PASS/FAIL per row")
    p.add_argument("--quick", action="store_true", help="skip the oracle and property grid rows")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help; keep main() callable from Python
        return int(exc.code or 0)
    fmt = args.fmt or "text"
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    if args.verbose:
        log.addHandler(handler)
        log.setLevel(logging.INFO)
    start = time.perf_counter()
    try:
        return _dispatch(args, fmt)
    except ParseError as exc:
        print(f"nuplus: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidKnotData, PreconditionError, TruncationError) as exc:
        print(f"nuplus: rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    finally:
        log.info("%s finished in %.3fs", args.command, time.perf_counter() - start)
        log.removeHandler(handler)
        log.setLevel(logging.NOTSET)


def _parse(text: str) -> KnotSpec:
    k = parse_knot(text)
    g = k.resolved
    log.info("%s: delta=%d prefix=%s closed=%s", k.render(), g.delta, list(g.prefix), g.semigroup_closed)
    return k


def _dispatch(args, fmt: str) -> int:
    if args.command == "invariants":
        k = _parse(args.knot)
        emit(cmd_invariants(k), fmt, k.render())
        return EXIT_OK
    if args.command == "tables":
        report = cmd_paper_tables(not args.quick)
        emit(report, fmt, "tables")
        return EXIT_OK if all(r["status"] == "PASS" for r in report) else EXIT_MISMATCH
    k1, k2 = _parse(args.k), _parse(args.l)
    subject = f"{k1.render()}#m{k2.render()}"
    if args.command == "pair":
        if args.surgery is not None and args.surgery <= 0:
            raise PreconditionError(f"--surgery must be positive, got {args.surgery}")
        emit(cmd_pair(k1, k2, args.surgery, args.max_n), fmt, subject)
        return EXIT_OK
    if args.command == "deform":
        emit(cmd_deform(k1, k2), fmt, subject)
        return EXIT_OK
    report = cmd_oracle(k1, k2, args.trunc)
    log.info("oracle truncation N=%d", report["N"])
    emit(report, fmt, subject)
    return EXIT_OK if report["status"] == "PASS" else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
