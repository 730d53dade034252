"""Command-line front end.

Subcommands:
  seq     print bi-periodic Padovan/Perrin terms, symbolic or mod p
  fib     entry point and Pisano period of an odd prime
  verify  run the zero-divisor claim checks for one twin prime
  scan    aggregate verdicts over all twin primes up to a bound

Exit codes: 0 success (no FAILS), 1 usage/validation error, 2 at least
one FAILS verdict.  All output is deterministic for a given invocation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

from . import __version__
from .fibonacci import FibProfile
from .modular import is_prime, twin_primes_upto
from .sequences import (
    NotTwinPrime,
    SeqParams,
    padovan_mod,
    padovan_sym_terms,
    perrin_mod,
    perrin_sym_terms,
)
from .verifier import (
    FAILS,
    CASE_IDS,
    ExcludedPrime,
    TheoremCase,
    applicable_case_ids,
    verify_case,
)


class CliError(Exception):
    """Input validation failure; reported on stderr with exit status 1."""


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    upto: int | None = None
    kind: str | None = None
    symbolic: bool = False
    case: str | None = None
    format: str = "table"
    out: str | None = None
    scan_multiplier: int = 2

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; we reserve 2 for FAILS
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padquat", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print sequence terms")
    p_seq.add_argument("--kind", choices=["padovan", "perrin"], default=None,
                       help="which sequence (default: both)")
    p_seq.add_argument("--symbolic", action="store_true",
                       help="exact polynomials in a, b instead of residues")
    p_seq.add_argument("--p", type=int, default=None,
                       help="twin prime modulus; coefficients are (p-2, p)")
    p_seq.add_argument("--upto", type=int, required=True,
                       help="number of terms (indices 0..N-1)")

    p_fib = sub.add_parser("fib", help="Fibonacci profile of a prime")
    p_fib.add_argument("--p", type=int, required=True)

    p_ver = sub.add_parser("verify", help="check the zero-divisor claims for one twin prime")
    p_ver.add_argument("--p", type=int, required=True)
    p_ver.add_argument("--case", choices=list(CASE_IDS), default=None,
                       help="a single claim id (default: all applicable)")
    p_ver.add_argument("--scan-multiplier", type=int, default=2)

    p_scan = sub.add_parser("scan", help="verdicts for every twin prime up to a bound")
    p_scan.add_argument("--upto", type=int, required=True,
                        help="inclusive bound on the twin prime p")
    p_scan.add_argument("--scan-multiplier", type=int, default=2)

    for sp in (p_seq, p_fib, p_ver, p_scan):
        sp.add_argument("--format", choices=["table", "json", "csv"], default="table")
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        p=getattr(args, "p", None),
        upto=getattr(args, "upto", None),
        kind=getattr(args, "kind", None),
        symbolic=getattr(args, "symbolic", False),
        case=getattr(args, "case", None),
        format=args.format,
        out=args.out,
        scan_multiplier=getattr(args, "scan_multiplier", 2),
    )


def _json_document(config: RunConfig, payload: dict) -> str:
    doc = {"tool_version": __version__, "config": config.to_dict(), **payload}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table_text(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
             for row in cells]
    return "\n".join(lines) + "\n"


def cmd_seq(config: RunConfig) -> tuple[str, int]:
    n = config.upto or 0
    if n < 0:
        raise CliError("--upto must be nonnegative")
    kinds = [config.kind] if config.kind else ["padovan", "perrin"]
    columns: dict[str, list] = {}
    if config.symbolic:
        if "padovan" in kinds:
            columns["padovan"] = [str(t) for t in padovan_sym_terms(n)]
        if "perrin" in kinds:
            columns["perrin"] = [str(t) for t in perrin_sym_terms(n)]
    else:
        if config.p is None:
            raise CliError("seq needs --symbolic or a twin prime --p")
        try:
            params = SeqParams.twin_prime(config.p)
        except NotTwinPrime as exc:
            raise CliError(str(exc)) from exc
        if "padovan" in kinds:
            columns["padovan"] = padovan_mod(params, n)
        if "perrin" in kinds:
            columns["perrin"] = perrin_mod(params, n)

    header = ["n"] + kinds
    rows = [[i] + [columns[k][i] for k in kinds] for i in range(n)]
    if config.format == "json":
        terms = [dict(zip(header, row)) for row in rows]
        return _json_document(config, {"terms": terms}), 0
    if config.format == "csv":
        return _csv_text(header, rows), 0
    return _table_text(header, rows), 0


def cmd_fib(config: RunConfig) -> tuple[str, int]:
    p = config.p
    if p is None or p < 3 or p % 2 == 0 or not is_prime(p):
        raise CliError(f"--p must be an odd prime >= 3, got {p}")
    profile = FibProfile.of(p)
    payload = {
        "p": profile.p,
        "entry_point": profile.entry_point,
        "pisano_period": profile.pisano_period,
        "relation": profile.relation(),
    }
    if config.format == "json":
        return _json_document(config, {"profile": payload}), 0
    header = list(payload.keys())
    if config.format == "csv":
        return _csv_text(header, [list(payload.values())]), 0
    lines = [f"{k}: {v}" for k, v in payload.items()]
    return "\n".join(lines) + "\n", 0


def _verdict_row(v) -> list:
    first = v.first_counterexample()
    return [
        v.case.p,
        v.case.claim_id,
        "even" if v.case.parity == 0 else "odd",
        v.case.hypothesis_class,
        len(v.predicted),
        len(v.observed),
        v.classification,
        "" if first is None else first,
    ]


_ROW_HEADER = [
    "prime",
    "case_id",
    "parity",
    "hypothesis_class",
    "predicted_count",
    "observed_count",
    "classification",
    "first_counterexample",
]


def cmd_verify(config: RunConfig) -> tuple[str, int]:
    p = config.p
    if config.scan_multiplier < 2:
        raise CliError("--scan-multiplier must be at least 2")
    try:
        if config.case is not None:
            cases = [TheoremCase.build(config.case, p)]
        else:
            cases = [TheoremCase.build(cid, p) for cid in applicable_case_ids(p)]
    except (NotTwinPrime, ExcludedPrime) as exc:
        raise CliError(str(exc)) from exc
    verdicts = [verify_case(c, config.scan_multiplier) for c in cases]
    status = 2 if any(v.classification == FAILS for v in verdicts) else 0
    if config.format == "json":
        payload = {"verdicts": [v.to_dict() for v in verdicts]}
        return _json_document(config, payload), status
    rows = [_verdict_row(v) for v in verdicts]
    if config.format == "csv":
        return _csv_text(_ROW_HEADER, rows), status
    return _table_text(_ROW_HEADER, rows), status


def cmd_scan(config: RunConfig) -> tuple[str, int]:
    bound = config.upto if config.upto is not None else 0
    if config.scan_multiplier < 2:
        raise CliError("--scan-multiplier must be at least 2")
    verdicts = []  # bounds below 5 yield a header-only report
    for _, p in twin_primes_upto(bound):
        for cid in applicable_case_ids(p):
            case = TheoremCase.build(cid, p)
            verdicts.append(verify_case(case, config.scan_multiplier))
    verdicts.sort(key=lambda v: (v.case.p, v.case.claim_id))
    status = 2 if any(v.classification == FAILS for v in verdicts) else 0
    rows = [_verdict_row(v) for v in verdicts]
    if config.format == "json":
        payload = {"verdicts": [dict(zip(_ROW_HEADER, row)) for row in rows]}
        return _json_document(config, payload), status
    if config.format == "csv":
        return _csv_text(_ROW_HEADER, rows), status
    return _table_text(_ROW_HEADER, rows), status


_COMMANDS = {
    "seq": cmd_seq,
    "fib": cmd_fib,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from(args)
    try:
        text, status = _COMMANDS[config.command](config)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
