"""Command-line interface and serialization.

Subcommands:

* gen     - generate family polynomials (optionally through an on-disk cache)
* oracle  - brute-force distribution polynomials from group enumeration
* verify  - run the verification suite (exit 1 when any check fails)
* scan    - threshold bracketing / distinct-roots region scans
* zigzag  - Euler zigzag numbers

Output formats are text, json, and csv.  Machine formats are byte-identical
for identical argv: coefficients and rationals are serialized as decimal
strings (family coefficients overflow 64-bit integers around rank 20), and
elapsed times appear only in the text format.  JSON payloads carry a
"schema": 1 version field.

The cache stores one JSON file per (family, rank), written atomically
(temp file + rename) so concurrent runs never observe torn files.  Each run
that uses the cache re-derives one randomly chosen cached entry and refuses
to continue if it does not match.

Exit codes: 0 success / all checks pass, 1 verification failures, 2 usage or
domain errors.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import decimal
import io
import json
import os
import random
import sys
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import lab, oracle
from .eulerian import (
    FAMILIES,
    ConsistencyError,
    FamilyId,
    ZigzagTable,
    family_polynomial,
    zigzag,
)
from .lab import BracketError, MonotonicityError, ThresholdBracket, VerificationReport
from .oracle import BudgetExceededError
from .polynomial import Polynomial
from .stability import approximate_real_roots

SCHEMA_VERSION = 1
CACHE_ENV_VAR = "EULERSTAB_CACHE_DIR"
FORMATS = ("text", "json", "csv")
VERIFY_CHECKS = ("identities", "interlacing", "half-reciprocal", "stability", "operator-symbol", "all")
_OPERATOR_SEED = 0x0E57AB


class CacheError(RuntimeError):
    """A cached polynomial disagrees with its re-derivation."""


# ---------------------------------------------------------------------------
# configuration


@dataclasses.dataclass
class CliConfig:
    subcommand: str
    fmt: str = "text"
    family: Optional[str] = None
    group: Optional[str] = None
    stat: Optional[str] = None
    filter: str = "all"
    n: Optional[int] = None
    n_max: Optional[int] = None
    check: Optional[str] = None
    conjecture: Optional[str] = None
    width: Fraction = Fraction(1, 10**6)
    ks: Optional[List[Fraction]] = None
    cache_dir: Optional[Path] = None
    budget: int = oracle.DEFAULT_BUDGET
    roots: bool = False

    def ranks(self) -> List[int]:
        assert self.n is not None
        hi = self.n if self.n_max is None else self.n_max
        if hi < self.n:
            raise ValueError(f"empty rank range {self.n}..{hi}")
        return list(range(self.n, hi + 1))


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _parse_rational_list(text: str) -> List[Fraction]:
    return [_parse_rational(part) for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerstab",
        description="Exact Eulerian polynomial families, enumeration oracles, and stability certificates.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
        p.add_argument(
            "--cache-dir",
            type=Path,
            default=None,
            help=f"polynomial cache directory (or set {CACHE_ENV_VAR})",
        )
        p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="enumeration budget")

    p = sub.add_parser("gen", help="generate family polynomials")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument(
        "--roots",
        action="store_true",
        help="also print 20-digit decimal root approximations (text format only)",
    )
    add_common(p)

    p = sub.add_parser("oracle", help="brute-force distribution polynomials")
    p.add_argument("--group", required=True, choices=oracle.GROUPS)
    p.add_argument("--stat", default="des", choices=oracle.STATS)
    p.add_argument("--filter", default="all", choices=oracle.FILTERS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--n-max", type=int, default=None)
    add_common(p)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("--check", required=True, choices=VERIFY_CHECKS)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--ks", type=_parse_rational_list, default=None, help="comma-separated rational k values")
    add_common(p)

    p = sub.add_parser("scan", help="scan conjectured stability regions")
    p.add_argument("--conjecture", required=True, choices=("stable", "distinct-roots"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--width", type=_parse_rational, default=Fraction(1, 10**6))
    p.add_argument("--ks", type=_parse_rational_list, default=None)
    add_common(p)

    p = sub.add_parser("zigzag", help="Euler zigzag numbers E_0..E_n")
    p.add_argument("--n", required=True, type=int)
    add_common(p)

    return parser


# ---------------------------------------------------------------------------
# serialization


def _decimal_str(value: Fraction, digits: int = 20) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator))


def polynomial_record(poly: Polynomial, **meta) -> dict:
    rec = {"schema": SCHEMA_VERSION}
    rec.update({k: v for k, v in meta.items() if v is not None})
    rec["coeffs"] = [str(c) for c in poly.coeffs]
    return rec


def polynomial_from_record(rec: dict) -> Polynomial:
    return Polynomial([Fraction(c) for c in rec["coeffs"]])


def report_record(report: VerificationReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "check": report.check_id,
        "rank_range": list(report.rank_range),
        "status": report.status,
        "checks": report.checks_run,
        "failures": [{"rank": rank, "description": msg} for rank, msg in report.failures],
        "observations": list(report.observations),
    }


def bracket_record(bracket: ThresholdBracket) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "conjecture": "stable",
        "n": bracket.n,
        "conjectured": str(bracket.conjectured),
        "lower": str(bracket.lower),
        "upper": str(bracket.upper),
        "width": str(bracket.width),
    }


def zigzag_record(table: ZigzagTable) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": len(table) - 1,
        "values": [str(v) for v in table.values],
    }


def _json_dump(records: List[dict]) -> str:
    if len(records) == 1:
        return json.dumps(records[0], sort_keys=True)
    return json.dumps({"schema": SCHEMA_VERSION, "items": records}, sort_keys=True)


def _csv_dump(header: List[str], rows: List[List[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _poly_label(rec: dict) -> str:
    if "family" in rec:
        return f"{rec['family']}({rec['n']})"
    return f"{rec['group']}/{rec['stat']}/{rec['filter']}({rec['n']})"


def _polynomials_text(records: List[dict]) -> str:
    return "\n".join(f"{_poly_label(rec)} = {polynomial_from_record(rec)}" for rec in records)


def _polynomials_csv(records: List[dict]) -> str:
    width = max(len(rec["coeffs"]) for rec in records)
    meta_keys = [k for k in ("family", "group", "stat", "filter") if k in records[0]]
    header = meta_keys + ["n", "degree"] + [f"c{i}" for i in range(width)]
    rows = []
    for rec in records:
        coeffs = rec["coeffs"]
        degree = len(coeffs) - 1
        rows.append(
            [str(rec[k]) for k in meta_keys]
            + [str(rec["n"]), str(degree)]
            + coeffs
            + [""] * (width - len(coeffs))
        )
    return _csv_dump(header, rows)


def _reports_text(reports: List[VerificationReport]) -> str:
    lines = []
    for r in reports:
        lo, hi = r.rank_range
        lines.append(
            f"{r.status.upper()} {r.checks_run} checks ({r.check_id}, ranks {lo}..{hi}) [{r.elapsed:.2f}s]"
        )
        for rank, msg in r.failures:
            lines.append(f"  FAIL rank {rank}: {msg}")
        for obs in r.observations:
            lines.append(f"  note: {obs}")
    return "\n".join(lines)


def _reports_csv(reports: List[VerificationReport]) -> str:
    header = ["check", "rank_lo", "rank_hi", "status", "checks", "failures", "observations"]
    rows = []
    for r in reports:
        rows.append(
            [
                r.check_id,
                str(r.rank_range[0]),
                str(r.rank_range[1]),
                r.status,
                str(r.checks_run),
                "; ".join(f"rank {rank}: {msg}" for rank, msg in r.failures),
                "; ".join(r.observations),
            ]
        )
    return _csv_dump(header, rows)


def _brackets_text(brackets: List[ThresholdBracket]) -> str:
    lines = []
    for b in brackets:
        lines.append(
            f"stable-threshold n={b.n}: conjectured {b.conjectured} "
            f"(approx {_decimal_str(b.conjectured)}), bracket [{b.lower}, {b.upper}], "
            f"width {b.width} (midpoint approx {_decimal_str((b.lower + b.upper) / 2)})"
        )
    return "\n".join(lines)


def _brackets_csv(brackets: List[ThresholdBracket]) -> str:
    header = ["n", "conjectured", "lower", "upper", "width"]
    rows = [[str(b.n), str(b.conjectured), str(b.lower), str(b.upper), str(b.width)] for b in brackets]
    return _csv_dump(header, rows)


def emit(obj, fmt: str, **meta) -> str:
    """Serialize a polynomial, zigzag table, report, or threshold bracket."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, Polynomial):
        rec = polynomial_record(obj, **meta)
        if fmt == "json":
            return _json_dump([rec])
        if fmt == "csv":
            return _polynomials_csv([rec])
        return _polynomials_text([rec]) if meta else str(obj)
    if isinstance(obj, ZigzagTable):
        rec = zigzag_record(obj)
        if fmt == "json":
            return _json_dump([rec])
        if fmt == "csv":
            return _csv_dump([f"E{i}" for i in range(len(obj))], [list(rec["values"])])
        return "E_0..E_{}: {}".format(len(obj) - 1, ", ".join(rec["values"]))
    if isinstance(obj, VerificationReport):
        if fmt == "json":
            return _json_dump([report_record(obj)])
        if fmt == "csv":
            return _reports_csv([obj])
        return _reports_text([obj])
    if isinstance(obj, ThresholdBracket):
        if fmt == "json":
            return _json_dump([bracket_record(obj)])
        if fmt == "csv":
            return _brackets_csv([obj])
        return _brackets_text([obj])
    raise TypeError(f"cannot emit {type(obj).__name__}")


# ---------------------------------------------------------------------------
# cache


def _cache_path(cache_dir: Path, fid: FamilyId) -> Path:
    return cache_dir / f"{fid.tag}_{fid.rank}.json"


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_or_generate(cache_dir: Optional[Path], fid: FamilyId) -> Polynomial:
    if cache_dir is None:
        return family_polynomial(fid)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _cache_path(cache_dir, fid)
    if path.exists():
        try:
            rec = json.loads(path.read_text())
            if rec.get("family") != fid.tag or rec.get("n") != fid.rank:
                raise CacheError(f"cache entry {path.name} is mislabeled")
            return polynomial_from_record(rec)
        except (AttributeError, KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise CacheError(f"cache entry {path.name} is unreadable: {exc}") from exc
    poly = family_polynomial(fid)
    _atomic_write(path, _json_dump([polynomial_record(poly, family=fid.tag, n=fid.rank)]))
    return poly


def validate_cache_sample(cache_dir: Path) -> None:
    """Re-derive one randomly chosen cached entry; raise CacheError on mismatch."""
    files = sorted(cache_dir.glob("*.json"))
    if not files:
        return
    path = random.choice(files)
    try:
        rec = json.loads(path.read_text())
        fid = FamilyId(rec["family"], rec["n"])
        cached = polynomial_from_record(rec)
    except (AttributeError, KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise CacheError(f"cache entry {path.name} is unreadable: {exc}") from exc
    if cached != family_polynomial(fid):
        raise CacheError(f"cache entry {path.name} does not match its re-derivation")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gen(cfg: CliConfig) -> tuple[str, int]:
    if cfg.roots and cfg.fmt != "text":
        raise ValueError("--roots is only available with the text format")
    records = []
    polys = []
    for n in cfg.ranks():
        fid = FamilyId(cfg.family, n)
        poly = load_or_generate(cfg.cache_dir, fid)
        polys.append(poly)
        records.append(polynomial_record(poly, family=fid.tag, n=fid.rank))
    if cfg.fmt == "json":
        return _json_dump(records), 0
    if cfg.fmt == "csv":
        return _polynomials_csv(records), 0
    if not cfg.roots:
        return _polynomials_text(records), 0
    lines = []
    for rec, poly in zip(records, polys):
        lines.append(f"{_poly_label(rec)} = {poly}")
        if poly.degree >= 1:
            for mid, mult in approximate_real_roots(poly):
                lines.append(f"  real root approx {_decimal_str(mid)} (multiplicity {mult})")
        else:
            lines.append("  no real roots")
    return "\n".join(lines), 0


def _cmd_oracle(cfg: CliConfig) -> tuple[str, int]:
    records = []
    for n in cfg.ranks():
        poly = oracle.distribution(cfg.group, cfg.stat, n, cfg.filter, budget=cfg.budget)
        records.append(
            polynomial_record(poly, group=cfg.group, stat=cfg.stat, filter=cfg.filter, n=n)
        )
    if cfg.fmt == "json":
        return _json_dump(records), 0
    if cfg.fmt == "csv":
        return _polynomials_csv(records), 0
    return _polynomials_text(records), 0


def _verify_reports(cfg: CliConfig) -> List[VerificationReport]:
    n_max = cfg.n_max if cfg.n_max is not None else 10
    wanted = cfg.check
    reports: List[VerificationReport] = []
    if wanted in ("identities", "all"):
        reports.append(lab.verify_identities(n_max))
    if wanted in ("interlacing", "all"):
        reports.append(
            lab.merge_reports(
                "d-affine-interlacing", [lab.verify_d_affine_b(n) for n in range(2, n_max + 1)]
            )
        )
    if wanted in ("half-reciprocal", "all"):
        reports.append(
            lab.merge_reports(
                "half-reciprocal", [lab.verify_half_reciprocal(n) for n in range(1, n_max + 1)]
            )
        )
    if wanted in ("stability", "all"):
        per_rank = []
        for n in range(2, n_max + 1):
            ks = cfg.ks if cfg.ks is not None else lab.default_k_grid(n)
            per_rank.append(lab.verify_family_stability(n, ks))
        reports.append(lab.merge_reports("family-stability", per_rank))
    if wanted in ("operator-symbol", "all"):
        rng = random.Random(_OPERATOR_SEED)
        per_rank = []
        for n in range(1, n_max + 1):
            ks = cfg.ks
            if ks is None:
                ks = [Fraction(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(3)]
            per_rank.append(
                lab.merge_reports("operator-symbol", [lab.operator_symbol_check(n, k) for k in ks])
            )
        reports.append(lab.merge_reports("operator-symbol", per_rank))
    return reports


def _cmd_verify(cfg: CliConfig) -> tuple[str, int]:
    reports = _verify_reports(cfg)
    failed = any(r.status == "fail" for r in reports)
    if cfg.fmt == "json":
        out = _json_dump([report_record(r) for r in reports])
    elif cfg.fmt == "csv":
        out = _reports_csv(reports)
    else:
        total = sum(r.checks_run for r in reports)
        status = "FAIL" if failed else "PASS"
        out = _reports_text(reports) + f"\n{status} {total} checks total"
    return out, 1 if failed else 0


def _cmd_scan(cfg: CliConfig) -> tuple[str, int]:
    if cfg.conjecture == "stable":
        brackets = [lab.critical_k(n, cfg.width) for n in cfg.ranks()]
        if cfg.fmt == "json":
            return _json_dump([bracket_record(b) for b in brackets]), 0
        if cfg.fmt == "csv":
            return _brackets_csv(brackets), 0
        return _brackets_text(brackets), 0
    reports = []
    for n in cfg.ranks():
        ks = cfg.ks if cfg.ks is not None else lab.default_distinct_grid(n)
        reports.append(lab.scan_distinct_roots(n, ks))
    failed = any(r.status == "fail" for r in reports)
    if cfg.fmt == "json":
        out = _json_dump([report_record(r) for r in reports])
    elif cfg.fmt == "csv":
        out = _reports_csv(reports)
    else:
        out = _reports_text(reports)
    return out, 1 if failed else 0


def _cmd_zigzag(cfg: CliConfig) -> tuple[str, int]:
    return emit(zigzag(cfg.n), cfg.fmt), 0


# ---------------------------------------------------------------------------
# entry point


def _config_from_namespace(ns: argparse.Namespace) -> CliConfig:
    cache_dir = getattr(ns, "cache_dir", None)
    if cache_dir is None and os.environ.get(CACHE_ENV_VAR):
        cache_dir = Path(os.environ[CACHE_ENV_VAR])
    return CliConfig(
        subcommand=ns.subcommand,
        fmt=getattr(ns, "fmt", "text"),
        family=getattr(ns, "family", None),
        group=getattr(ns, "group", None),
        stat=getattr(ns, "stat", None),
        filter=getattr(ns, "filter", "all"),
        n=getattr(ns, "n", None),
        n_max=getattr(ns, "n_max", None),
        check=getattr(ns, "check", None),
        conjecture=getattr(ns, "conjecture", None),
        width=getattr(ns, "width", Fraction(1, 10**6)),
        ks=getattr(ns, "ks", None),
        cache_dir=cache_dir,
        budget=getattr(ns, "budget", oracle.DEFAULT_BUDGET),
        roots=getattr(ns, "roots", False),
    )


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config_from_namespace(ns)
    try:
        if cfg.cache_dir is not None and cfg.cache_dir.is_dir():
            validate_cache_sample(cfg.cache_dir)
        handler = {
            "gen": _cmd_gen,
            "oracle": _cmd_oracle,
            "verify": _cmd_verify,
            "scan": _cmd_scan,
            "zigzag": _cmd_zigzag,
        }[cfg.subcommand]
        out, code = handler(cfg)
    except (ValueError, BudgetExceededError, CacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BracketError, MonotonicityError, ConsistencyError) as exc:
        print(f"FAIL {exc}")
        return 1
    if out:
        print(out)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
