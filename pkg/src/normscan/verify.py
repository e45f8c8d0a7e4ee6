"""Batch verification scans over the prime families.

A scan walks every prime exponent in range, computes the family value,
its primality, its x**2 + d*y**2 representation when one exists, and
evaluates the divisibility claims for in-gate exponents.  Out-of-gate
or composite-value exponents stay in the report marked not-applicable,
so nothing is skipped silently.

Reports serialize deterministically: identical inputs give identical
bytes, and a parallel scan reproduces the sequential bytes.
"""

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .arith import jacobi
from .primality import PrimalityVerdict, is_prime, primes_up_to
from .representation import Representation, cornacchia
from .sequences import (
    NormSequenceKind,
    eisenstein_mersenne_norm,
    gaussian_mersenne_norm,
    mersenne,
    sqrt2_analog_norm,
)

__all__ = [
    "Claim",
    "Report",
    "ScanRecord",
    "check_equivalence",
    "emit_report",
    "report_exit_code",
    "scan_eisenstein",
    "scan_gaussian",
    "scan_mersenne",
    "scan_sqrt2_analog",
]

TOOL = "normscan 0.1.0"

# Stable claim identifiers (report consumers diff on these).
CLAIM_GAUSSIAN_X = "lemma3.3.x"        # x = +-1 (mod 8)
CLAIM_GAUSSIAN_4Y = "lemma3.3.4y"      # 4 | y
CLAIM_GAUSSIAN_8Y = "thm3.4.8y"        # 8 | y
CLAIM_EISENSTEIN_7Y = "eisenstein.7y"          # 7 | y
CLAIM_EISENSTEIN_X2 = "eisenstein.x2mod7"      # x**2 = 1 (mod 7)
CLAIM_EISENSTEIN_14 = "eisenstein.1mod14"      # value = 1 (mod 14)
CLAIM_MERSENNE_8X = "mersenne.8x"      # 8 | x
CLAIM_MERSENNE_Y3 = "mersenne.y3mod8"  # y = +-3 (mod 8)
CLAIM_ANALOG_8X = "analog.8x"          # 8 | x
CLAIM_EQUIV_IFF = "equiv.iff"          # d-form and 2d-form coexist

DEFAULT_MAX_EXPONENT = {
    NormSequenceKind.GAUSSIAN_MERSENNE: 200,
    NormSequenceKind.EISENSTEIN_MERSENNE: 200,
    NormSequenceKind.MERSENNE: 127,
    NormSequenceKind.SQRT2_ANALOG: 200,
}


@dataclass(frozen=True)
class Claim:
    id: str
    status: str  # "pass" | "fail" | "na"


@dataclass(frozen=True)
class ScanRecord:
    kind: str
    p: int
    value: int
    primality: PrimalityVerdict
    congruence: str
    jacobi_neg_d: Optional[int]
    representation: Optional[Representation]
    x_mod: Optional[int]
    y_mod: Optional[int]
    claims: Tuple[Claim, ...]


@dataclass(frozen=True)
class Report:
    tool: str
    params: dict
    records: Tuple[ScanRecord, ...]

    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "na": 0}
        for record in self.records:
            for claim in record.claims:
                counts[claim.status] += 1
        return counts

    def verdict(self) -> str:
        return "fail" if self.summary()["fail"] else "pass"

    def to_dict(self) -> dict:
        return {
            "tool": self.tool,
            "params": self.params,
            "records": [_record_dict(r) for r in self.records],
            "summary": self.summary(),
            "verdict": self.verdict(),
        }


def _record_dict(record: ScanRecord) -> dict:
    rep = record.representation
    if rep is not None:
        # end-to-end recheck before anything is serialized
        if rep.x * rep.x + rep.d * rep.y * rep.y != record.value:
            raise AssertionError(f"corrupt representation for p={record.p}")
    return {
        "kind": record.kind,
        "p": record.p,
        "value": str(record.value),
        "primality": record.primality.verdict.value,
        "congruence": record.congruence,
        "jacobi_neg_d": record.jacobi_neg_d,
        "representation": None
        if rep is None
        else {"d": rep.d, "x": str(rep.x), "y": str(rep.y)},
        "x_mod": record.x_mod,
        "y_mod": record.y_mod,
        "claims": [{"id": c.id, "status": c.status} for c in record.claims],
    }


def _claims(ids: Sequence[str], status: str) -> Tuple[Claim, ...]:
    return tuple(Claim(i, status) for i in ids)


def _claim(cid: str, ok: bool) -> Claim:
    return Claim(cid, "pass" if ok else "fail")


def _representation_for(d: int, value: int, verdict: PrimalityVerdict):
    """(jacobi(-d, value), representation-or-None) for a prime-ish value."""
    if not verdict or value % 2 == 0 or value < 3:
        return None, None
    symbol = jacobi(-d % value, value)
    if symbol != 1:
        return symbol, None
    return symbol, cornacchia(d, value)


def _gaussian_record(p: int) -> ScanRecord:
    value = gaussian_mersenne_norm(p)
    verdict = is_prime(value)
    congruence = f"p%3={p % 3},p%8={p % 8}"
    ids = (CLAIM_GAUSSIAN_X, CLAIM_GAUSSIAN_4Y, CLAIM_GAUSSIAN_8Y)
    symbol, rep = _representation_for(7, value, verdict)
    in_gate = bool(verdict) and p > 7 and p % 3 in (1, 2)
    if not in_gate:
        claims = _claims(ids, "na")
    elif rep is None:
        # prime, in gate, but -7 is a non-residue: the form cannot exist
        # for this exponent, so the divisibility claims are vacuous
        claims = _claims(ids, "na" if symbol != 1 else "fail")
    else:
        claims = (
            _claim(CLAIM_GAUSSIAN_X, rep.x % 8 in (1, 7)),
            _claim(CLAIM_GAUSSIAN_4Y, rep.y % 4 == 0),
            _claim(CLAIM_GAUSSIAN_8Y, rep.y % 8 == 0),
        )
    return ScanRecord(
        kind=NormSequenceKind.GAUSSIAN_MERSENNE.value,
        p=p,
        value=value,
        primality=verdict,
        congruence=congruence,
        jacobi_neg_d=symbol,
        representation=rep,
        x_mod=None if rep is None else rep.x % 8,
        y_mod=None if rep is None else rep.y % 8,
        claims=claims,
    )


def _eisenstein_record(p: int) -> ScanRecord:
    value = eisenstein_mersenne_norm(p)
    verdict = is_prime(value)
    congruence = f"p%6={p % 6}"
    ids = (CLAIM_EISENSTEIN_X2, CLAIM_EISENSTEIN_7Y, CLAIM_EISENSTEIN_14)
    symbol, rep = _representation_for(3, value, verdict)
    in_gate = bool(verdict) and p >= 7 and p % 6 == 1
    if not in_gate:
        claims = _claims(ids, "na")
    elif rep is None:
        claims = _claims(ids, "na" if symbol != 1 else "fail")
    else:
        claims = (
            _claim(CLAIM_EISENSTEIN_X2, rep.x * rep.x % 7 == 1),
            _claim(CLAIM_EISENSTEIN_7Y, rep.y % 7 == 0),
            _claim(CLAIM_EISENSTEIN_14, value % 14 == 1),
        )
    return ScanRecord(
        kind=NormSequenceKind.EISENSTEIN_MERSENNE.value,
        p=p,
        value=value,
        primality=verdict,
        congruence=congruence,
        jacobi_neg_d=symbol,
        representation=rep,
        x_mod=None if rep is None else rep.x % 7,
        y_mod=None if rep is None else rep.y % 7,
        claims=claims,
    )


def _mersenne_record(p: int, d: int) -> ScanRecord:
    value = mersenne(p)
    verdict = is_prime(value)
    congruence = f"p%3={p % 3}"
    symbol, rep = _representation_for(d, value, verdict)
    if d == 7:
        ids = (CLAIM_MERSENNE_8X, CLAIM_MERSENNE_Y3)
        in_gate = bool(verdict) and p % 3 == 1
        if not in_gate:
            claims = _claims(ids, "na")
        elif rep is None:
            claims = _claims(ids, "na" if symbol != 1 else "fail")
        else:
            claims = (
                _claim(CLAIM_MERSENNE_8X, rep.x % 8 == 0),
                _claim(CLAIM_MERSENNE_Y3, rep.y % 8 in (3, 5)),
            )
    else:
        # d = 31: h(-124) = 3, so a split value need not be represented
        # by the principal form; only found representations are judged
        ids = (CLAIM_MERSENNE_8X,)
        if bool(verdict) and rep is not None:
            claims = (_claim(CLAIM_MERSENNE_8X, rep.x % 8 == 0),)
        else:
            claims = _claims(ids, "na")
    return ScanRecord(
        kind=NormSequenceKind.MERSENNE.value,
        p=p,
        value=value,
        primality=verdict,
        congruence=congruence,
        jacobi_neg_d=symbol,
        representation=rep,
        x_mod=None if rep is None else rep.x % 8,
        y_mod=None if rep is None else rep.y % 8,
        claims=claims,
    )


def _analog_record(p: int) -> ScanRecord:
    value = sqrt2_analog_norm(p)
    verdict = is_prime(value)
    congruence = f"p%6={p % 6}"
    ids = (CLAIM_ANALOG_8X,)
    symbol, rep = _representation_for(7, value, verdict)
    in_gate = bool(verdict) and p % 6 in (1, 5)
    if not in_gate:
        claims = _claims(ids, "na")
    elif rep is None:
        # representability per congruence class is an empirical question
        claims = _claims(ids, "na" if symbol != 1 else "fail")
    else:
        claims = (_claim(CLAIM_ANALOG_8X, rep.x % 8 == 0),)
    return ScanRecord(
        kind=NormSequenceKind.SQRT2_ANALOG.value,
        p=p,
        value=value,
        primality=verdict,
        congruence=congruence,
        jacobi_neg_d=symbol,
        representation=rep,
        x_mod=None if rep is None else rep.x % 8,
        y_mod=None if rep is None else rep.y % 8,
        claims=claims,
    )


def _run(builder, exponents, threads) -> Tuple[ScanRecord, ...]:
    if threads is None:
        threads = os.cpu_count() or 1
    exponents = sorted(exponents)
    if threads > 1 and len(exponents) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(builder, exponents))
    else:
        records = [builder(p) for p in exponents]
    return tuple(records)


def scan_gaussian(p_max: int, threads: Optional[int] = None) -> Report:
    """Scan Gaussian Mersenne norms for primes 7 <= p <= p_max."""
    exponents = [p for p in primes_up_to(p_max) if p >= 7]
    records = _run(_gaussian_record, exponents, threads)
    params = {"family": "gaussian", "max_exponent": p_max, "d": 7}
    return Report(TOOL, params, records)


def scan_eisenstein(p_max: int, threads: Optional[int] = None) -> Report:
    """Scan Eisenstein Mersenne norms for primes 7 <= p <= p_max."""
    exponents = [p for p in primes_up_to(p_max) if p >= 7]
    records = _run(_eisenstein_record, exponents, threads)
    params = {"family": "eisenstein", "max_exponent": p_max, "d": 3}
    return Report(TOOL, params, records)


def scan_mersenne(p_max: int, d: int = 7, threads: Optional[int] = None) -> Report:
    """Scan Mersenne numbers 2**p - 1 for primes p <= p_max, d in {7, 31}."""
    if d not in (7, 31):
        raise ValueError("d must be 7 or 31")
    records = _run(lambda p: _mersenne_record(p, d), primes_up_to(p_max), threads)
    params = {"family": "mersenne", "max_exponent": p_max, "d": d}
    return Report(TOOL, params, records)


def scan_sqrt2_analog(p_max: int, threads: Optional[int] = None) -> Report:
    """Scan norms of (a**p - 1)/(a - 1), a = 2 + sqrt(2), primes p <= p_max."""
    records = _run(_analog_record, primes_up_to(p_max), threads)
    params = {"family": "analog", "max_exponent": p_max, "d": 7}
    return Report(TOOL, params, records)


def _equivalence_record(q: int, d: int) -> ScanRecord:
    verdict = is_prime(q)
    if not verdict:
        return ScanRecord(
            kind="equivalence",
            p=q,
            value=q,
            primality=verdict,
            congruence="composite input",
            jacobi_neg_d=None,
            representation=None,
            x_mod=None,
            y_mod=None,
            claims=(Claim(CLAIM_EQUIV_IFF, "na"),),
        )
    symbol, rep_d = _representation_for(d, q, verdict)
    _, rep_2d = _representation_for(2 * d, q, verdict)
    iff = (rep_d is None) == (rep_2d is None)
    return ScanRecord(
        kind="equivalence",
        p=q,
        value=q,
        primality=verdict,
        congruence=f"x^2+{d}y^2:{rep_d is not None},x^2+{2 * d}y^2:{rep_2d is not None}",
        jacobi_neg_d=symbol,
        representation=rep_d if rep_d is not None else rep_2d,
        x_mod=None,
        y_mod=None,
        claims=(_claim(CLAIM_EQUIV_IFF, iff),),
    )


def check_equivalence(d: int, primes: Sequence[int],
                      threads: Optional[int] = None) -> Report:
    """Empirically test, prime by prime, whether representability by
    x**2 + d*y**2 and by x**2 + 2d*y**2 coincide.

    No field-theoretic hypothesis is consulted; the verdicts are purely
    observational.
    """
    if d % 2 == 0 or d < 1:
        raise ValueError("d must be odd and >= 1")
    records = _run(lambda q: _equivalence_record(q, d), primes, threads)
    params = {"family": "equivalence", "d": d, "primes": sorted(primes)}
    return Report(TOOL, params, records)


_CSV_COLUMNS = [
    "kind", "p", "value", "primality", "congruence", "jacobi_neg_d",
    "d", "x", "y", "x_mod", "y_mod", "claims",
]


def emit_report(report: Report, fmt: str = "json") -> bytes:
    """Serialize a report deterministically, big integers as decimal text."""
    if fmt == "json":
        text = json.dumps(report.to_dict(), sort_keys=True,
                          separators=(",", ":")) + "\n"
        return text.encode("ascii")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for record in report.records:
            row = _record_dict(record)
            rep = row["representation"] or {}
            claims = ";".join(f"{c['id']}={c['status']}" for c in row["claims"])
            writer.writerow([
                row["kind"], row["p"], row["value"], row["primality"],
                row["congruence"],
                "" if row["jacobi_neg_d"] is None else row["jacobi_neg_d"],
                rep.get("d", ""), rep.get("x", ""), rep.get("y", ""),
                "" if row["x_mod"] is None else row["x_mod"],
                "" if row["y_mod"] is None else row["y_mod"],
                claims,
            ])
        return buf.getvalue().encode("ascii")
    raise ValueError(f"unknown format: {fmt}")


def report_exit_code(report: Report) -> int:
    """0 when every applicable claim passed, 1 otherwise."""
    return 0 if report.verdict() == "pass" else 1
