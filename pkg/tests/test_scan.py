import csv
import io
import json

import pytest

from conftest import sieve_primes
from normscan.verify import (
    Claim,
    Report,
    check_equivalence,
    emit_report,
    report_exit_code,
    scan_eisenstein,
    scan_gaussian,
    scan_mersenne,
    scan_sqrt2_analog,
)

SCHEMA_TOP = {"tool", "params", "records", "summary", "verdict"}
SCHEMA_RECORD = {"kind", "p", "value", "primality", "representation", "claims"}


def by_p(report):
    return {r.p: r for r in report.records}


def passing(report):
    return sorted(
        r.p for r in report.records
        if r.claims and all(c.status == "pass" for c in r.claims)
    )


def test_gaussian_scan_covers_every_prime_exponent():
    report = scan_gaussian(113)
    assert [r.p for r in report.records] == [
        p for p in sieve_primes(113) if p >= 7
    ]


def test_gaussian_scan_claim_gates():
    records = by_p(scan_gaussian(113))
    # boundary exponent: representation shown, theorem claims not applicable
    r7 = records[7]
    assert (r7.representation.x, r7.representation.y) == (1, 4)
    assert all(c.status == "na" for c in r7.claims)
    # prime value but -7 a non-residue: the form provably cannot exist
    for p in (11, 19, 29):
        rec = records[p]
        assert rec.primality.verdict.value == "prime"
        assert rec.jacobi_neg_d == -1
        assert rec.representation is None
        assert all(c.status == "na" for c in rec.claims)
    assert passing(scan_gaussian(113)) == [47, 73, 79, 113]


def test_gaussian_scan_reference_rows():
    records = by_p(scan_gaussian(113))
    rows = {
        47: (140737471578113, 5732351, 3925696),
        73: (9444732965601851473921, 96890022433, 2854983576),
        113: (10384593717069655112945804582584321,
              79288509938147361, 24195412519312600),
    }
    for p, (value, x, y) in rows.items():
        rec = records[p]
        assert rec.value == value
        assert (rec.representation.x, rec.representation.y) == (x, y)
        assert rec.x_mod in (1, 7)
        assert rec.y_mod == 0


def test_gaussian_scan_reports_failures_beyond_the_table():
    # p = 239 is the first exponent refuting the 8 | y claim: the unique
    # representation has y = 4 (mod 8).  Cross-checked against an
    # independent solver; the scan must report it, not mask it.
    report = scan_gaussian(239)
    rec = by_p(report)[239]
    statuses = {c.id: c.status for c in rec.claims}
    assert statuses["lemma3.3.x"] == "pass"
    assert statuses["lemma3.3.4y"] == "pass"
    assert statuses["thm3.4.8y"] == "fail"
    assert rec.representation.y % 8 == 4
    assert report.verdict() == "fail"
    assert report_exit_code(report) == 1


def test_eisenstein_scan():
    report = scan_eisenstein(79)
    assert passing(report) == [7, 19, 79]
    records = by_p(report)
    assert (records[7].representation.x, records[7].representation.y) == (41, 14)
    assert records[7].x_mod == 6
    assert (records[79].representation.x, records[79].representation.y) == (
        6078832729528464401, 2026277576509488134)
    # prime values in the wrong congruence class stay not-applicable
    assert records[17].primality.verdict.value == "prime"
    assert all(c.status == "na" for c in records[17].claims)
    assert report.verdict() == "pass"


def test_eisenstein_value_congruence_claim():
    records = by_p(scan_eisenstein(79))
    for p in (7, 19, 79):
        claim = {c.id: c.status for c in records[p].claims}
        assert claim["eisenstein.1mod14"] == "pass"
        assert records[p].value % 14 == 1


def test_mersenne_scan_d7():
    report = scan_mersenne(31, d=7)
    assert passing(report) == [7, 13, 19, 31]
    records = by_p(report)
    assert (records[7].representation.x, records[7].representation.y) == (8, 3)
    assert records[13].representation.x == 48
    # p = 5 fails the p = 1 (mod 3) gate
    assert all(c.status == "na" for c in records[5].claims)


def test_mersenne_scan_d31():
    records = by_p(scan_mersenne(31, d=31))
    r31 = records[31]
    assert (r31.representation.x, r31.representation.y) == (5176, 8271)
    assert {c.id: c.status for c in r31.claims} == {"mersenne.8x": "pass"}
    # split but not principal: M_13 = 8191 has no x^2 + 31 y^2 form
    r13 = records[13]
    assert r13.jacobi_neg_d == 1
    assert r13.representation is None
    assert all(c.status == "na" for c in r13.claims)


def test_mersenne_rejects_other_d():
    with pytest.raises(ValueError):
        scan_mersenne(31, d=5)


def test_analog_scan():
    report = scan_sqrt2_analog(7)
    records = by_p(report)
    assert records[5].value == 431
    assert (records[5].representation.x, records[5].representation.y) == (16, 5)
    assert passing(report) == [5, 7]
    # p = 2, 3 are outside the +-1 (mod 6) gate
    assert all(c.status == "na" for c in records[2].claims)
    assert all(c.status == "na" for c in records[3].claims)


def test_equivalence_check():
    report = check_equivalence(7, [113, 127])
    records = by_p(report)
    # 113 = 1 + 7*16 but has no x^2 + 14y^2 form: biconditional fails
    assert records[113].claims[0].status == "fail"
    assert records[127].claims[0].status == "pass"
    assert report.verdict() == "fail"
    assert report_exit_code(report) == 1


def test_equivalence_composite_entry_and_empty():
    report = check_equivalence(7, [15])
    rec = report.records[0]
    assert rec.primality.verdict.value == "composite"
    assert rec.claims[0].status == "na"
    empty = check_equivalence(7, [])
    assert empty.records == ()
    assert empty.summary() == {"pass": 0, "fail": 0, "na": 0}
    assert empty.verdict() == "pass"


def test_scan_boundary_ranges():
    assert [r.p for r in scan_gaussian(7).records] == [7]
    assert scan_eisenstein(6).records == ()
    data = json.loads(emit_report(scan_eisenstein(6), "json"))
    assert data["records"] == []
    assert data["summary"] == {"pass": 0, "fail": 0, "na": 0}
    assert data["verdict"] == "pass"


def test_report_determinism():
    a = emit_report(scan_gaussian(113), "json")
    b = emit_report(scan_gaussian(113), "json")
    assert a == b


def test_parallel_scan_matches_sequential():
    seq = emit_report(scan_gaussian(113, threads=1), "json")
    par = emit_report(scan_gaussian(113, threads=8), "json")
    assert seq == par
    seq = emit_report(scan_eisenstein(79, threads=1), "csv")
    par = emit_report(scan_eisenstein(79, threads=4), "csv")
    assert seq == par


def test_json_schema():
    report = scan_gaussian(47)
    data = json.loads(emit_report(report, "json"))
    assert SCHEMA_TOP <= set(data)
    assert data["verdict"] == "pass"
    assert data["summary"]["fail"] == 0
    ps = [rec["p"] for rec in data["records"]]
    assert ps == sorted(ps)
    for rec in data["records"]:
        assert SCHEMA_RECORD <= set(rec)
        assert isinstance(rec["value"], str)
        int(rec["value"])
        if rec["representation"] is not None:
            rep = rec["representation"]
            assert set(rep) == {"d", "x", "y"}
            assert isinstance(rep["x"], str) and isinstance(rep["y"], str)
            assert (int(rep["x"]) ** 2 + rep["d"] * int(rep["y"]) ** 2
                    == int(rec["value"]))
        for claim in rec["claims"]:
            assert set(claim) == {"id", "status"}
            assert claim["status"] in ("pass", "fail", "na")


def test_csv_structure():
    report = scan_mersenne(13, d=7)
    text = emit_report(report, "csv").decode()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][:4] == ["kind", "p", "value", "primality"]
    assert len(rows) == 1 + len(report.records)
    assert rows[1][0] == "mersenne"


def test_emit_report_unknown_format():
    with pytest.raises(ValueError):
        emit_report(scan_mersenne(7), "xml")


def test_exit_code_contract_with_falsified_claim():
    report = scan_gaussian(47)
    assert report_exit_code(report) == 0
    # flip one passing claim to a failure and the exit code must follow
    broken_records = []
    flipped = False
    for rec in report.records:
        claims = list(rec.claims)
        if not flipped and claims and claims[0].status == "pass":
            claims[0] = Claim(claims[0].id, "fail")
            flipped = True
        broken_records.append(
            type(rec)(**{**rec.__dict__, "claims": tuple(claims)})
        )
    broken = Report(report.tool, report.params, tuple(broken_records))
    assert flipped
    assert broken.verdict() == "fail"
    assert report_exit_code(broken) == 1


def test_summary_counts_are_consistent():
    report = scan_eisenstein(79)
    total = sum(len(r.claims) for r in report.records)
    summary = report.summary()
    assert summary["pass"] + summary["fail"] + summary["na"] == total
