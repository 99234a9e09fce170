import json

import pytest

from agkey import verifier
from agkey.qseries import lemma2_lhs_cleared
from agkey.report import VerifyReport, summary_line


@pytest.mark.parametrize("i,j", [(9, 6), (1, 1), (0, 0)])
def test_key_identity(i, j):
    rep = verifier.verify_key_identity(i, j)
    assert rep.passed and rep.witness is None


def test_key_identity_bad_parameters():
    with pytest.raises(ValueError):
        verifier.verify_key_identity(2, 3)


@pytest.mark.parametrize("i,j", [(1, 1), (0, 5), (6, 9), (9, 6)])
def test_lemma2(i, j):
    assert verifier.verify_lemma2(i, j).passed


def test_lemma2_symmetry():
    assert lemma2_lhs_cleared(6, 9) == lemma2_lhs_cleared(9, 6)
    a = verifier.verify_lemma2(6, 9).to_record(with_time=False)
    b = verifier.verify_lemma2(9, 6).to_record(with_time=False)
    assert (a["passed"], a["counts"]) == (b["passed"], b["counts"])


@pytest.mark.parametrize("i,j,members", [(9, 6, 729), (2, 2, 9), (4, 0, 1)])
def test_theorem22(i, j, members):
    rep = verifier.verify_theorem22(i, j)
    assert rep.passed
    assert rep.counts["members"] == members


def test_phi_bar_nine_six_three():
    rep = verifier.verify_phi_bar(9, 6, 3)
    assert rep.passed
    assert rep.counts == {"pairs": 160, "image": 160, "members": 160}


def test_genfuncs_and_involution():
    assert verifier.verify_genfuncs(9, 6, 3).passed
    rep = verifier.verify_involution(9, 6)
    assert rep.passed and rep.counts["fixed_points"] == 1


def test_sweep_small_all_pass():
    reports = verifier.sweep(4)
    assert reports and all(r.passed for r in reports)
    assert summary_line(reports) == f"PASS {len(reports)}/{len(reports)} checks"
    assert [r.check for r in verifier.sweep(0)] == list(verifier.CHECKS)
    assert all(r.passed for r in verifier.sweep(0))


def test_sweep_involution_cell_count():
    reports = verifier.sweep(8, ["involution"])
    assert len(reports) == 45 and all(r.passed for r in reports)


def test_cells():
    assert len(verifier.cells("key-identity", 15)) == 136
    assert len(verifier.cells("lemma2", 12)) == 169
    assert verifier.cells("phi-bar", 1) == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]
    with pytest.raises(ValueError):
        verifier.cells("nope", 3)


def test_sweep_rejects_negative_bound():
    with pytest.raises(ValueError):
        verifier.sweep(-1)


def test_parallel_sweep_matches_sequential():
    seq = verifier.sweep(4, ["theorem22", "phi-bar"])
    par = verifier.sweep(4, ["theorem22", "phi-bar"], workers=2)
    assert [r.to_json(with_time=False) for r in seq] == [r.to_json(with_time=False) for r in par]


def test_reports_are_reproducible():
    a = [r.to_json(with_time=False) for r in verifier.sweep(3)]
    b = [r.to_json(with_time=False) for r in verifier.sweep(3)]
    assert a == b
    rec = json.loads(a[0])
    assert set(rec) == {"check", "params", "passed", "witness", "counts"}


def test_failing_report_needs_witness():
    with pytest.raises(ValueError):
        VerifyReport("x", {}, False)
    rep = VerifyReport("x", {"i": 1}, False, {"reason": "demo"})
    assert rep.describe().startswith("FAIL  x  i=1")
    assert summary_line([rep]) == "FAIL 0/1 checks"
