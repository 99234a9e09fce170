"""Exit criteria.  Each test prints one PASS/FAIL line, visible even under capture."""
import io
import time
from functools import lru_cache
from math import comb

import pytest

from agkey import bijection as bj
from agkey import cli, verifier
from agkey import involution as inv
from agkey import partitions as pc
from agkey import qseries as qs


@pytest.fixture
def report(capsys):
    def emit(n, ok, text):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}")
        assert ok, text
    return emit


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue()


def test_c1_key_identity_sweep(report):
    t0 = time.perf_counter()
    code, out = run_cli("sweep", "--max-i", "15", "--checks", "key-identity")
    dt = time.perf_counter() - t0
    ok = code == 0 and out.splitlines()[-1] == "PASS 136/136 checks" and dt < 10
    report(1, ok, f"key identity, 136 cells with i <= 15, exact; {out.strip()} in {dt:.2f}s")


def test_c2_lemma2(report):
    t0 = time.perf_counter()
    reps = verifier.sweep(12, ["lemma2"])
    dt = time.perf_counter() - t0
    ok = len(reps) == 169 and all(r.passed for r in reps) and dt < 10
    report(2, ok, f"lemma 2 cleared form, 0 <= i,j <= 12: "
                  f"{verifier.summary_line(reps)} in {dt:.2f}s")


def test_c3_generating_functions(report):
    reps = verifier.sweep(12, ["genfunc"])
    ok = all(r.passed for r in reps) and len(reps) == sum(
        (j + 1) for i in range(13) for j in range(i + 1))
    report(3, ok, f"A/B generating functions, k <= j <= i <= 12: {verifier.summary_line(reps)}")


def test_c4_theorem22(report):
    t0 = time.perf_counter()
    reps = verifier.sweep(8, ["theorem22"])
    dt = time.perf_counter() - t0
    largest = max(r.counts["members"] for r in reps)
    ok = all(r.passed for r in reps) and len(reps) == 45 and largest == 3**8 and dt < 30
    report(4, ok, f"algebraic side == enumerated f-sum, j <= i <= 8 (largest |O| = {largest}): "
                  f"{verifier.summary_line(reps)} in {dt:.2f}s")


def test_c5_phi_bar(report):
    reps = verifier.sweep(8, ["phi-bar"])
    sizes_ok = all(
        r.counts["image"] == r.counts["members"] == 2 ** r.params["k"] * comb(r.params["j"], r.params["k"])
        for r in reps if r.passed)
    pairs = sum(r.counts["pairs"] for r in reps)
    ok = all(r.passed for r in reps) and sizes_ok
    report(5, ok, f"phi-bar round trips, weights, zero collisions over {pairs} pairs, "
                  f"k <= j <= i <= 8: {verifier.summary_line(reps)}")


def test_c6_involution(report):
    reps = verifier.sweep(8, ["involution"])
    ok = all(r.passed and r.counts["fixed_points"] == 1 for r in reps) and len(reps) == 45
    report(6, ok, f"psi involutive, sign-reversing, one fixed point, sum f = 1, j <= i <= 8: "
                  f"{verifier.summary_line(reps)}")


GOLDEN = [
    (("map", "insert", "--alpha", "5,3,0", "--beta", "9,6,5,2,2,0"), "11',8,7,3',3,0'\n"),
    (("map", "extract", "--lambda", "11',8,7,3',3,0'"), "alpha: 5,3,0\nbeta: 9,6,5,2,2,0\n"),
    (("map", "phi-bar", "--i", "9", "--j", "6", "--k", "3", "--gamma", "8,7", "--beta", "3,3,2"),
     "4',3',2\n"),
    (("map", "phi-bar-inv", "--i", "9", "--j", "6", "--k", "3", "--lambda", "4',3',2"),
     "gamma: 8,7\nbeta: 3,3,2\n"),
    (("map", "psi", "--i", "9", "--j", "6", "--lambda", "4',3',2"),
     "O1 → 3',2\nf(lambda) = +q^41\nf(psi(lambda)) = -q^41\n"),
]


def test_c7_golden_examples(report):
    bad = []
    for argv, expected in GOLDEN:
        code, out = run_cli(*argv)
        if code != 0 or out != expected:
            bad.append((argv, out))
    report(7, not bad, "worked examples reproduce byte-exactly through the CLI"
                       + ("" if not bad else f"; mismatches: {bad}"))


# -- criterion 8: single-step corruptions must be caught ----------------------

def _wrong_weight(monkeypatch):
    monkeypatch.setattr(pc, "overline_weight", lambda i, k: i - k)


def _no_condition_two(monkeypatch):
    def member(o, ctx):
        return len(o) == ctx.k and all(p.value <= ctx.j - 1 for p in o.parts)

    def enum(ctx):
        found = [pc.Overpartition(p) for p in pc._generate_O(ctx.k, ctx.j - 1, max(ctx.j - 1, 0))]
        return sorted((o for o in found if member(o, ctx)), key=pc.Overpartition.sort_key,
                      reverse=True)

    monkeypatch.setattr(pc, "is_member_O", member)
    monkeypatch.setattr(pc, "enumerate_O", enum)


def _insert_without_increment(monkeypatch):
    def insert_one(o, m):
        parts = list(o.parts)
        parts[m] = pc.Part(parts[m].value, True)
        return pc.Overpartition(tuple(parts))

    monkeypatch.setattr(bj, "insert_one", insert_one)


def _psi_off_by_one(monkeypatch):
    real = inv.psi

    def psi(o, i, j):
        if inv.classify(o, i, j) is inv.OClass.O3_MOVABLE:
            return inv._insert_overlined(o, j - len(o))
        return real(o, i, j)

    monkeypatch.setattr(inv, "psi", psi)


def _f_without_rectangle(monkeypatch):
    def f(o, i, j):
        w = pc.overline_weight(i, len(o))
        return inv.FMonomial((-1) ** o.ol, o.size + o.ol * w)

    monkeypatch.setattr(inv, "f_statistic", f)


def _gaussian_wrong_shift(monkeypatch):
    @lru_cache(maxsize=None)
    def gaussian(j, k):
        if k > j:
            return qs.ZERO
        if k == 0 or k == j:
            return qs.ONE
        return gaussian(j - 1, k - 1) + gaussian(j - 1, k).shift(k - 1)

    monkeypatch.setattr(qs, "gaussian", gaussian)


MUTANTS = {
    "weight i-k instead of i-k+1": _wrong_weight,
    "condition (2) dropped": _no_condition_two,
    "insertion skips the +1 step": _insert_without_increment,
    "psi inserts j-len instead of j-len-1": _psi_off_by_one,
    "f without the rectangle term": _f_without_rectangle,
    "gaussian recurrence shifted by q^(k-1)": _gaussian_wrong_shift,
}


@pytest.mark.parametrize("name", list(MUTANTS))
def test_c8_mutants_are_caught(name, monkeypatch, report):
    MUTANTS[name](monkeypatch)
    reps = verifier.sweep(3)
    failed = [r for r in reps if not r.passed]
    ok = bool(failed) and all(r.witness for r in failed)
    first = failed[0] if failed else None
    where = f"{first.check} {first.params} witness={first.witness}" if first else "nothing failed"
    report(8, ok, f"mutant '{name}' caught by {len(failed)}/{len(reps)} checks; first: {where}")
