"""Exhaustive checks tying the algebraic side to the combinatorial side.

Each ``verify_*`` function returns a :class:`~agkey.report.VerifyReport` and
never raises for a mathematical failure; bad parameters still raise
``ValueError``.  :func:`sweep` runs any subset of the checks over every valid
parameter cell up to a bound.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Iterable, Sequence

from . import bijection as bj
from . import involution as inv
from . import partitions as pc
from . import qseries as qs
from .partitions import OContext, format_overpartition, format_partition
from .report import VerifyReport, summary_line

__all__ = [
    "CHECKS",
    "POLY_MAX_I",
    "ENUM_MAX_I",
    "verify_key_identity",
    "verify_lemma2",
    "verify_theorem22",
    "verify_phi_bar",
    "verify_genfuncs",
    "verify_involution",
    "run_check",
    "cells",
    "sweep",
    "summary_line",
]

# default desk-scale bounds: polynomial-only checks, and checks that enumerate O(i,j)
POLY_MAX_I = 15
ENUM_MAX_I = 8


def _first_difference(expected: qs.QPoly, actual: qs.QPoly) -> int | None:
    diff = actual - expected
    return diff.lowest


def _poly_witness(expected: qs.QPoly, actual: qs.QPoly, **extra) -> dict:
    w = {
        "expected": str(expected),
        "actual": str(actual),
        "first_difference_exponent": _first_difference(expected, actual),
    }
    w.update(extra)
    return w


def _ij(i, j, need_j_le_i=True):
    for name, v in (("i", i), ("j", j)):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
    if need_j_le_i and j > i:
        raise ValueError(f"need j <= i, got i={i}, j={j}")


def verify_key_identity(i: int, j: int) -> VerifyReport:
    _ij(i, j)
    t0 = time.perf_counter()
    lhs = qs.key_identity_lhs(i, j)
    ok = lhs.is_one()
    return VerifyReport(
        "key-identity", {"i": i, "j": j}, ok,
        None if ok else _poly_witness(qs.ONE, lhs),
        {"terms": len(lhs)}, time.perf_counter() - t0,
    )


def verify_lemma2(i: int, j: int) -> VerifyReport:
    _ij(i, j, need_j_le_i=False)
    t0 = time.perf_counter()
    lhs = qs.lemma2_lhs_cleared(i, j)
    rhs = qs.lemma2_rhs_cleared(i, j)
    ok = lhs == rhs
    return VerifyReport(
        "lemma2", {"i": i, "j": j}, ok,
        None if ok else _poly_witness(rhs, lhs),
        {"terms": len(lhs)}, time.perf_counter() - t0,
    )


def verify_theorem22(i: int, j: int) -> VerifyReport:
    """Compare each algebraic summand with the enumerated f-sum over O(i, j, k)."""
    _ij(i, j)
    t0 = time.perf_counter()
    params = {"i": i, "j": j}
    counts = {"members": 0}
    total = qs.ZERO
    for k in range(j + 1):
        ctx = OContext(i, j, k)
        members = pc.enumerate_O(ctx)
        counts["members"] += len(members)
        side = qs.ZERO
        for lam in members:
            try:
                side = side + inv.f_statistic(lam, i, j).as_poly()
            except ValueError as exc:
                return VerifyReport("theorem22", params, False,
                                    {"k": k, "lambda": format_overpartition(lam),
                                     "reason": "rejected", "error": str(exc)},
                                    counts, time.perf_counter() - t0)
        expected = qs.key_identity_term(i, j, k)
        if side != expected or len(members) != 2**k * comb(j, k):
            return VerifyReport("theorem22", params, False,
                                _poly_witness(expected, side, k=k, size=len(members),
                                              expected_size=2**k * comb(j, k)),
                                counts, time.perf_counter() - t0)
        total = total + side
    lhs = qs.key_identity_lhs(i, j)
    ok = total == lhs
    return VerifyReport("theorem22", params, ok,
                        None if ok else _poly_witness(lhs, total),
                        counts, time.perf_counter() - t0)


def verify_phi_bar(i: int, j: int, k: int) -> VerifyReport:
    """Round trips both ways, weight preservation, and image == O(i,j,k) with no collisions."""
    ctx = OContext(i, j, k)
    t0 = time.perf_counter()
    params = {"i": i, "j": j, "k": k}
    counts = {"pairs": 0}

    def fail(**w):
        return VerifyReport("phi-bar", params, False, w, counts, time.perf_counter() - t0)

    image = {}
    for gamma in pc.enumerate_A(i, k):
        for beta in pc.enumerate_B(j, k):
            counts["pairs"] += 1
            pair = {"gamma": format_partition(gamma), "beta": format_partition(beta)}
            try:
                lam = bj.phi_bar(gamma, beta, ctx)
            except ValueError as exc:
                return fail(reason="rejected", error=str(exc), **pair)
            if not pc.is_member_O(lam, ctx):
                return fail(reason="image outside O(i,j,k)",
                            lam=format_overpartition(lam), **pair)
            if lam in image:
                return fail(reason="collision", lam=format_overpartition(lam),
                            other=image[lam], **pair)
            image[lam] = pair
            lhs = ((-1) ** len(gamma), sum(gamma) + sum(beta))
            rhs = ((-1) ** lam.ol, lam.size + lam.ol * ctx.weight)
            if lhs != rhs:
                return fail(reason="weight not preserved", lam=format_overpartition(lam),
                            pair_monomial=list(lhs), lam_monomial=list(rhs), **pair)
            back = bj.phi_bar_inv(lam, ctx)
            if back != (tuple(gamma), tuple(beta)):
                return fail(reason="round trip failed", lam=format_overpartition(lam),
                            back_gamma=format_partition(back[0]),
                            back_beta=format_partition(back[1]), **pair)

    members = pc.enumerate_O(ctx)
    counts["image"] = len(image)
    counts["members"] = len(members)
    for lam in members:
        if lam not in image:
            return fail(reason="member not in image", lam=format_overpartition(lam))
        gamma, beta = bj.phi_bar_inv(lam, ctx)
        if bj.phi_bar(gamma, beta, ctx) != lam:
            return fail(reason="inverse round trip failed", lam=format_overpartition(lam))
    if len(image) != len(members) or len(image) != 2**k * comb(j, k):
        return fail(reason="cardinality mismatch", image=len(image), members=len(members),
                    expected=2**k * comb(j, k))
    return VerifyReport("phi-bar", params, True, None, counts, time.perf_counter() - t0)


def verify_genfuncs(i: int, j: int, k: int) -> VerifyReport:
    OContext(i, j, k)
    t0 = time.perf_counter()
    params = {"i": i, "j": j, "k": k}
    a_enum, a_closed = pc.signed_genfunc_A(i, k), qs.pochhammer_shifted(i - k + 1, k)
    if a_enum != a_closed:
        return VerifyReport("genfunc", params, False,
                            _poly_witness(a_closed, a_enum, family="A"),
                            {}, time.perf_counter() - t0)
    b_enum, b_closed = pc.genfunc_B(j, k), qs.gaussian(j, k)
    if b_enum != b_closed:
        return VerifyReport("genfunc", params, False,
                            _poly_witness(b_closed, b_enum, family="B"),
                            {}, time.perf_counter() - t0)
    return VerifyReport("genfunc", params, True, None,
                        {"A_terms": len(a_enum), "B_terms": len(b_enum)},
                        time.perf_counter() - t0)


def verify_involution(i: int, j: int) -> VerifyReport:
    _ij(i, j)
    return inv.orbit_check(i, j)


_RUNNERS = {
    "key-identity": verify_key_identity,
    "lemma2": verify_lemma2,
    "theorem22": verify_theorem22,
    "phi-bar": verify_phi_bar,
    "genfunc": verify_genfuncs,
    "involution": verify_involution,
}
CHECKS = tuple(_RUNNERS)


def run_check(name: str, params: Sequence[int]) -> VerifyReport:
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}") from None
    return runner(*params)


def cells(name: str, max_i: int) -> list[tuple[int, ...]]:
    """Parameter cells of a check up to ``max_i``.

    ``lemma2`` has no ``j <= i`` restriction and covers the full square;
    ``phi-bar`` and ``genfunc`` add every ``k <= j``.
    """
    if name not in _RUNNERS:
        raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    if name == "lemma2":
        return [(i, j) for i in range(max_i + 1) for j in range(max_i + 1)]
    if name in ("phi-bar", "genfunc"):
        return [(i, j, k) for i in range(max_i + 1) for j in range(i + 1) for k in range(j + 1)]
    return [(i, j) for i in range(max_i + 1) for j in range(i + 1)]


def _run_packed(job):
    return run_check(*job)


def sweep(max_i: int, checks: Iterable[str] | None = None,
          workers: int | None = None) -> list[VerifyReport]:
    """Run ``checks`` (default: all) on every cell with ``j <= i <= max_i``.

    Reports come back grouped by check, cells in increasing order, whatever
    the number of ``workers``.
    """
    if max_i < 0:
        raise ValueError(f"max_i must be nonnegative, got {max_i}")
    names = list(CHECKS if checks is None else checks)
    jobs = [(name, cell) for name in names for cell in cells(name, max_i)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_run_packed, jobs, chunksize=8))
    return [run_check(name, cell) for name, cell in jobs]
