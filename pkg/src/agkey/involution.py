"""The sign-reversing involution on O(i, j) that collapses the signed sum to 1.

Every member of O(i, j) falls into exactly one class:

* ``O1``: has overlines and its largest overlined part equals ``j - len + ol - 1``;
* ``O2``: has overlines and its largest overlined part is smaller than that;
* ``O3_MOVABLE``: no overlines and fewer than ``j`` parts;
* ``O3_FIXED``: no overlines and ``j`` parts, which forces all parts to be zero.

The involution deletes the largest overlined part on O1 and inserts an overlined
part on O2 / O3_MOVABLE, landing back in O1.  The single O3_FIXED element is
left alone.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from . import partitions as pc
from .partitions import Overpartition, Part, OContext, format_overpartition
from .qseries import QPoly, ONE, ZERO
from .report import VerifyReport

__all__ = [
    "OClass",
    "FMonomial",
    "classify",
    "psi",
    "f_statistic",
    "companion_rectangle",
    "orbit_trace",
    "orbit_check",
]


class OClass(enum.Enum):
    O1 = "O1"
    O2 = "O2"
    O3_MOVABLE = "O3_movable"
    O3_FIXED = "O3_fixed"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FMonomial:
    sign: int
    exponent: int

    def __neg__(self):
        return FMonomial(-self.sign, self.exponent)

    def as_poly(self) -> QPoly:
        return QPoly.monomial(self.exponent, self.sign)

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}q^{self.exponent}"


def _require_member(o: Overpartition, i: int, j: int):
    if not 0 <= j <= i:
        raise ValueError(f"need 0 <= j <= i, got i={i}, j={j}")
    if len(o) > j or not pc.is_member_O(o, OContext(i, j, len(o))):
        raise ValueError(f"{format_overpartition(o)} is not in O({i},{j})")


def _threshold(o: Overpartition, j: int) -> int:
    return j - len(o) + o.ol - 1


def classify(o: Overpartition, i: int, j: int) -> OClass:
    _require_member(o, i, j)
    if o.ol == 0:
        return OClass.O3_FIXED if len(o) == j else OClass.O3_MOVABLE
    top, bound = o.largest_overlined, _threshold(o, j)
    if top == bound:
        return OClass.O1
    if top < bound:
        return OClass.O2
    raise ValueError(
        f"{format_overpartition(o)}: largest overlined part {top} exceeds {bound}"
    )


def _insert_overlined(o: Overpartition, v: int) -> Overpartition:
    # goes before the leftmost part of value <= v, so it leads any equal plain parts
    r = next((n for n, p in enumerate(o.parts) if p.value <= v), len(o))
    return Overpartition(o.parts[:r] + (Part(v, True),) + o.parts[r:])


def psi(o: Overpartition, i: int, j: int) -> Overpartition:
    """Apply the involution to a member of O(i, j).

    >>> str(psi(Overpartition.parse("4',3',2"), 9, 6))
    "3',2"
    """
    cls = classify(o, i, j)
    if cls is OClass.O1:
        r = next(n for n, p in enumerate(o.parts) if p.overlined)
        return Overpartition(o.parts[:r] + o.parts[r + 1:])
    if cls is OClass.O2:
        return _insert_overlined(o, _threshold(o, j))
    if cls is OClass.O3_MOVABLE:
        return _insert_overlined(o, j - len(o) - 1)
    return o


def f_statistic(o: Overpartition, i: int, j: int) -> FMonomial:
    """Signed monomial ``(-1)^ol q^(size + ol*w + (i-len)(j-len))`` with ``w = i - len + 1``."""
    _require_member(o, i, j)
    n = len(o)
    w = pc.overline_weight(i, n)
    return FMonomial((-1) ** o.ol, o.size + o.ol * w + (i - n) * (j - n))


def companion_rectangle(o: Overpartition, i: int, j: int) -> tuple[int, ...]:
    """The rectangle ``(i - len)^(j - len)`` whose size is the last exponent term of f."""
    n = len(o)
    return (i - n,) * (j - n)


def orbit_trace(i: int, j: int) -> list[dict]:
    out = []
    for _, lam in pc.enumerate_O_all(i, j):
        f = f_statistic(lam, i, j)
        out.append({
            "lambda": format_overpartition(lam),
            "class": str(classify(lam, i, j)),
            "f_sign": f.sign,
            "f_exponent": f.exponent,
            "psi": format_overpartition(psi(lam, i, j)),
        })
    return out


def orbit_check(i: int, j: int) -> VerifyReport:
    """Run the involution over all of O(i, j) and check every claim about it.

    Checks that it is an involution that stays inside O(i, j), flips the sign
    of f (keeping its exponent) off the fixed point, swaps O1 with
    O2 / O3_MOVABLE, has the all-zero partition as its single fixed point,
    and that the f values sum to exactly 1.
    """
    t0 = time.perf_counter()
    params = {"i": i, "j": j}
    members = [lam for _, lam in pc.enumerate_O_all(i, j)]
    member_set = set(members)
    counts = {"members": len(members)}
    counts.update({c.value: 0 for c in OClass})
    fixed = []
    total = ZERO

    def fail(lam, reason, **extra):
        w = {"lambda": format_overpartition(lam), "reason": reason}
        w.update(extra)
        return VerifyReport("involution", params, False, w, counts,
                            time.perf_counter() - t0)

    for lam in members:
        try:
            cls = classify(lam, i, j)
            mu = psi(lam, i, j)
            f = f_statistic(lam, i, j)
        except ValueError as exc:
            return fail(lam, "rejected", error=str(exc))
        counts[cls.value] += 1
        total = total + f.as_poly()
        if mu not in member_set:
            return fail(lam, "image outside O(i,j)", psi=format_overpartition(mu))
        back = psi(mu, i, j)
        if back != lam:
            return fail(lam, "not an involution", psi=format_overpartition(mu),
                        psi_psi=format_overpartition(back))
        if mu == lam:
            fixed.append(lam)
            if cls is not OClass.O3_FIXED:
                return fail(lam, "fixed point outside O3_fixed", cls=str(cls))
            continue
        g = f_statistic(mu, i, j)
        if g != -f:
            return fail(lam, "not sign-reversing", f=str(f), f_psi=str(g))
        mcls = classify(mu, i, j)
        if (cls is OClass.O1) == (mcls is OClass.O1):
            return fail(lam, "class not transported", cls=str(cls), psi_cls=str(mcls))
        if abs(len(mu) - len(lam)) != 1 or abs(mu.ol - lam.ol) != 1:
            return fail(lam, "length or overline count did not move by one",
                        psi=format_overpartition(mu))

    counts["fixed_points"] = len(fixed)
    zeros = Overpartition.plain((0,) * j)
    if fixed != [zeros]:
        where = fixed[0] if fixed else zeros
        return fail(where, "fixed points are not exactly the all-zero partition",
                    fixed=[format_overpartition(x) for x in fixed])
    if total != ONE:
        return fail(zeros, "sum of f is not 1", actual=str(total))
    return VerifyReport("involution", params, True, None, counts, time.perf_counter() - t0)
