"""Joichi-Stanton insertion and the weight-preserving map A(i,k) x B(j,k) -> O(i,j,k).

Inserting a value ``m`` into an (over)partition adds 1 to each of its first
``m`` parts and overlines part ``m + 1``.  Several distinct values are
inserted one after another in increasing order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import (
    OContext,
    Overpartition,
    Part,
    format_overpartition,
    is_member_A,
    is_member_B,
    is_member_O,
    validate_distinct,
    validate_partition,
)

__all__ = [
    "InsertionError",
    "InsertionTrace",
    "insert_one",
    "remove_one",
    "insertion_trace",
    "js_insert",
    "js_extract",
    "js_extract_stepwise",
    "phi_bar",
    "phi_bar_trace",
    "phi_bar_inv",
]


class InsertionError(ValueError):
    pass


def insert_one(o: Overpartition, m: int) -> Overpartition:
    if m < 0:
        raise InsertionError(f"cannot insert negative value {m}")
    if len(o) < m + 1:
        raise InsertionError(f"cannot insert {m}: need at least {m + 1} parts, have {len(o)}")
    if o.parts[m].overlined:
        raise InsertionError(f"cannot insert {m}: part {m + 1} is already overlined")
    parts = [Part(p.value + 1, p.overlined) for p in o.parts[:m]]
    parts.append(Part(o.parts[m].value, True))
    parts.extend(o.parts[m + 1:])
    return Overpartition(tuple(parts))


def remove_one(o: Overpartition) -> tuple[int, Overpartition]:
    """Undo the most recent insertion: strip the rightmost overline at position ``m + 1``
    and subtract 1 from the first ``m`` parts.  Returns ``(m, result)``."""
    bars = [r for r, p in enumerate(o.parts) if p.overlined]
    if not bars:
        raise InsertionError("no overlined part to remove")
    m = bars[-1]
    parts = [Part(p.value - 1, p.overlined) for p in o.parts[:m]]
    parts.append(Part(o.parts[m].value, False))
    parts.extend(o.parts[m + 1:])
    return m, Overpartition(tuple(parts))


@dataclass(frozen=True)
class InsertionTrace:
    """The overpartition after each single insertion, in order."""

    start: Overpartition
    steps: tuple[tuple[int, Overpartition], ...]

    @property
    def result(self) -> Overpartition:
        return self.steps[-1][1] if self.steps else self.start

    def records(self) -> list[dict]:
        return [{"inserted": m, "result": format_overpartition(o)} for m, o in self.steps]


def _check_insertable(alpha: Sequence[int], n: int):
    bad = validate_distinct(alpha)
    if bad is not None:
        raise InsertionError(f"alpha is not a partition into distinct parts: {bad}")
    if alpha and alpha[0] >= n:
        raise InsertionError(f"alpha part {alpha[0]} is out of range 0..{n - 1}")


def insertion_trace(alpha: Sequence[int], beta: Sequence[int]) -> InsertionTrace:
    bad = validate_partition(beta)
    if bad is not None:
        raise InsertionError(f"beta is not a partition: {bad}")
    _check_insertable(alpha, len(beta))
    start = Overpartition.plain(beta)
    cur = start
    steps = []
    for m in sorted(alpha):
        cur = insert_one(cur, m)
        steps.append((m, cur))
    return InsertionTrace(start, tuple(steps))


def js_insert(alpha: Sequence[int], beta: Sequence[int]) -> Overpartition:
    """Insert the distinct parts of ``alpha`` (each below ``len(beta)``) into ``beta``.

    >>> str(js_insert((5, 3, 0), (9, 6, 5, 2, 2, 0)))
    "11',8,7,3',3,0'"
    """
    return insertion_trace(alpha, beta).result


def js_extract(o: Overpartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse of :func:`js_insert`.

    ``alpha`` collects ``r - 1`` for every overlined position ``r`` and each
    ``beta_r`` is the part minus the number of overlines to its right.
    """
    alpha = tuple(r for r in range(len(o) - 1, -1, -1) if o.parts[r].overlined)
    beta = tuple(p.value - t for p, t in zip(o.parts, o.t_profile()))
    return alpha, beta


def js_extract_stepwise(o: Overpartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Same as :func:`js_extract`, by undoing one insertion at a time."""
    removed = []
    while o.ol:
        m, o = remove_one(o)
        removed.append(m)
    return tuple(removed), o.values


def _check_phi_bar_args(gamma, beta, ctx: OContext):
    if not is_member_A(gamma, ctx.i, ctx.k):
        raise ValueError(f"gamma={tuple(gamma)} is not in A({ctx.i},{ctx.k})")
    if not is_member_B(beta, ctx.j, ctx.k):
        raise ValueError(f"beta={tuple(beta)} is not in B({ctx.j},{ctx.k})")


def phi_bar_trace(gamma: Sequence[int], beta: Sequence[int], ctx: OContext) -> InsertionTrace:
    _check_phi_bar_args(gamma, beta, ctx)
    shift = ctx.weight
    return insertion_trace(tuple(g - shift for g in gamma), beta)


def phi_bar(gamma: Sequence[int], beta: Sequence[int], ctx: OContext) -> Overpartition:
    """Send ``(gamma, beta)`` in A(i,k) x B(j,k) to O(i,j,k).

    Each part of ``gamma`` is lowered by the overline weight ``i - k + 1``
    and the result inserted into ``beta``; an empty ``gamma`` leaves ``beta``
    as it is.
    """
    return phi_bar_trace(gamma, beta, ctx).result


def phi_bar_inv(o: Overpartition, ctx: OContext) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not is_member_O(o, ctx):
        raise ValueError(f"{o} is not in O({ctx.i},{ctx.j},{ctx.k})")
    if o.ol == 0:
        return (), o.values
    alpha, beta = js_extract(o)
    return tuple(a + ctx.weight for a in alpha), beta
