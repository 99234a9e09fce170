"""Partitions, overpartitions and the families A(i,k), B(j,k), O(i,j,k).

Conventions used throughout the package:

* an ordinary partition is a nonincreasing ``tuple`` of nonnegative ints, and
  its length counts zero parts too, so ``len((2, 0, 0)) == 3``;
* a partition into distinct parts is a strictly decreasing ``tuple``;
* an :class:`Overpartition` is a nonincreasing sequence of :class:`Part` where
  only the first occurrence of a value may carry an overline.

Text format: ``11',8,7,3',3,0'`` (trailing apostrophe marks an overline), and
``-`` for the empty partition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .qseries import QPoly, ZERO

__all__ = [
    "Part",
    "Overpartition",
    "OContext",
    "Violation",
    "InvalidPartition",
    "Stats",
    "overline_weight",
    "validate_partition",
    "validate_distinct",
    "validate_overpartition",
    "stats",
    "enumerate_A",
    "enumerate_B",
    "is_member_A",
    "is_member_B",
    "is_member_O",
    "is_member_O_literal",
    "enumerate_O",
    "enumerate_O_all",
    "signed_genfunc_A",
    "genfunc_B",
    "parse_partition",
    "parse_overpartition",
    "format_partition",
    "format_overpartition",
    "to_record",
]


class Part(NamedTuple):
    value: int
    overlined: bool = False


class Violation(NamedTuple):
    """First broken invariant of a would-be (over)partition; ``position`` is 1-indexed."""

    invariant: str
    position: int
    detail: str

    def __str__(self):
        return f"{self.invariant} at position {self.position}: {self.detail}"


class InvalidPartition(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def validate_partition(parts: Sequence[int]) -> Violation | None:
    """Return the first violated invariant of an ordinary partition, or ``None``."""
    for r, v in enumerate(parts, 1):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            return Violation("nonnegative", r, f"part {v!r} is not a nonnegative integer")
        if r > 1 and v > parts[r - 2]:
            return Violation("nonincreasing", r, f"{v} follows {parts[r - 2]}")
    return None


def validate_distinct(parts: Sequence[int]) -> Violation | None:
    bad = validate_partition(parts)
    if bad is not None:
        return bad
    for r in range(1, len(parts)):
        if parts[r] == parts[r - 1]:
            return Violation("distinct", r + 1, f"value {parts[r]} repeats")
    return None


def validate_overpartition(parts: Sequence[tuple[int, bool]]) -> Violation | None:
    """Return the first violated overpartition invariant, or ``None``.

    Checks nonnegativity, nonincreasing values, and the first-occurrence rule
    (an overlined part must precede every plain part of the same value, so at
    most one part of each value is overlined).
    """
    values = [p[0] for p in parts]
    bad = validate_partition(values)
    if bad is not None:
        return bad
    for r in range(1, len(parts)):
        v, bar = parts[r]
        pv, pbar = parts[r - 1]
        if v == pv and bar:
            if pbar:
                return Violation("duplicate-overline", r + 1, f"value {v} overlined twice")
            return Violation(
                "overline-not-first", r + 1, f"overlined {v} follows a plain {v}"
            )
    return None


@dataclass(frozen=True)
class Overpartition:
    """A validated overpartition.

    >>> o = Overpartition.from_pairs([(4, True), (3, True), (2, False)])
    >>> str(o), o.size, o.ol
    ("4',3',2", 9, 2)
    """

    parts: tuple[Part, ...] = ()

    def __post_init__(self):
        parts = tuple(Part(int(v), bool(b)) for v, b in self.parts)
        object.__setattr__(self, "parts", parts)
        bad = validate_overpartition(parts)
        if bad is not None:
            raise InvalidPartition(bad)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, bool]]) -> Overpartition:
        return cls(tuple(pairs))

    @classmethod
    def plain(cls, values: Iterable[int]) -> Overpartition:
        """Ordinary partition viewed as an overpartition with no overlines."""
        return cls(tuple(Part(v, False) for v in values))

    @classmethod
    def parse(cls, text: str) -> Overpartition:
        return parse_overpartition(text)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, r):
        return self.parts[r]

    def __str__(self):
        return format_overpartition(self)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(p.value for p in self.parts)

    @property
    def size(self) -> int:
        return sum(p.value for p in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def ol(self) -> int:
        return sum(1 for p in self.parts if p.overlined)

    @property
    def overlined_values(self) -> tuple[int, ...]:
        return tuple(p.value for p in self.parts if p.overlined)

    @property
    def largest_overlined(self) -> int | None:
        for p in self.parts:
            if p.overlined:
                return p.value
        return None

    def t_profile(self) -> tuple[int, ...]:
        """Number of overlined parts strictly to the right of each position."""
        out = []
        seen = 0
        for p in reversed(self.parts):
            out.append(seen)
            seen += p.overlined
        return tuple(reversed(out))

    def sort_key(self):
        return self.parts


def overline_weight(i: int, k: int) -> int:
    """Weight carried by each overline of a member of O(i, j, k)."""
    return i - k + 1


@dataclass(frozen=True)
class OContext:
    """Parameters ``(i, j, k)`` with ``0 <= k <= j <= i`` for the set O(i, j, k)."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        for name in ("i", "j", "k"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if not self.k <= self.j <= self.i:
            raise ValueError(f"need 0 <= k <= j <= i, got i={self.i}, j={self.j}, k={self.k}")

    @property
    def weight(self) -> int:
        return overline_weight(self.i, self.k)

    @property
    def part_bound(self) -> int:
        return self.j - 1

    @property
    def box_bound(self) -> int:
        return self.j - self.k


class Stats(NamedTuple):
    size: int
    length: int
    ol_count: int
    largest_overlined: int | None
    t_profile: tuple[int, ...]


def stats(o: Overpartition) -> Stats:
    return Stats(o.size, o.length, o.ol, o.largest_overlined, o.t_profile())


# -- the families A, B --------------------------------------------------------

def enumerate_A(i: int, k: int) -> list[tuple[int, ...]]:
    """Partitions into distinct parts from ``{i-k+1, ..., i}``, the empty one included.

    Ordered by number of parts, then lexicographically on the parts read
    smallest first: for ``(9, 3)`` this is ``(), (7,), (8,), (9,), (8, 7), ...``.
    """
    if not 0 <= k <= i:
        raise ValueError(f"need 0 <= k <= i, got i={i}, k={k}")
    pool = range(i - k + 1, i + 1)
    return [
        tuple(reversed(c)) for n in range(k + 1) for c in itertools.combinations(pool, n)
    ]


def enumerate_B(j: int, k: int) -> list[tuple[int, ...]]:
    """Partitions with exactly ``k`` nonnegative parts, each at most ``j - k``.

    Lexicographically decreasing; there are ``binomial(j, k)`` of them.
    """
    if not 0 <= k <= j:
        raise ValueError(f"need 0 <= k <= j, got j={j}, k={k}")
    return list(itertools.combinations_with_replacement(range(j - k, -1, -1), k))


def is_member_A(gamma: Sequence[int], i: int, k: int) -> bool:
    if validate_distinct(gamma) is not None:
        return False
    return all(i - k + 1 <= v <= i for v in gamma)


def is_member_B(beta: Sequence[int], j: int, k: int) -> bool:
    if validate_partition(beta) is not None:
        return False
    return len(beta) == k and all(v <= j - k for v in beta)


# -- the family O -------------------------------------------------------------

def is_member_O(o: Overpartition, ctx: OContext) -> bool:
    """Membership in O(i, j, k).

    Condition (2) is checked position-wise: each part minus the number of
    overlines strictly to its right must not exceed ``j - k``.
    """
    if len(o) != ctx.k:
        return False
    for p, t in zip(o.parts, o.t_profile()):
        if p.value > ctx.part_bound or p.value - t > ctx.box_bound:
            return False
    return True


def is_member_O_literal(o: Overpartition, ctx: OContext) -> bool:
    """Membership in O(i, j, k) with condition (2) read word for word.

    For ``k >= 2`` and each ``1 <= s <= k-1``, every occurrence of the value
    ``j - s`` must have at least ``k - s`` overlined parts to its right.
    Kept separate from :func:`is_member_O` so the two readings can be compared.
    """
    j, k = ctx.j, ctx.k
    if len(o) != k:
        return False
    if any(p.value > j - 1 for p in o.parts):
        return False
    if k >= 2:
        for s in range(1, k):
            for r, p in enumerate(o.parts):
                if p.value == j - s:
                    right = sum(1 for q in o.parts[r + 1:] if q.overlined)
                    if right < k - s:
                        return False
    return True


def _generate_O(k: int, max_value: int, box_bound: int) -> Iterator[tuple[Part, ...]]:
    # Build right to left so the overline count to the right is known when a
    # part is placed; prune on the part bound and the position-wise box bound.
    def extend(suffix: tuple[Part, ...], bars: int):
        if len(suffix) == k:
            yield suffix
            return
        lo = suffix[0].value if suffix else 0
        for v in range(lo, max_value + 1):
            if v - bars > box_bound:
                break
            if suffix and v == suffix[0].value and suffix[0].overlined:
                # an overlined part must be the leftmost of its value
                continue
            yield from extend((Part(v, False),) + suffix, bars)
            yield from extend((Part(v, True),) + suffix, bars + 1)

    yield from extend((), 0)


def enumerate_O(ctx: OContext) -> list[Overpartition]:
    """All members of O(i, j, k), lexicographically decreasing, overlined first on ties."""
    out = []
    for parts in _generate_O(ctx.k, ctx.part_bound, ctx.box_bound):
        o = Overpartition(parts)
        if is_member_O(o, ctx):
            out.append(o)
    out.sort(key=Overpartition.sort_key, reverse=True)
    return out


def enumerate_O_all(i: int, j: int) -> list[tuple[int, Overpartition]]:
    """Members of O(i, j) as ``(k, overpartition)`` pairs, grouped by increasing ``k``."""
    return [(k, o) for k in range(j + 1) for o in enumerate_O(OContext(i, j, k))]


def signed_genfunc_A(i: int, k: int) -> QPoly:
    """``sum over A(i,k) of (-1)^len * q^size``, by enumeration."""
    acc: dict[int, int] = {}
    for g in enumerate_A(i, k):
        e = sum(g)
        acc[e] = acc.get(e, 0) + (-1) ** len(g)
    return QPoly(acc)


def genfunc_B(j: int, k: int) -> QPoly:
    """``sum over B(j,k) of q^size``, by enumeration."""
    acc: dict[int, int] = {}
    for b in enumerate_B(j, k):
        e = sum(b)
        acc[e] = acc.get(e, 0) + 1
    return QPoly(acc) if acc else ZERO


# -- text and record formats --------------------------------------------------

def format_partition(parts: Sequence[int]) -> str:
    return ",".join(str(v) for v in parts) if parts else "-"


def format_overpartition(o: Overpartition | Sequence[tuple[int, bool]]) -> str:
    parts = o.parts if isinstance(o, Overpartition) else o
    if not parts:
        return "-"
    return ",".join(f"{v}'" if bar else str(v) for v, bar in parts)


def _split(text: str) -> list[str]:
    text = text.strip()
    if text in ("-", ""):
        return []
    return [tok.strip() for tok in text.split(",")]


def parse_overpartition(text: str) -> Overpartition:
    """Parse ``4',3',2`` style text; ``-`` is the empty overpartition."""
    parts = []
    for tok in _split(text):
        bar = tok.endswith("'")
        digits = tok[:-1] if bar else tok
        if not digits.isdigit():
            raise ValueError(f"malformed part {tok!r} in {text!r}")
        parts.append(Part(int(digits), bar))
    return Overpartition(tuple(parts))


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse ``9,6,5`` style text into a nonincreasing tuple; rejects overlines."""
    parts = []
    for tok in _split(text):
        if not tok.isdigit():
            raise ValueError(f"malformed part {tok!r} in {text!r}")
        parts.append(int(tok))
    bad = validate_partition(parts)
    if bad is not None:
        raise InvalidPartition(bad)
    return tuple(parts)


def to_record(o: Overpartition, ctx: OContext | None = None) -> dict:
    rec: dict = {"parts": [{"value": p.value, "overlined": p.overlined} for p in o.parts]}
    if ctx is not None:
        rec.update(i=ctx.i, j=ctx.j, k=ctx.k, weight=ctx.weight)
    return rec
