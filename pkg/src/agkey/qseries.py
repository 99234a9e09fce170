"""Exact polynomials in ``q`` and the closed-form q-series used by the identities.

A :class:`QPoly` is a sparse map ``exponent -> coefficient`` with Python
integer coefficients, so nothing here can overflow or round.  Every value is
kept in canonical form (no zero coefficients), which makes ``==`` a plain
comparison of term sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "QPoly",
    "TriangleNumber",
    "ZERO",
    "ONE",
    "Q",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_eq",
    "monomial",
    "pochhammer_shifted",
    "q_factorial",
    "gaussian",
    "triangle",
    "key_identity_term",
    "key_identity_lhs",
    "lemma2_lhs_cleared",
    "lemma2_rhs_cleared",
]

class QPoly:
    """Immutable polynomial in ``q`` with arbitrary-precision integer coefficients.

    >>> (QPoly.constant(1) - Q) * (QPoly.constant(1) + Q)
    QPoly('1 - q^2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> QPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> QPoly:
        return cls({e: c})

    @classmethod
    def _wrap(cls, terms: dict[int, int]) -> QPoly:
        # trusted path: caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = {e: terms[e] for e in sorted(terms)}
        p._hash = None
        return p

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """``(exponent, coefficient)`` pairs in ascending exponent order."""
        return tuple(self._terms.items())

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    @property
    def degree(self) -> int | None:
        """Largest exponent, or ``None`` for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def lowest(self) -> int | None:
        return min(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __call__(self, x):
        """Exact evaluation (ints, Fractions, or anything supporting ``**``)."""
        total = 0
        for e, c in self._terms.items():
            total += c * x**e
        return total

    @staticmethod
    def _coerce(other) -> QPoly | None:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return QPoly._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return QPoly._wrap({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def shift(self, n: int) -> QPoly:
        """Multiply by ``q**n``."""
        if n < 0 and self._terms and min(self._terms) + n < 0:
            raise ValueError("shift would produce a negative exponent")
        return QPoly._wrap({e + n: c for e, c in self._terms.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for n, (e, c) in enumerate(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if n == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"QPoly('{self}')"


ZERO = QPoly()
ONE = QPoly.constant(1)
Q = QPoly.monomial(1)


def poly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def poly_sub(a: QPoly, b: QPoly) -> QPoly:
    return a - b


def poly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def poly_eq(a: QPoly, b: QPoly) -> bool:
    return a == b


def monomial(e: int, c: int = 1) -> QPoly:
    return QPoly.monomial(e, c)


@dataclass(frozen=True)
class TriangleNumber:
    i: int
    value: int

    def __int__(self):
        return self.value


def triangle(i: int) -> TriangleNumber:
    if i < 0:
        raise ValueError(f"triangle number index must be nonnegative, got {i}")
    return TriangleNumber(i, i * (i + 1) // 2)


def _check_nonneg(**kw):
    for name, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")


@lru_cache(maxsize=None)
def pochhammer_shifted(a: int, k: int) -> QPoly:
    """``(q^a; q)_k = (1 - q^a)(1 - q^(a+1)) ... (1 - q^(a+k-1))``.

    ``a = 0`` is allowed and gives the zero polynomial for ``k > 0``.
    """
    _check_nonneg(a=a, k=k)
    result = ONE
    for t in range(k):
        result = result * QPoly([(0, 1), (a + t, -1)])
    return result


def q_factorial(m: int) -> QPoly:
    """``(q; q)_m``."""
    return pochhammer_shifted(1, m)


@lru_cache(maxsize=None)
def gaussian(j: int, k: int) -> QPoly:
    """Gaussian binomial ``[j, k]_q`` via ``[j,k] = [j-1,k-1] + q^k [j-1,k]``."""
    _check_nonneg(j=j, k=k)
    if k > j:
        return ZERO
    if k == 0 or k == j:
        return ONE
    return gaussian(j - 1, k - 1) + gaussian(j - 1, k).shift(k)


def key_identity_term(i: int, j: int, k: int) -> QPoly:
    """One summand ``(q^(i-k+1); q)_k [j,k] q^((i-k)(j-k))`` of the key identity."""
    _check_nonneg(i=i, j=j, k=k)
    if not k <= j <= i:
        raise ValueError(f"need 0 <= k <= j <= i, got i={i}, j={j}, k={k}")
    return (pochhammer_shifted(i - k + 1, k) * gaussian(j, k)).shift((i - k) * (j - k))


def key_identity_lhs(i: int, j: int) -> QPoly:
    """Left side of the Alladi-Gordon key identity; equal to 1 whenever ``j <= i``."""
    _check_nonneg(i=i, j=j)
    if j > i:
        raise ValueError(f"key identity is only stated for j <= i, got i={i}, j={j}")
    total = ZERO
    for k in range(j + 1):
        total = total + key_identity_term(i, j, k)
    return total


def lemma2_lhs_cleared(i: int, j: int) -> QPoly:
    """Sum side of the Alladi-Gordon lemma after multiplying through by ``(q)_i (q)_j``.

    Uses ``(q)_i / ((q)_{i-m} (q)_m) = [i, m]`` so every term is a polynomial:
    ``q^(T_{i+j-m} + T_m) [i,m] [j,m] (q)_m``.
    """
    _check_nonneg(i=i, j=j)
    total = ZERO
    for m in range(min(i, j) + 1):
        e = triangle(i + j - m).value + triangle(m).value
        total = total + (gaussian(i, m) * gaussian(j, m) * q_factorial(m)).shift(e)
    return total


def lemma2_rhs_cleared(i: int, j: int) -> QPoly:
    _check_nonneg(i=i, j=j)
    return monomial(triangle(i).value + triangle(j).value)
