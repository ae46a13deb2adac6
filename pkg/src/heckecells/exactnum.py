"""Exact Laurent polynomials in v = q^(1/2) with integer coefficients.

Exponents are stored in units of v, so half-integral powers of q are plain
integers.  Coefficients are Python ints (arbitrary precision).
"""
from __future__ import annotations

from typing import Iterable, Mapping

NEG_INF = float("-inf")


class LaurentV:
    """Immutable sparse Laurent polynomial ``sum c_e v^e``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentV":
        return cls({exponent: coeff})

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable[int]) -> "LaurentV":
        """Polynomial in q given by ascending coefficients (q^d -> v^(2d))."""
        return cls({2 * d: c for d, c in enumerate(coeffs)})

    @classmethod
    def from_json(cls, data) -> "LaurentV":
        return cls((int(e), int(c)) for e, c in data)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self):
        return max(self._terms) if self._terms else NEG_INF

    def low_degree(self):
        return min(self._terms) if self._terms else NEG_INF

    def leading(self):
        """``(degree, coefficient)``; ``(-inf, 0)`` for zero."""
        if not self._terms:
            return NEG_INF, 0
        d = max(self._terms)
        return d, self._terms[d]

    def bar(self) -> "LaurentV":
        return LaurentV({-e: c for e, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentV":
        """Multiply by v^k."""
        return LaurentV({e + k: c for e, c in self._terms.items()})

    def q_coeffs(self) -> list[int]:
        """Ascending q-coefficients; requires nonnegative even exponents."""
        if not self._terms:
            return []
        if any(e < 0 or e % 2 for e in self._terms):
            raise ValueError(f"{self} is not a polynomial in q")
        out = [0] * (max(self._terms) // 2 + 1)
        for e, c in self._terms.items():
            out[e // 2] = c
        return out

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    # arithmetic
    def _coerce(self, other) -> "LaurentV":
        if isinstance(other, LaurentV):
            return other
        if isinstance(other, int):
            return LaurentV({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentV(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentV({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentV(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentV({0: other})
        if not isinstance(other, LaurentV):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentV({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


def arith(a: LaurentV, b: LaurentV, kind: str) -> LaurentV:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def bar(a: LaurentV) -> LaurentV:
    return a.bar()


def leading(a: LaurentV):
    return a.leading()


ZERO = LaurentV()
ONE = LaurentV({0: 1})
V = LaurentV({1: 1})
VINV = LaurentV({-1: 1})
Q = LaurentV({2: 1})
ZETA = LaurentV({1: 1, -1: -1})  # v - v^-1
XI = LaurentV({1: 1, -1: 1})  # v + v^-1
