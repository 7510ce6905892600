"""Exact rational scalars and sparse linear combinations.

Coefficients are :class:`fractions.Fraction` throughout; nothing in this
package ever rounds.  Keys of a :class:`LinearCombination` must be hashable
and mutually comparable so that iteration, rendering and serialization are
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb as binomial, factorial  # noqa: F401  (re-exported)

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational_str(value) -> str:
    """Render a rational as ``"p/q"``, or plain ``"p"`` when q == 1.

    >>> rational_str(Fraction(-1, 2))
    '-1/2'
    >>> rational_str(3)
    '3'
    """
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`rational_str`."""
    return Fraction(text)


class LinearCombination:
    """A finite linear combination of keys with nonzero rational coefficients.

    Zero coefficients are never stored, so equality is plain term-wise
    comparison.  ``items()`` yields terms in key order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data: dict = {}
        pairs = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in pairs:
            c = data.get(key, _ZERO) + Fraction(coeff)
            if c:
                data[key] = c
            elif key in data:
                del data[key]
        self._terms = data

    @classmethod
    def _wrap(cls, clean: dict) -> "LinearCombination":
        # Trusted constructor: `clean` must already be zero-free with Fraction values.
        obj = object.__new__(cls)
        obj._terms = clean
        return obj

    @classmethod
    def zero(cls) -> "LinearCombination":
        return cls._wrap({})

    @classmethod
    def term(cls, key, coeff=1) -> "LinearCombination":
        c = Fraction(coeff)
        return cls._wrap({key: c} if c else {})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, _ZERO)

    def support(self):
        """Keys with nonzero coefficient, in key order."""
        return sorted(self._terms)

    def items(self):
        """Terms as ``(key, coefficient)`` pairs, in key order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def raw(self) -> dict:
        """The underlying mapping (treat as read-only)."""
        return self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LinearCombination":
        return self._wrap({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        data = dict(self._terms)
        for key, c in other._terms.items():
            s = data.get(key, _ZERO) + c
            if s:
                data[key] = s
            elif key in data:
                del data[key]
        return self._wrap(data)

    def __sub__(self, other) -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff) -> "LinearCombination":
        c = Fraction(coeff)
        if not c:
            return self.zero()
        if c == _ONE:
            return self
        return self._wrap({k: c * v for k, v in self._terms.items()})

    def map_keys(self, fn) -> "LinearCombination":
        """Push every key through ``fn``, merging coefficients."""
        data: dict = {}
        for key, c in self._terms.items():
            new = fn(key)
            s = data.get(new, _ZERO) + c
            if s:
                data[new] = s
            elif new in data:
                del data[new]
        return self._wrap(data)

    def __repr__(self) -> str:
        if not self._terms:
            return "LinearCombination()"
        body = ", ".join(f"{k!r}: {rational_str(c)}" for k, c in self.items())
        return f"LinearCombination({{{body}}})"


def combine(c1, v1: LinearCombination, c2, v2: LinearCombination) -> LinearCombination:
    """The bilinear update ``c1*v1 + c2*v2`` with zero terms dropped."""
    return v1.scale(c1) + v2.scale(c2)
