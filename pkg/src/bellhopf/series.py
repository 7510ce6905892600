"""Truncated formal power series in the central markers x, y, t.

Coefficients are either algebra elements or operator polynomials; the
markers commute with everything, so all noncommutativity lives in the
coefficients.  Exponents beyond the per-marker caps are discarded by every
operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, AlgebraId, AlgebraMismatchError
from .linear import factorial
from .operators import OperatorPoly, apply_poly


@dataclass(frozen=True)
class Truncation:
    """Per-marker degree caps (inclusive)."""

    nx: int
    ny: int
    nt: int

    def __post_init__(self):
        if min(self.nx, self.ny, self.nt) < 0:
            raise ValueError("truncation caps must be nonnegative")

    def contains(self, i: int, j: int, k: int) -> bool:
        return 0 <= i <= self.nx and 0 <= j <= self.ny and 0 <= k <= self.nt

    def as_tuple(self) -> tuple:
        return (self.nx, self.ny, self.nt)


class TruncationMismatchError(ValueError):
    """Raised when two series with different caps are combined."""


class TruncatedSeries:
    """Sparse series ``sum coeff[(i,j,k)] * x^i y^j t^k`` under a truncation.

    ``algebra`` is the coefficient domain: an :class:`AlgebraId` for
    element-valued series, or None for operator-valued series.
    """

    __slots__ = ("truncation", "algebra", "coeffs")

    def __init__(self, truncation: Truncation, coeffs=None, algebra: AlgebraId | None = None):
        self.truncation = truncation
        self.algebra = algebra
        data: dict = {}
        if coeffs:
            pairs = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for exp, value in pairs:
                i, j, k = exp
                if not truncation.contains(i, j, k):
                    continue
                if value.is_zero():
                    continue
                if (i, j, k) in data:
                    value = data[(i, j, k)] + value
                if value.is_zero():
                    data.pop((i, j, k), None)
                else:
                    data[(i, j, k)] = value
        self.coeffs = data

    # -- constructors -------------------------------------------------------

    @classmethod
    def unit(cls, truncation: Truncation, algebra: AlgebraId | None = None) -> "TruncatedSeries":
        one = OperatorPoly.one() if algebra is None else AlgebraElement.unit(algebra)
        return cls(truncation, {(0, 0, 0): one}, algebra)

    @classmethod
    def zero(cls, truncation: Truncation, algebra: AlgebraId | None = None) -> "TruncatedSeries":
        return cls(truncation, {}, algebra)

    def _zero_coeff(self):
        if self.algebra is None:
            return OperatorPoly.zero()
        return AlgebraElement.zero(self.algebra)

    # -- access -------------------------------------------------------------

    def coefficient(self, i: int, j: int, k: int):
        if not self.truncation.contains(i, j, k):
            raise ValueError(f"exponent ({i},{j},{k}) outside caps {self.truncation.as_tuple()}")
        return self.coeffs.get((i, j, k), self._zero_coeff())

    def is_zero(self) -> bool:
        return not self.coeffs

    def exponents(self):
        return sorted(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.algebra == other.algebra
            and self.coeffs == other.coeffs
        )

    # -- linear structure ----------------------------------------------------

    def _check_compatible(self, other: "TruncatedSeries"):
        if self.truncation != other.truncation:
            raise TruncationMismatchError(
                f"caps differ: {self.truncation.as_tuple()} vs {other.truncation.as_tuple()}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        data = dict(self.coeffs)
        for exp, value in other.coeffs.items():
            cur = data.get(exp)
            merged = value if cur is None else cur + value
            if merged.is_zero():
                data.pop(exp, None)
            else:
                data[exp] = merged
        out = TruncatedSeries(self.truncation, None, self.algebra)
        out.coeffs = data
        return out

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + other.scale(-1)

    def scale(self, scalar) -> "TruncatedSeries":
        c = Fraction(scalar)
        out = TruncatedSeries(self.truncation, None, self.algebra)
        if c:
            out.coeffs = {exp: c * value for exp, value in self.coeffs.items()}
        return out

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product under the shared truncation.

        Coefficient domains compose as element*element (same algebra),
        element*operator (the operator acts on the element, preserving the
        written order), or operator*operator.
        """
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        if self.algebra is None and other.algebra is not None:
            raise AlgebraMismatchError(
                "an operator-valued series cannot be multiplied by an element-valued one on the right"
            )
        if self.algebra is not None and other.algebra is not None and self.algebra is not other.algebra:
            raise AlgebraMismatchError("element coefficient algebras differ")
        if self.algebra is not None and other.algebra is None:
            combine = lambda e, p: apply_poly(p, e)
            result_alg = self.algebra
        else:
            combine = lambda u, v: u * v
            result_alg = self.algebra if self.algebra is not None else None
        tr = self.truncation
        out: dict = {}
        for (i1, j1, k1), c1 in self.coeffs.items():
            for (i2, j2, k2), c2 in other.coeffs.items():
                i, j, k = i1 + i2, j1 + j2, k1 + k2
                if not tr.contains(i, j, k):
                    continue
                value = combine(c1, c2)
                if value.is_zero():
                    continue
                cur = out.get((i, j, k))
                merged = value if cur is None else cur + value
                if merged.is_zero():
                    out.pop((i, j, k), None)
                else:
                    out[(i, j, k)] = merged
        result = TruncatedSeries(tr, None, result_alg)
        result.coeffs = out
        return result

    def exp(self) -> "TruncatedSeries":
        """``sum_m self^m / m!``; requires a vanishing constant term."""
        if (0, 0, 0) in self.coeffs:
            raise ValueError("series exponential requires a zero constant term")
        tr = self.truncation
        result = TruncatedSeries.unit(tr, self.algebra)
        if self.is_zero():
            return result
        min_total = min(i + j + k for (i, j, k) in self.coeffs)
        max_power = (tr.nx + tr.ny + tr.nt) // max(min_total, 1)
        power = TruncatedSeries.unit(tr, self.algebra)
        for m in range(1, max_power + 1):
            power = power * self
            if power.is_zero():
                break
            result = result + power.scale(Fraction(1, factorial(m)))
        return result

    # -- marker substitutions -------------------------------------------------

    def t_to_xt(self) -> "TruncatedSeries":
        """Substitute t -> xt, i.e. remap (i, j, k) to (i+k, j, k)."""
        return self._remap(lambda i, j, k: (i + k, j, k))

    def y_to_xt(self) -> "TruncatedSeries":
        """Substitute y -> xt, i.e. remap (i, j, k) to (i+j, 0, k+j)."""
        return self._remap(lambda i, j, k: (i + j, 0, k + j))

    def _remap(self, fn) -> "TruncatedSeries":
        tr = self.truncation
        out: dict = {}
        for (i, j, k), value in self.coeffs.items():
            ni, nj, nk = fn(i, j, k)
            if not tr.contains(ni, nj, nk):
                continue
            cur = out.get((ni, nj, nk))
            merged = value if cur is None else cur + value
            if merged.is_zero():
                out.pop((ni, nj, nk), None)
            else:
                out[(ni, nj, nk)] = merged
        result = TruncatedSeries(tr, None, self.algebra)
        result.coeffs = out
        return result

    def restrict(self, truncation: Truncation) -> "TruncatedSeries":
        """Forget coefficients beyond a smaller truncation."""
        out = TruncatedSeries(truncation, None, self.algebra)
        out.coeffs = {
            exp: value for exp, value in self.coeffs.items() if truncation.contains(*exp)
        }
        return out

    def with_truncation(self, truncation: Truncation) -> "TruncatedSeries":
        """Re-cap under a different truncation, dropping exponents outside it."""
        return self.restrict(truncation)

    # -- extraction -----------------------------------------------------------

    def extract_normalized(self, n: int, r: int, k: int, t_factorial: bool = False):
        """Return ``n! r! (k!) * coefficient(n, r, k)``.

        With ``t_factorial`` the t-marker is also treated as exponential,
        matching series whose terms carry ``t^k / k!``.
        """
        value = self.coefficient(n, r, k)
        scale = factorial(n) * factorial(r) * (factorial(k) if t_factorial else 1)
        if self.algebra is None:
            return scale * value
        return scale * value

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "caps": list(self.truncation.as_tuple()),
            "coeffs": [
                {"exp": list(exp), "value": self.coeffs[exp].to_json()}
                for exp in sorted(self.coeffs)
            ],
        }

    def __repr__(self):
        kind = "operator" if self.algebra is None else self.algebra.value
        return (
            f"<TruncatedSeries {kind} caps={self.truncation.as_tuple()} "
            f"terms={len(self.coeffs)}>"
        )
