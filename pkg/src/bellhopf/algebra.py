"""The three level-2 combinatorial Hopf algebras.

* ``Sym2``  -- free commutative algebra on two families of power-sum
  generators; basis keys are bicolored partitions.
* ``NCSF2`` -- the free associative analogue; basis keys are bicolored
  compositions.
* ``WSym2`` -- 2-colored word symmetric functions; basis keys are bicolored
  set partitions, with the shifted-union product and the block-split
  coproduct.

All elements are sparse exact-rational combinations of canonical keys.  The
degree-i generators are ``a(alg, i)`` (color 1) and ``b(alg, i)`` (color 2);
they are primitive for the coproduct in every algebra.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .linear import LinearCombination, rational_str, parse_rational
from .partitions import (
    BicoloredComposition,
    BicoloredPartition,
    BicoloredSetPartition,
    bicolored_compositions,
    bicolored_partitions,
    bicolored_set_partitions,
    composition_type,
    partition_type,
    shifted_union,
    standardize,
)


class AlgebraId(enum.Enum):
    SYM2 = "Sym2"
    NCSF2 = "NCSF2"
    WSYM2 = "WSym2"

    @classmethod
    def from_name(cls, name: str) -> "AlgebraId":
        for member in cls:
            if member.value.lower() == name.lower():
                return member
        raise ValueError(f"unknown algebra {name!r}")


class AlgebraMismatchError(TypeError):
    """Raised when elements of different algebras are combined."""


_KEY_TYPES = {
    AlgebraId.SYM2: BicoloredPartition,
    AlgebraId.NCSF2: BicoloredComposition,
    AlgebraId.WSYM2: BicoloredSetPartition,
}

_UNIT_KEYS = {
    AlgebraId.SYM2: BicoloredPartition(()),
    AlgebraId.NCSF2: BicoloredComposition(()),
    AlgebraId.WSYM2: BicoloredSetPartition(()),
}


def unit_key(alg: AlgebraId):
    """The empty key, which is the multiplicative unit in each algebra."""
    return _UNIT_KEYS[alg]


@lru_cache(maxsize=None)
def generator_key(alg: AlgebraId, size: int, color: int):
    """Key of the degree-``size`` generator of the given color."""
    if size < 1:
        raise ValueError("generator degree must be >= 1")
    if alg is AlgebraId.SYM2:
        return BicoloredPartition(((size, color),))
    if alg is AlgebraId.NCSF2:
        return BicoloredComposition(((size, color),))
    return BicoloredSetPartition(((tuple(range(1, size + 1)), color),))


def key_product(alg: AlgebraId, u, v):
    """Product of two basis keys (always a single basis key)."""
    if alg is AlgebraId.SYM2:
        return BicoloredPartition(u.parts + v.parts)
    if alg is AlgebraId.NCSF2:
        return BicoloredComposition._unsafe(u.parts + v.parts)
    return shifted_union(u, v)


def bidegree(key) -> tuple:
    """(total weight, number of parts or blocks) of a basis key."""
    return (key.weight, key.length)


class AlgebraElement:
    """A sparse rational linear combination of basis keys of one algebra."""

    __slots__ = ("algebra", "lc")

    def __init__(self, algebra: AlgebraId, lc: LinearCombination):
        self.algebra = algebra
        self.lc = lc

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, alg: AlgebraId) -> "AlgebraElement":
        return cls(alg, LinearCombination.zero())

    @classmethod
    def unit(cls, alg: AlgebraId) -> "AlgebraElement":
        return cls(alg, LinearCombination.term(unit_key(alg)))

    @classmethod
    def from_key(cls, alg: AlgebraId, key, coeff=1) -> "AlgebraElement":
        if not isinstance(key, _KEY_TYPES[alg]):
            raise AlgebraMismatchError(f"{type(key).__name__} is not a {alg.value} key")
        return cls(alg, LinearCombination.term(key, coeff))

    @classmethod
    def from_terms(cls, alg: AlgebraId, terms) -> "AlgebraElement":
        return cls(alg, LinearCombination(terms))

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.lc.is_zero()

    def coefficient(self, key) -> Fraction:
        return self.lc.coefficient(key)

    def counit(self) -> Fraction:
        """Coefficient of the empty key (degree-0 projection)."""
        return self.lc.coefficient(unit_key(self.algebra))

    def support(self):
        return self.lc.support()

    def terms(self):
        return self.lc.items()

    def homogeneous_bidegree(self):
        """The common (weight, length) of all keys, or None if mixed/zero."""
        degrees = {bidegree(k) for k in self.lc.raw()}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError(
                f"cannot combine {self.algebra.value} with {other.algebra.value}"
            )

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.lc == other.lc

    def __hash__(self):
        return hash((self.algebra, self.lc))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, self.lc + other.lc)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, self.lc - other.lc)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.lc)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            alg = self.algebra
            out: dict = {}
            for u, cu in self.lc.raw().items():
                for v, cv in other.lc.raw().items():
                    key = key_product(alg, u, v)
                    c = out.get(key)
                    out[key] = cu * cv if c is None else c + cu * cv
            return AlgebraElement(alg, LinearCombination(out))
        return AlgebraElement(self.algebra, self.lc.scale(other))

    def __rmul__(self, scalar):
        return AlgebraElement(self.algebra, self.lc.scale(scalar))

    def __truediv__(self, scalar):
        return AlgebraElement(self.algebra, self.lc.scale(Fraction(1, 1) / Fraction(scalar)))

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = AlgebraElement.unit(self.algebra)
        for _ in range(exponent):
            result = result * self
        return result

    def map_keys(self, fn) -> "AlgebraElement":
        """Apply a key map within the same algebra, merging coefficients."""
        return AlgebraElement(self.algebra, self.lc.map_keys(fn))

    def map_terms(self, fn) -> "AlgebraElement":
        """Apply ``fn(key, coeff) -> (new_key, new_coeff)`` termwise."""
        out: dict = {}
        for key, coeff in self.lc.raw().items():
            new_key, new_coeff = fn(key, coeff)
            c = out.get(new_key)
            out[new_key] = new_coeff if c is None else c + new_coeff
        return AlgebraElement(self.algebra, LinearCombination(out))

    # -- rendering ----------------------------------------------------------

    def text(self) -> str:
        return _render(self.algebra, self.lc, latex=False)

    def latex(self) -> str:
        return _render(self.algebra, self.lc, latex=True)

    def __repr__(self):
        return f"<{self.algebra.value}: {self.text()}>"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.value,
            "terms": [
                {"coeff": rational_str(c), "key": k.to_json()}
                for k, c in self.lc.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        alg = AlgebraId.from_name(data["algebra"])
        key_type = _KEY_TYPES[alg]
        terms = [
            (key_type.from_json(t["key"]), parse_rational(t["coeff"]))
            for t in data["terms"]
        ]
        return cls.from_terms(alg, terms)


def a(alg: AlgebraId, i: int) -> AlgebraElement:
    """The color-1 generator of degree i."""
    return AlgebraElement.from_key(alg, generator_key(alg, i, 1))


def b(alg: AlgebraId, i: int) -> AlgebraElement:
    """The color-2 generator of degree i."""
    return AlgebraElement.from_key(alg, generator_key(alg, i, 2))


# ---------------------------------------------------------------------------
# coalgebra structure
# ---------------------------------------------------------------------------

class TensorElement:
    """A rational combination of (key, key) pairs from one algebra."""

    __slots__ = ("algebra", "lc")

    def __init__(self, algebra: AlgebraId, lc: LinearCombination):
        self.algebra = algebra
        self.lc = lc

    @classmethod
    def zero(cls, alg: AlgebraId) -> "TensorElement":
        return cls(alg, LinearCombination.zero())

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra is other.algebra and self.lc == other.lc

    def __add__(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError("tensor algebras differ")
        return TensorElement(self.algebra, self.lc + other.lc)

    def __sub__(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError("tensor algebras differ")
        return TensorElement(self.algebra, self.lc - other.lc)

    def __rmul__(self, scalar):
        return TensorElement(self.algebra, self.lc.scale(scalar))

    def __mul__(self, other):
        """Componentwise product (u1 (x) u2)(v1 (x) v2) = u1v1 (x) u2v2."""
        if not isinstance(other, TensorElement):
            return TensorElement(self.algebra, self.lc.scale(other))
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError("tensor algebras differ")
        alg = self.algebra
        out: dict = {}
        for (u1, u2), cu in self.lc.raw().items():
            for (v1, v2), cv in other.lc.raw().items():
                key = (key_product(alg, u1, v1), key_product(alg, u2, v2))
                c = out.get(key)
                out[key] = cu * cv if c is None else c + cu * cv
        return TensorElement(alg, LinearCombination(out))

    def map_sides(self, fn, target: AlgebraId) -> "TensorElement":
        """Apply a key map to both tensor legs."""
        return TensorElement(target, self.lc.map_keys(lambda kk: (fn(kk[0]), fn(kk[1]))))

    def __repr__(self):
        body = " + ".join(
            f"{rational_str(c)}*({k1!r} (x) {k2!r})" for (k1, k2), c in self.lc.items()
        )
        return f"<{self.algebra.value} tensor: {body or '0'}>"


def _split_positions(entries, mask: int):
    left = tuple(e for i, e in enumerate(entries) if mask >> i & 1)
    right = tuple(e for i, e in enumerate(entries) if not mask >> i & 1)
    return left, right


def coproduct_key(alg: AlgebraId, key) -> TensorElement:
    """Coproduct of a basis key.

    Generators are primitive; on a general key this expands to the sum over
    all splittings of its parts (positions for Sym2/NCSF2, blocks with
    standardization for WSym2).
    """
    if alg is AlgebraId.WSYM2:
        entries = key.blocks
    else:
        entries = key.parts
    out: dict = {}
    one = Fraction(1)
    for mask in range(1 << len(entries)):
        left, right = _split_positions(entries, mask)
        if alg is AlgebraId.SYM2:
            pair = (BicoloredPartition._unsafe(left), BicoloredPartition._unsafe(right))
        elif alg is AlgebraId.NCSF2:
            pair = (BicoloredComposition._unsafe(left), BicoloredComposition._unsafe(right))
        else:
            pair = (standardize(left), standardize(right))
        c = out.get(pair)
        out[pair] = one if c is None else c + one
    return TensorElement(alg, LinearCombination(out))


def coproduct(e: AlgebraElement) -> TensorElement:
    """Linear extension of :func:`coproduct_key`."""
    total = TensorElement.zero(e.algebra)
    for key, c in e.lc.raw().items():
        total = total + c * coproduct_key(e.algebra, key)
    return total


def is_primitive(e: AlgebraElement) -> bool:
    """True iff coproduct(e) == e (x) 1 + 1 (x) e (vacuously true for 0)."""
    one = unit_key(e.algebra)
    expected = LinearCombination(
        [((k, one), c) for k, c in e.lc.raw().items()]
        + [((one, k), c) for k, c in e.lc.raw().items()]
    )
    return coproduct(e).lc == expected


def in_color2_subalgebra(e: AlgebraElement) -> bool:
    """True iff every key of e uses color 2 only (the level-1 subalgebra)."""
    if e.algebra is AlgebraId.WSYM2:
        return all(c == 2 for key in e.lc.raw() for _, c in key.blocks)
    return all(c == 2 for key in e.lc.raw() for _, c in key.parts)


# ---------------------------------------------------------------------------
# morphisms and specialization
# ---------------------------------------------------------------------------

def to_ncsf2(e: AlgebraElement) -> AlgebraElement:
    """Forget set structure block-wise: WSym2 -> NCSF2 via composition type."""
    if e.algebra is not AlgebraId.WSYM2:
        raise AlgebraMismatchError("to_ncsf2 expects a WSym2 element")
    return AlgebraElement(AlgebraId.NCSF2, e.lc.map_keys(composition_type))


def to_sym2(e: AlgebraElement) -> AlgebraElement:
    """Forget set structure and order: WSym2 -> Sym2 via partition type."""
    if e.algebra is not AlgebraId.WSYM2:
        raise AlgebraMismatchError("to_sym2 expects a WSym2 element")
    return AlgebraElement(AlgebraId.SYM2, e.lc.map_keys(partition_type))


def abelianize(e: AlgebraElement) -> AlgebraElement:
    """NCSF2 -> Sym2, forgetting the order of composition parts."""
    if e.algebra is not AlgebraId.NCSF2:
        raise AlgebraMismatchError("abelianize expects an NCSF2 element")
    return AlgebraElement(
        AlgebraId.SYM2, e.lc.map_keys(lambda key: BicoloredPartition(key.parts))
    )


def specialize_sym2(e: AlgebraElement, a_values, b_values) -> Fraction:
    """Evaluate a Sym2 element, sending the degree-i generator of color 1
    (resp. 2) to ``a_values[i-1]`` (resp. ``b_values[i-1]``)."""
    if e.algebra is not AlgebraId.SYM2:
        raise AlgebraMismatchError("specialize_sym2 expects a Sym2 element")
    total = Fraction(0)
    for key, coeff in e.lc.raw().items():
        value = coeff
        for size, color in key.parts:
            values = a_values if color == 1 else b_values
            if size > len(values):
                raise ValueError(
                    f"no value supplied for the degree-{size} color-{color} generator"
                )
            value *= Fraction(values[size - 1])
        total += value
    return total


# ---------------------------------------------------------------------------
# basis enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def basis_keys(alg: AlgebraId, weight: int) -> tuple:
    """All basis keys of the given total weight, deterministically ordered."""
    if alg is AlgebraId.SYM2:
        return bicolored_partitions(weight)
    if alg is AlgebraId.NCSF2:
        return bicolored_compositions(weight)
    return bicolored_set_partitions(weight)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _monomial_text(pairs) -> str:
    # adjacent equal letters collapse to a power: a2*a1*b1^2
    out = []
    for size, color in pairs:
        letter = f"{'a' if color == 1 else 'b'}{size}"
        if out and out[-1][0] == letter:
            out[-1][1] += 1
        else:
            out.append([letter, 1])
    return "*".join(l if m == 1 else f"{l}^{m}" for l, m in out)


def _key_text(alg: AlgebraId, key) -> str:
    if alg is AlgebraId.WSYM2:
        return repr(key)
    if alg is AlgebraId.SYM2:
        display = sorted(key.parts, key=lambda pc: (pc[1], pc[0]))
        return _monomial_text(display)
    return _monomial_text(key.parts)


def _key_latex(alg: AlgebraId, key) -> str:
    if alg is AlgebraId.SYM2:
        body = ",".join(f"({p},{c})" for p, c in key.parts)
        return "p^{\\{" + body + "\\}}"
    if alg is AlgebraId.NCSF2:
        body = ",".join(f"({p},{c})" for p, c in key.parts)
        return "\\Psi^{[" + body + "]}"
    body = ",".join(
        "(\\{" + ",".join(map(str, e)) + "\\}," + str(c) + ")" for e, c in key.blocks
    )
    return "\\Phi^{\\{" + body + "\\}}"


def _coeff_latex(c: Fraction) -> str:
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c.denominator == 1:
        return f"{sign}{c.numerator}"
    return f"{sign}\\frac{{{c.numerator}}}{{{c.denominator}}}"


def _render(alg: AlgebraId, lc: LinearCombination, latex: bool) -> str:
    if lc.is_zero():
        return "0"
    empty = unit_key(alg)
    pieces = []
    for key, c in lc.items():
        if key == empty:
            body = _coeff_latex(c) if latex else rational_str(c)
        else:
            key_str = _key_latex(alg, key) if latex else _key_text(alg, key)
            if c == 1:
                body = key_str
            elif c == -1:
                body = "-" + key_str
            elif latex:
                body = _coeff_latex(c) + "\\," + key_str
            else:
                body = f"{rational_str(c)}*{key_str}"
        pieces.append(body)
    text = " + ".join(pieces)
    return text.replace("+ -", "- ")
