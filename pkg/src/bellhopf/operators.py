"""Right-acting operator calculus on the three algebras.

Two abstract symbols generate the operator algebra:

* ``D`` -- the shift operator (degree-i generators to degree i+1 in Sym2 and
  NCSF2 via the Leibniz rule; insertion of a new largest element into each
  block in WSym2; it kills the unit).
* ``B`` -- right multiplication by the degree-1 color-2 generator.

Words act leftmost-letter-first: ``e . (uv) = (e . u) . v``.  Operator
polynomials are kept as free-algebra words and compared by their action,
never by a word-level normal form.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    AlgebraElement,
    AlgebraId,
    basis_keys,
    generator_key,
    unit_key,
)
from .linear import LinearCombination, factorial, rational_str, parse_rational
from .partitions import (
    BicoloredComposition,
    BicoloredPartition,
    BicoloredSetPartition,
)

_ALPHABET = frozenset("BD")


class OperatorPoly:
    """Exact-rational polynomial in the free monoid on the letters B, D."""

    __slots__ = ("lc",)

    def __init__(self, lc: LinearCombination):
        self.lc = lc

    @classmethod
    def zero(cls) -> "OperatorPoly":
        return cls(LinearCombination.zero())

    @classmethod
    def one(cls) -> "OperatorPoly":
        return cls(LinearCombination.term(""))

    @classmethod
    def word(cls, word: str, coeff=1) -> "OperatorPoly":
        if not _ALPHABET.issuperset(word):
            raise ValueError(f"operator words use letters B and D only, got {word!r}")
        return cls(LinearCombination.term(word, coeff))

    def is_zero(self) -> bool:
        return self.lc.is_zero()

    def __eq__(self, other):
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self.lc == other.lc

    def __hash__(self):
        return hash(self.lc)

    def __add__(self, other):
        return OperatorPoly(self.lc + other.lc)

    def __sub__(self, other):
        return OperatorPoly(self.lc - other.lc)

    def __neg__(self):
        return OperatorPoly(-self.lc)

    def __mul__(self, other):
        if isinstance(other, OperatorPoly):
            out: dict = {}
            for u, cu in self.lc.raw().items():
                for v, cv in other.lc.raw().items():
                    w = u + v
                    c = out.get(w)
                    out[w] = cu * cv if c is None else c + cu * cv
            return OperatorPoly(LinearCombination(out))
        return OperatorPoly(self.lc.scale(other))

    def __rmul__(self, scalar):
        return OperatorPoly(self.lc.scale(scalar))

    def text(self) -> str:
        if self.lc.is_zero():
            return "0"
        pieces = []
        for w, c in self.lc.items():
            word = w if w else "1"
            if c == 1:
                pieces.append(word)
            elif c == -1:
                pieces.append("-" + word)
            else:
                pieces.append(f"{rational_str(c)}*{word}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"<OperatorPoly: {self.text()}>"

    def to_json(self) -> dict:
        return {"terms": [{"coeff": rational_str(c), "word": w} for w, c in self.lc.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "OperatorPoly":
        return cls(LinearCombination(
            (t["word"], parse_rational(t["coeff"])) for t in data["terms"]
        ))


OP_D = OperatorPoly.word("D")
OP_B = OperatorPoly.word("B")


def ad(x: OperatorPoly, y: OperatorPoly) -> OperatorPoly:
    """Commutator bracket [x, y] = xy - yx in the free algebra."""
    return x * y - y * x


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------

_shift_cache: dict = {}
_append_cache: dict = {}


def _shift_key(alg: AlgebraId, key) -> tuple:
    """Keys of (basis key).D, with multiplicity, as a tuple."""
    cached = _shift_cache.get((alg, key))
    if cached is not None:
        return cached
    if alg is AlgebraId.WSYM2:
        out = tuple(_insert_into_block(key, j) for j in range(len(key.blocks)))
    elif alg is AlgebraId.NCSF2:
        parts = key.parts
        out = tuple(
            BicoloredComposition._unsafe(
                parts[:j] + ((parts[j][0] + 1, parts[j][1]),) + parts[j + 1:]
            )
            for j in range(len(parts))
        )
    else:
        parts = key.parts
        out = tuple(
            BicoloredPartition(
                parts[:j] + ((parts[j][0] + 1, parts[j][1]),) + parts[j + 1:]
            )
            for j in range(len(parts))
        )
    _shift_cache[(alg, key)] = out
    return out


def _insert_into_block(sp: BicoloredSetPartition, j: int) -> BicoloredSetPartition:
    m = sp.n + 1
    blocks = list(sp.blocks)
    elems, color = blocks[j]
    blocks[j] = (elems + (m,), color)
    return BicoloredSetPartition._unsafe(tuple(blocks), m)


def _append_b1(alg: AlgebraId, key):
    """Key of (basis key) * b1."""
    cached = _append_cache.get((alg, key))
    if cached is not None:
        return cached
    if alg is AlgebraId.WSYM2:
        out = BicoloredSetPartition._unsafe(key.blocks + (((key.n + 1,), 2),), key.n + 1)
    elif alg is AlgebraId.NCSF2:
        out = BicoloredComposition._unsafe(key.parts + ((1, 2),))
    else:
        out = BicoloredPartition(key.parts + ((1, 2),))
    _append_cache[(alg, key)] = out
    return out


def _word_on_counts(alg: AlgebraId, word: str, counts: dict) -> dict:
    """Apply a word to an integer-multiplicity key dict, letter by letter."""
    for letter in word:
        nxt: dict = {}
        if letter == "D":
            for key, mult in counts.items():
                for shifted in _shift_key(alg, key):
                    c = nxt.get(shifted)
                    nxt[shifted] = mult if c is None else c + mult
        else:
            for key, mult in counts.items():
                appended = _append_b1(alg, key)
                c = nxt.get(appended)
                nxt[appended] = mult if c is None else c + mult
        counts = nxt
        if not counts:
            break
    return counts


def apply_word(word: str, e: AlgebraElement) -> AlgebraElement:
    """Act with a single operator word, leftmost letter first."""
    if not _ALPHABET.issuperset(word):
        raise ValueError(f"operator words use letters B and D only, got {word!r}")
    alg = e.algebra
    out: dict = {}
    for key, coeff in e.lc.raw().items():
        for new_key, mult in _word_on_counts(alg, word, {key: 1}).items():
            c = out.get(new_key)
            add = coeff * mult
            out[new_key] = add if c is None else c + add
    return AlgebraElement(alg, LinearCombination(out))


def apply_poly(p: OperatorPoly, e: AlgebraElement) -> AlgebraElement:
    """Act with an operator polynomial (linear in both arguments)."""
    alg = e.algebra
    out: dict = {}
    for key, ecoeff in e.lc.raw().items():
        for word, wcoeff in p.lc.raw().items():
            scale = ecoeff * wcoeff
            for new_key, mult in _word_on_counts(alg, word, {key: 1}).items():
                c = out.get(new_key)
                add = scale * mult
                out[new_key] = add if c is None else c + add
    return AlgebraElement(alg, LinearCombination(out))


def apply_shift(e: AlgebraElement) -> AlgebraElement:
    """The action of D alone (``e . D``)."""
    return apply_word("D", e)


# ---------------------------------------------------------------------------
# Zassenhaus correction terms
# ---------------------------------------------------------------------------

def zassenhaus_term(n: int, k: int) -> OperatorPoly:
    """The degree-(n, k) correction term of the factorization
    ``exp(x(tB+D)) = exp(xtB) exp(xD) prod_{m>=2} exp(x^m sum_k t^k term(m,k))``:

        ((-1)^(n+1) / n) * (1 / (k! (n-k-1)!)) * ad_D^(n-k-1) ad_B^k D

    with the nested brackets applied innermost first.  ``term(n, 0)`` is 0.
    """
    if n < 2 or k < 0 or k > n - 1:
        raise ValueError(f"need n >= 2 and 0 <= k <= n-1, got ({n}, {k})")
    p = OP_D
    for _ in range(k):
        p = ad(OP_B, p)
    for _ in range(n - k - 1):
        p = ad(OP_D, p)
    coeff = Fraction((-1) ** (n + 1), n * factorial(k) * factorial(n - k - 1))
    return coeff * p


def _nested_bracket(indices) -> AlgebraElement:
    """[b_{i1}, [b_{i2}, ..., [b_{i_{m-1}}, b_{i_m}] ...]] in NCSF2."""
    from .algebra import b as gen_b

    elements = [gen_b(AlgebraId.NCSF2, i) for i in indices]
    result = elements[-1]
    for left in reversed(elements[:-1]):
        result = left * result - result * left
    return result


def _compositions_into(total: int, slots: int):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for tail in _compositions_into(total - head, slots - 1):
            yield (head,) + tail


def zassenhaus_term_closed(n: int, k: int) -> AlgebraElement:
    """Closed form of ``zassenhaus_term(n, k)`` applied to 1 in NCSF2.

    A multinomial sum over nested brackets of color-2 generators: shifting
    the bracket ``[b_1, [b_1, ..., [b_1, b_2]]]`` by ``n-k-1`` Leibniz steps
    distributes the shifts over the k slots.
    """
    if n < 2 or k < 1 or k > n - 1:
        raise ValueError(f"need n >= 2 and 1 <= k <= n-1, got ({n}, {k})")
    total = AlgebraElement.zero(AlgebraId.NCSF2)
    shifts = n - k - 1
    base = factorial(shifts)
    for js in _compositions_into(shifts, k):
        mult = base
        for j in js:
            mult //= factorial(j)
        indices = tuple(1 + j for j in js[:-1]) + (2 + js[-1],)
        if k == 1:
            from .algebra import b as gen_b

            bracket = gen_b(AlgebraId.NCSF2, indices[0])
        else:
            bracket = _nested_bracket(indices)
        total = total + mult * bracket
    coeff = Fraction((-1) ** k, n * factorial(k) * factorial(shifts))
    return coeff * total


def as_multiplication(alg: AlgebraId, p: OperatorPoly, degree_bound: int):
    """Certify that ``p`` acts as right multiplication, up to a weight bound.

    Returns the candidate element ``1 . p`` if ``e . p == e * (1 . p)`` for
    every basis key of weight <= degree_bound, and None otherwise.
    """
    candidate = apply_poly(p, AlgebraElement.unit(alg))
    for weight in range(1, degree_bound + 1):
        for key in basis_keys(alg, weight):
            e = AlgebraElement.from_key(alg, key)
            if apply_poly(p, e) != e * candidate:
                return None
    return candidate


# ---------------------------------------------------------------------------
# order-by-order factorization solver
# ---------------------------------------------------------------------------

def _table_mul(t1: dict, t2: dict, nx: int, nt: int) -> dict:
    out: dict = {}
    for (i1, k1), p1 in t1.items():
        for (i2, k2), p2 in t2.items():
            i, k = i1 + i2, k1 + k2
            if i > nx or k > nt:
                continue
            prod = p1 * p2
            if prod.is_zero():
                continue
            cur = out.get((i, k))
            out[(i, k)] = prod if cur is None else cur + prod
    return {ik: p for ik, p in out.items() if not p.is_zero()}


def _table_exp(t: dict, nx: int, nt: int) -> dict:
    # t must have no (0, 0) component
    out = {(0, 0): OperatorPoly.one()}
    power = {(0, 0): OperatorPoly.one()}
    min_order = min(i for i, _ in t) if t else nx + 1
    m = 0
    while m * min_order <= nx:
        m += 1
        power = _table_mul(power, t, nx, nt)
        if not power:
            break
        inv = Fraction(1, factorial(m))
        for ik, p in power.items():
            scaled = inv * p
            cur = out.get(ik)
            out[ik] = scaled if cur is None else cur + scaled
    return {ik: p for ik, p in out.items() if not p.is_zero()}


def solve_zassenhaus(order: int, t_cap: int | None = None) -> dict:
    """Solve the factorization of ``exp(x(tB+D))`` order by order.

    Returns ``{n: {k: OperatorPoly}}`` for 2 <= n <= order such that

        exp(x(tB+D)) = exp(xtB) exp(xD) prod_n exp(x^n sum_k t^k Z[n][k])

    holds through x^order, computed purely in the free algebra with no use
    of the closed-form terms.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    nx = order
    nt = t_cap if t_cap is not None else order

    full: dict = {(0, 0): OperatorPoly.one()}
    for i in range(1, nx + 1):
        inv = Fraction(1, factorial(i))
        for letters in itertools.product("BD", repeat=i):
            word = "".join(letters)
            k = word.count("B")
            if k > nt:
                continue
            poly = OperatorPoly.word(word, inv)
            cur = full.get((i, k))
            full[(i, k)] = poly if cur is None else cur + poly

    exp_b = {
        (i, i): OperatorPoly.word("B" * i, Fraction(1, factorial(i)))
        for i in range(nx + 1) if i <= nt
    }
    exp_d = {
        (i, 0): OperatorPoly.word("D" * i, Fraction(1, factorial(i)))
        for i in range(nx + 1)
    }
    partial = _table_mul(exp_b, exp_d, nx, nt)

    result: dict = {}
    for n in range(2, order + 1):
        remainder = _solve_left(partial, full, nx, nt)
        for i in range(1, n):
            for k in range(nt + 1):
                leftover = remainder.get((i, k))
                if leftover is not None and not leftover.is_zero():
                    raise AssertionError(
                        f"factorization residue at x^{i} t^{k} while solving order {n}"
                    )
        z_n = {k: p for (i, k), p in remainder.items() if i == n and not p.is_zero()}
        result[n] = z_n
        if n < order:
            factor = {(n, k): p for k, p in z_n.items()}
            partial = _table_mul(partial, _table_exp(factor, nx, nt), nx, nt)
    return result


def _solve_left(g: dict, target: dict, nx: int, nt: int) -> dict:
    """Forward-substitute X with g * X = target (g has unit constant term)."""
    x: dict = {(0, 0): OperatorPoly.one()}
    for i in range(1, nx + 1):
        for k in range(0, nt + 1):
            acc = target.get((i, k), OperatorPoly.zero())
            for m in range(1, i + 1):
                for k1 in range(0, k + 1):
                    gp = g.get((m, k1))
                    if gp is None:
                        continue
                    xp = x.get((i - m, k - k1))
                    if xp is None:
                        continue
                    acc = acc - gp * xp
            if not acc.is_zero():
                x[(i, k)] = acc
    return x
