"""r-Bell elements, their generating functions, and verification harnesses.

The central object is ``bell(alg, r, n, k)``: the coefficient of t^k in
``a_1^r . (tB + D)^n``, an element of bidegree (n+r, k+r).  The same element
arises combinatorially as a sum over the anchored set-partition families
(``bell_enum``), and the two routes are the package's main cross-check.

The verify_* functions compare independently computed series or sweeps
coefficient by coefficient and return a :class:`VerificationReport`; all
comparisons are exact.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    AlgebraElement,
    AlgebraId,
    TensorElement,
    abelianize,
    basis_keys,
    coproduct,
    coproduct_key,
    generator_key,
    is_primitive,
    key_product,
    specialize_sym2,
    to_ncsf2,
    to_sym2,
    unit_key,
)
from .linear import LinearCombination, binomial, factorial
from .operators import (
    OP_B,
    OP_D,
    OperatorPoly,
    _append_b1,
    _shift_key,
    _word_on_counts,
    apply_poly,
    solve_zassenhaus,
    zassenhaus_term,
    zassenhaus_term_closed,
)
from .partitions import (
    BicoloredComposition,
    BicoloredPartition,
    BicoloredSetPartition,
    anchored_set_partitions,
    composition_type,
    partition_type,
    r_stirling2,
    stirling1_unsigned,
)
from .series import TruncatedSeries, Truncation


@dataclass(frozen=True)
class BellQuery:
    """A single r-Bell request; the result has bidegree (n+r, k+r)."""

    algebra: AlgebraId
    r: int
    n: int
    k: int

    def bidegree(self) -> tuple:
        return (self.n + self.r, self.k + self.r)


# ---------------------------------------------------------------------------
# the two routes
# ---------------------------------------------------------------------------

def _seed_key(alg: AlgebraId, r: int, k: int = 0):
    """The key of a_1^r * b_1^k."""
    key = unit_key(alg)
    for _ in range(r):
        key = key_product(alg, key, generator_key(alg, 1, 1))
    for _ in range(k):
        key = key_product(alg, key, generator_key(alg, 1, 2))
    return key


@lru_cache(maxsize=None)
def _bell_table(alg: AlgebraId, r: int, n: int) -> tuple:
    """All t-components of ``a_1^r . (tB + D)^n`` at once."""
    rows = [{_seed_key(alg, r): 1}]
    for _ in range(n):
        new_rows = []
        for k in range(len(rows) + 1):
            acc: dict = {}
            if k < len(rows):
                for key, mult in rows[k].items():
                    for shifted in _shift_key(alg, key):
                        c = acc.get(shifted)
                        acc[shifted] = mult if c is None else c + mult
            if k >= 1:
                for key, mult in rows[k - 1].items():
                    appended = _append_b1(alg, key)
                    c = acc.get(appended)
                    acc[appended] = mult if c is None else c + mult
            new_rows.append(acc)
        rows = new_rows
    return tuple(
        AlgebraElement(alg, LinearCombination(row.items())) for row in rows
    )


def bell(alg: AlgebraId, r: int, n: int, k: int) -> AlgebraElement:
    """The r-Bell element: coefficient of t^k in ``a_1^r . (tB + D)^n``."""
    if min(r, n, k) < 0:
        raise ValueError("r, n, k must be nonnegative")
    if k > n:
        return AlgebraElement.zero(alg)
    return _bell_table(alg, r, n)[k]


def bell_enum(alg: AlgebraId, r: int, n: int, k: int) -> AlgebraElement:
    """The same element, summed over the anchored set-partition family."""
    counts: dict = {}
    for sp in anchored_set_partitions(r, n, k):
        if alg is AlgebraId.WSYM2:
            key = sp
        elif alg is AlgebraId.NCSF2:
            key = composition_type(sp)
        else:
            key = partition_type(sp)
        c = counts.get(key)
        counts[key] = 1 if c is None else c + 1
    return AlgebraElement(alg, LinearCombination(counts.items()))


def bell_tilde(alg: AlgebraId, r: int, n: int, k: int) -> AlgebraElement:
    """The companion family ``a_1^r b_1^k . D^n`` of bidegree (n+k+r, k+r)."""
    if min(r, n, k) < 0:
        raise ValueError("r, n, k must be nonnegative")
    counts = _word_on_counts(alg, "D" * n, {_seed_key(alg, r, k): 1})
    return AlgebraElement(alg, LinearCombination(counts.items()))


# ---------------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------------

def _prefix_series(alg: AlgebraId, trunc: Truncation, color: int) -> TruncatedSeries:
    """exp(y * g) for the degree-1 generator of the given color."""
    from .algebra import a as gen_a, b as gen_b

    g = gen_a(alg, 1) if color == 1 else gen_b(alg, 1)
    return TruncatedSeries(trunc, {(0, 1, 0): g}, alg).exp()


def _op_series(trunc: Truncation, exponent_poly: dict) -> TruncatedSeries:
    return TruncatedSeries(trunc, exponent_poly, None).exp()


def gf_s(alg: AlgebraId, trunc: Truncation) -> TruncatedSeries:
    """exp(a1 y) . exp(x(tB + D)); the (n, r, k) coefficient, normalized by
    n! r!, is ``bell(alg, r, n, k)``."""
    op = _op_series(trunc, {(1, 0, 0): OP_D, (1, 0, 1): OP_B})
    return _prefix_series(alg, trunc, 1) * op


def gf_s_circ(alg: AlgebraId, trunc: Truncation) -> TruncatedSeries:
    """The y = 0 slice: 1 . exp(x(tB + D))."""
    op = _op_series(trunc, {(1, 0, 0): OP_D, (1, 0, 1): OP_B})
    return TruncatedSeries.unit(trunc, alg) * op


def gf_s_bullet(alg: AlgebraId, trunc: Truncation) -> TruncatedSeries:
    """exp(a1 y) . exp(t B) . exp(x D); coefficients are the bell_tilde
    family with exponential normalization in all three markers."""
    op = _op_series(trunc, {(0, 0, 1): OP_B}) * _op_series(trunc, {(1, 0, 0): OP_D})
    return _prefix_series(alg, trunc, 1) * op


def gf_s_star(alg: AlgebraId, trunc: Truncation) -> TruncatedSeries:
    """exp(y b1) . exp(x D); the color-2 seeded two-marker series."""
    op = _op_series(trunc, {(1, 0, 0): OP_D})
    return _prefix_series(alg, trunc, 2) * op


def zassenhaus_series(trunc: Truncation, source: str = "closed") -> TruncatedSeries:
    """The operator-valued correction factor
    ``prod_{m>=2} exp(x^m sum_k t^k Z_{m,k})``.

    With ``source="closed"`` the exponents are the closed-form terms
    :func:`zassenhaus_term`; with ``source="solved"`` they come from the
    order-by-order solver, which makes the factorization exact by
    construction.  The two agree through x^4 but differ at middle t-degrees
    from x^5 on.
    """
    if source not in ("closed", "solved"):
        raise ValueError("source must be 'closed' or 'solved'")
    solved = solve_zassenhaus(trunc.nx, trunc.nt) if source == "solved" and trunc.nx >= 2 else {}
    total = TruncatedSeries.unit(trunc, None)
    for m in range(2, trunc.nx + 1):
        coeffs = {}
        if source == "closed":
            for k in range(1, min(m - 1, trunc.nt) + 1):
                term = zassenhaus_term(m, k)
                if not term.is_zero():
                    coeffs[(m, 0, k)] = term
        else:
            for k, term in solved.get(m, {}).items():
                if k <= trunc.nt and not term.is_zero():
                    coeffs[(m, 0, k)] = term
        if coeffs:
            total = total * TruncatedSeries(trunc, coeffs, None).exp()
    return total


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    """Outcome of one identity check; passes iff no mismatches were found."""

    identity: str
    caps: tuple | None
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "caps": list(self.caps) if self.caps is not None else None,
            "pass": self.passed,
            "mismatches": self.mismatches,
        }

    def summary(self) -> str:
        state = "pass" if self.passed else f"FAIL ({len(self.mismatches)} mismatches)"
        return f"{self.identity}: {state}"


def _coeff_json(value) -> dict:
    return value.to_json()


def _series_mismatches(tag: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> list:
    out = []
    for exp in sorted(set(lhs.coeffs) | set(rhs.coeffs)):
        left = lhs.coeffs.get(exp)
        right = rhs.coeffs.get(exp)
        if left is None:
            left = lhs._zero_coeff()
        if right is None:
            right = rhs._zero_coeff()
        if left != right:
            out.append(
                {
                    "variant": tag,
                    "exp": list(exp),
                    "expected": _coeff_json(left),
                    "actual": _coeff_json(right),
                }
            )
    return out


def _case_mismatch(case: str, expected, actual) -> dict:
    return {
        "case": case,
        "expected": expected.to_json() if hasattr(expected, "to_json") else expected,
        "actual": actual.to_json() if hasattr(actual, "to_json") else actual,
    }


# ---------------------------------------------------------------------------
# identity: generating-function factorization
# ---------------------------------------------------------------------------

def verify_factorization(
    alg: AlgebraId, trunc: Truncation, z_source: str = "closed"
) -> VerificationReport:
    """Check both factorization identities coefficient by coefficient:

        S(t,x,y)  = S_bullet(xt,x,y) * Z(x,t)
        S_circ(t,x) = S_star(x,xt)   * Z(x,t)

    Z is built from the correction terms selected by ``z_source`` (see
    :func:`zassenhaus_series`) and applied as operator words, so the check
    is meaningful in all three algebras.
    """
    z = zassenhaus_series(trunc, z_source)
    exp_xtb = _op_series(trunc, {(1, 0, 1): OP_B})
    exp_xd = _op_series(trunc, {(1, 0, 0): OP_D})
    # associate operator factors first: e.(PQ) = (e.P).Q makes this exact
    rhs_op = exp_xtb * exp_xd * z

    lhs_full = gf_s(alg, trunc)
    rhs_full = _prefix_series(alg, trunc, 1) * rhs_op
    mismatches = _series_mismatches("S", lhs_full, rhs_full)

    lhs_slice = gf_s_circ(alg, trunc)
    # the star series feeds its y-exponent into both x and t, so it must be
    # computed with a y-cap of min(nx, nt) regardless of the report's ny
    star_caps = Truncation(trunc.nx, min(trunc.nx, trunc.nt), trunc.nt)
    star_sub = gf_s_star(alg, star_caps).y_to_xt().with_truncation(trunc)
    rhs_slice = star_sub * z
    mismatches += _series_mismatches("S_circ", lhs_slice, rhs_slice)

    return VerificationReport(
        f"factorization[{alg.value},{z_source}]", trunc.as_tuple(), mismatches
    )


# ---------------------------------------------------------------------------
# identity: commutative closed form of the correction factor
# ---------------------------------------------------------------------------

def verify_closed_form(trunc: Truncation) -> VerificationReport:
    """In Sym2 the correction factor collapses to
    ``exp(- sum_{i>=2} ((i-1)/i!) b_i x^i t)``; compare both series."""
    from .algebra import b as gen_b

    alg = AlgebraId.SYM2
    lhs = TruncatedSeries.unit(trunc, alg) * zassenhaus_series(trunc)
    coeffs = {}
    if trunc.nt >= 1:
        for i in range(2, trunc.nx + 1):
            coeffs[(i, 0, 1)] = -Fraction(i - 1, factorial(i)) * gen_b(alg, i)
    rhs = TruncatedSeries(trunc, coeffs, alg).exp()
    mismatches = _series_mismatches("Z1", lhs, rhs)
    return VerificationReport("closed-form", trunc.as_tuple(), mismatches)


# ---------------------------------------------------------------------------
# identity: binomial rescaling
# ---------------------------------------------------------------------------

def scale_color2(e: AlgebraElement) -> AlgebraElement:
    """The diagonal endomorphism sending the degree-i color-2 generator to
    i times itself (Sym2 keys only)."""
    if e.algebra is not AlgebraId.SYM2:
        raise ValueError("scale_color2 is defined on Sym2 elements")

    def term(key, coeff):
        for size, color in key.parts:
            if color == 2:
                coeff *= size
        return key, coeff

    return e.map_terms(term)


def recolor_to_color2(e: AlgebraElement) -> AlgebraElement:
    """Substitute every color-1 generator by its color-2 counterpart."""
    alg = e.algebra
    if alg is AlgebraId.WSYM2:
        fn = lambda sp: BicoloredSetPartition._unsafe(
            tuple((elems, 2) for elems, _ in sp.blocks), sp.n
        )
    elif alg is AlgebraId.NCSF2:
        fn = lambda key: BicoloredComposition._unsafe(
            tuple((p, 2) for p, _ in key.parts)
        )
    else:
        fn = lambda key: BicoloredPartition(tuple((p, 2) for p, _ in key.parts))
    return e.map_keys(fn)


def _binomial_cases(args) -> list:
    rmax, nmax, kmax, r = args
    alg = AlgebraId.SYM2
    mismatches = []
    for n in range(nmax + 1):
        for k in range(kmax + 1):
            lhs = bell_tilde(alg, r, n, k)
            rhs = Fraction(1, binomial(n + k, n)) * scale_color2(bell(alg, r, n + k, k))
            if lhs != rhs:
                mismatches.append(_case_mismatch(f"main r={r} n={n} k={k}", lhs, rhs))
            if r == 0:
                swapped = recolor_to_color2(bell(alg, k, n, 0))
                if lhs != swapped:
                    mismatches.append(_case_mismatch(f"r0 n={n} k={k}", lhs, swapped))
    return mismatches


def verify_binomial_identity(rmax: int, nmax: int, kmax: int, jobs: int = 1) -> VerificationReport:
    """Check that the companion family is the binomially rescaled r-Bell
    element under b_i -> i b_i, plus the r = 0 color-swap corollary."""
    tasks = [(rmax, nmax, kmax, r) for r in range(rmax + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_binomial_cases, tasks))
    else:
        chunks = [_binomial_cases(t) for t in tasks]
    mismatches = [m for chunk in chunks for m in chunk]
    return VerificationReport("binomial", (rmax, nmax, kmax), mismatches)


# ---------------------------------------------------------------------------
# identity: both colors equal
# ---------------------------------------------------------------------------

def verify_equal_colors(alg: AlgebraId, trunc: Truncation) -> VerificationReport:
    """After substituting a_i -> b_i, the three-marker series S_bullet
    collapses to S_star with its y marker shifted by t."""
    if alg not in (AlgebraId.SYM2, AlgebraId.NCSF2):
        raise ValueError("verify_equal_colors runs in Sym2 or NCSF2")
    bullet = gf_s_bullet(alg, trunc)
    lhs = TruncatedSeries(trunc, None, alg)
    lhs.coeffs = {exp: recolor_to_color2(v) for exp, v in bullet.coeffs.items()}

    star_caps = Truncation(trunc.nx, trunc.ny + trunc.nt, 0)
    star = gf_s_star(alg, star_caps)
    coeffs: dict = {}
    for (i, m, _zero), value in star.coeffs.items():
        for r in range(min(m, trunc.ny) + 1):
            k = m - r
            if k > trunc.nt:
                continue
            scaled = binomial(m, r) * value
            cur = coeffs.get((i, r, k))
            coeffs[(i, r, k)] = scaled if cur is None else cur + scaled
    rhs = TruncatedSeries(trunc, coeffs, alg)
    mismatches = _series_mismatches("equal-colors", lhs, rhs)
    return VerificationReport(f"equal-colors[{alg.value}]", trunc.as_tuple(), mismatches)


# ---------------------------------------------------------------------------
# identity: Stirling specializations
# ---------------------------------------------------------------------------

def verify_stirling(nmax: int, rmax: int = 3) -> VerificationReport:
    """Specializations of Sym2 r-Bell elements against the Stirling-number
    recurrences: all-ones gives the second kind, factorials give the
    unsigned first kind, and the anchored variant gives r-Stirling counts."""
    alg = AlgebraId.SYM2
    ones = tuple(1 for _ in range(nmax + 2))
    facts = tuple(factorial(i) for i in range(nmax + 2))
    mismatches = []
    for n in range(nmax + 1):
        for k in range(n + 1):
            e = bell(alg, 0, n, k)
            got = specialize_sym2(e, ones, ones)
            want = r_stirling2(n, k, 0)
            if got != want:
                mismatches.append(_case_mismatch(f"second-kind n={n} k={k}", want, str(got)))
            got1 = specialize_sym2(e, facts, facts)
            want1 = stirling1_unsigned(n, k)
            if got1 != want1:
                mismatches.append(_case_mismatch(f"first-kind n={n} k={k}", want1, str(got1)))
    for r in range(rmax + 1):
        for n in range(max(nmax - r, 0) + 1):
            for k in range(n + 1):
                got = specialize_sym2(bell(alg, r, n, k), ones, ones)
                want = r_stirling2(n + r, k + r, r)
                if got != want:
                    mismatches.append(
                        _case_mismatch(f"anchored r={r} n={n} k={k}", want, str(got))
                    )
    return VerificationReport("stirling", (nmax, rmax), mismatches)


# ---------------------------------------------------------------------------
# identity: factorization exponents against the order-by-order solver
# ---------------------------------------------------------------------------

def verify_zassenhaus_terms(nmax: int = 6, weight_cap: int = 6) -> VerificationReport:
    """Compare the closed-form correction terms with the exponents solved
    order by order in the free algebra, as actions on every NCSF2 basis key
    up to the weight cap; also check the nested-bracket closed form."""
    alg = AlgebraId.NCSF2
    solved = solve_zassenhaus(nmax)
    keys = [unit_key(alg)]
    for w in range(1, weight_cap + 1):
        keys.extend(basis_keys(alg, w))
    mismatches = []
    for n in range(2, nmax + 1):
        per_t = solved[n]
        stray = [k for k in per_t if k > n - 1]
        for k in stray:
            mismatches.append(
                _case_mismatch(f"stray-exponent n={n} k={k}", "0", per_t[k].text())
            )
        for k in range(0, n):
            oracle = per_t.get(k, OperatorPoly.zero())
            term = zassenhaus_term(n, k)
            diff = oracle - term
            if not diff.is_zero():
                for key in keys:
                    image = apply_poly(diff, AlgebraElement.from_key(alg, key))
                    if not image.is_zero():
                        mismatches.append(
                            _case_mismatch(
                                f"action n={n} k={k} key={key!r}",
                                "0",
                                image,
                            )
                        )
                        break
            if k >= 1:
                closed = zassenhaus_term_closed(n, k)
                direct = apply_poly(term, AlgebraElement.unit(alg))
                if closed != direct:
                    mismatches.append(
                        _case_mismatch(f"closed-form n={n} k={k}", direct, closed)
                    )
    return VerificationReport("zassenhaus", (nmax, weight_cap), mismatches)


def verify_closed_terms(nmax: int = 6) -> VerificationReport:
    """Nested-bracket closed form against the ad-route, term by term."""
    alg = AlgebraId.NCSF2
    mismatches = []
    for n in range(2, nmax + 1):
        for k in range(1, n):
            closed = zassenhaus_term_closed(n, k)
            direct = apply_poly(zassenhaus_term(n, k), AlgebraElement.unit(alg))
            if closed != direct:
                mismatches.append(_case_mismatch(f"n={n} k={k}", direct, closed))
    return VerificationReport("closed-terms", (nmax,), mismatches)


# ---------------------------------------------------------------------------
# identity: operator route against enumeration route
# ---------------------------------------------------------------------------

def verify_routes(total_cap: int = 7) -> VerificationReport:
    """bell == bell_enum in all three algebras for r+n <= total_cap, plus
    compatibility of the forgetful morphisms with the WSym2 route."""
    mismatches = []
    for r in range(total_cap + 1):
        for n in range(total_cap - r + 1):
            for k in range(n + 1):
                word_route = {alg: bell(alg, r, n, k) for alg in AlgebraId}
                for alg in AlgebraId:
                    enum_route = bell_enum(alg, r, n, k)
                    if word_route[alg] != enum_route:
                        mismatches.append(
                            _case_mismatch(
                                f"{alg.value} r={r} n={n} k={k}",
                                enum_route,
                                word_route[alg],
                            )
                        )
                w = word_route[AlgebraId.WSYM2]
                if to_ncsf2(w) != word_route[AlgebraId.NCSF2]:
                    mismatches.append(
                        _case_mismatch(f"morphism-ncsf2 r={r} n={n} k={k}",
                                       word_route[AlgebraId.NCSF2], to_ncsf2(w))
                    )
                if to_sym2(w) != word_route[AlgebraId.SYM2]:
                    mismatches.append(
                        _case_mismatch(f"morphism-sym2 r={r} n={n} k={k}",
                                       word_route[AlgebraId.SYM2], to_sym2(w))
                    )
    return VerificationReport("routes", (total_cap,), mismatches)


# ---------------------------------------------------------------------------
# identity: Hopf-structure axioms
# ---------------------------------------------------------------------------

def _tensor_dict(te: TensorElement) -> dict:
    return dict(te.lc.raw())


def _coassociative(alg: AlgebraId, key) -> bool:
    left: dict = {}
    right: dict = {}
    for (k1, k2), c in _tensor_dict(coproduct_key(alg, key)).items():
        for (k11, k12), c2 in _tensor_dict(coproduct_key(alg, k1)).items():
            trip = (k11, k12, k2)
            left[trip] = left.get(trip, 0) + c * c2
        for (k21, k22), c2 in _tensor_dict(coproduct_key(alg, k2)).items():
            trip = (k1, k21, k22)
            right[trip] = right.get(trip, 0) + c * c2
    left = {t: c for t, c in left.items() if c}
    right = {t: c for t, c in right.items() if c}
    return left == right


def _counit_laws(alg: AlgebraId, key) -> bool:
    empty = unit_key(alg)
    left: dict = {}
    right: dict = {}
    for (k1, k2), c in _tensor_dict(coproduct_key(alg, key)).items():
        if k1 == empty:
            left[k2] = left.get(k2, 0) + c
        if k2 == empty:
            right[k1] = right.get(k1, 0) + c
    return left == {key: 1} and right == {key: 1}


def random_element(alg: AlgebraId, max_weight: int, rng: random.Random) -> AlgebraElement:
    """A small random element for property sweeps (seeded, reproducible)."""
    terms = []
    for _ in range(rng.randint(1, 3)):
        weight = rng.randint(0, max_weight)
        pool = basis_keys(alg, weight)
        key = pool[rng.randrange(len(pool))]
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
        terms.append((key, coeff))
    return AlgebraElement.from_terms(alg, terms)


def verify_hopf_axioms(
    alg: AlgebraId, weight_cap: int = 5, samples: int = 100, seed: int = 0
) -> VerificationReport:
    """Bialgebra axioms on all basis keys up to the weight cap plus seeded
    random elements; for WSym2 also the Hopf-morphism property of the two
    forgetful maps."""
    mismatches = []
    all_keys = []
    for w in range(weight_cap + 1):
        all_keys.extend(basis_keys(alg, w))
    for key in all_keys:
        if not _coassociative(alg, key):
            mismatches.append(_case_mismatch(f"coassoc {key!r}", "equal", "differs"))
        if not _counit_laws(alg, key):
            mismatches.append(_case_mismatch(f"counit {key!r}", "equal", "differs"))
    for u in all_keys:
        if u.weight == 0:
            continue
        for v in all_keys:
            if v.weight == 0 or u.weight + v.weight > weight_cap:
                continue
            prod_key = key_product(alg, u, v)
            lhs = coproduct_key(alg, prod_key)
            rhs = coproduct_key(alg, u) * coproduct_key(alg, v)
            if lhs != rhs:
                mismatches.append(
                    _case_mismatch(f"compat {u!r}*{v!r}", "equal", "differs")
                )
            if alg is AlgebraId.WSYM2:
                for fn, target, to_fn, tag in (
                    (composition_type, AlgebraId.NCSF2, to_ncsf2, "ncsf2"),
                    (partition_type, AlgebraId.SYM2, to_sym2, "sym2"),
                ):
                    eu = AlgebraElement.from_key(alg, u)
                    ev = AlgebraElement.from_key(alg, v)
                    if to_fn(eu * ev) != to_fn(eu) * to_fn(ev):
                        mismatches.append(
                            _case_mismatch(f"morphism-product-{tag} {u!r}*{v!r}",
                                           "equal", "differs")
                        )
    if alg is AlgebraId.WSYM2:
        for key in all_keys:
            e = AlgebraElement.from_key(alg, key)
            for fn, target, to_fn, tag in (
                (composition_type, AlgebraId.NCSF2, to_ncsf2, "ncsf2"),
                (partition_type, AlgebraId.SYM2, to_sym2, "sym2"),
            ):
                mapped = coproduct_key(alg, key).map_sides(fn, target)
                direct = coproduct(to_fn(e))
                if mapped != direct:
                    mismatches.append(
                        _case_mismatch(f"morphism-coproduct-{tag} {key!r}",
                                       "equal", "differs")
                    )
            if abelianize(to_ncsf2(e)) != to_sym2(e):
                mismatches.append(
                    _case_mismatch(f"abelianize {key!r}", "equal", "differs")
                )
    rng = random.Random(seed)
    cap = min(weight_cap, 4)
    for idx in range(samples):
        x = random_element(alg, cap, rng)
        y = random_element(alg, cap, rng)
        if coproduct(x * y) != coproduct(x) * coproduct(y):
            mismatches.append(
                _case_mismatch(f"random compat #{idx}", "equal", "differs")
            )
    from .algebra import a as gen_a, b as gen_b

    for i in range(1, weight_cap + 1):
        for gen in (gen_a(alg, i), gen_b(alg, i)):
            if not is_primitive(gen):
                mismatches.append(
                    _case_mismatch(f"primitive generator {gen!r}", "primitive", "not")
                )
    return VerificationReport(
        f"hopf-axioms[{alg.value}]", (weight_cap, samples, seed), mismatches
    )
