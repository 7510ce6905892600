import random
from fractions import Fraction

import pytest

from bellhopf.algebra import AlgebraElement, AlgebraId, basis_keys, is_primitive
from bellhopf.operators import (
    OP_B,
    OP_D,
    OperatorPoly,
    ad,
    apply_poly,
    apply_shift,
    apply_word,
    as_multiplication,
    solve_zassenhaus,
    zassenhaus_term,
    zassenhaus_term_closed,
)

from conftest import ALGEBRAS, gens, sp


class TestShiftAction:
    def test_sym2_generator_shift(self):
        ga, _ = gens(AlgebraId.SYM2)
        assert apply_shift(ga(1)) == ga(2)

    def test_wsym2_inserts_into_every_block(self):
        e = AlgebraElement.from_key(AlgebraId.WSYM2, sp(({1}, 1), ({2}, 2)))
        expected = (
            AlgebraElement.from_key(AlgebraId.WSYM2, sp(({1, 3}, 1), ({2}, 2)))
            + AlgebraElement.from_key(AlgebraId.WSYM2, sp(({1}, 1), ({2, 3}, 2)))
        )
        assert apply_shift(e) == expected

    def test_ncsf2_leibniz(self):
        ga, gb = gens(AlgebraId.NCSF2)
        e = ga(1) * gb(1)
        assert apply_shift(e) == ga(2) * gb(1) + ga(1) * gb(2)

    def test_unit_killed(self, algebra):
        assert apply_shift(AlgebraElement.unit(algebra)).is_zero()


class TestWordAction:
    def test_b_word_appends_generator(self):
        one = AlgebraElement.unit(AlgebraId.WSYM2)
        _, gb = gens(AlgebraId.WSYM2)
        assert apply_word("B", one) == gb(1)

    def test_bd_on_unit_gives_b2(self):
        one = AlgebraElement.unit(AlgebraId.SYM2)
        _, gb = gens(AlgebraId.SYM2)
        assert apply_word("BD", one) == gb(2)

    def test_empty_word_is_identity(self, algebra):
        e = gens(algebra)[0](2)
        assert apply_word("", e) == e

    def test_composition_order(self, algebra):
        rng = random.Random(3)
        words = ["BD", "DB", "BDD", "DDB", "BDBD"]
        for _ in range(10):
            u = rng.choice(words)
            v = rng.choice(words)
            pool = basis_keys(algebra, rng.randint(0, 3))
            e = AlgebraElement.from_key(algebra, pool[rng.randrange(len(pool))])
            assert apply_word(u + v, e) == apply_word(v, apply_word(u, e))

    def test_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            apply_word("BXD", AlgebraElement.unit(AlgebraId.SYM2))


class TestDerivationLaw:
    @pytest.mark.parametrize("alg", [AlgebraId.SYM2, AlgebraId.NCSF2], ids=lambda a: a.value)
    def test_shift_is_a_derivation(self, alg):
        rng = random.Random(5)
        for _ in range(20):
            w1 = rng.randint(0, 3)
            w2 = rng.randint(0, 3)
            p1 = basis_keys(alg, w1)
            p2 = basis_keys(alg, w2)
            x = AlgebraElement.from_key(alg, p1[rng.randrange(len(p1))])
            y = AlgebraElement.from_key(alg, p2[rng.randrange(len(p2))])
            assert apply_shift(x * y) == apply_shift(x) * y + x * apply_shift(y)

    def test_shift_is_not_a_derivation_in_wsym2(self):
        # block insertion remembers which factor received the new element
        alg = AlgebraId.WSYM2
        x = AlgebraElement.from_key(alg, sp(({1}, 1)))
        y = AlgebraElement.from_key(alg, sp(({1}, 2)))
        assert apply_shift(x * y) != apply_shift(x) * y + x * apply_shift(y)


class TestBrackets:
    def test_ad_of_equal_letters_vanishes(self):
        assert ad(OP_D, OP_D).is_zero()
        assert ad(OP_B, OP_B).is_zero()

    def test_bracket_acts_as_b2_multiplication(self):
        for alg in (AlgebraId.SYM2, AlgebraId.NCSF2):
            _, gb = gens(alg)
            assert as_multiplication(alg, ad(OP_B, OP_D), 4) == gb(2)

    def test_iterated_brackets_give_higher_generators(self):
        # [..[[B,D],D]..,D] with i-1 shifts acts as right multiplication by b_{i}
        for alg in (AlgebraId.SYM2, AlgebraId.NCSF2):
            _, gb = gens(alg)
            word = ad(OP_B, OP_D)
            for i in range(2, 7):
                assert as_multiplication(alg, word, 4) == gb(i)
                word = ad(word, OP_D)


class TestZassenhausTerms:
    def test_order_two_term(self):
        expected = Fraction(-1, 2) * (OP_B * OP_D - OP_D * OP_B)
        assert zassenhaus_term(2, 1) == expected

    def test_order_three_term_is_bracket_multiplication(self):
        _, gb = gens(AlgebraId.NCSF2)
        expected = Fraction(1, 6) * (gb(1) * gb(2) - gb(2) * gb(1))
        assert as_multiplication(AlgebraId.NCSF2, zassenhaus_term(3, 2), 4) == expected

    def test_zero_at_k_zero(self):
        for n in range(2, 7):
            assert zassenhaus_term(n, 0).is_zero()

    def test_range_validation(self):
        with pytest.raises(ValueError):
            zassenhaus_term(1, 0)
        with pytest.raises(ValueError):
            zassenhaus_term(3, 3)

    def test_value_5_2_applied_to_unit(self):
        # frozen from three independent routes: the order-by-order solver,
        # the nested-bracket closed form, and a hand Leibniz expansion
        _, gb = gens(AlgebraId.NCSF2)
        expected = Fraction(1, 20) * (
            (gb(2) * gb(3) - gb(3) * gb(2)) + (gb(1) * gb(4) - gb(4) * gb(1))
        )
        got = apply_poly(zassenhaus_term(5, 2), AlgebraElement.unit(AlgebraId.NCSF2))
        assert got == expected

    def test_single_b_terms_collapse(self):
        _, gb = gens(AlgebraId.NCSF2)
        for n in range(2, 8):
            expected = Fraction(-(n - 1), Fraction(1) * __import__("math").factorial(n)) * gb(n)
            assert zassenhaus_term_closed(n, 1) == expected

    def test_closed_form_matches_ad_route(self):
        one = AlgebraElement.unit(AlgebraId.NCSF2)
        for n in range(2, 7):
            for k in range(1, n):
                assert zassenhaus_term_closed(n, k) == apply_poly(zassenhaus_term(n, k), one)


class TestAsMultiplication:
    def test_certifies_and_is_primitive(self):
        _, gb = gens(AlgebraId.SYM2)
        c = as_multiplication(AlgebraId.SYM2, zassenhaus_term(2, 1), 4)
        assert c == Fraction(-1, 2) * gb(2)
        assert is_primitive(c)

    def test_commutative_collapse_to_zero(self):
        c = as_multiplication(AlgebraId.SYM2, zassenhaus_term(3, 2), 4)
        assert c is not None and c.is_zero()

    def test_shift_alone_is_not_multiplication(self):
        assert as_multiplication(AlgebraId.SYM2, OP_D, 3) is None


class TestSolver:
    def test_order_two_exponent(self):
        z = solve_zassenhaus(3)
        assert z[2] == {1: Fraction(-1, 2) * (OP_B * OP_D - OP_D * OP_B)}

    def test_no_pure_shift_exponents(self):
        z = solve_zassenhaus(5)
        for n in range(2, 6):
            assert 0 not in z[n]
            assert all(1 <= k <= n - 1 for k in z[n])

    def test_agrees_with_closed_terms_through_order_four(self):
        z = solve_zassenhaus(4)
        for n in range(2, 5):
            for k in range(1, n):
                assert z[n].get(k, OperatorPoly.zero()) == zassenhaus_term(n, k)

    def test_matrix_representation_roundtrip(self):
        # strictly upper triangular 6x6 matrices: an independent exact model
        # in which all products of length >= 6 vanish
        size = 6
        rng = random.Random(19)

        def randmat():
            return [
                [Fraction(rng.randint(-2, 2)) if j > i else Fraction(0) for j in range(size)]
                for i in range(size)
            ]

        def matmul(x, y):
            return [
                [sum(x[i][m] * y[m][j] for m in range(size)) for j in range(size)]
                for i in range(size)
            ]

        identity = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]

        def matexp(x):
            out = [row[:] for row in identity]
            power = identity
            fact = 1
            for m in range(1, size):
                power = matmul(power, x)
                fact *= m
                out = [
                    [out[i][j] + power[i][j] / fact for j in range(size)]
                    for i in range(size)
                ]
            return out

        def eval_poly(p, bmat, dmat):
            out = [[Fraction(0)] * size for _ in range(size)]
            for word, coeff in p.lc.items():
                cur = identity
                for ch in word:
                    cur = matmul(cur, bmat if ch == "B" else dmat)
                out = [
                    [out[i][j] + coeff * cur[i][j] for j in range(size)]
                    for i in range(size)
                ]
            return out

        bmat, dmat = randmat(), randmat()
        t = Fraction(1, 2)
        x = [[t * v for v in row] for row in bmat]
        lhs = matexp([[x[i][j] + dmat[i][j] for j in range(size)] for i in range(size)])
        rhs = matmul(matexp(x), matexp(dmat))
        z = solve_zassenhaus(size - 1)
        for n in range(2, size):
            exponent = [[Fraction(0)] * size for _ in range(size)]
            for k, poly in z[n].items():
                term = eval_poly(poly, bmat, dmat)
                exponent = [
                    [exponent[i][j] + t**k * term[i][j] for j in range(size)]
                    for i in range(size)
                ]
            rhs = matmul(rhs, matexp(exponent))
        assert lhs == rhs


class TestOperatorPoly:
    def test_word_validation(self):
        with pytest.raises(ValueError):
            OperatorPoly.word("BVD")

    def test_json_round_trip(self):
        p = Fraction(1, 3) * (OP_B * OP_D) - 2 * OP_D
        assert OperatorPoly.from_json(p.to_json()) == p
        assert p.to_json() == {
            "terms": [{"coeff": "1/3", "word": "BD"}, {"coeff": "-2", "word": "D"}]
        }

    def test_text(self):
        p = Fraction(-1, 2) * (OP_B * OP_D - OP_D * OP_B)
        assert p.text() == "-1/2*BD + 1/2*DB"
        assert OperatorPoly.zero().text() == "0"
        assert OperatorPoly.one().text() == "1"
