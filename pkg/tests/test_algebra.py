import json
import random

import pytest
from fractions import Fraction

from bellhopf.algebra import (
    AlgebraElement,
    AlgebraId,
    AlgebraMismatchError,
    TensorElement,
    a,
    abelianize,
    b,
    basis_keys,
    bidegree,
    coproduct,
    coproduct_key,
    in_color2_subalgebra,
    is_primitive,
    key_product,
    specialize_sym2,
    to_ncsf2,
    to_sym2,
    unit_key,
)
from bellhopf.partitions import (
    BicoloredComposition,
    BicoloredPartition,
    anchored_set_partitions,
    composition_type,
    partition_type,
)

from conftest import ALGEBRAS, gens, sp


class TestProducts:
    def test_wsym2_product_is_shifted_union(self):
        ga, gb = gens(AlgebraId.WSYM2)
        assert ga(1) * gb(1) == AlgebraElement.from_key(
            AlgebraId.WSYM2, sp(({1}, 1), ({2}, 2))
        )

    def test_ncsf2_product_is_noncommutative_concatenation(self):
        ga, gb = gens(AlgebraId.NCSF2)
        left = ga(1) * gb(2)
        right = gb(2) * ga(1)
        assert left == AlgebraElement.from_key(
            AlgebraId.NCSF2, BicoloredComposition([(1, 1), (2, 2)])
        )
        assert right == AlgebraElement.from_key(
            AlgebraId.NCSF2, BicoloredComposition([(2, 2), (1, 1)])
        )
        assert left != right

    def test_sym2_product_commutes(self):
        ga, gb = gens(AlgebraId.SYM2)
        assert ga(2) * gb(1) == gb(1) * ga(2)
        assert ga(2) * gb(1) == AlgebraElement.from_key(
            AlgebraId.SYM2, BicoloredPartition([(2, 1), (1, 2)])
        )

    def test_wsym2_product_associative_on_random_triples(self):
        rng = random.Random(7)
        for _ in range(25):
            keys = []
            for _ in range(3):
                w = rng.randint(0, 3)
                pool = basis_keys(AlgebraId.WSYM2, w)
                keys.append(AlgebraElement.from_key(AlgebraId.WSYM2, pool[rng.randrange(len(pool))]))
            x, y, z = keys
            assert (x * y) * z == x * (y * z)

    def test_bigrade_additive_under_product(self, algebra):
        for u in basis_keys(algebra, 2):
            for v in basis_keys(algebra, 3):
                w1, l1 = bidegree(u)
                w2, l2 = bidegree(v)
                prod = key_product(algebra, u, v)
                assert bidegree(prod) == (w1 + w2, l1 + l2)

    def test_cross_algebra_rejected(self):
        with pytest.raises(AlgebraMismatchError):
            a(AlgebraId.SYM2, 1) * a(AlgebraId.NCSF2, 1)
        with pytest.raises(AlgebraMismatchError):
            a(AlgebraId.SYM2, 1) + b(AlgebraId.WSYM2, 1)

    def test_scalar_arithmetic(self):
        e = a(AlgebraId.SYM2, 1)
        assert 2 * e - e == e
        assert (e / 2).coefficient(e.support()[0]) == Fraction(1, 2)
        assert (e - e).is_zero()


class TestBigradeAndSubalgebra:
    def test_bigrade_examples(self):
        assert bidegree(BicoloredComposition([(2, 1), (1, 2)])) == (3, 2)
        assert bidegree(unit_key(AlgebraId.SYM2)) == (0, 0)
        assert bidegree(sp(({1, 2}, 2))) == (2, 1)

    def test_color2_subalgebra_membership(self):
        ga, gb = gens(AlgebraId.NCSF2)
        assert in_color2_subalgebra(gb(2) * gb(1))
        assert not in_color2_subalgebra(ga(1))
        assert in_color2_subalgebra(AlgebraElement.unit(AlgebraId.NCSF2))


class TestCounit:
    def test_examples(self, algebra):
        one = AlgebraElement.unit(algebra)
        assert one.counit() == 1
        assert a(algebra, 1).counit() == 0
        assert (2 * one + 3 * a(algebra, 2)).counit() == 2


class TestCoproduct:
    def test_single_block_is_primitive(self):
        ga, _ = gens(AlgebraId.WSYM2)
        assert is_primitive(ga(1))

    def test_two_block_coproduct_expansion(self):
        key = sp(({1}, 1), ({2}, 2))
        one = unit_key(AlgebraId.WSYM2)
        expected = TensorElement(
            AlgebraId.WSYM2,
            _lc([
                ((key, one), 1),
                ((one, key), 1),
                ((sp(({1}, 1)), sp(({1}, 2))), 1),
                ((sp(({1}, 2)), sp(({1}, 1))), 1),
            ]),
        )
        assert coproduct_key(AlgebraId.WSYM2, key) == expected

    def test_sym2_generators_primitive(self):
        assert is_primitive(AlgebraElement.from_key(
            AlgebraId.SYM2, BicoloredPartition([(3, 2)])
        ))

    def test_sym2_square_has_middle_term(self):
        ga, _ = gens(AlgebraId.SYM2)
        e = ga(1) * ga(1)
        delta = coproduct(e)
        k1 = BicoloredPartition([(1, 1)])
        assert delta.lc.coefficient((k1, k1)) == 2
        assert not is_primitive(e)

    def test_zero_is_primitive(self, algebra):
        assert is_primitive(AlgebraElement.zero(algebra))

    def test_coproduct_counit_laws(self, algebra):
        for w in range(4):
            for key in basis_keys(algebra, w):
                delta = coproduct_key(algebra, key)
                left = {}
                empty = unit_key(algebra)
                for (k1, k2), c in delta.lc.raw().items():
                    if k1 == empty:
                        left[k2] = left.get(k2, 0) + c
                assert left == {key: 1}

    def test_compatible_with_product(self, algebra):
        rng = random.Random(11)
        for _ in range(15):
            keys = []
            for _ in range(2):
                w = rng.randint(0, 3)
                pool = basis_keys(algebra, w)
                keys.append(AlgebraElement.from_key(algebra, pool[rng.randrange(len(pool))]))
            x, y = keys
            assert coproduct(x * y) == coproduct(x) * coproduct(y)


def _lc(pairs):
    from bellhopf.linear import LinearCombination

    return LinearCombination(pairs)


class TestMorphisms:
    def test_composition_image_of_key(self):
        e = AlgebraElement.from_key(AlgebraId.WSYM2, sp(({1, 3}, 1), ({2}, 1), ({4}, 2)))
        assert to_ncsf2(e) == AlgebraElement.from_key(
            AlgebraId.NCSF2, BicoloredComposition([(2, 1), (1, 1), (1, 2)])
        )

    def test_worked_example_images(self):
        total = AlgebraElement.zero(AlgebraId.WSYM2)
        for p in anchored_set_partitions(2, 2, 1):
            total = total + AlgebraElement.from_key(AlgebraId.WSYM2, p)
        image_n = to_ncsf2(total)
        assert image_n == AlgebraElement.from_terms(
            AlgebraId.NCSF2,
            [
                (BicoloredComposition([(2, 1), (1, 1), (1, 2)]), 2),
                (BicoloredComposition([(1, 1), (2, 1), (1, 2)]), 2),
                (BicoloredComposition([(1, 1), (1, 1), (2, 2)]), 1),
            ],
        )
        image_s = to_sym2(total)
        assert image_s == AlgebraElement.from_terms(
            AlgebraId.SYM2,
            [
                (BicoloredPartition([(2, 1), (1, 1), (1, 2)]), 4),
                (BicoloredPartition([(1, 1), (1, 1), (2, 2)]), 1),
            ],
        )

    def test_unit_maps_to_unit(self):
        one = AlgebraElement.unit(AlgebraId.WSYM2)
        assert to_ncsf2(one) == AlgebraElement.unit(AlgebraId.NCSF2)
        assert to_sym2(one) == AlgebraElement.unit(AlgebraId.SYM2)

    def test_algebra_morphism_property(self):
        for w1 in range(4):
            for u in basis_keys(AlgebraId.WSYM2, w1):
                for v in basis_keys(AlgebraId.WSYM2, 3 - w1 if w1 <= 3 else 0):
                    eu = AlgebraElement.from_key(AlgebraId.WSYM2, u)
                    ev = AlgebraElement.from_key(AlgebraId.WSYM2, v)
                    assert to_ncsf2(eu * ev) == to_ncsf2(eu) * to_ncsf2(ev)
                    assert to_sym2(eu * ev) == to_sym2(eu) * to_sym2(ev)

    def test_coalgebra_morphism_property(self):
        for w in range(5):
            for key in basis_keys(AlgebraId.WSYM2, w):
                e = AlgebraElement.from_key(AlgebraId.WSYM2, key)
                mapped = coproduct_key(AlgebraId.WSYM2, key).map_sides(
                    composition_type, AlgebraId.NCSF2
                )
                assert mapped == coproduct(to_ncsf2(e))
                mapped2 = coproduct_key(AlgebraId.WSYM2, key).map_sides(
                    partition_type, AlgebraId.SYM2
                )
                assert mapped2 == coproduct(to_sym2(e))

    def test_abelianization_factors_through(self):
        for w in range(5):
            for key in basis_keys(AlgebraId.WSYM2, w):
                e = AlgebraElement.from_key(AlgebraId.WSYM2, key)
                assert abelianize(to_ncsf2(e)) == to_sym2(e)

    def test_wrong_algebra_rejected(self):
        with pytest.raises(AlgebraMismatchError):
            to_ncsf2(a(AlgebraId.SYM2, 1))
        with pytest.raises(AlgebraMismatchError):
            abelianize(a(AlgebraId.WSYM2, 1))


class TestSpecialization:
    def test_worked_value(self):
        ga, gb = gens(AlgebraId.SYM2)
        e = 4 * (ga(2) * ga(1) * gb(1)) + ga(1) * ga(1) * gb(2)
        ones = (1, 1, 1)
        assert specialize_sym2(e, ones, ones) == 5

    def test_single_generator(self):
        assert specialize_sym2(a(AlgebraId.SYM2, 1), (7,), ()) == 7

    def test_unit(self):
        assert specialize_sym2(AlgebraElement.unit(AlgebraId.SYM2), (), ()) == 1

    def test_missing_value_rejected(self):
        with pytest.raises(ValueError):
            specialize_sym2(b(AlgebraId.SYM2, 3), (1, 1, 1), (1, 1))

    def test_only_sym2(self):
        with pytest.raises(AlgebraMismatchError):
            specialize_sym2(a(AlgebraId.NCSF2, 1), (1,), (1,))


class TestPrimitivity:
    def test_generators_primitive_everywhere(self, algebra):
        for i in range(1, 5):
            assert is_primitive(a(algebra, i))
            assert is_primitive(b(algebra, i))

    def test_products_not_primitive(self, algebra):
        e = a(algebra, 1) * a(algebra, 1)
        assert not is_primitive(e)


class TestRendering:
    def test_latex_mirrors_standard_notation(self):
        e = AlgebraElement.from_key(AlgebraId.WSYM2, sp(({1, 3}, 1), ({2}, 1), ({4}, 2)))
        assert e.latex() == "\\Phi^{\\{(\\{1,3\\},1),(\\{2\\},1),(\\{4\\},2)\\}}"
        c = AlgebraElement.from_key(
            AlgebraId.NCSF2, BicoloredComposition([(2, 1), (1, 1), (1, 2)]), 2
        )
        assert c.latex() == "2\\,\\Psi^{[(2,1),(1,1),(1,2)]}"
        p = AlgebraElement.from_key(AlgebraId.SYM2, BicoloredPartition([(2, 1), (1, 2)]), Fraction(-1, 2))
        assert p.latex() == "-\\frac{1}{2}\\,p^{\\{(1,2),(2,1)\\}}"

    def test_text_monomials(self):
        ga, gb = gens(AlgebraId.NCSF2)
        e = ga(2) * ga(1) * gb(1) * gb(1)
        assert e.text() == "a2*a1*b1^2"

    def test_zero_and_unit(self, algebra):
        assert AlgebraElement.zero(algebra).text() == "0"
        assert AlgebraElement.unit(algebra).text() == "1"


class TestSerialization:
    def test_element_round_trip(self, algebra):
        ga, gb = gens(algebra)
        e = 2 * (ga(2) * gb(1)) - Fraction(1, 3) * gb(2)
        data = e.to_json()
        assert AlgebraElement.from_json(data) == e
        # round trip must survive the wire format exactly
        assert AlgebraElement.from_json(json.loads(json.dumps(data))) == e

    def test_terms_sorted_in_json(self):
        ga, gb = gens(AlgebraId.SYM2)
        e = gb(2) + ga(1)
        keys = [t["key"] for t in e.to_json()["terms"]]
        assert keys == sorted(keys, key=lambda d: str(d))
