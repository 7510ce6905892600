import pytest

from bellhopf import AlgebraId, a, b
from bellhopf.partitions import BicoloredSetPartition


ALGEBRAS = (AlgebraId.SYM2, AlgebraId.NCSF2, AlgebraId.WSYM2)


@pytest.fixture(params=ALGEBRAS, ids=lambda alg: alg.value)
def algebra(request):
    return request.param


def gens(alg):
    """Generator shortcuts: gens(alg) -> (a_i builder, b_i builder)."""
    return (lambda i: a(alg, i)), (lambda i: b(alg, i))


def sp(*blocks):
    """Shorthand set-partition builder: sp(({1,3},1), ({2},1), ({4},2))."""
    return BicoloredSetPartition(blocks)
