import pytest

from qgsmash.linalg import RatMatrix, block_diag, inverse
from qgsmash.semisimple import (DecompositionError, MatrixAlgebra, decompose, idempotents_in_end,
                                radical)
from qgsmash.symmetric_group import group_algebra_realization


def unit(n, i, j):
    return RatMatrix.from_sparse(n, n, [(i, j, 1)])


def m2_times_k():
    # M_2(Q) x Q as block diagonal 3x3 matrices, in a scrambled basis
    z1, z2 = RatMatrix.zeros(1, 1), RatMatrix.zeros(2, 2)
    basis = [block_diag([unit(2, i, j), z1]) for i in range(2) for j in range(2)]
    basis.append(block_diag([z2, RatMatrix.identity(1)]))
    g = RatMatrix([[1, 2, 0], [0, 1, 1], [1, 0, 1]])
    gi = inverse(g)
    return MatrixAlgebra([gi @ b @ g for b in basis])


def check_units(dec):
    units = dec.matrix_units
    for (a, i, j), x in units.items():
        for (b, k, l), y in units.items():
            want = units[(a, i, l)] if a == b and j == k else None
            prod = x @ y
            assert prod == want if want is not None else prod.is_zero()


def test_identity_of_algebra():
    alg = m2_times_k()
    one = alg.identity()
    for b in alg.basis:
        assert one @ b == b == b @ one


def test_decompose_m2_times_k():
    alg = m2_times_k()
    dec = decompose(alg, seed=3)
    assert sorted(dec.block_size(l) for l in dec.labels()) == [1, 2]
    check_units(dec)
    total = sum((z for _, z in dec.central_idempotents), RatMatrix.zeros(3, 3))
    assert total == alg.identity()


def test_group_algebra_of_s3():
    real = group_algebra_realization(3)
    dec = decompose(real.algebra, seed=1)
    assert sorted(dec.block_size(l) for l in dec.labels()) == [1, 1, 2]
    check_units(dec)


def test_radical_detected():
    upper = MatrixAlgebra([unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 1)])
    assert len(radical(upper)) == 1
    with pytest.raises(DecompositionError):
        decompose(upper)


def test_idempotents_in_non_semisimple_end():
    upper = MatrixAlgebra([unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 1)])
    es = idempotents_in_end(upper, seed=0)
    assert len(es) == 2
    assert sum(es, RatMatrix.zeros(2, 2)) == RatMatrix.identity(2)
    for e in es:
        assert e @ e == e
    assert (es[0] @ es[1]).is_zero()
