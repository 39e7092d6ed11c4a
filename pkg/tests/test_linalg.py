import random
from fractions import Fraction

import pytest

from qgsmash.linalg import (RatMatrix, det, dumps_matrix, from_yale, inverse, kernel_basis,
                            loads_matrix, random_matrix, rank, rref, solve, sparse_left_kernel,
                            sparse_rank, to_yale)
from oracles import gauss_rank, leibniz_det, naive_matmul


def rand(rows, cols, seed, height=4):
    return random_matrix(rows, cols, random.Random(seed), height)


@pytest.mark.parametrize("seed", range(8))
def test_det_matches_leibniz(seed):
    n = 1 + seed % 5
    m = rand(n, n, seed)
    for backend in ("python", "flint"):
        assert det(m, backend=backend) == leibniz_det(m.tolist())


def test_det_of_fractions():
    m = RatMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]])
    assert det(m) == Fraction(1, 10) - Fraction(1, 12)


@pytest.mark.parametrize("seed", range(6))
def test_matmul_and_rank(seed):
    a, b = rand(3, 4, seed), rand(4, 2, seed + 100)
    assert (a @ b).tolist() == naive_matmul(a.tolist(), b.tolist())
    low = rand(5, 2, seed) @ rand(2, 6, seed + 1)
    for backend in ("python", "flint"):
        assert rank(low, backend=backend) == gauss_rank(low.tolist())


def test_kernel_and_solve():
    # left kernel: row vectors x with x*m = 0
    m = rand(6, 3, 7)
    for v in kernel_basis(m):
        assert (RatMatrix([list(v)]) @ m).is_zero()
    assert len(kernel_basis(m)) == 6 - rank(m)
    a = rand(4, 4, 3)
    if det(a):
        b = rand(2, 4, 4)
        assert solve(a, b) @ a == b
        assert a @ inverse(a) == RatMatrix.identity(4)


def test_rref_backends_agree():
    m = rand(4, 6, 11)
    assert rref(m, backend="python")[0] == rref(m, backend="flint")[0]


def test_sparse_kernel_is_left_kernel():
    items = [(0, 0, 1), (1, 0, 2), (2, 1, 1), (3, 1, 1)]
    ker = sparse_left_kernel(4, 2, items)
    assert len(ker) == 2 and sparse_rank(4, 2, items) == 2
    dense = RatMatrix.from_sparse(4, 2, items)
    for v in ker:
        assert (RatMatrix([list(v)]) @ dense).is_zero()


def test_yale_and_text_round_trip():
    m = RatMatrix([[0, Fraction(3, 2), 0], [-1, 0, 0], [0, 0, 0]])
    assert from_yale(to_yale(m), m.shape) == m
    assert loads_matrix(dumps_matrix(m)) == m


def test_ragged_rejected():
    with pytest.raises(ValueError):
        RatMatrix([[1, 2], [3]])
