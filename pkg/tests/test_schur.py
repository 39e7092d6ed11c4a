import random
from fractions import Fraction
from itertools import product

import pytest

from qgsmash.linalg import RatMatrix, random_invertible, rank
from qgsmash.partitions import dim_gl_irrep, partitions_of
from qgsmash.schur import (GeneralizedPermutation, GLIrreps, GLModule, XiElement, check_idempotent_table,
                           place_permutation, schur_algebra, schur_basis, schur_decomposition,
                           schur_dimension, tensor_power, xi_to_operator)
from qgsmash.symmetric_group import symmetric_group


def schur_poly_at(lam, xs):
    """Sum over semistandard tableaux of x^content, by enumeration."""
    n = len(xs)
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    total = Fraction(0)
    for vals in product(range(n), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all((j == 0 or t[(i, j - 1)] <= t[(i, j)]) and (i == 0 or t[(i - 1, j)] < t[(i, j)])
               for i, j in cells):
            term = Fraction(1)
            for v in vals:
                term *= xs[v]
            total += term
    return total


def commutant_dim(n, d):
    """Dimension of the centralizer of the place permutations, by linear algebra."""
    size = n ** d
    gens = [place_permutation(w, n, d) for w in symmetric_group(d)]
    rows = []
    for a in range(size):
        for b in range(size):
            # unknown X[a][b]; equations (P X - X P) = 0
            col = []
            for p in gens:
                for i in range(size):
                    for j in range(size):
                        col.append((p[i, a] if j == b else 0) - (p[b, j] if i == a else 0))
            rows.append(col)
    return size * size - rank(RatMatrix(rows))


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2)])
def test_dimension_matches_commutant(n, d):
    assert schur_dimension(n, d) == len(schur_basis(n, d)) == schur_algebra(n, d).dim
    assert commutant_dim(n, d) == schur_dimension(n, d)


def test_basis_operators_commute_with_places():
    n, d = 2, 3
    ops = schur_algebra(n, d).basis
    for w in symmetric_group(d):
        p = place_permutation(w, n, d)
        for x in ops:
            assert p @ x == x @ p


def test_place_permutations_multiply():
    n, d = 2, 3
    g = symmetric_group(d)
    for w in g:
        for v in g:
            assert place_permutation(w, n, d) @ place_permutation(v, n, d) == \
                place_permutation(w * v, n, d)


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_corrected_tables_pass(n, d):
    for name, ok, detail in check_idempotent_table(n, d):
        assert ok, (name, detail)


def test_printed_cubic_table_fails_for_three_letters():
    results = dict((name, ok) for name, ok, _ in check_idempotent_table(3, 3, printed=True))
    assert not all(results.values())
    assert all(ok for _, ok, _ in check_idempotent_table(2, 3, printed=True))


@pytest.mark.parametrize("n,d,source", [(2, 2, "table"), (2, 3, "table"), (3, 3, "table"),
                                        (2, 4, "general"), (3, 2, "general")])
def test_irreps_have_schur_characters(n, d, source):
    irr = GLIrreps(n, d, source=source)
    rng = random.Random(n * 10 + d)
    xs = [Fraction(rng.randint(1, 5)) for _ in range(n)]
    diag = RatMatrix.diag(xs)
    for lam in partitions_of(d, n):
        assert irr.dim(lam) == dim_gl_irrep(lam, n)
        assert irr.matrix(lam, diag).trace() == schur_poly_at(lam.parts, xs)
    g, h = random_invertible(n, rng), random_invertible(n, rng)
    for lam in partitions_of(d, n):
        a, b, ab = irr.matrix(lam, g), irr.matrix(lam, h), irr.matrix(lam, g @ h)
        assert ab == a @ b or ab == b @ a


def test_general_and_table_agree_on_block_sizes():
    gen = schur_decomposition(2, 3, source="general")
    tab = schur_decomposition(2, 3, source="table")
    for lam in partitions_of(3, 2):
        assert gen.block_size(lam) == tab.block_size(lam)


def test_young_module_realization():
    m = GLModule([2, 1], 2)
    assert m.dim == 2
    xs = [Fraction(2), Fraction(3)]
    assert m.matrix(RatMatrix.diag(xs)).trace() == schur_poly_at((2, 1), xs)


def test_tensor_power_of_identity():
    assert tensor_power(RatMatrix.identity(2), 3) == RatMatrix.identity(8)


def test_xi_operator_of_diagonal_word():
    # xi^{11}_{11} projects onto e_1 (x) e_1
    x = XiElement(2, 2, {GeneralizedPermutation([1, 1], [1, 1]): 1})
    op = xi_to_operator(x)
    assert op == RatMatrix.from_sparse(4, 4, [(0, 0, 1)])
