import pytest

from qgsmash.linalg import rank
from qgsmash.partitions import (Tableau, dim_symgroup_irrep, partitions_of, standard_tableaux,
                                symgroup_character)
from qgsmash.symmetric_group import (GroupAlgebraElement, Permutation, SymmetricIrreps,
                                     group_algebra_realization, symmetric_group, young_symmetrizer)
from oracles import perm_sign


def test_product_applies_left_factor_first():
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    # 1 -p-> 2 -q-> 3
    assert (p * q)(1) == 3
    assert (p * p.inverse()).is_identity()


def test_sign_matches_inversions():
    for g in symmetric_group(4):
        assert g.sign() == perm_sign([x - 1 for x in g.images])


@pytest.mark.parametrize("shape", [[2], [1, 1], [2, 1], [3, 1], [2, 2], [2, 1, 1], [3, 2]])
def test_young_symmetrizer_is_primitive_idempotent(shape):
    m = sum(shape)
    real = group_algebra_realization(m)
    for t in standard_tableaux(shape)[:2]:
        e = young_symmetrizer(t)
        assert e * e == e
        # e k[G] has dimension f^lambda
        assert rank(real.matrix_of(e)) == dim_symgroup_irrep(shape)


def test_symmetrizers_of_different_tableaux_multiply_to_zero():
    t1, t2 = standard_tableaux([2, 1])
    a, b = young_symmetrizer(t1), young_symmetrizer(t2)
    assert (a * b) == GroupAlgebraElement() or (b * a) == GroupAlgebraElement()


def test_nonstandard_rejected():
    with pytest.raises(ValueError):
        young_symmetrizer(Tableau([[2, 1]]))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_irreps_are_homomorphisms_with_right_characters(m):
    g = symmetric_group(m)
    irr = SymmetricIrreps(g, range(1, m + 1), m)
    for lam in partitions_of(m):
        for x in g:
            mx = irr.matrix(lam, x)
            assert mx.trace() == symgroup_character(lam, x.cycle_type())
        for x in g[:6]:
            for y in g[-6:]:
                assert irr.matrix(lam, x * y) == irr.matrix(lam, x) @ irr.matrix(lam, y)
