from fractions import Fraction
from math import comb, factorial

import pytest

from qgsmash.partitions import (Partition, brute_force_lr, character_table, class_size,
                                dim_gl_irrep, dim_symgroup_irrep, hook_product, kronecker,
                                lr_coefficient, partitions_of, standard_tableaux,
                                symgroup_character)
from qgsmash.symmetric_group import symmetric_group
from oracles import cycle_type, ssyt_count, syt_count


def test_partition_counts():
    assert [len(partitions_of(d)) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions_of(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]


def test_parse_and_conjugate():
    lam = Partition.parse("[3,1]")
    assert lam.conjugate() == Partition([2, 1, 1])
    assert Partition.parse("[]").size() == 0
    with pytest.raises(ValueError):
        Partition([1, 2])


@pytest.mark.parametrize("d", range(1, 6))
def test_hook_length_against_enumeration(d):
    for lam in partitions_of(d):
        assert dim_symgroup_irrep(lam) == syt_count(lam.parts) == len(standard_tableaux(lam))
        assert hook_product(lam) * dim_symgroup_irrep(lam) == factorial(d)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hook_content_against_ssyt(n):
    for d in range(1, 5):
        for lam in partitions_of(d, max_rows=n):
            assert dim_gl_irrep(lam, n) == ssyt_count(lam.parts, n)


@pytest.mark.parametrize("d", range(1, 7))
def test_character_orthogonality(d):
    parts, classes, table = character_table(d)
    for i in range(len(parts)):
        for j in range(len(parts)):
            s = sum(class_size(c) * table[i][k] * table[j][k] for k, c in enumerate(classes))
            assert s == (factorial(d) if i == j else 0)


def test_character_on_elements_sums_to_regular():
    d = 4
    for g in symmetric_group(d):
        ct = cycle_type([x - 1 for x in g.images])
        reg = sum(dim_symgroup_irrep(l) * symgroup_character(l, ct) for l in partitions_of(d))
        assert reg == (factorial(d) if g.is_identity() else 0)


def test_kronecker_by_summing_over_elements():
    d = 4
    elems = [cycle_type([x - 1 for x in g.images]) for g in symmetric_group(d)]
    for rho in partitions_of(d):
        for pi in partitions_of(d):
            for sigma in partitions_of(d):
                s = sum(symgroup_character(rho, c) * symgroup_character(pi, c)
                        * symgroup_character(sigma, c) for c in elems)
                assert Fraction(s, factorial(d)) == kronecker(rho, pi, sigma)


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3)])
def test_lr_induction_dimension(a, b):
    for lam in partitions_of(a):
        for mu in partitions_of(b):
            total = sum(lr_coefficient(lam, mu, nu) * dim_symgroup_irrep(nu)
                        for nu in partitions_of(a + b))
            assert total == comb(a + b, a) * dim_symgroup_irrep(lam) * dim_symgroup_irrep(mu)
            for nu in partitions_of(a + b):
                assert lr_coefficient(lam, mu, nu) == brute_force_lr(lam, mu, nu)


def test_known_lr_value():
    assert lr_coefficient([2, 1], [2, 1], [3, 2, 1]) == 2
