import random
from fractions import Fraction

import pytest

from qgsmash.linalg import random_invertible
from qgsmash.partitions import Partition, dim_gl_irrep, partitions_of, symgroup_character
from qgsmash.qg import (GroupDatum, ScopeError, build_qg_finite, build_qg_gl, component_of,
                        g_root_witness, gl_arrow_count, group_act_rep, is_dynkin,
                        kronecker_symmetric_action, natural_gl_datum, parse_vertex_name, r_map,
                        random_group_element, subspace_symmetric_action, sym_power_module)
from qgsmash.quiver import Quiver, kronecker_quiver, random_rep, subspace_quiver
from qgsmash.symmetric_group import symmetric_group


def brute_kn_count(n, rho, sigma):
    """<chi_rho, chi_sigma * (number of fixed arrows)> over S_n, element by element."""
    total = 0
    for g in symmetric_group(n):
        fixed = sum(1 for i in range(1, n + 1) if g(i) == i)
        ct = g.cycle_type()
        total += symgroup_character(rho, ct) * symgroup_character(sigma, ct) * fixed
    return Fraction(total, len(symmetric_group(n)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kronecker_under_symmetric_group(n):
    q = kronecker_quiver(n)
    qg = build_qg_finite(q, kronecker_symmetric_action(q))
    assert len(qg.vertices) == 2 * len(partitions_of(n))
    for rho in partitions_of(n):
        for sigma in partitions_of(n):
            t, h = f"1:{rho}", f"2:{sigma}"
            assert qg.multiplicity(t, h) == brute_kn_count(n, rho, sigma)


def test_subspace_under_symmetric_group():
    q = subspace_quiver(4)
    qg = build_qg_finite(q, subspace_symmetric_action(q))
    assert len(qg.vertices) == len(partitions_of(3)) + len(partitions_of(4))
    # arrows follow the branching rule: sigma is rho with one box added
    for rho in partitions_of(3):
        for sigma in partitions_of(4):
            want = int(sigma in rho.addable())
            assert qg.multiplicity(f"1:{rho}", f"5:{sigma}") == want


@pytest.mark.parametrize("n", [2, 3, 4])
def test_natural_gl_component_is_pieri(n):
    q = kronecker_quiver(n)
    qg = build_qg_gl(q, natural_gl_datum(q, n), ("2", [1]))
    assert sorted(qg.vertices) == sorted(["2:[1]", "1:[2]", "1:[1,1]"])
    for name in ("1:[2]", "1:[1,1]"):
        assert qg.multiplicity(name, "2:[1]") == 1
    # r sends the indicator of (1,lam) to dim V_lam at vertex 1
    beta = {v: int(v == "1:[1,1]") for v in qg.vertices}
    assert r_map(qg, beta) == {"1": dim_gl_irrep([1, 1], n), "2": 0}


def test_gl_arrow_count_pieri_oracle():
    q = kronecker_quiver(3)
    datum = natural_gl_datum(q, 3)
    for rho in partitions_of(4, 3):
        for sigma in partitions_of(3, 3):
            want = int(rho in sigma.addable())
            assert gl_arrow_count(datum, "1", "2", rho, sigma) == want


def test_sym2_datum_dimension_check():
    q = kronecker_quiver(3)
    GroupDatum.gl(q, 2, {("1", "2"): sym_power_module(2)})
    with pytest.raises(ValueError):
        GroupDatum.gl(kronecker_quiver(2), 2, {("1", "2"): sym_power_module(2)})


def test_cyclic_quiver_rejected_for_gl():
    q = Quiver(["x"], [("l", "x", "x")])
    with pytest.raises(ScopeError):
        build_qg_gl(q, GroupDatum("gl", n=1, modules={("x", "x"): sym_power_module(1, n=1)}),
                    ("x", [1]))


def test_group_action_is_an_action():
    q = kronecker_quiver(3)
    datum = natural_gl_datum(q, 3)
    rng = random.Random(2)
    m = random_rep(q, [2, 1], seed=1)
    g, h = random_invertible(3, rng), random_invertible(3, rng)
    one_way = group_act_rep(datum, g, group_act_rep(datum, h, m))
    assert one_way.mats == group_act_rep(datum, g @ h, m).mats or \
        one_way.mats == group_act_rep(datum, h @ g, m).mats
    fin = GroupDatum.finite(kronecker_symmetric_action(q))
    for _ in range(4):
        a, b = random_group_element(fin, rng), random_group_element(fin, rng)
        left = group_act_rep(fin, a, group_act_rep(fin, b, m)).mats
        assert left in (group_act_rep(fin, a * b, m).mats, group_act_rep(fin, b * a, m).mats)


def test_dynkin_detection():
    a3 = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    assert is_dynkin(a3)
    assert not is_dynkin(kronecker_quiver(2))
    assert not is_dynkin(subspace_quiver(4))
    assert is_dynkin(subspace_quiver(3))


def test_component_and_root_witness():
    q = subspace_quiver(3)
    qg = build_qg_finite(q, subspace_symmetric_action(q))
    comp = component_of(qg, "1:[2]")
    assert comp.quiver.is_acyclic()
    found = g_root_witness(qg, {"1": 1, "2": 1, "3": 1, "4": 1})
    assert found is not None
    beta, method = found
    assert r_map(qg, beta) == {"1": 1, "2": 1, "3": 1, "4": 1}


def test_parse_vertex_name():
    assert parse_vertex_name("2:[2,1]") == ("2", Partition([2, 1]))
