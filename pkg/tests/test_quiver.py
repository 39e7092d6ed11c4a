import random

import pytest

from qgsmash.linalg import RatMatrix, random_invertible
from qgsmash.quiver import (Quiver, Representation, canonical_resolution, decompose_indecomposables,
                            direct_sum, euler_form, ext_dim, hom_dim, hom_space, is_isomorphic,
                            is_morphism, kronecker_quiver, projective_rep, random_rep,
                            simple_rep, subspace_quiver)
from oracles import gauss_rank


def dense_hom_dim(m, n):
    """dim Hom(M, N) from the dense system M(a) f_h = f_t N(a)."""
    q = m.quiver
    var = {}
    for v in q.vertices:
        for i in range(m.dims[v]):
            for j in range(n.dims[v]):
                var[(v, i, j)] = len(var)
    rows = []
    for a, t, h in q.arrows:
        ma, na = m.mats[a], n.mats[a]
        for i in range(m.dims[t]):
            for j in range(n.dims[h]):
                eq = [0] * len(var)
                for k in range(m.dims[h]):
                    eq[var[(h, k, j)]] += ma[i, k]
                for k in range(n.dims[t]):
                    eq[var[(t, i, k)]] -= na[k, j]
                rows.append(eq)
    return len(var) - (gauss_rank(rows) if rows else 0)


def a3():
    return Quiver(["x", "y", "z"], [("p", "x", "y"), ("r", "y", "z"), ("s", "x", "z")], name="A")


QUIVERS = [kronecker_quiver(2), kronecker_quiver(3), subspace_quiver(3), a3()]


@pytest.mark.parametrize("q", QUIVERS, ids=lambda q: q.name)
def test_hom_dim_and_euler_form(q):
    rng = random.Random(5)
    for _ in range(6):
        a = [rng.randint(0, 2) for _ in q.vertices]
        b = [rng.randint(0, 2) for _ in q.vertices]
        m = random_rep(q, a, seed=rng.randrange(1000), height=2)
        n = random_rep(q, b, seed=rng.randrange(1000), height=2)
        h = hom_dim(m, n)
        assert h == dense_hom_dim(m, n) == len(hom_space(m, n))
        assert h - ext_dim(m, n) == euler_form(q, a, b)
        for f in hom_space(m, n):
            assert is_morphism(m, n, f)


@pytest.mark.parametrize("q", QUIVERS, ids=lambda q: q.name)
def test_canonical_resolution_presents_m(q):
    rng = random.Random(9)
    for _ in range(3):
        a = [rng.randint(0, 2) for _ in q.vertices]
        m = random_rep(q, a, seed=rng.randrange(1000))
        assert is_isomorphic(canonical_resolution(m).cokernel(), m) == "yes"


def test_projectives_represent_evaluation():
    q = a3()
    n = random_rep(q, [2, 1, 3], seed=1)
    for v in q.vertices:
        assert hom_dim(projective_rep(q, v), n) == n.dims[v]
    assert projective_rep(q, "x").dim_tuple() == (1, 1, 2)


def test_conjugate_is_isomorphic():
    q = kronecker_quiver(3)
    m = random_rep(q, [2, 3], seed=4)
    rng = random.Random(1)
    g = {v: random_invertible(m.dims[v], rng) for v in q.vertices}
    assert is_isomorphic(m, m.conjugate(g)) == "yes"
    assert is_isomorphic(m, random_rep(q, [2, 3], seed=5)) == "no"


def test_krull_schmidt_on_sum():
    q = kronecker_quiver(2)
    a = random_rep(q, [1, 1], seed=1)
    b = random_rep(q, [1, 2], seed=2)
    s = direct_sum([a, a, b, simple_rep(q, "1")])
    found = sorted((x.dim_tuple(), k) for x, k, _ in decompose_indecomposables(s))
    assert found == [((1, 0), 1), ((1, 1), 2), ((1, 2), 1)]


def test_shape_validation_and_round_trip():
    q = kronecker_quiver(2)
    with pytest.raises(ValueError):
        Representation(q, [1, 2], {"a1": RatMatrix.zeros(2, 1)})
    m = random_rep(q, [1, 2], seed=3)
    back = Representation.from_dict(q, m.to_dict())
    assert back.mats == m.mats
    assert Quiver.from_dict(q.to_dict()) == q


def test_cycle_rejected_for_paths():
    q = Quiver(["x"], [("l", "x", "x")])
    with pytest.raises(ValueError):
        q.paths_from("x")
