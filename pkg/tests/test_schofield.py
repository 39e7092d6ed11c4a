import random
from fractions import Fraction

import pytest

from qgsmash.linalg import RatMatrix
from qgsmash.propositions import FAMILIES, build, datum_for, family, primitive_alpha
from qgsmash.quiver import (Representation, direct_sum, euler_form, ext_dim, hom_dim,
                            kronecker_quiver, random_rep, subspace_quiver)
from qgsmash.schofield import (PairingError, act_gl_alpha, character, coweight_of,
                               random_gl_alpha, schofield_c, sum_sign_first, sum_sign_second,
                               transformation_check, weight_of)


def k2_rep(x, y):
    q = kronecker_quiver(2)
    return Representation(q, [1, 1], {"a1": RatMatrix([[x]]), "a2": RatMatrix([[y]])})


def test_kronecker_two_by_hand():
    # c on K_2 with alpha = beta = (1,1) is the 2x2 minor x1 y2 - x2 y1 up to one global sign
    rng = random.Random(0)
    signs = set()
    for _ in range(10):
        x1, x2, y1, y2 = (Fraction(rng.randint(-5, 5)) for _ in range(4))
        c = schofield_c(k2_rep(x1, x2), k2_rep(y1, y2))
        minor = x1 * y2 - x2 * y1
        assert abs(c) == abs(minor)
        if minor:
            signs.add(c / minor)
    assert len(signs) == 1


def test_pairing_must_vanish():
    q = kronecker_quiver(3)
    with pytest.raises(PairingError):
        schofield_c(random_rep(q, [1, 1]), random_rep(q, [1, 1]))


@pytest.mark.parametrize("q,alpha,beta", [
    (kronecker_quiver(3), (1, 2), (1, 1)),
    (kronecker_quiver(3), (3, 5), (8, 6)),
    (subspace_quiver(3), (0, 1, 1, 1), (0, 0, 1, 1)),
    (subspace_quiver(4), (1, 1, 1, 1, 2), (1, 1, 1, 1, 2)),
])
def test_nonvanishing_iff_hom_vanishes(q, alpha, beta):
    assert euler_form(q, alpha, beta) == 0
    rng = random.Random(4)
    for _ in range(8):
        m = random_rep(q, alpha, seed=rng.randrange(10 ** 6), height=rng.choice([0, 1, 3]))
        n = random_rep(q, beta, seed=rng.randrange(10 ** 6), height=rng.choice([0, 1, 3]))
        c = schofield_c(m, n)
        assert (c != 0) == (hom_dim(m, n) == 0) == (ext_dim(m, n) == 0)


def test_gl_alpha_law_exact():
    q = kronecker_quiver(3)
    rng = random.Random(1)
    for alpha, beta in [((1, 2), (1, 1)), ((2, 4), (1, 1)), ((1, 2), (2, 2))]:
        n = random_rep(q, beta, seed=3)
        wt = weight_of(q, beta)
        for _ in range(4):
            m = random_rep(q, alpha, seed=rng.randrange(999))
            g = random_gl_alpha(q, alpha, rng)
            assert schofield_c(act_gl_alpha(g, m), n) == character(wt, g) * schofield_c(m, n)


def test_weight_and_coweight():
    q = kronecker_quiver(3)
    assert weight_of(q, (1, 1)) == {"1": 2, "2": -1}
    assert coweight_of(q, (1, 2)) == {"1": 1, "2": -1}


@pytest.mark.parametrize("q,alpha,b1,b2", [
    (subspace_quiver(3), (0, 1, 1, 1), (0, 0, 1, 1), (0, 1, 0, 1)),
    (kronecker_quiver(3), (1, 2), (1, 1), (2, 2)),
    (kronecker_quiver(2), (1, 1), (1, 1), (2, 2)),
])
def test_signed_multiplicativity_second_slot(q, alpha, b1, b2):
    rng = random.Random(6)
    for _ in range(5):
        m = random_rep(q, alpha, seed=rng.randrange(999))
        n1 = random_rep(q, b1, seed=rng.randrange(999))
        n2 = random_rep(q, b2, seed=rng.randrange(999))
        s = sum_sign_second(q, alpha, b1, b2)
        assert schofield_c(m, direct_sum([n1, n2])) == s * schofield_c(m, n1) * schofield_c(m, n2)


def test_signed_multiplicativity_first_slot():
    q = kronecker_quiver(3)
    rng = random.Random(8)
    for a1, a2, beta in [((1, 2), (2, 4), (1, 1)), ((1, 2), (1, 2), (1, 1))]:
        m1 = random_rep(q, a1, seed=rng.randrange(999))
        m2 = random_rep(q, a2, seed=rng.randrange(999))
        n = random_rep(q, beta, seed=rng.randrange(999))
        s = sum_sign_first(q, a1, a2, beta)
        assert schofield_c(direct_sum([m1, m2]), n) == s * schofield_c(m1, n) * schofield_c(m2, n)


def test_swap_changes_sign():
    # summand order matters: c(M, N + N') = -c(M, N' + N) on this example
    q = subspace_quiver(3)
    m = random_rep(q, (0, 1, 1, 1), seed=1)
    n1 = random_rep(q, (0, 0, 1, 1), seed=2)
    n2 = random_rep(q, (0, 1, 0, 1), seed=3)
    a, b = schofield_c(m, direct_sum([n1, n2])), schofield_c(m, direct_sum([n2, n1]))
    assert a != 0 and a == -b


def test_primitive_alpha():
    assert primitive_alpha(3, (1, 1)) == (1, 2)
    assert primitive_alpha(3, (8, 6)) == (3, 5)
    with pytest.raises(ValueError):
        primitive_alpha(1, (3, 1))


@pytest.mark.parametrize("name", ["k3-first-top", "k3-first-low", "k3-second-b234"])
def test_degenerate_families_pass_at_scale_two(name):
    f = family(name)
    n, alpha = build(f, 2, seed=1)
    rep = transformation_check(n, alpha, trials=3, seed=0, datum=datum_for(f), group_trials=1,
                               samples=3)
    assert rep.ok, str(rep)


def test_scale_one_degeneracy_is_identical_vanishing():
    # at a = 1 every M of dimension alpha has a morphism to N
    f = family("k3-first-top")
    n, alpha = build(f, 1, seed=1)
    for s in range(5):
        m = random_rep(n.quiver, alpha, seed=s, height=9)
        assert hom_dim(m, n) >= 1 and schofield_c(m, n) == 0


def test_families_have_zero_pairing():
    for f in FAMILIES:
        n, alpha = build(f, 1, seed=0)
        assert euler_form(n.quiver, alpha, n.dims) == 0
