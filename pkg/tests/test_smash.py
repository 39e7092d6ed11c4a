import random

import pytest

from qgsmash.linalg import RatMatrix
from qgsmash.qg import (build_qg_finite, build_qg_gl, kronecker_symmetric_action,
                        natural_gl_datum, random_group_element, subspace_symmetric_action)
from qgsmash.quiver import (Representation, canonical_resolution, direct_sum, hom_dim, is_isomorphic,
                            kronecker_quiver, projective_rep, random_rep, subspace_quiver)
from qgsmash.smash import (SupportError, build_idempotent_data, rc_apply, rc_dims, rc_symbolic,
                           tc_apply, tc_on_projectives, twist_check)
from qgsmash.templates import all_templates, component_for


def setups():
    k3 = kronecker_quiver(3)
    yield "K3-gl", build_qg_gl(k3, natural_gl_datum(k3, 3), ("2", [1]))
    k2 = kronecker_quiver(2)
    yield "K2-sym", build_qg_finite(k2, kronecker_symmetric_action(k2))
    s3 = subspace_quiver(3)
    yield "S3-sym", build_qg_finite(s3, subspace_symmetric_action(s3))


SETUPS = {name: build_idempotent_data(qg) for name, qg in setups()}


@pytest.mark.parametrize("name", list(SETUPS))
def test_adjunction_on_hom_dimensions(name):
    data = SETUPS[name]
    q, qc = data.base, data.qg.quiver
    rng = random.Random(3)
    for _ in range(4):
        m = random_rep(q, [rng.randint(0, 2) for _ in q.vertices], seed=rng.randrange(999))
        n = random_rep(qc, [rng.randint(0, 2) for _ in qc.vertices], seed=rng.randrange(999))
        assert hom_dim(tc_apply(data, m), n) == hom_dim(m, rc_apply(data, n))


@pytest.mark.parametrize("name", list(SETUPS))
def test_rc_dims_and_additivity(name):
    data = SETUPS[name]
    qc = data.qg.quiver
    rng = random.Random(7)
    a = random_rep(qc, [rng.randint(0, 2) for _ in qc.vertices], seed=1)
    b = random_rep(qc, [rng.randint(0, 2) for _ in qc.vertices], seed=2)
    assert rc_apply(data, a).dims == rc_dims(data, a.dims)
    lhs = rc_apply(data, direct_sum([a, b]))
    rhs = direct_sum([rc_apply(data, a), rc_apply(data, b)])
    assert is_isomorphic(lhs, rhs) == "yes"


@pytest.mark.parametrize("name", list(SETUPS))
def test_tc_sends_projectives_to_projectives(name):
    data = SETUPS[name]
    for v in data.base.vertices:
        p = projective_rep(data.base, v)
        t = tc_apply(data, p)
        want = direct_sum([projective_rep(data.qg.quiver, w) for w, _ in data.positions(v)])
        assert is_isomorphic(t, want) == "yes"


def test_tc_presentation_is_the_cokernel():
    data = SETUPS["K3-gl"]
    m = random_rep(data.base, [1, 2], seed=5)
    pres = tc_on_projectives(data, canonical_resolution(m))
    assert pres.cokernel().dims == tc_apply(data, m).dims


@pytest.mark.parametrize("name", list(SETUPS))
def test_rc_output_is_invariant(name):
    data = SETUPS[name]
    qc = data.qg.quiver
    rng = random.Random(11)
    n = random_rep(qc, [1] * len(qc.vertices), seed=4)
    for _ in range(3):
        g = random_group_element(data.qg.datum, rng)
        assert twist_check(data, n, g) == "yes"


def test_wrong_quiver_rejected():
    data = SETUPS["K2-sym"]
    with pytest.raises(SupportError):
        rc_apply(data, random_rep(data.base, [1, 1]))
    with pytest.raises(SupportError):
        tc_apply(data, random_rep(data.qg.quiver, [1] * len(data.qg.vertices)))


def test_symbolic_matches_numeric():
    data = SETUPS["K3-gl"]
    # symbols stand for scalars when every dimension is one
    n = random_rep(data.qg.quiver, [1, 1, 1], seed=8)
    num = rc_apply(data, n)
    values = {b: m[0, 0] for b, m in n.mats.items()}
    for name, sm in rc_symbolic(data).items():
        assert sm.substitute(values) == num.mats[name]


@pytest.mark.parametrize("t", all_templates(), ids=lambda t: t.name)
def test_templates_build_components(t):
    comp, data = component_for(t)
    for s, pair in t.symbols.items():
        assert pair in comp.bundles


def test_generic_tc_summands_seen_through_adjunction():
    # thin indecomposables of the first K_3 component, internal order [2], [1,1], [1]
    data = SETUPS["K3-gl"]
    qc = data.qg.quiver

    def thin(d):
        dims = dict(zip(qc.vertices, d))
        mats = {a: RatMatrix([[1]]) if dims[t] and dims[h] else RatMatrix.zeros(dims[t], dims[h])
                for a, t, h in qc.arrows}
        return Representation(qc, dims, mats)
    m = random_rep(data.base, [1, 2], seed=0, height=9)
    t = tc_apply(data, m)
    for d in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]:
        assert hom_dim(t, thin(d)) == hom_dim(m, rc_apply(data, thin(d)))
    assert hom_dim(m, rc_apply(data, thin((0, 1, 1)))) == 1
