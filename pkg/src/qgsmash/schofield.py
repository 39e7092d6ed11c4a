"""Schofield's semi-invariants c(M, N) and the checks built on them.

c(M, N) is the determinant of Hom(P_0, N) -> Hom(P_1, N) for the canonical
projective resolution of M; it is square exactly when <dim M, dim N> = 0.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .linalg import RatMatrix, det, random_invertible, rank
from .quiver import (Quiver, Representation, as_dimvector, canonical_resolution, euler_form,
                     random_rep)


class PairingError(ValueError):
    pass


def schofield_c(m: Representation, n: Representation) -> Fraction:
    if m.quiver != n.quiver:
        raise ValueError("representations of different quivers")
    if euler_form(m.quiver, m.dims, n.dims) != 0:
        raise PairingError(f"<{m.dim_tuple()}, {n.dim_tuple()}> is not zero")
    mat = canonical_resolution(m).evaluate(n)
    if mat.rows != mat.cols:
        raise AssertionError("presentation matrix is not square despite zero pairing")
    return det(mat)


def weight_of(q: Quiver, beta) -> dict:
    """sigma_beta^vee(v) = -<e_v, beta>."""
    beta = as_dimvector(q, beta)
    return {v: -euler_form(q, {v: 1}, beta) for v in q.vertices}


def coweight_of(q: Quiver, alpha) -> dict:
    """sigma_alpha(v) = <alpha, e_v>."""
    alpha = as_dimvector(q, alpha)
    return {v: euler_form(q, alpha, {v: 1}) for v in q.vertices}


def character(weight: dict, g: dict) -> Fraction:
    """prod_v det(g_v)^weight(v)."""
    out = Fraction(1)
    for v, s in weight.items():
        if s:
            out *= det(g[v]) ** s
    return out


def act_gl_alpha(g: dict, m: Representation) -> Representation:
    """(g.M)(a) = g_ta M(a) g_ha^{-1}.  With this left action c(g.M, N) equals
    sigma_beta^vee(g) c(M, N); plain base change M.conjugate(g) gives the inverse."""
    from .linalg import inverse
    return m.conjugate({v: inverse(x) for v, x in g.items()})


def random_gl_alpha(q: Quiver, alpha, rng: random.Random) -> dict:
    alpha = as_dimvector(q, alpha)
    return {v: random_invertible(alpha[v], rng) for v in q.vertices}


class CheckReport:
    def __init__(self, name: str):
        self.name = name
        self.ok = True
        self.lines: list[str] = []

    def fail(self, msg: str):
        self.ok = False
        self.lines.append("FAIL " + msg)

    def note(self, msg: str):
        self.lines.append(msg)

    def __bool__(self):
        return self.ok

    def __str__(self):
        return f"{self.name}: {'pass' if self.ok else 'fail'}\n" + "\n".join("  " + x for x in self.lines)


def transformation_check(n: Representation, alpha, trials: int = 10, seed: int = 0,
                         datum=None, group_trials: int = 10, samples: int | None = None,
                         budget: int | None = None) -> CheckReport:
    """GL_alpha law c_N(g.M) = sigma(g) c_N(M) with sigma = sigma_beta^vee and
    the g.M above, exact on every trial; if datum is given, the ratio
    c_N(g_W.M) / c_N(M) must not depend on M over `samples` M's with c != 0
    (drawn within `budget` tries) for each of `group_trials` elements g_W."""
    samples = samples or trials
    budget = budget or 4 * samples
    from .qg import group_act_rep, random_group_element
    q = n.quiver
    alpha = as_dimvector(q, alpha)
    rep = CheckReport("transformation")
    if euler_form(q, alpha, n.dims) != 0:
        rep.fail("pairing <alpha, beta> is not zero")
        return rep
    rng = random.Random(seed)
    wt = weight_of(q, n.dims)
    rep.note("weight " + " ".join(f"{v}:{wt[v]}" for v in q.vertices))
    nonzero = 0
    for k in range(trials):
        m = random_rep(q, alpha, seed=rng.randrange(10 ** 9), height=9)
        g = random_gl_alpha(q, alpha, rng)
        lhs = schofield_c(act_gl_alpha(g, m), n)
        c = schofield_c(m, n)
        nonzero += c != 0
        if lhs != character(wt, g) * c:
            rep.fail(f"trial {k}: c(g.M) = {lhs}, sigma(g) c(M) = {character(wt, g) * c}")
    rep.note(f"GL_alpha law checked on {trials} trials ({nonzero} with c(M,N) != 0)")
    if datum is None:
        return rep
    for k in range(group_trials):
        gw = random_group_element(datum, rng)
        ratio, seen, tries = None, 0, 0
        while seen < samples and tries < budget:
            tries += 1
            m = random_rep(q, alpha, seed=rng.randrange(10 ** 9), height=9)
            c = schofield_c(m, n)
            if c == 0:
                continue
            r = schofield_c(group_act_rep(datum, gw, m), n) / c
            seen += 1
            if ratio is None:
                ratio = r
            elif r != ratio:
                rep.fail(f"group element {k}: ratio {r} differs from {ratio}")
                break
        if seen < samples:
            rep.fail(f"group element {k}: only {seen} samples with c(M,N) != 0 in {tries} tries")
        elif rep.ok:
            rep.note(f"group element {k}: ratio {ratio}")
    return rep


def evaluation_rank(generators, points) -> int:
    """Rank of the matrix [f(p)] over the rationals."""
    rows = [[f(p) for p in points] for f in generators]
    if not rows or not rows[0]:
        return 0
    return rank(RatMatrix(rows))


def span_dim(generators, point_sampler, samples: int | None = None, seed: int = 0) -> int:
    """Monte Carlo dimension of the span of functions: rank of the evaluation
    matrix at seeded random points.  A lower bound always; equal to the true
    dimension unless a nonzero function vanishes on every sampled point."""
    rng = random.Random(seed)
    samples = samples or len(generators) + 2
    points = [point_sampler(rng) for _ in range(samples)]
    return evaluation_rank(generators, points)


def c_of_second(n: Representation):
    return lambda m: schofield_c(m, n)


def c_of_first(m: Representation):
    return lambda n: schofield_c(m, n)


def tc_determinant(data, m: Representation, n: Representation) -> Fraction:
    """det of Hom(T_c P_0, N) -> Hom(T_c P_1, N) for the canonical resolution of M."""
    from .smash import tc_on_projectives
    mat = tc_on_projectives(data, canonical_resolution(m)).evaluate(n)
    if mat.rows != mat.cols:
        raise PairingError("blown-up presentation is not square")
    return det(mat)


def adjunction_check(m: Representation, ns, data, want: int | None = None) -> CheckReport:
    """c(M, R_c N) against the T_c-side determinant; the ratio must be one
    nonzero constant over the N's (and is 1 with our orderings).  ns may be
    any iterable; samples where both sides vanish are skipped, and with want
    set the check stops after that many nondegenerate samples."""
    from .smash import rc_apply
    rep = CheckReport("adjunction")
    ratios = []
    skipped = 0
    for k, n in enumerate(ns):
        left = schofield_c(m, rc_apply(data, n))
        right = tc_determinant(data, m, n)
        if left == 0 and right == 0:
            skipped += 1
            continue
        if left == 0 or right == 0:
            rep.fail(f"sample {k}: {left} vs {right}")
            continue
        ratios.append(left / right)
        if want is not None and len(ratios) >= want:
            break
    if skipped:
        rep.note(f"{skipped} samples with both sides zero skipped")
    if want is not None and len(ratios) < want:
        rep.fail(f"only {len(ratios)} nondegenerate samples")
    if not ratios:
        rep.fail("no sample with nonzero determinants")
    elif len(set(ratios)) != 1:
        rep.fail(f"ratios vary: {sorted(set(ratios))}")
    else:
        rep.note(f"constant ratio {ratios[0]} over {len(ratios)} samples")
    rep.ratios = ratios
    return rep


def restricted_span_dim(alpha, data, beta, seed: int = 0, generators: int = 4,
                        points: int = 6, via_tc: bool = True) -> dict:
    """Both sides of the reciprocity, from independent samples.

    left:  generators M -> c(M, R_c N_j), N_j random of dim beta, evaluated at random M_i.
    right: generators c^{M'_j} = c(M'_j, -) for random M'_j of dim alpha, evaluated at
           the points R_c(N'_i) with fresh N'_i.
    tc:    generators N -> c(T_c M_i, N), T_c M_i taken as a cokernel and resolved on
           Q_c, evaluated at random N (skipped if via_tc is False)."""
    from .smash import rc_apply, tc_apply
    q = data.qg.base
    qc = data.qg.quiver
    rng = random.Random(seed)
    alpha = as_dimvector(q, alpha)
    beta = as_dimvector(qc, beta)

    def ms(k):
        return [random_rep(q, alpha, seed=rng.randrange(10 ** 9), height=9) for _ in range(k)]

    def ns(k):
        return [random_rep(qc, beta, seed=rng.randrange(10 ** 9), height=9) for _ in range(k)]

    out = {}
    out["left"] = evaluation_rank([c_of_second(rc_apply(data, n)) for n in ns(generators)], ms(points))
    out["right"] = evaluation_rank([c_of_first(m) for m in ms(generators)],
                                   [rc_apply(data, n) for n in ns(points)])
    if via_tc:
        out["tc"] = evaluation_rank([c_of_first(tc_apply(data, m)) for m in ms(generators)], ns(points))
    return out


def semi_invariant_weight_space_dim(q: Quiver, alpha, beta, seed: int = 0, generators: int = 4,
                                    points: int = 6) -> int:
    """Span of c_V (V generic of dimension beta) on Rep_alpha: the full space of
    semi-invariants of weight sigma_beta^vee."""
    rng = random.Random(seed)
    vs = [random_rep(q, beta, seed=rng.randrange(10 ** 9), height=9) for _ in range(generators)]
    ms = [random_rep(q, alpha, seed=rng.randrange(10 ** 9), height=9) for _ in range(points)]
    return evaluation_rank([c_of_second(v) for v in vs], ms)


# ----------------------------------------------------------------------
# direct sums
#
# The assembled matrix lists P_0 (resp. P_1) summands in order, each with
# the basis of N at its vertex.  For a direct sum the summand blocks
# interleave, so the determinant is the product of the two factors times the
# sign of the shuffle that separates them.  No ordering removes that sign:
# swapping the two summands is a base change whose character value can be -1.


def _shuffle_parity(labels) -> int:
    inv = ones = 0
    for x in labels:
        if x:
            ones += 1
        else:
            inv += ones
    return inv % 2


def _p_summands(q: Quiver, alpha):
    p0 = [(v, i) for v in q.vertices for i in range(alpha[v])]
    p1 = [(h, i) for _, t, h in q.arrows for i in range(alpha[t])]
    return p0, p1


def sum_sign_second(q: Quiver, alpha, beta, beta2) -> int:
    """c(M, N + N') = sign * c(M, N) c(M, N') for dims M = alpha, N = beta, N' = beta2."""
    alpha, beta, beta2 = (as_dimvector(q, x) for x in (alpha, beta, beta2))
    p0, p1 = _p_summands(q, alpha)
    par = 0
    for summands in (p0, p1):
        par += _shuffle_parity([x for v, _ in summands for x in [0] * beta[v] + [1] * beta2[v]])
    return -1 if par % 2 else 1


def sum_sign_first(q: Quiver, alpha, alpha2, beta) -> int:
    """c(M + M', N) = sign * c(M, N) c(M', N)."""
    alpha, alpha2, beta = (as_dimvector(q, x) for x in (alpha, alpha2, beta))
    both = {v: alpha[v] + alpha2[v] for v in q.vertices}
    p0 = [(v, int(i >= alpha[v])) for v in q.vertices for i in range(both[v])]
    p1 = [(h, int(i >= alpha[t])) for _, t, h in q.arrows for i in range(both[t])]
    par = 0
    for summands in (p0, p1):
        par += _shuffle_parity([lab for v, lab in summands for _ in range(beta[v])])
    return -1 if par % 2 else 1
