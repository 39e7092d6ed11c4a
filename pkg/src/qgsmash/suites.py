"""Verification suites: lists of exact checks, each reported as a line.

Every suite is a function (seed) -> list[Check].  The CLI's `verify` command
and the acceptance tests both run these, so the two never drift apart.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .partitions import (Partition, brute_force_lr, character_table, class_size, dim_symgroup_irrep,
                         kronecker, lr_coefficient, partitions_of, standard_tableaux,
                         symgroup_character)
from .quiver import (Quiver, Representation, direct_sum, euler_form, ext_dim, hom_dim,
                     is_isomorphic, kronecker_quiver, random_rep, subspace_quiver)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def all_ok(checks) -> bool:
    return all(c.ok for c in checks)


# ----------------------------------------------------------------------
# shared fixtures


def gl_component(n: int, degree: int, sym2: bool = False):
    """(component QGQuiver, IdempotentData) of K_n containing 2:[degree]."""
    from .qg import GroupDatum, build_qg_gl, natural_gl_datum, sym_power_module
    from .smash import build_idempotent_data
    q = kronecker_quiver(n)
    if sym2:
        datum = GroupDatum.gl(q, 2, {("1", "2"): sym_power_module(2)})
    else:
        datum = natural_gl_datum(q, n)
    comp = build_qg_gl(q, datum, ("2", [degree] if degree else []))
    return comp, build_idempotent_data(comp)


# printed vertex order of the first K_3 component: [1,1], [2], [1]
PRINTED_FIRST = ("1:[1,1]", "1:[2]", "2:[1]")


def printed_dims(dims: dict) -> tuple:
    return tuple(dims.get(v, 0) for v in PRINTED_FIRST)


def from_printed(t: tuple) -> dict:
    return dict(zip(PRINTED_FIRST, t))


def _special_rep(q: Quiver, alpha: dict, rng: random.Random) -> Representation:
    """Generic, or a direct sum of two generic pieces, or generic with one arrow zeroed."""
    kind = rng.randrange(3)
    if kind == 0 or sum(alpha.values()) < 2:
        return random_rep(q, alpha, seed=rng.randrange(10 ** 9), height=7)
    if kind == 1:
        a1 = {v: rng.randint(0, alpha[v]) for v in q.vertices}
        a2 = {v: alpha[v] - a1[v] for v in q.vertices}
        parts = [random_rep(q, a, seed=rng.randrange(10 ** 9), height=7) for a in (a1, a2)]
        return direct_sum(parts)
    m = random_rep(q, alpha, seed=rng.randrange(10 ** 9), height=7)
    name = rng.choice(q.arrow_names())
    mats = dict(m.mats)
    mats[name] = mats[name].scale(0)
    return Representation(q, m.dims, mats)


def three_quivers():
    return [kronecker_quiver(2), kronecker_quiver(3), subspace_quiver(3)]


# ----------------------------------------------------------------------
# 1. Schur idempotent tables


def suite_idempotents(seed: int = 0) -> list[Check]:
    from .schur import check_idempotent_table
    out = []
    for printed in (True, False):
        tag = "printed" if printed else "corrected"
        for n in (2, 3, 4):
            for d in (2, 3):
                if d == 2 and not printed:
                    continue   # the d = 2 table has a single form
                res = check_idempotent_table(n, d, printed=printed)
                bad = [f"{name} ({det})" if det else name for name, ok, det in res if not ok]
                out.append(Check(f"{tag} table S({n},{d})", not bad,
                                 "; ".join(bad) if bad else "idempotent, orthogonal, complete, primitive, "
                                 + res[-1][2]))
    return out


# ----------------------------------------------------------------------
# 2. Q_G shapes


def _kn_brute_arrows(n: int, rho, sigma) -> int:
    """dim Hom_{S_n}(V_rho, k^n (x) V_sigma) from characters: k^n has character
    'number of fixed points'."""
    total = Fraction(0)
    for cls in partitions_of(n):
        fixed = list(cls).count(1)
        total += class_size(cls) * symgroup_character(rho, cls) * fixed * symgroup_character(sigma, cls)
    total /= _factorial(n)
    assert total.denominator == 1
    return int(total)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _is_e7_tree(qg) -> bool:
    q = qg.quiver
    if len(q.vertices) != 7 or len(q.arrows) != 6:
        return False
    adj = {v: set() for v in q.vertices}
    for _, t, h in q.arrows:
        if t == h or h in adj[t]:
            return False
        adj[t].add(h)
        adj[h].add(t)
    branch = [v for v in adj if len(adj[v]) == 3]
    if len(branch) != 1 or any(len(s) > 3 for s in adj.values()):
        return False
    arms = []
    for start in adj[branch[0]]:
        prev, cur, length = branch[0], start, 1
        while len(adj[cur]) == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            length += 1
        arms.append(length)
    return sorted(arms) == [1, 2, 3]


def _bundle_shape(qg) -> dict:
    return {k: len(v) for k, v in qg.bundles.items() if v}


def suite_qg_shapes(seed: int = 0) -> list[Check]:
    from .qg import (build_qg_finite, is_dynkin, kronecker_symmetric_action,
                     subspace_symmetric_action)
    out = []
    for n in (2, 3):
        q = kronecker_quiver(n)
        qg = build_qg_finite(q, kronecker_symmetric_action(q))
        parts = partitions_of(n)
        want_vertices = {f"{u}:{lam}" for u in ("1", "2") for lam in parts}
        ok_v = set(qg.quiver.vertices) == want_vertices
        hook = Partition([n - 1, 1])
        bad = []
        for rho in parts:
            for sigma in parts:
                got = qg.multiplicity(f"1:{rho}", f"2:{sigma}")
                via_kron = kronecker(rho, hook, sigma) + (1 if rho == sigma else 0)
                brute = _kn_brute_arrows(n, rho, sigma)
                if not got == via_kron == brute:
                    bad.append(f"{rho}->{sigma}: {got}/{via_kron}/{brute}")
        out.append(Check(f"K{n}/S{n} vertices are partitions of {n} on both sides", ok_v,
                         " ".join(qg.quiver.vertices)))
        out.append(Check(f"K{n}/S{n} arrow counts = g(rho,[{n - 1},1],sigma) + delta = character count",
                         not bad, "; ".join(bad) or f"{len(qg.quiver.arrows)} arrows"))
    q = subspace_quiver(4)
    qg = build_qg_finite(q, subspace_symmetric_action(q))
    inner = [v for v in qg.quiver.vertices if qg.base_vertex(v) != "5"]
    outer = [v for v in qg.quiver.vertices if qg.base_vertex(v) == "5"]
    bad = []
    for a in inner:
        for b in outer:
            lam, mu = qg.label(a), qg.label(b)
            want = lr_coefficient(lam, Partition([1]), mu)
            box = 1 if mu.contains(lam) and mu.size() == lam.size() + 1 else 0
            if not qg.multiplicity(a, b) == want == box:
                bad.append(f"{a}->{b}")
    out.append(Check("S4 subspace quiver: 3+5 vertices", (len(inner), len(outer)) == (3, 5),
                     f"{len(inner)}+{len(outer)}"))
    out.append(Check("S4 subspace quiver: arrows are Pieri indicators", not bad,
                     "; ".join(bad) or f"{len(qg.quiver.arrows)} arrows"))
    first = {("1:[2]", "2:[1]"): 1, ("1:[1,1]", "2:[1]"): 1}
    for n in (2, 3, 4):
        comp, _ = gl_component(n, 1)
        ok = set(comp.quiver.vertices) == {"1:[2]", "1:[1,1]", "2:[1]"} and _bundle_shape(comp) == first
        out.append(Check(f"K{n} first GL component is the 3-vertex quiver", ok,
                         ", ".join(f"{t}->{h} x{k}" for (t, h), k in sorted(_bundle_shape(comp).items()))))
    second = {("1:[3]", "2:[2]"): 1, ("1:[2,1]", "2:[2]"): 1, ("1:[2,1]", "2:[1,1]"): 1,
              ("1:[1,1,1]", "2:[1,1]"): 1}
    comp, _ = gl_component(3, 2)
    ok = len(comp.quiver.vertices) == 5 and _bundle_shape(comp) == second
    out.append(Check("K3 second GL component is the 5-vertex quiver", ok,
                     f"{len(comp.quiver.vertices)} vertices, {len(comp.quiver.arrows)} arrows"))
    from .qg import build_qg_gl, natural_gl_datum
    q = kronecker_quiver(3)
    third = build_qg_gl(q, natural_gl_datum(q, 3), ("2", [3]))
    out.append(Check("K3 third GL component has E7 vertex/arrow counts",
                     _is_e7_tree(third) and is_dynkin(third.quiver),
                     f"{len(third.quiver.vertices)} vertices, {len(third.quiver.arrows)} arrows"))
    comp, _ = gl_component(3, 1, sym2=True)
    want = {("1:[2,1]", "2:[1]"): 1, ("1:[3]", "2:[1]"): 1}
    ok = set(comp.quiver.vertices) == {"1:[2,1]", "1:[3]", "2:[1]"} and _bundle_shape(comp) == want
    out.append(Check("K3 with S2 of GL2: first component is the 3-vertex quiver", ok,
                     " ".join(comp.quiver.vertices)))
    return out


# ----------------------------------------------------------------------
# 3. printed matrix fixtures


def suite_fixtures(seed: int = 0) -> list[Check]:
    from .qg import r_map
    from .smash import rc_apply
    from .templates import all_templates, bundle_values, component_for, matched_values
    out = []
    for t in all_templates():
        comp, data = component_for(t)
        for a in (1, 2):
            n = random_rep(comp.quiver, {v: a for v in comp.quiver.vertices}, seed=seed + 11 + a, height=9)
            ours = rc_apply(data, n)
            dims_ok = ours.dims == r_map(comp, n.dims)
            route = "direct"
            verdict = is_isomorphic(ours, t.evaluate(bundle_values(t, comp, n)), retries=5, seed=seed)
            if verdict != "yes" and t.row_labels is not None:
                route = "bundle basis matched"
                values, n2 = matched_values(t, comp, data, n)
                verdict = is_isomorphic(rc_apply(data, n2), t.evaluate(values), retries=5, seed=seed)
            out.append(Check(f"{t.name} a={a}", verdict == "yes" and dims_ok,
                             f"isomorphic={verdict} ({route}), dims {ours.dim_tuple()} "
                             f"{'=' if dims_ok else '!='} r_map"))
    return out


# ----------------------------------------------------------------------
# 4. Schofield semantics


def _zero_pairing_pair(q: Quiver, rng: random.Random, bound: int = 3):
    while True:
        alpha = {v: rng.randint(0, bound) for v in q.vertices}
        if not any(alpha.values()):
            continue
        cands = [b for b in itertools.product(range(bound + 2), repeat=len(q.vertices))
                 if any(b) and euler_form(q, alpha, dict(zip(q.vertices, b))) == 0]
        if cands:
            return alpha, dict(zip(q.vertices, rng.choice(cands)))


def suite_schofield(seed: int = 0, pairs: int = 100, group_trials: int = 20) -> list[Check]:
    from .schofield import (act_gl_alpha, character, random_gl_alpha, schofield_c, sum_sign_first,
                            sum_sign_second, weight_of)
    rng = random.Random(seed)
    qs = three_quivers()
    mism, zero, law_bad, law_n = [], 0, 0, 0
    sum_plain = sum_signed = sum_total = 0
    for k in range(pairs):
        q = qs[k % len(qs)]
        alpha, beta = _zero_pairing_pair(q, rng)
        m = _special_rep(q, alpha, rng)
        n = _special_rep(q, beta, rng)
        c = schofield_c(m, n)
        h, e = hom_dim(m, n), ext_dim(m, n)
        zero += c == 0
        if (c != 0) != (h == 0 or e == 0):
            mism.append(f"#{k} c={c} hom={h} ext={e}")
        wt = weight_of(q, beta)
        for _ in range(group_trials):
            g = random_gl_alpha(q, alpha, rng)
            law_n += 1
            if schofield_c(act_gl_alpha(g, m), n) != character(wt, g) * c:
                law_bad += 1
        # direct sums in the second and the first argument
        beta2 = _zero_pairing_pair_with(q, alpha, rng, second=True)
        n2 = _special_rep(q, beta2, rng)
        lhs, prod_ = schofield_c(m, direct_sum([n, n2])), c * schofield_c(m, n2)
        sum_total += 1
        sum_plain += lhs == prod_
        sum_signed += lhs == sum_sign_second(q, alpha, beta, beta2) * prod_
        alpha2 = _zero_pairing_pair_with(q, beta, rng, second=False)
        m2 = _special_rep(q, alpha2, rng)
        lhs, prod_ = schofield_c(direct_sum([m, m2]), n), c * schofield_c(m2, n)
        sum_total += 1
        sum_plain += lhs == prod_
        sum_signed += lhs == sum_sign_first(q, alpha, alpha2, beta) * prod_
    out = [Check(f"c(M,N) != 0 iff Hom = 0 or Ext = 0 on {pairs} pairs", not mism,
                 "; ".join(mism[:5]) or f"{zero} pairs with c = 0, {pairs - zero} with c != 0"),
           Check(f"GL_alpha law exact ({group_trials} g per pair)", law_bad == 0,
                 f"{law_n - law_bad}/{law_n} trials exact"),
           Check("c multiplicative over direct sums", sum_plain == sum_total,
                 f"{sum_plain}/{sum_total} exact without sign; {sum_signed}/{sum_total} exact with the "
                 "shuffle sign predicted from dimension vectors")]
    out.append(_swap_certificate())
    return out


def _zero_pairing_pair_with(q: Quiver, fixed: dict, rng: random.Random, second: bool, bound: int = 3):
    cands = []
    for b in itertools.product(range(bound + 2), repeat=len(q.vertices)):
        d = dict(zip(q.vertices, b))
        if any(b) and (euler_form(q, fixed, d) if second else euler_form(q, d, fixed)) == 0:
            cands.append(d)
    return rng.choice(cands)


def _swap_certificate() -> Check:
    """c(M, N + N') = -c(M, N' + N) != 0 on the three-arm subspace quiver: the
    character of the summand swap is -1, so no basis ordering can make c
    exactly multiplicative."""
    from .schofield import schofield_c
    q = subspace_quiver(3)
    m = random_rep(q, dict(zip(q.vertices, (0, 1, 1, 1))), seed=1, height=9)
    n = random_rep(q, dict(zip(q.vertices, (0, 0, 1, 1))), seed=2, height=9)
    n2 = random_rep(q, dict(zip(q.vertices, (0, 1, 0, 1))), seed=3, height=9)
    a, b = schofield_c(m, direct_sum([n, n2])), schofield_c(m, direct_sum([n2, n]))
    return Check("swap certificate: c(M,N+N') = -c(M,N'+N) != 0 (no ordering is multiplicative)",
                 a == -b and a != 0, f"{a} vs {b}")


# ----------------------------------------------------------------------
# 5. propositions


def suite_propositions(seed: int = 0, a: int = 1, gl_trials: int = 5, group_trials: int = 2,
                       samples: int = 10, names=None) -> list[Check]:
    from .propositions import FAMILIES, build, datum_for
    from .schofield import transformation_check
    out = []
    for f in FAMILIES:
        if names and f.name not in names:
            continue
        n, alpha = build(f, a, seed=seed + 1)
        rep = transformation_check(n, alpha, trials=gl_trials, seed=seed, datum=datum_for(f),
                                   group_trials=group_trials, samples=samples)
        info = [x for x in rep.lines if x.startswith("FAIL")][:1] or [x for x in rep.lines if "ratio" in x][:1]
        out.append(Check(f"{f.name} a={a} alpha={tuple(alpha.values())} beta={n.dim_tuple()}", rep.ok,
                         info[0] if info else ""))
    return out


# ----------------------------------------------------------------------
# 6. dim SI and reciprocity


def suite_reciprocity(seed: int = 0) -> list[Check]:
    from .quiver import decompose_indecomposables
    from .schofield import restricted_span_dim, semi_invariant_weight_space_dim
    from .smash import rc_dims, tc_apply
    comp, data = gl_component(3, 1)
    q = kronecker_quiver(3)
    out = []
    for a in (1, 2):
        alpha = {"1": a, "2": 2 * a}
        beta = from_printed((a, 0, a))
        res = restricted_span_dim(alpha, data, beta, seed=seed)
        full = semi_invariant_weight_space_dim(q, alpha, rc_dims(data, beta), seed=seed, generators=12,
                                               points=14)
        out.append(Check(f"dim SI_({a},{2 * a}) of weight R_c({a},0,{a}) = 1", res["left"] == 1,
                         f"span of c_(R_c N) = {res['left']}; whole weight space >= {full}"))
        out.append(Check(f"reciprocity at a={a}: left = right", res["left"] == res["right"] == res["tc"],
                         f"left {res['left']}, right {res['right']}, via T_c {res['tc']}"))
    m = random_rep(q, {"1": 1, "2": 2}, seed=seed + 3, height=9)
    t = tc_apply(data, m)
    dec = {printed_dims(s.dims): mult for s, mult, _ in decompose_indecomposables(t, seed=seed)}
    want = {(0, 1, 1): 3, (1, 1, 1): 3}
    text = " + ".join(f"{mult}{d}" for d, mult in sorted(dec.items()))
    out.append(Check("T_c of a generic (1,2) is 3(M_1 + M_2), dims (0,1,1), (1,1,1)", dec == want,
                     f"T_c(M) has dims {printed_dims(t.dims)} = {text}"))
    return out


# ----------------------------------------------------------------------
# 7. adjunction


def suite_adjunction(seed: int = 0, ms: int = 3, ns: int = 10) -> list[Check]:
    from .schofield import adjunction_check, schofield_c
    from .smash import rc_apply
    comp, data = gl_component(3, 1)
    q = kronecker_quiver(3)
    rng = random.Random(seed)
    out = []
    # the printed dims (1,2) / (1,0,1) make both sides vanish identically
    m = random_rep(q, {"1": 1, "2": 2}, seed=rng.randrange(10 ** 9), height=9)
    zeros = sum(schofield_c(m, rc_apply(data, random_rep(comp.quiver, from_printed((1, 0, 1)),
                                                            seed=rng.randrange(10 ** 9), height=9))) == 0
                for _ in range(3))
    out.append(Check("dims (1,2)/(1,0,1): c(M, R_c N) vanishes identically (degenerate, resampled at a=2)",
                     zeros == 3, f"{zeros}/3 samples zero"))
    for k in range(ms):
        m = random_rep(q, {"1": 2, "2": 4}, seed=rng.randrange(10 ** 9), height=9)
        nn = (random_rep(comp.quiver, from_printed((2, 0, 2)), seed=rng.randrange(10 ** 9), height=9)
              for _ in range(3 * ns))
        rep = adjunction_check(m, nn, data, want=ns)
        one = rep.ok and set(rep.ratios) == {1} and len(rep.ratios) == ns
        out.append(Check(f"M #{k} dims (2,4), {ns} N of dims (2,0,2): ratio constant and 1", one,
                         rep.lines[-1]))
    return out


# ----------------------------------------------------------------------
# 8. foundations


def suite_foundations(seed: int = 0, pairs: int = 50) -> list[Check]:
    from .symmetric_group import young_symmetrizer
    rng = random.Random(seed)
    qs = three_quivers() + [Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])]
    bad = []
    for k in range(pairs):
        q = qs[k % len(qs)]
        alpha = {v: rng.randint(0, 3) for v in q.vertices}
        beta = {v: rng.randint(0, 3) for v in q.vertices}
        m, n = _special_rep(q, alpha, rng), _special_rep(q, beta, rng)
        if hom_dim(m, n) - ext_dim(m, n) != euler_form(q, alpha, beta):
            bad.append(k)
    out = [Check(f"dim Hom - dim Ext = <alpha,beta> on {pairs} pairs", not bad, f"failing {bad}" if bad else "")]
    bad, count = [], 0
    for d in range(1, 6):
        for lam in partitions_of(d):
            for t in standard_tableaux(lam):
                y = young_symmetrizer(t)
                count += 1
                if y * y != y:
                    bad.append(repr(t))
    out.append(Check("Young symmetrizers idempotent for |T| <= 5", not bad,
                     "; ".join(bad[:3]) or f"{count} tableaux"))
    bad = []
    for d in range(1, 7):
        parts, classes, table = character_table(d)
        size = _factorial(d)
        for i in range(len(parts)):
            for j in range(len(parts)):
                s = sum(class_size(c) * table[i][k] * table[j][k] for k, c in enumerate(classes))
                if s != (size if i == j else 0):
                    bad.append(f"d={d} rows {i},{j}")
        for k, c in enumerate(classes):
            for l, c2 in enumerate(classes):
                s = sum(table[i][k] * table[i][l] for i in range(len(parts)))
                if s != (size // class_size(c) if k == l else 0):
                    bad.append(f"d={d} cols {k},{l}")
    out.append(Check("character orthogonality (rows and columns), d <= 6", not bad, "; ".join(bad[:3])))
    bad = []
    for d in range(0, 7):
        for nu in partitions_of(d):
            for e in range(0, d + 1):
                for lam in partitions_of(e):
                    if not nu.contains(lam):
                        continue
                    for mu in partitions_of(d - e):
                        if lr_coefficient(lam, mu, nu) != brute_force_lr(lam, mu, nu):
                            bad.append(f"c({lam},{mu};{nu})")
    for d in range(1, 6):
        for lam in partitions_of(d):
            for mu in partitions_of(3):
                total = sum(lr_coefficient(lam, mu, nu) * dim_symgroup_irrep(nu) for nu in partitions_of(d + 3))
                want = _factorial(d + 3) // (_factorial(d) * 6) * dim_symgroup_irrep(lam) * dim_symgroup_irrep(mu)
                if total != want:
                    bad.append(f"induction {lam},{mu}")
            for nu in partitions_of(d + 1):
                box = 1 if nu.contains(lam) else 0
                if lr_coefficient(lam, Partition([1]), nu) != box:
                    bad.append(f"Pieri {lam}->{nu}")
    out.append(Check("LR = lattice-word count, Pieri, induction dimension identity", not bad,
                     "; ".join(bad[:3])))
    bad = []
    for d in range(1, 6):
        parts = partitions_of(d)
        triv, sign = Partition([d]), Partition([1] * d)
        for lam in parts:
            for mu in parts:
                if sum(kronecker(lam, mu, nu) * dim_symgroup_irrep(nu) for nu in parts) \
                        != dim_symgroup_irrep(lam) * dim_symgroup_irrep(mu):
                    bad.append(f"dim {lam},{mu}")
                if kronecker(lam, triv, mu) != (lam == mu) or kronecker(lam, sign, mu) != (lam.conjugate() == mu):
                    bad.append(f"unit {lam},{mu}")
                for nu in parts:
                    g = kronecker(lam, mu, nu)
                    if not g == kronecker(mu, lam, nu) == kronecker(nu, mu, lam):
                        bad.append(f"symmetry {lam},{mu},{nu}")
    out.append(Check("Kronecker coefficients: symmetry, units, dimension identity", not bad, "; ".join(bad[:3])))
    return out


SUITES = {
    "idempotents-d2d3": suite_idempotents,
    "qg-shapes": suite_qg_shapes,
    "fixtures-iso": suite_fixtures,
    "schofield": suite_schofield,
    "propositions": suite_propositions,
    "reciprocity": suite_reciprocity,
    "adjunction": suite_adjunction,
    "foundations": suite_foundations,
}
