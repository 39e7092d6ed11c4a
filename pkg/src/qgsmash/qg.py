"""The quiver Q_G for a finite permutation action, a polynomial GL_n action or
a torus action on the arrow span of an acyclic quiver.

Vertices of Q_G are named "u:[lambda]" (partition labels) or "u:(w1,...)"
(torus weights).  Arrows are named B1, B2, ... in vertex order of their
(tail, head) pairs.  For the GL setting an arrow (u,rho) -> (v,sigma) needs
|rho| = |sigma| + deg(mu) for a constituent V_mu of the arrow module R_uv.
"""
from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from itertools import product

from .linalg import RatMatrix, inverse
from .partitions import Partition, dim_gl_irrep, dim_symgroup_irrep, lr_coefficient, partitions_of
from .quiver import Quiver, Representation, as_dimvector, euler_form, random_rep
from .symmetric_group import (FiniteAction, OrbitData, Permutation, module_multiplicity,
                              moved_points, orbits_and_stabilizers)


class ScopeError(ValueError):
    """Input outside the supported setting (e.g. a stabilizer that is not a
    full symmetric group)."""


class WindowExhausted(RuntimeError):
    pass


# ----------------------------------------------------------------------
# group data


def natural_matrix(g: RatMatrix) -> RatMatrix:
    return g


def sym_power_matrix(g: RatMatrix, k: int, scaling=None) -> RatMatrix:
    """Column-convention matrix of g on S^k(k^n) in the monomial basis
    (exponent vectors in reverse-lex order), each monomial multiplied by
    scaling[index] (default 1)."""
    n = g.rows
    monos = sorted((e for e in product(range(k + 1), repeat=n) if sum(e) == k), reverse=True)
    index = {m: i for i, m in enumerate(monos)}
    scaling = [Fraction(1)] * len(monos) if scaling is None else [Fraction(s) for s in scaling]
    cols = []
    for m in monos:
        # image of x^m = prod_j (sum_i g_ij x_i)^{m_j}
        poly = {tuple([0] * n): Fraction(1)}
        for j in range(n):
            for _ in range(m[j]):
                new = {}
                for e, c in poly.items():
                    for i in range(n):
                        gij = g[i, j]
                        if gij:
                            e2 = list(e)
                            e2[i] += 1
                            e2 = tuple(e2)
                            new[e2] = new.get(e2, 0) + c * gij
                poly = new
        col = [Fraction(0)] * len(monos)
        for e, c in poly.items():
            col[index[e]] += c
        cols.append(col)
    mat = RatMatrix(cols).T
    d = RatMatrix.diag(scaling)
    return inverse(d) @ mat @ d


class ArrowModule:
    """Polynomial GL_n-module structure on the arrows u -> v.

    constituents: partitions mu with R_uv = (+) V_mu; matrix(g): column
    convention matrix of g on the arrow span, arrows in quiver order.
    """

    def __init__(self, constituents, matrix_fn, name: str = ""):
        self.constituents = [Partition(m) for m in constituents]
        self.matrix_fn = matrix_fn
        self.name = name

    def matrix(self, g: RatMatrix) -> RatMatrix:
        return self.matrix_fn(g)

    def degree(self) -> int:
        degs = {m.size() for m in self.constituents}
        if len(degs) > 1:
            raise ScopeError("arrow modules must be homogeneous")
        return degs.pop() if degs else 0


def natural_module() -> ArrowModule:
    return ArrowModule([[1]], natural_matrix, "natural")


def multinomial_scaling(n: int, k: int) -> list[Fraction]:
    """k!/prod(m_i!) per monomial: the basis of symmetrized tensors."""
    from math import factorial
    monos = sorted((e for e in product(range(k + 1), repeat=n) if sum(e) == k), reverse=True)
    out = []
    for m in monos:
        c = factorial(k)
        for x in m:
            c //= factorial(x)
        out.append(Fraction(c))
    return out


def sym_power_module(k: int, scaling=None, n: int = 2) -> ArrowModule:
    """S^k(k^n).  The default basis is the symmetrized tensors e_(i1)...e_(ik)
    summed over distinct orderings (monomials scaled by multinomials)."""
    if scaling is None:
        scaling = multinomial_scaling(n, k)
    return ArrowModule([[k]], lambda g: sym_power_matrix(g, k, scaling), f"S^{k}")


class GroupDatum:
    """finite(FiniteAction) | gl(n, arrow modules per (u,v)) | torus(rank, weights)."""

    def __init__(self, kind: str, action: FiniteAction | None = None, n: int = 0,
                 modules: dict | None = None, weights: dict | None = None, rank: int = 0):
        if kind not in ("finite", "gl", "torus"):
            raise ValueError(f"unknown group datum kind {kind!r}")
        self.kind = kind
        self.action = action
        self.n = n
        self.modules = modules or {}
        self.weights = {a: tuple(w) for a, w in (weights or {}).items()}
        self.rank = rank

    @classmethod
    def finite(cls, action: FiniteAction) -> "GroupDatum":
        return cls("finite", action=action)

    @classmethod
    def gl(cls, q: Quiver, n: int, modules: dict) -> "GroupDatum":
        datum = cls("gl", n=n, modules=dict(modules))
        for (u, v), mod in datum.modules.items():
            count = sum(dim_gl_irrep(m, n) for m in mod.constituents)
            if count != len(q.arrows_between(u, v)):
                raise ValueError(f"arrow module on {u}->{v} has dimension {count}, "
                                 f"but there are {len(q.arrows_between(u, v))} arrows")
        for _, t, h in q.arrows:
            if (t, h) not in datum.modules:
                raise ValueError(f"no arrow module given for {t}->{h}")
        return datum

    @classmethod
    def torus(cls, q: Quiver, weights: dict) -> "GroupDatum":
        ranks = {len(w) for w in weights.values()}
        if len(ranks) != 1 or set(weights) != set(q.arrow_names()):
            raise ValueError("torus data needs one weight vector of fixed length per arrow")
        return cls("torus", weights=weights, rank=ranks.pop())

    def arrow_block(self, q: Quiver, u, v, g: RatMatrix) -> RatMatrix:
        return self.modules[(u, v)].matrix(g)

    def arrow_matrix(self, q: Quiver, g) -> RatMatrix:
        """Matrix on the whole arrow span (quiver arrow order)."""
        if self.kind == "finite":
            return self.action.arrow_matrix(g)
        if self.kind == "torus":
            vals = []
            for name in q.arrow_names():
                x = Fraction(1)
                for t, w in zip(g, self.weights[name]):
                    x *= Fraction(t) ** w
                vals.append(x)
            return RatMatrix.diag(vals)
        mat = [[Fraction(0)] * len(q.arrows) for _ in q.arrows]
        pos = {a[0]: i for i, a in enumerate(q.arrows)}
        for (u, v) in self.modules:
            names = [a[0] for a in q.arrows_between(u, v)]
            block = self.arrow_block(q, u, v, g)
            for r, a in enumerate(names):
                for c, b in enumerate(names):
                    mat[pos[a]][pos[b]] = block[r, c]
        return RatMatrix(mat, rows=len(q.arrows), cols=len(q.arrows))


def natural_gl_datum(q: Quiver, n: int) -> GroupDatum:
    mods = {}
    for _, t, h in q.arrows:
        mods[(t, h)] = natural_module()
    return GroupDatum.gl(q, n, mods)


# ----------------------------------------------------------------------
# Q_G


def vertex_name(u: str, label) -> str:
    if isinstance(label, Partition):
        return f"{u}:{label}"
    return f"{u}:(" + ",".join(str(x) for x in label) + ")"


def parse_vertex_name(name: str):
    u, _, lab = name.partition(":")
    if lab.startswith("["):
        return u, Partition.parse(lab)
    if lab.startswith("("):
        body = lab[1:-1].strip()
        return u, tuple(int(x) for x in body.split(",")) if body else ()
    raise ValueError(f"bad Q_G vertex name {name!r}")


def _label_key(label):
    return label.parts if isinstance(label, Partition) else tuple(label)


class QGQuiver:
    """Q_G (or a window/component of it).

    vertex_data: name -> (base vertex, label); bundles: (tail name, head name)
    -> list of arrow names; provenance: arrow name -> dict describing the
    Hom space it spans.
    """

    def __init__(self, base: Quiver, datum: GroupDatum, vertex_data: dict, bundle_counts: dict,
                 provenance_extra: dict | None = None):
        self.base = base
        self.datum = datum
        order = {v: i for i, v in enumerate(base.vertices)}
        names = sorted(vertex_data, key=lambda x: (order[vertex_data[x][0]],
                                                  tuple(-p for p in _label_key(vertex_data[x][1])),
                                                  _label_key(vertex_data[x][1])))
        self.vertex_data = {nm: vertex_data[nm] for nm in names}
        vpos = {nm: i for i, nm in enumerate(names)}
        arrows, bundles, prov = [], {}, {}
        k = 1
        for (t, h) in sorted(bundle_counts, key=lambda p: (vpos[p[0]], vpos[p[1]])):
            cnt = bundle_counts[(t, h)]
            if cnt <= 0:
                continue
            bundles[(t, h)] = []
            for idx in range(cnt):
                nm = f"B{k}"
                k += 1
                arrows.append((nm, t, h))
                bundles[(t, h)].append(nm)
                prov[nm] = {"tail": t, "head": h, "index": idx,
                            **((provenance_extra or {}).get((t, h), {}))}
        self.bundles = bundles
        self.provenance = prov
        self.quiver = Quiver(names, arrows, name="Q_G")

    @property
    def vertices(self) -> list[str]:
        return self.quiver.vertices

    def label(self, v: str):
        return self.vertex_data[v][1]

    def base_vertex(self, v: str) -> str:
        return self.vertex_data[v][0]

    def find(self, u: str, label) -> str:
        if not isinstance(label, (Partition, tuple)):
            label = Partition(label)
        name = vertex_name(u, label)
        if name not in self.vertex_data:
            raise KeyError(name)
        return name

    def dim_of_label(self, v: str) -> int:
        u, lab = self.vertex_data[v]
        if self.datum.kind == "gl":
            return dim_gl_irrep(lab, self.datum.n)
        if self.datum.kind == "finite":
            return dim_symgroup_irrep(lab)
        return 1

    def multiplicity(self, t: str, h: str) -> int:
        return len(self.bundles.get((t, h), []))

    def restrict(self, names) -> "QGQuiver":
        names = set(names)
        counts = {p: len(a) for p, a in self.bundles.items() if p[0] in names and p[1] in names}
        extra = {p: {k: v for k, v in self.provenance[a[0]].items()
                     if k not in ("tail", "head", "index")}
                 for p, a in self.bundles.items() if p[0] in names and p[1] in names}
        out = QGQuiver(self.base, self.datum, {v: self.vertex_data[v] for v in names}, counts, extra)
        out.orbits = getattr(self, "orbits", None)
        return out

    def components(self) -> list[list[str]]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x
        for (t, h) in self.bundles:
            parent[find(t)] = find(h)
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values(), key=lambda g: self.vertices.index(g[0]))

    def summary(self) -> list[str]:
        lines = [f"vertices {len(self.vertices)}"]
        for v in self.vertices:
            lines.append(f"  {v}  dim {self.dim_of_label(v)}")
        lines.append(f"arrows {len(self.quiver.arrows)}")
        for (t, h), names in self.bundles.items():
            lines.append(f"  {t} -> {h}: " + " ".join(names))
        return lines

    def to_dict(self) -> dict:
        return {"vertices": self.vertices,
                "arrows": [list(a) for a in self.quiver.arrows]}


def _symmetric_stabilizer(act: FiniteAction, orbits: OrbitData, u: str):
    stab = orbits.stabilizer[u]
    pts = moved_points(stab)
    from math import factorial
    if len(stab) != factorial(len(pts)):
        raise ScopeError(f"stabilizer of {u} is not a full symmetric group on its moved points")
    return pts


def build_qg_finite(q: Quiver, act: FiniteAction) -> QGQuiver:
    orbits = orbits_and_stabilizers(act)
    vdata = {}
    labels = {}
    for u in orbits.representatives:
        pts = _symmetric_stabilizer(act, orbits, u)
        labels[u] = partitions_of(len(pts))
        for lam in labels[u]:
            vdata[vertex_name(u, lam)] = (u, lam)
    counts, extra = {}, {}
    for u in orbits.representatives:
        for x in orbits.representatives:
            reps = [y for y in orbits.pair_reps[(u, x)] if q.arrows_between(u, y)]
            if not reps:
                continue
            for rho in labels[u]:
                for sigma in labels[x]:
                    total = 0
                    for y in reps:
                        total += module_multiplicity(act, orbits, u, x, y, rho, sigma)
                    key = (vertex_name(u, rho), vertex_name(x, sigma))
                    counts[key] = total
                    extra[key] = {"pair_reps": reps}
    out = QGQuiver(q, GroupDatum.finite(act), vdata, counts, extra)
    out.orbits = orbits
    return out


def gl_arrow_count(datum: GroupDatum, u, v, rho: Partition, sigma: Partition) -> int:
    """dim Hom_G(V_rho, R_uv (x) V_sigma) = sum_mu c_{sigma,mu}^{rho}."""
    mod = datum.modules.get((u, v))
    if mod is None:
        return 0
    return sum(lr_coefficient(sigma, mu, rho) for mu in mod.constituents)


def build_qg_gl(q: Quiver, datum: GroupDatum, seed_vertex: tuple, max_vertices: int = 200) -> QGQuiver:
    """Connected component of Q_G containing seed_vertex = (u, partition),
    by breadth-first closure."""
    if datum.kind != "gl":
        raise ValueError("build_qg_gl needs a gl datum")
    if not q.is_acyclic():
        raise ScopeError("the reductive setting needs an acyclic quiver")
    n = datum.n
    u0, lam0 = seed_vertex[0], Partition(seed_vertex[1])
    if len(lam0) > n:
        raise ValueError(f"{lam0} has more than {n} rows")
    seen = {(u0, lam0)}
    queue = deque([(u0, lam0)])
    counts = {}
    while queue:
        u, rho = queue.popleft()
        nbrs = []
        for _, t, h in q.arrows:
            mod = datum.modules[(t, h)]
            deg = mod.degree()
            if t == u:
                for sigma in (partitions_of(rho.size() - deg, n) if rho.size() >= deg else []):
                    c = gl_arrow_count(datum, t, h, rho, sigma)
                    if c:
                        counts[(vertex_name(t, rho), vertex_name(h, sigma))] = c
                        nbrs.append((h, sigma))
            if h == u:
                for tau in partitions_of(rho.size() + deg, n):
                    c = gl_arrow_count(datum, t, h, tau, rho)
                    if c:
                        counts[(vertex_name(t, tau), vertex_name(h, rho))] = c
                        nbrs.append((t, tau))
        for w in nbrs:
            if w not in seen:
                seen.add(w)
                queue.append(w)
                if len(seen) > max_vertices:
                    raise WindowExhausted("component did not close within the vertex budget")
    vdata = {vertex_name(u, lam): (u, lam) for u, lam in seen}
    return QGQuiver(q, datum, vdata, counts)


def build_qg_torus(q: Quiver, datum: GroupDatum, seed_vertex: tuple, radius: int = 3) -> QGQuiver:
    """Vertices (u, w) reachable from the seed with max |w_i - w0_i| <= radius;
    arrows (u,w) -> (v, w + wt(a)).  closed is False when the window cut edges."""
    if datum.kind != "torus":
        raise ValueError("build_qg_torus needs a torus datum")
    u0, w0 = seed_vertex[0], tuple(seed_vertex[1])
    if len(w0) != datum.rank:
        raise ValueError("seed weight has the wrong rank")

    def inside(w):
        return all(abs(a - b) <= radius for a, b in zip(w, w0))
    seen = {(u0, w0)}
    queue = deque([(u0, w0)])
    counts = {}
    closed = True
    while queue:
        u, w = queue.popleft()
        for name, t, h in q.arrows:
            wt = datum.weights[name]
            cand = []
            if t == u:
                cand.append(((t, w), (h, tuple(a + b for a, b in zip(w, wt)))))
            if h == u:
                cand.append(((t, tuple(a - b for a, b in zip(w, wt))), (h, w)))
            for src, dst in cand:
                if not (inside(src[1]) and inside(dst[1])):
                    closed = False
                    continue
                key = (vertex_name(*src), vertex_name(*dst))
                counts[key] = counts.get(key, 0)
                counts[key] = sum(1 for nm, a, b in q.arrows if a == src[0] and b == dst[0]
                                  and tuple(x + y for x, y in zip(src[1], datum.weights[nm])) == dst[1])
                for x in (src, dst):
                    if x not in seen:
                        seen.add(x)
                        queue.append(x)
    vdata = {vertex_name(u, w): (u, w) for u, w in seen}
    out = QGQuiver(q, datum, vdata, counts)
    out.closed = closed
    return out


def component_of(qg: QGQuiver, v: str) -> QGQuiver:
    """The connected component of v; raises WindowExhausted for torus windows
    that were cut, and checks acyclicity."""
    if getattr(qg, "closed", True) is False:
        comps = qg.components()
        comp = next(c for c in comps if v in c)
        # a cut window is only acceptable if the cut did not touch this component
        raise WindowExhausted(f"window around {v} is not closed; enlarge the radius "
                              f"(component so far has {len(comp)} vertices)")
    comp = next(c for c in qg.components() if v in c)
    out = qg.restrict(comp)
    if qg.base.is_acyclic() and not out.quiver.is_acyclic():
        raise AssertionError("component of an acyclic quiver has an oriented cycle")
    return out


def finite_components(qg: QGQuiver) -> list[QGQuiver]:
    return [qg.restrict(c) for c in qg.components()]


# ----------------------------------------------------------------------
# K_0 map, twisting, roots


def r_map(qg: QGQuiver, beta) -> dict:
    """r(beta)(v) = sum over (u,rho) with v in the orbit of u of d_rho beta(u,rho)."""
    beta = as_dimvector(qg.quiver, beta)
    out = {v: 0 for v in qg.base.vertices}
    for name, (u, lab) in qg.vertex_data.items():
        b = beta[name]
        if not b:
            continue
        d = qg.dim_of_label(name)
        orbit = [u]
        if qg.datum.kind == "finite":
            orbit = qg.orbits.orbit[u]
        for v in orbit:
            out[v] += d * b
    return out


def group_act_rep(datum: GroupDatum, g, m: Representation) -> Representation:
    """Left action on representations: finite g gives (g.M)_v = M_{v.g} and
    (g.M)(a_l) = sum_m A(g)[l][m] M(a_m); for gl/torus (g.M)(a_l) =
    sum_m S(g)[l][m] M(a_m) with S(g) = R(g)^{-T}."""
    q = m.quiver
    if datum.kind == "finite":
        act = datum.action
        if g not in act.elements:
            raise ValueError("group element is not in the enumerated group")
        a = act.arrow_matrix(g)
        dims = {v: m.dims[act.vertex_image(v, g)] for v in q.vertices}
    else:
        if datum.kind == "gl" and (not isinstance(g, RatMatrix) or g.shape != (datum.n, datum.n)):
            raise ValueError("gl group elements are invertible n x n rational matrices")
        a = inverse(datum.arrow_matrix(q, g)).T
        dims = dict(m.dims)
    names = q.arrow_names()
    mats = {}
    for l, (name, t, h) in enumerate(q.arrows):
        acc = RatMatrix.zeros(dims[t], dims[h])
        for k, other in enumerate(names):
            c = a[l, k]
            if c:
                acc = acc + m.mats[other].scale(c)
        mats[name] = acc
    return Representation(q, dims, mats)


def random_group_element(datum: GroupDatum, rng: random.Random, height: int = 3):
    from .linalg import random_invertible
    if datum.kind == "finite":
        return rng.choice(datum.action.group())
    if datum.kind == "gl":
        return random_invertible(datum.n, rng, height)
    return tuple(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
                 for _ in range(datum.rank))


def tits_form(q: Quiver, beta) -> int:
    return euler_form(q, beta, beta)


def is_dynkin(q: Quiver) -> bool:
    """Tits form positive definite (checked by Sylvester's criterion)."""
    from .linalg import det
    n = len(q.vertices)
    sym = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        sym[i][i] = Fraction(2)
    for _, t, h in q.arrows:
        i, j = q.index(t), q.index(h)
        sym[i][j] -= 1
        sym[j][i] -= 1
    for k in range(1, n + 1):
        if det(RatMatrix([row[:k] for row in sym[:k]])) <= 0:
            return False
    return True


def _preimages(qg: QGQuiver, alpha: dict, bound: int):
    names = qg.vertices
    dims = [qg.dim_of_label(v) for v in names]
    bases = [qg.base_vertex(v) for v in names]
    mults = {}
    if qg.datum.kind == "finite":
        for v in names:
            mults[v] = len(qg.orbits.orbit[qg.base_vertex(v)])
    out = []

    def rec(i, rem, cur):
        if i == len(names):
            if all(x == 0 for x in rem.values()):
                out.append(dict(zip(names, cur)))
            return
        u = bases[i]
        step = dims[i]
        top = min(bound, rem[u] // step if step else bound)
        for b in range(top + 1):
            r2 = dict(rem)
            r2[u] -= b * step
            rec(i + 1, r2, cur + [b])
    if qg.datum.kind == "finite":
        # each orbit counts once through its representative
        reps = {qg.base_vertex(v) for v in names}
        rem = {u: alpha[u] for u in reps}
    else:
        rem = {u: alpha.get(u, 0) for u in set(bases)}
    rec(0, rem, [])
    return out


def g_root_witness(qg: QGQuiver, alpha, bound: int = 6, seed: int = 0):
    """(beta, method) with r(beta) = alpha and beta a root of the component,
    or None.  method is 'dynkin' (Tits form = 1, exact) or 'sampled' (a
    seeded representation of dimension beta has local endomorphism ring)."""
    alpha = as_dimvector(qg.base, alpha)
    if not any(alpha.values()):
        return None
    dynkin = qg.quiver.arrows and is_dynkin(qg.quiver) or len(qg.vertices) == 1
    for beta in sorted(_preimages(qg, alpha, bound), key=lambda b: sum(b.values())):
        if r_map(qg, beta) != alpha:
            continue
        support = [v for v, x in beta.items() if x]
        if not support or not _connected(qg, support):
            continue
        if dynkin:
            if tits_form(qg.quiver, beta) == 1:
                return beta, "dynkin"
            continue
        if tits_form(qg.quiver, beta) > 1:
            continue
        from .quiver import end_algebra
        from .semisimple import _is_local
        rep = random_rep(qg.quiver, beta, seed=seed, height=5)
        alg, _ = end_algebra(rep)
        if _is_local(alg.identity(), alg.basis):
            return beta, "sampled"
    return None


def _connected(qg: QGQuiver, support) -> bool:
    support = set(support)
    start = next(iter(support))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for (t, h) in qg.bundles:
            for a, b in ((t, h), (h, t)):
                if a == v and b in support and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return seen == support


# ----------------------------------------------------------------------
# standard actions


def _perm_matrix(p: Permutation, size: int) -> RatMatrix:
    # a_l * g = a_{g(l)}
    return RatMatrix.from_sparse(size, size, [(l, p(l + 1) - 1, 1) for l in range(size)])


def kronecker_symmetric_action(q: Quiver) -> FiniteAction:
    """S_n permuting the n arrows of K_n (vertices fixed)."""
    n = len(q.arrows)
    gens = [Permutation.from_cycles(n, [(i, i + 1)]) for i in range(1, n)]
    ident = Permutation.identity(len(q.vertices))
    return FiniteAction(q, gens, [ident] * len(gens), [_perm_matrix(g, n) for g in gens])


def subspace_symmetric_action(q: Quiver) -> FiniteAction:
    """S_n permuting the n outer vertices of the subspace quiver and their arrows."""
    n = len(q.arrows)
    gens = [Permutation.from_cycles(n, [(i, i + 1)]) for i in range(1, n)]
    vact = [Permutation(list(g.images) + [n + 1]) for g in gens]
    return FiniteAction(q, gens, vact, [_perm_matrix(g, n) for g in gens])
