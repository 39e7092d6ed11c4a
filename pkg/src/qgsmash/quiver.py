"""Quivers and their representations over the rationals.

Conventions: for an arrow a: t -> h a representation stores M(a) with shape
dims(t) x dims(h) and a vector x in M_t goes to x*M(a).  Representations are
right modules over the path algebra; P_v is spanned by the paths starting at v,
and an arrow a: u -> v gives the map P_v -> P_u, p -> a*p.
"""
from __future__ import annotations

import random
from collections import deque
from fractions import Fraction

from .linalg import (RatMatrix, block_diag, det, matrix_from_dict, matrix_to_dict,
                     random_matrix, rref, solve, sparse_left_kernel, sparse_rank)


class Quiver:
    def __init__(self, vertices, arrows, name: str = ""):
        self.vertices = list(vertices)
        self.arrows = [tuple(a) for a in arrows]   # (name, tail, head)
        self.name = name
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        if len({a[0] for a in self.arrows}) != len(self.arrows):
            raise ValueError("arrow names must be unique")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        for name_, t, h in self.arrows:
            if t not in self._index or h not in self._index:
                raise ValueError(f"arrow {name_} uses an unknown vertex")
        self._arrow = {a[0]: a for a in self.arrows}

    def index(self, v) -> int:
        return self._index[v]

    def arrow(self, name):
        return self._arrow[name]

    def arrow_names(self) -> list:
        return [a[0] for a in self.arrows]

    def arrows_from(self, v) -> list:
        return [a for a in self.arrows if a[1] == v]

    def arrows_between(self, u, v) -> list:
        return [a for a in self.arrows if a[1] == u and a[2] == v]

    def topological_order(self):
        indeg = {v: 0 for v in self.vertices}
        for _, t, h in self.arrows:
            indeg[h] += 1
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for _, t, h in self.arrows_from(v):
                indeg[h] -= 1
                if indeg[h] == 0:
                    queue.append(h)
        return order if len(order) == len(self.vertices) else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def paths_from(self, v, max_len: int | None = None) -> list[tuple]:
        """All paths starting at v as tuples of arrow names (acyclic quivers)."""
        if max_len is None and not self.is_acyclic():
            raise ValueError("path enumeration needs an acyclic quiver or a length bound")
        out = [()]
        frontier = [((), v)]
        length = 0
        while frontier and (max_len is None or length < max_len):
            new = []
            for p, end in frontier:
                for name, _, h in self.arrows_from(end):
                    new.append((p + (name,), h))
            out.extend(p for p, _ in new)
            frontier = new
            length += 1
        return out

    def path_end(self, start, path) -> str:
        v = start
        for name in path:
            _, t, h = self._arrow[name]
            if t != v:
                raise ValueError(f"path {path} is not composable at {v}")
            v = h
        return v

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices \
            and self.arrows == other.arrows

    def __repr__(self):
        return f"Quiver({self.name or ''}{len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def to_dict(self) -> dict:
        return {"name": self.name, "vertices": list(self.vertices),
                "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_dict(cls, d: dict) -> "Quiver":
        return cls(d["vertices"], [tuple(a) for a in d["arrows"]], d.get("name", ""))


def kronecker_quiver(n: int) -> Quiver:
    return Quiver(["1", "2"], [(f"a{i}", "1", "2") for i in range(1, n + 1)], name=f"K{n}")


def subspace_quiver(n: int) -> Quiver:
    """n outer vertices 1..n each with one arrow into the centre n+1."""
    c = str(n + 1)
    return Quiver([str(i) for i in range(1, n + 2)],
                  [(f"a{i}", str(i), c) for i in range(1, n + 1)], name=f"S{n}")


def as_dimvector(q: Quiver, dims) -> dict:
    if isinstance(dims, dict):
        out = {v: int(dims.get(v, 0)) for v in q.vertices}
    else:
        dims = list(dims)
        if len(dims) != len(q.vertices):
            raise ValueError("dimension vector length does not match the quiver")
        out = {v: int(x) for v, x in zip(q.vertices, dims)}
    if any(x < 0 for x in out.values()):
        raise ValueError("dimension vectors are non-negative")
    return out


def dim_tuple(q: Quiver, dims: dict) -> tuple:
    return tuple(dims[v] for v in q.vertices)


def euler_form(q: Quiver, alpha, beta) -> int:
    a, b = as_dimvector(q, alpha), as_dimvector(q, beta)
    return sum(a[v] * b[v] for v in q.vertices) - sum(a[t] * b[h] for _, t, h in q.arrows)


class Representation:
    def __init__(self, quiver: Quiver, dims, mats: dict):
        self.quiver = quiver
        self.dims = as_dimvector(quiver, dims)
        self.mats = {}
        for name, t, h in quiver.arrows:
            m = mats.get(name)
            if m is None:
                m = RatMatrix.zeros(self.dims[t], self.dims[h])
            if m.shape != (self.dims[t], self.dims[h]):
                raise ValueError(f"arrow {name}: shape {m.shape}, expected "
                                 f"{(self.dims[t], self.dims[h])}")
            self.mats[name] = m

    def __getitem__(self, name) -> RatMatrix:
        return self.mats[name]

    def dim_tuple(self) -> tuple:
        return dim_tuple(self.quiver, self.dims)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def offsets(self) -> dict:
        off, k = {}, 0
        for v in self.quiver.vertices:
            off[v] = k
            k += self.dims[v]
        return off

    def path_matrix(self, start, path) -> RatMatrix:
        m = RatMatrix.identity(self.dims[start])
        for name in path:
            m = m @ self.mats[name]
        return m

    def __eq__(self, other):
        return isinstance(other, Representation) and self.quiver == other.quiver \
            and self.dims == other.dims and self.mats == other.mats

    def __repr__(self):
        return f"Representation(dims={self.dim_tuple()})"

    def conjugate(self, g: dict) -> "Representation":
        """Base change by invertible g_v: M(a) -> g_t^{-1} M(a) g_h."""
        from .linalg import inverse
        inv = {v: inverse(g[v]) for v in self.quiver.vertices}
        return Representation(self.quiver, self.dims,
                              {n: inv[t] @ self.mats[n] @ g[h] for n, t, h in self.quiver.arrows})

    def to_dict(self) -> dict:
        return {"dims": [self.dims[v] for v in self.quiver.vertices],
                "arrows": {n: matrix_to_dict(m) for n, m in self.mats.items()}}

    @classmethod
    def from_dict(cls, q: Quiver, d: dict) -> "Representation":
        return cls(q, d["dims"], {n: matrix_from_dict(m) for n, m in d["arrows"].items()})


def direct_sum(reps) -> Representation:
    reps = list(reps)
    q = reps[0].quiver
    dims = {v: sum(r.dims[v] for r in reps) for v in q.vertices}
    return Representation(q, dims, {n: block_diag(r.mats[n] for r in reps) for n, _, _ in q.arrows})


def zero_rep(q: Quiver) -> Representation:
    return Representation(q, {v: 0 for v in q.vertices}, {})


def simple_rep(q: Quiver, v) -> Representation:
    return Representation(q, {w: int(w == v) for w in q.vertices}, {})


def projective_rep(q: Quiver, v) -> Representation:
    """P_v: basis at x is the set of paths from v to x."""
    paths = q.paths_from(v)
    by_end = {x: [] for x in q.vertices}
    for p in paths:
        by_end[q.path_end(v, p)].append(p)
    index = {x: {p: i for i, p in enumerate(ps)} for x, ps in by_end.items()}
    mats = {}
    for name, t, h in q.arrows:
        items = [(i, index[h][p + (name,)], 1) for i, p in enumerate(by_end[t])]
        mats[name] = RatMatrix.from_sparse(len(by_end[t]), len(by_end[h]), items)
    return Representation(q, {x: len(by_end[x]) for x in q.vertices}, mats)


def random_rep(q: Quiver, alpha, seed: int = 0, height: int = 5) -> Representation:
    """Entries are uniform integers in [-height, height] drawn from random.Random(seed),
    arrow by arrow in quiver order, row-major."""
    rng = random.Random(seed)
    dims = as_dimvector(q, alpha)
    return Representation(q, dims, {n: random_matrix(dims[t], dims[h], rng, height)
                                    for n, t, h in q.arrows})


# ----------------------------------------------------------------------
# Hom and Ext


def _hom_items(m: Representation, n: Representation):
    """Sparse matrix of f -> (M(a) f_h - f_t N(a))_a; unknowns indexed by
    (vertex, row, col) in quiver order, equations by (arrow, row, col)."""
    q = m.quiver
    uoff, k = {}, 0
    for v in q.vertices:
        uoff[v] = k
        k += m.dims[v] * n.dims[v]
    eoff, e = {}, 0
    for name, t, h in q.arrows:
        eoff[name] = e
        e += m.dims[t] * n.dims[h]
    items = []
    for name, t, h in q.arrows:
        ma, na = m.mats[name], n.mats[name]
        mt, nh, nt, mh = m.dims[t], n.dims[h], n.dims[t], m.dims[h]
        base = eoff[name]
        for r in range(mt):
            for s in range(mh):
                x = ma[r, s]
                if x:
                    for c in range(nh):
                        items.append((uoff[h] + s * nh + c, base + r * nh + c, x))
        for s in range(nt):
            for c in range(nh):
                y = na[s, c]
                if y:
                    for r in range(mt):
                        items.append((uoff[t] + r * nt + s, base + r * nh + c, -y))
    return k, e, items


def _unpack_morphism(m: Representation, n: Representation, vec) -> dict:
    out, k = {}, 0
    for v in m.quiver.vertices:
        a, b = m.dims[v], n.dims[v]
        out[v] = RatMatrix.from_flat(a, b, vec[k:k + a * b])
        k += a * b
    return out


def hom_space(m: Representation, n: Representation) -> list[dict]:
    """Basis of Hom(M, N): dicts vertex -> f_v with M(a) f_h = f_t N(a)."""
    if m.quiver != n.quiver:
        raise ValueError("representations of different quivers")
    k, e, items = _hom_items(m, n)
    return [_unpack_morphism(m, n, v) for v in sparse_left_kernel(k, e, items)]


def hom_dim(m: Representation, n: Representation) -> int:
    k, e, items = _hom_items(m, n)
    return k - sparse_rank(k, e, items)


def ext_dim(m: Representation, n: Representation) -> int:
    """dim of the cokernel of Hom(P_0, N) -> Hom(P_1, N) for the canonical resolution of M."""
    if not m.quiver.is_acyclic():
        raise ValueError("ext_dim needs an acyclic quiver")
    k, e, items = _hom_items(m, n)
    return e - sparse_rank(k, e, items)


def is_morphism(m: Representation, n: Representation, f: dict) -> bool:
    return all(m.mats[a] @ f[h] == f[t] @ n.mats[a] for a, t, h in m.quiver.arrows)


# ----------------------------------------------------------------------
# projective presentations


class ProjectivePresentation:
    """Matrix over the path algebra describing P_1 -> P_0.

    p1, p0: lists of (vertex, tag) summands.  entries[(r, c)] is a dict
    path -> coefficient, each path running from the vertex of column c to the
    vertex of row r (so the entry is a morphism P_{row} -> P_{col}).
    """

    def __init__(self, quiver: Quiver, p1, p0, entries: dict):
        self.quiver = quiver
        self.p1 = list(p1)
        self.p0 = list(p0)
        self.entries = {k: {p: Fraction(c) for p, c in v.items() if c} for k, v in entries.items()}
        for (r, c), comb in self.entries.items():
            for p in comb:
                if quiver.path_end(self.p0[c][0], p) != self.p1[r][0]:
                    raise ValueError(f"entry ({r},{c}) path {p} has wrong endpoints")

    def max_path_length(self) -> int:
        return max((len(p) for comb in self.entries.values() for p in comb), default=0)

    def evaluate(self, n: Representation) -> RatMatrix:
        """Matrix of Hom(P_0, N) -> Hom(P_1, N): row blocks P_0 summands,
        column blocks P_1 summands, block (c, r) = N(entry(r, c))."""
        rs = [n.dims[v] for v, _ in self.p0]
        cs = [n.dims[v] for v, _ in self.p1]
        roff = [sum(rs[:i]) for i in range(len(rs))]
        coff = [sum(cs[:i]) for i in range(len(cs))]
        items = []
        for (r, c), comb in self.entries.items():
            start = self.p0[c][0]
            block = None
            for p, coef in comb.items():
                pm = n.path_matrix(start, p).scale(coef)
                block = pm if block is None else block + pm
            for i in range(block.rows):
                for j in range(block.cols):
                    x = block[i, j]
                    if x:
                        items.append((roff[c] + i, coff[r] + j, x))
        return RatMatrix.from_sparse(sum(rs), sum(cs), items)

    def cokernel(self) -> Representation:
        """The representation presented by P_1 -> P_0 (acyclic quivers)."""
        q = self.quiver
        # basis of P_0 and P_1 at each vertex: (summand index, path)
        def basis(summands):
            out = {x: [] for x in q.vertices}
            for s, (v, _) in enumerate(summands):
                for p in q.paths_from(v):
                    out[q.path_end(v, p)].append((s, p))
            return out
        b0, b1 = basis(self.p0), basis(self.p1)
        idx0 = {x: {key: i for i, key in enumerate(b0[x])} for x in q.vertices}
        quot = {}
        for x in q.vertices:
            items = []
            for i, (r, p) in enumerate(b1[x]):
                for c in range(len(self.p0)):
                    comb = self.entries.get((r, c))
                    if not comb:
                        continue
                    for path, coef in comb.items():
                        items.append((i, idx0[x][(c, path + p)], coef))
            img = RatMatrix.from_sparse(len(b1[x]), len(b0[x]), items)
            red, piv = rref(img)
            free = [j for j in range(len(b0[x])) if j not in set(piv)]
            quot[x] = (red, piv, free)

        def reduce_vec(x, vec):
            red, piv, free = quot[x]
            vec = list(vec)
            for i, p in enumerate(piv):
                f = vec[p]
                if f:
                    row = red.row(i)
                    for j in range(len(vec)):
                        if row[j]:
                            vec[j] -= f * row[j]
            return [vec[j] for j in free]

        dims = {x: len(quot[x][2]) for x in q.vertices}
        mats = {}
        for name, t, h in q.arrows:
            rows = []
            for j in quot[t][2]:
                c, p = b0[t][j]
                vec = [Fraction(0)] * len(b0[h])
                vec[idx0[h][(c, p + (name,))]] = Fraction(1)
                rows.append(reduce_vec(h, vec))
            mats[name] = RatMatrix(rows, rows=dims[t], cols=dims[h])
        return Representation(q, dims, mats)


def canonical_resolution(m: Representation) -> ProjectivePresentation:
    """0 -> (+)_a M_{ta} (x) P_{ha} -> (+)_v M_v (x) P_v -> M -> 0.

    Row (a, i) has entry a at column (ta, i) and -M(a)[i][s] e_{ha} at column (ha, s).
    """
    q = m.quiver
    if not q.is_acyclic():
        raise ValueError("canonical resolutions are used for acyclic quivers only")
    p0 = [(v, i) for v in q.vertices for i in range(m.dims[v])]
    col = {key: k for k, key in enumerate(p0)}
    p1 = []
    entries = {}
    for name, t, h in q.arrows:
        for i in range(m.dims[t]):
            r = len(p1)
            p1.append((h, (name, i)))
            entries[(r, col[(t, i)])] = {(name,): Fraction(1)}
            for s in range(m.dims[h]):
                x = m.mats[name][i, s]
                if x:
                    entries[(r, col[(h, s)])] = {(): -x}
    return ProjectivePresentation(q, p1, p0, entries)


# ----------------------------------------------------------------------
# isomorphism and decomposition


def _morphism_from(basis, coeffs) -> dict:
    out = {}
    for f, c in zip(basis, coeffs):
        for v, mat in f.items():
            term = mat.scale(c)
            out[v] = term if v not in out else out[v] + term
    return out


def is_isomorphic(m: Representation, n: Representation, retries: int = 5, seed: int = 0) -> str:
    """'yes' (an invertible morphism was found), 'no' (Hom/End dimensions rule
    it out) or 'inconclusive'."""
    if m.quiver != n.quiver or m.dims != n.dims:
        return "no"
    basis = hom_space(m, n)
    d_mn = len(basis)
    if d_mn == 0:
        return "no" if m.total_dim() else "yes"
    if d_mn != hom_dim(m, m) or d_mn != hom_dim(n, n):
        return "no"
    rng = random.Random(seed)
    for _ in range(retries):
        coeffs = [rng.randint(-1000, 1000) for _ in basis]
        f = _morphism_from(basis, coeffs)
        if all(det(f[v]) != 0 for v in m.quiver.vertices if m.dims[v]):
            return "yes"
    return "inconclusive"


def subrepresentation_from_idempotent(m: Representation, e: dict) -> Representation:
    """Image of an idempotent endomorphism, in the basis of row-space RREF."""
    q = m.quiver
    bases = {v: rref(e[v])[0] for v in q.vertices}
    mats = {}
    for name, t, h in q.arrows:
        bt, bh = bases[t], bases[h]
        if bt.rows == 0 or bh.rows == 0:
            mats[name] = RatMatrix.zeros(bt.rows, bh.rows)
        else:
            mats[name] = solve(bh, bt @ m.mats[name])
    return Representation(q, {v: bases[v].rows for v in q.vertices}, mats)


def end_algebra(m: Representation):
    """End(M) realized as block-diagonal matrices on the total space."""
    from .semisimple import MatrixAlgebra
    basis = hom_space(m, m)
    mats = [block_diag(f[v] for v in m.quiver.vertices) for f in basis]
    return MatrixAlgebra(mats, check=False), basis


def decompose_indecomposables(m: Representation, seed: int = 0):
    """Krull-Schmidt decomposition: list of (summand, multiplicity, flagged).

    flagged is True when an isomorphism test between summands was inconclusive.
    """
    from .semisimple import idempotents_in_end
    if m.total_dim() == 0:
        return []
    alg, _ = end_algebra(m)
    off = m.offsets()
    probes = [list(range(off[v], off[v] + m.dims[v])) for v in m.quiver.vertices if m.dims[v]]
    idems = idempotents_in_end(alg, seed=seed, probe_vectors=probes)
    summands = []
    for e in idems:
        blocks = {v: e.submatrix(range(off[v], off[v] + m.dims[v]),
                                 range(off[v], off[v] + m.dims[v])) for v in m.quiver.vertices}
        summands.append(subrepresentation_from_idempotent(m, blocks))
    groups: list[list] = []
    for s in sorted(summands, key=lambda r: r.dim_tuple()):
        for g in groups:
            verdict = is_isomorphic(g[0], s, seed=seed)
            if verdict == "yes":
                g[1] += 1
                break
            if verdict == "inconclusive":
                g[2] = True
        else:
            groups.append([s, 1, False])
    return [tuple(g) for g in groups]
