"""Matrix-unit data, coefficient tables and the functors R_c and T_c.

For a component Q_c of Q_G, a representation N of Q_c is sent to the
representation M = R_c(N) of Q with M_u = (+)_rho V_rho (x) N_{u rho}
(ordered by rho in vertex order of Q_c, then copy index, then the
coordinates of N).  The block of M(a) between copy i of rho and copy j of
sigma is sum_k c_k^{ij} N(b_k); the numbers c_k^{ij} come from a basis of
equivariant maps F_k with  rho(h) F_k = F_k (K(h) (x) sigma(h)),  where K is
the arrow module (columns of F are indexed by (arrow l, copy j), l outer).
"""
from __future__ import annotations

from .linalg import RatMatrix, inverse, rat_str, sparse_left_kernel, to_yale
from .qg import GroupDatum, QGQuiver
from .quiver import ProjectivePresentation, Quiver, Representation, canonical_resolution
from .schur import GLIrreps
from .symmetric_group import Permutation, SymmetricIrreps, moved_points


class MultiplicityMismatch(AssertionError):
    pass


class SupportError(ValueError):
    pass


# ----------------------------------------------------------------------
# irreducible representations of stabilizers

_GL_CACHE: dict = {}


def gl_irreps(n: int, d: int, source: str = "auto") -> GLIrreps:
    key = (n, d, source)
    if key not in _GL_CACHE:
        _GL_CACHE[key] = GLIrreps(n, d, source)
    return _GL_CACHE[key]


def gl_generators(n: int) -> list[RatMatrix]:
    """E_pq(1) for p != q, diag of the first n primes, and 2I."""
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29][:n]
    gens = []
    for p in range(n):
        for q in range(n):
            if p != q:
                gens.append(RatMatrix.identity(n) + RatMatrix.from_sparse(n, n, [(p, q, 1)]))
    gens.append(RatMatrix.diag(primes))
    gens.append(RatMatrix.identity(n).scale(2))
    return gens


class StabilizerIrreps:
    """rho(h) for h in G_u (u an orbit representative) with the irreducibles
    of Sym(moved points) built from matrix units."""

    _cache: dict = {}

    def __init__(self, orbits, act, u):
        self.u = u
        stab = orbits.stabilizer[u]
        pts = moved_points(stab)
        key = (id(act), u)
        if key not in StabilizerIrreps._cache:
            StabilizerIrreps._cache[key] = SymmetricIrreps(stab, pts, act.m) if pts else None
        self.irreps = StabilizerIrreps._cache[key]

    def dim(self, lam) -> int:
        return 1 if self.irreps is None else self.irreps.dim(lam)

    def matrix(self, lam, h: Permutation) -> RatMatrix:
        if self.irreps is None:
            return RatMatrix.identity(1)
        return self.irreps.matrix(lam, h)


# ----------------------------------------------------------------------
# intertwiners


def intertwiner_basis(rho_mats, sigma_mats, k_mats) -> list[RatMatrix]:
    """Basis (reduced echelon order) of {F : rho(g) F = F (K(g) (x) sigma(g)) for
    all listed g}.  The three lists run over the same generator set."""
    if not rho_mats:
        raise ValueError("empty generator set")
    dr = rho_mats[0].rows
    x_mats = [k.kron(s) for k, s in zip(k_mats, sigma_mats)]
    c = x_mats[0].rows
    nunk = dr * c
    items = []
    col = 0
    for rho, x in zip(rho_mats, x_mats):
        # equation (i, cc): sum_p rho[i][p] F[p][cc] - sum_q F[i][q] X[q][cc]
        rho_nz = [(i, p, rho[i, p]) for i in range(dr) for p in range(dr) if rho[i, p]]
        x_nz = [(q, cc, x[q, cc]) for q in range(c) for cc in range(c) if x[q, cc]]
        for i, p, v in rho_nz:
            for cc in range(c):
                items.append((p * c + cc, col + i * c + cc, v))
        for q, cc, v in x_nz:
            for i in range(dr):
                items.append((i * c + q, col + i * c + cc, -v))
        col += dr * c
    vecs = sparse_left_kernel(nunk, col, items)
    return [RatMatrix.from_flat(dr, c, v) for v in vecs]


# ----------------------------------------------------------------------
# idempotent data


class IdempotentData:
    """Coefficient tables of one component.

    layout[v]: list of (Q_c vertex, d_rho) for the Q-vertex v;
    tables[a]: Q_c arrow name -> scalar matrix C_B of shape
    (sum of d over layout[tail a]) x (sum of d over layout[head a]), so that
    R_c(N)(a) = sum_B C_B (x) N(B) blockwise.
    """

    def __init__(self, qg: QGQuiver, layout: dict, tables: dict, meta: dict | None = None):
        self.qg = qg
        self.base: Quiver = qg.base
        self.layout = layout
        self.tables = tables
        self.meta = meta or {}

    def size(self, v) -> int:
        return sum(d for _, d in self.layout[v])

    def positions(self, v) -> list[tuple]:
        """(Q_c vertex, copy) for each row of the coefficient matrices at v."""
        return [(w, i) for w, d in self.layout[v] for i in range(d)]


def _layout(qg: QGQuiver) -> dict:
    out = {v: [] for v in qg.base.vertices}
    for w in qg.vertices:
        u = qg.base_vertex(w)
        targets = [u]
        if qg.datum.kind == "finite":
            targets = qg.orbits.orbit[u]
        for v in targets:
            out[v].append((w, qg.dim_of_label(w)))
    return out


def _assemble(layout_t, layout_h, pieces) -> RatMatrix:
    """pieces: (tail vertex, head vertex) -> d_rho x d_sigma matrix."""
    roff, off = {}, 0
    for w, d in layout_t:
        roff[w] = off
        off += d
    rows = off
    coff, off = {}, 0
    for w, d in layout_h:
        coff[w] = off
        off += d
    items = []
    for (t, h), m in pieces.items():
        for i in range(m.rows):
            for j in range(m.cols):
                if m[i, j]:
                    items.append((roff[t] + i, coff[h] + j, m[i, j]))
    return RatMatrix.from_sparse(rows, off, items)


def build_idempotent_data(qg: QGQuiver, seed: int = 0, source: str = "auto") -> IdempotentData:
    if qg.datum.kind == "gl":
        return _build_gl(qg, source)
    if qg.datum.kind == "finite":
        return _build_finite(qg)
    raise NotImplementedError("functor data is built for finite and gl data")


def _build_gl(qg: QGQuiver, source: str) -> IdempotentData:
    datum: GroupDatum = qg.datum
    q = qg.base
    n = datum.n
    gens = gl_generators(n)
    layout = _layout(qg)

    def rho_of(w):
        lam = qg.label(w)
        if lam.size() == 0:
            return [RatMatrix.identity(1) for _ in gens]
        irr = gl_irreps(n, lam.size(), source)
        return [irr.matrix(lam, g) for g in gens]

    rho_cache = {w: rho_of(w) for w in qg.vertices}
    tables = {a: {} for a in q.arrow_names()}
    for (t, h), names in qg.bundles.items():
        u, v = qg.base_vertex(t), qg.base_vertex(h)
        arrows = [a[0] for a in q.arrows_between(u, v)]
        k_mats = [datum.arrow_block(q, u, v, g) for g in gens]
        basis = intertwiner_basis(rho_cache[t], rho_cache[h], k_mats)
        if len(basis) != len(names):
            raise MultiplicityMismatch(f"{t}->{h}: {len(basis)} intertwiners, "
                                       f"{len(names)} arrows from the LR count")
        dt, dh = qg.dim_of_label(t), qg.dim_of_label(h)
        for f, b in zip(basis, names):
            for l, a in enumerate(arrows):
                piece = f.submatrix(range(dt), range(l * dh, (l + 1) * dh))
                if not piece.is_zero():
                    tables[a][b] = tables[a].get(b, {})
                    tables[a][b][(t, h)] = piece
    full = {}
    for name, t, h in q.arrows:
        full[name] = {b: _assemble(layout[t], layout[h], pieces)
                      for b, pieces in tables[name].items()}
    return IdempotentData(qg, layout, full, {"generators": len(gens)})


def _build_finite(qg: QGQuiver) -> IdempotentData:
    act = qg.datum.action
    orbits = qg.orbits
    q = qg.base
    layout = _layout(qg)
    irreps = {u: StabilizerIrreps(orbits, act, u) for u in orbits.representatives}
    group = act.group()

    def sigma_at(x2, lam, h):
        # sigma transported to G_{x2}: sigma''(h) = sigma(t h t^-1), x' * t = x2
        x = orbits.rep_of[x2]
        t = orbits.witness[x2]
        return irreps[x].matrix(lam, t * h * t.inverse())

    # intertwiners on the pair representatives
    local = {}   # (u', x'') -> {B: {(t,h): F restricted per arrow l}}
    meta_witness = {}
    for (t, h), names in qg.bundles.items():
        u, x = qg.base_vertex(t), qg.base_vertex(h)
        rho, sigma = qg.label(t), qg.label(h)
        found = []
        for x2 in orbits.pair_reps[(u, x)]:
            arrows = [i for i, (_, a, b) in enumerate(q.arrows) if a == u and b == x2]
            if not arrows:
                continue
            hgrp = [g for g in orbits.stabilizer[u] if act.vertex_image(x2, g) == x2]
            rho_m = [irreps[u].matrix(rho, g) for g in hgrp]
            sig_m = [sigma_at(x2, sigma, g) for g in hgrp]
            k_m = [act.arrow_matrix(g.inverse()).T.submatrix(arrows, arrows) for g in hgrp]
            for f in intertwiner_basis(rho_m, sig_m, k_m):
                found.append((x2, arrows, f))
        if len(found) != len(names):
            raise MultiplicityMismatch(f"{t}->{h}: {len(found)} intertwiners, "
                                       f"{len(names)} arrows from characters")
        dh = qg.dim_of_label(h)
        dt = qg.dim_of_label(t)
        for (x2, arrows, f), b in zip(found, names):
            for l, ai in enumerate(arrows):
                piece = f.submatrix(range(dt), range(l * dh, (l + 1) * dh))
                local.setdefault(q.arrows[ai][0], {}).setdefault(b, {})[(t, h)] = piece

    tables = {}
    for name, v, w in q.arrows:
        u = orbits.rep_of[v]
        x = orbits.rep_of[w]
        tv, tw = orbits.witness[v], orbits.witness[w]
        # g with (u, x2) g = (v, w), x2 a pair representative
        choice = None
        for g in group:
            if act.vertex_image(u, g) != v:
                continue
            for x2 in orbits.pair_reps[(u, x)]:
                if act.vertex_image(x2, g) == w:
                    choice = (g, x2)
                    break
            if choice:
                break
        g, x2 = choice
        meta_witness[name] = (g, x2)
        coeffs = act.arrow_matrix(g.inverse()).row(q.arrow_names().index(name))
        hh = g * tv.inverse()
        h2 = orbits.witness[x2] * g * tw.inverse()
        pieces_by_b = {}
        for m, c in enumerate(coeffs):
            if not c:
                continue
            for b, pieces in local.get(q.arrows[m][0], {}).items():
                for (t, hd), p in pieces.items():
                    left = inverse(irreps[u].matrix(qg.label(t), hh))
                    right = irreps[x].matrix(qg.label(hd), h2)
                    term = (left @ p @ right).scale(c)
                    slot = pieces_by_b.setdefault(b, {})
                    slot[(t, hd)] = term if (t, hd) not in slot else slot[(t, hd)] + term
        tables[name] = {}
        for b, pieces in pieces_by_b.items():
            mat = _assemble(layout[v], layout[w], pieces)
            if not mat.is_zero():
                tables[name][b] = mat
    return IdempotentData(qg, layout, tables, {"witness": meta_witness})


# ----------------------------------------------------------------------
# R_c


def _block_offsets(data: IdempotentData, v, n: Representation):
    """Row offsets in M_v for each (Q_c vertex, copy), and the total size."""
    offs, off = {}, 0
    for w, d in data.layout[v]:
        for i in range(d):
            offs[(w, i)] = off
            off += n.dims[w]
    return offs, off


def rc_dims(data: IdempotentData, beta) -> dict:
    return {v: sum(d * beta.get(w, 0) for w, d in data.layout[v]) for v in data.base.vertices}


def rc_apply(data: IdempotentData, n: Representation) -> Representation:
    if n.quiver != data.qg.quiver:
        raise SupportError("N must be a representation of the component quiver")
    q = data.base
    dims, offs = {}, {}
    for v in q.vertices:
        offs[v], dims[v] = _block_offsets(data, v, n)
    mats = {}
    for name, t, h in q.arrows:
        pos_t, pos_h = data.positions(t), data.positions(h)
        acc: dict = {}
        for b, coef in data.tables[name].items():
            nb = n.mats[b]
            for r in range(coef.rows):
                for c in range(coef.cols):
                    x = coef[r, c]
                    if not x:
                        continue
                    r0, c0 = offs[t][pos_t[r]], offs[h][pos_h[c]]
                    for i in range(nb.rows):
                        for j in range(nb.cols):
                            y = nb[i, j]
                            if y:
                                key = (r0 + i, c0 + j)
                                acc[key] = acc.get(key, 0) + x * y
        mats[name] = RatMatrix.from_sparse(dims[t], dims[h], [(i, j, x) for (i, j), x in acc.items()])
    return Representation(q, dims, mats)


class SymbolicMatrix:
    """Matrix whose entries are rational combinations of arrow symbols:
    terms[symbol] = coefficient matrix."""

    def __init__(self, rows: int, cols: int, terms: dict):
        self.rows, self.cols = rows, cols
        self.terms = {s: m for s, m in terms.items() if not m.is_zero()}

    def entry(self, i: int, j: int) -> dict:
        return {s: m[i, j] for s, m in self.terms.items() if m[i, j]}

    def substitute(self, values: dict) -> RatMatrix:
        acc = RatMatrix.zeros(self.rows, self.cols)
        for s, m in self.terms.items():
            acc = acc + m.scale(values[s])
        return acc

    @staticmethod
    def format_entry(comb: dict) -> str:
        if not comb:
            return "0"
        parts = []
        for s in sorted(comb, key=_symbol_key):
            c = comb[s]
            if c == 1:
                txt = s
            elif c == -1:
                txt = "-" + s
            else:
                txt = f"{rat_str(c)}*{s}"
            parts.append(txt)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def dense(self) -> list[list[str]]:
        return [[self.format_entry(self.entry(i, j)) for j in range(self.cols)]
                for i in range(self.rows)]

    def dense_text(self) -> str:
        cells = self.dense()
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def yale(self) -> dict:
        """symbol -> (values, rows, cols), 1-based."""
        out = {}
        for s in sorted(self.terms, key=_symbol_key):
            y = to_yale(self.terms[s])
            out[s] = y
        return out


def _symbol_key(s: str):
    return (int(s[1:]) if s[1:].isdigit() else 0, s)


def rc_symbolic(data: IdempotentData) -> dict:
    """Q-arrow name -> SymbolicMatrix (for one-dimensional N at every vertex)."""
    out = {}
    for name, t, h in data.base.arrows:
        out[name] = SymbolicMatrix(data.size(t), data.size(h), dict(data.tables[name]))
    return out


# ----------------------------------------------------------------------
# T_c


def _blow_up_entry(data: IdempotentData, start, comb: dict, end):
    """Blown-up entry for a path combination from Q-vertex start to end:
    dict (row position, col position) -> {Q_c path: coefficient}; rows are
    positions at end, columns positions at start."""
    pos_s = data.positions(start)
    out: dict = {}
    for path, coef in comb.items():
        if len(path) == 0:
            for k, p in enumerate(pos_s):
                slot = out.setdefault((k, k), {})
                slot[()] = slot.get((), 0) + coef
        elif len(path) == 1:
            for b, cm in data.tables[path[0]].items():
                for r in range(cm.rows):
                    for c in range(cm.cols):
                        x = cm[r, c]
                        if x:
                            slot = out.setdefault((c, r), {})
                            slot[(b,)] = slot.get((b,), 0) + coef * x
        else:
            raise NotImplementedError("T_c is lifted for entries of path length at most 1")
    return {k: {p: c for p, c in v.items() if c} for k, v in out.items()}


def tc_on_projectives(data: IdempotentData, pres: ProjectivePresentation) -> ProjectivePresentation:
    qc = data.qg.quiver
    p1, p0 = [], []
    idx1, idx0 = {}, {}
    for r, (v, tag) in enumerate(pres.p1):
        for k, (w, i) in enumerate(data.positions(v)):
            idx1[(r, k)] = len(p1)
            p1.append((w, (tag, i)))
    for c, (v, tag) in enumerate(pres.p0):
        for k, (w, i) in enumerate(data.positions(v)):
            idx0[(c, k)] = len(p0)
            p0.append((w, (tag, i)))
    entries = {}
    for (r, c), comb in pres.entries.items():
        start, end = pres.p0[c][0], pres.p1[r][0]
        for (kr, kc), pc in _blow_up_entry(data, start, comb, end).items():
            if pc:
                entries[(idx1[(r, kr)], idx0[(c, kc)])] = pc
    return ProjectivePresentation(qc, p1, p0, entries)


def tc_apply(data: IdempotentData, m: Representation) -> Representation:
    if m.quiver != data.base:
        raise SupportError("M must be a representation of the base quiver")
    return tc_on_projectives(data, canonical_resolution(m)).cokernel()


# ----------------------------------------------------------------------
# checks


def twist_check(data: IdempotentData, n: Representation, g, seed: int = 0) -> str:
    from .qg import group_act_rep
    from .quiver import is_isomorphic
    m = rc_apply(data, n)
    return is_isomorphic(group_act_rep(data.qg.datum, g, m), m, seed=seed)
