"""Reference symbol matrices for worked examples of R_c.

Each template describes a representation of a base quiver whose arrow
matrices are rational combinations of arrow symbols B1, B2, ...  Symbols are
attached to (tail, head) bundles of the component quiver by label, so that a
representation N of our component can be substituted into the template.
Evaluation assumes every symbol stands for an a x a matrix.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .linalg import RatMatrix, YaleTriplet, from_yale
from .quiver import Quiver, Representation, kronecker_quiver, subspace_quiver

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?(B\d+)(?:/(\d+))?")


def parse_entry(text: str) -> dict:
    """'B4/2+B5/2' -> {'B4': 1/2, 'B5': 1/2}; '0' -> {}."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return {}
    out, pos = {}, 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse entry {text!r}")
        sign, coef, sym, den = m.groups()
        c = Fraction(coef) if coef else Fraction(1)
        if den:
            c /= int(den)
        if sign == "-":
            c = -c
        out[sym] = out.get(sym, 0) + c
        pos = m.end()
    return out


def dense_terms(rows) -> tuple[int, int, dict]:
    """Rows of entry strings -> (rows, cols, symbol -> coefficient matrix)."""
    nr, nc = len(rows), len(rows[0])
    items: dict = {}
    for i, row in enumerate(rows):
        if len(row) != nc:
            raise ValueError("ragged template")
        for j, txt in enumerate(row):
            for s, c in parse_entry(txt).items():
                items.setdefault(s, []).append((i, j, c))
    return nr, nc, {s: RatMatrix.from_sparse(nr, nc, it) for s, it in items.items()}


class Template:
    def __init__(self, name: str, quiver: Quiver, shapes: dict, terms: dict, symbols: dict,
                 component: dict):
        self.name = name
        self.quiver = quiver
        self.shapes = shapes          # vertex -> size (for a = 1)
        self.terms = terms            # arrow -> {symbol: coefficient matrix}
        self.symbols = symbols        # symbol -> (tail label vertex, head label vertex)
        self.component = component    # how to build our side
        self.row_labels = None        # vertex -> [(label vertex, copy)], when known

    def evaluate(self, values: dict) -> Representation:
        """values: symbol -> a x a RatMatrix (same a for all symbols)."""
        a = next(iter(values.values())).rows if values else 1
        dims = {v: self.shapes[v] * a for v in self.quiver.vertices}
        mats = {}
        for name, t, h in self.quiver.arrows:
            acc = RatMatrix.zeros(dims[t], dims[h])
            for s, coef in self.terms[name].items():
                acc = acc + coef.kron(values[s])
            mats[name] = acc
        return Representation(self.quiver, dims, mats)


def _dense_template(name, quiver, mats: dict, symbols, component) -> Template:
    terms, shapes = {}, {}
    for arrow, t, h in quiver.arrows:
        nr, nc, tm = dense_terms(mats[arrow])
        terms[arrow] = tm
        shapes[t], shapes[h] = nr, nc
    return Template(name, quiver, shapes, terms, symbols, component)


def _yale(vals, rows, cols, shape) -> RatMatrix:
    return from_yale(YaleTriplet(tuple(Fraction(v) for v in vals), tuple(rows), tuple(cols)), shape)


def _stack_template(name, quiver, blocks: dict, row_sizes, col_sizes, symbols, component) -> Template:
    """blocks[arrow] = list of (row block, col block, symbol, yale triple)."""
    nr, nc = sum(row_sizes), sum(col_sizes)
    roff = [sum(row_sizes[:i]) for i in range(len(row_sizes))]
    coff = [sum(col_sizes[:i]) for i in range(len(col_sizes))]
    terms = {}
    for arrow, _, _ in quiver.arrows:
        acc = {}
        for rb, cb, sym, (vals, rows, cols) in blocks[arrow]:
            local = _yale(vals, rows, cols, (row_sizes[rb], col_sizes[cb]))
            items = [(roff[rb] + i, coff[cb] + j, local[i, j])
                     for i in range(local.rows) for j in range(local.cols) if local[i, j]]
            m = RatMatrix.from_sparse(nr, nc, items)
            acc[sym] = m if sym not in acc else acc[sym] + m
        terms[arrow] = acc
    t, h = quiver.arrows[0][1], quiver.arrows[0][2]
    return Template(name, quiver, {t: nr, h: nc}, terms, symbols, component)


def template_k2_s2() -> Template:
    q = kronecker_quiver(2)
    mats = {"a1": [["B1", "B2"], ["B3", "B4"]],
            "a2": [["B1", "-B2"], ["-B3", "B4"]]}
    symbols = {"B1": ("1:[1,1]", "2:[1,1]"), "B2": ("1:[1,1]", "2:[2]"),
               "B3": ("1:[2]", "2:[1,1]"), "B4": ("1:[2]", "2:[2]")}
    t = _dense_template("K2/S2", q, mats, symbols, {"kind": "kronecker-sym", "n": 2})
    t.row_labels = {v: [(f"{v}:[1,1]", 0), (f"{v}:[2]", 0)] for v in ("1", "2")}
    return t


def template_k3_s3() -> Template:
    q = kronecker_quiver(3)
    mats = {
        "a1": [["B1", "B2", "B2", "0"],
               ["B3", "B4/2+B5/2", "B5/2-B4/2", "B6"],
               ["-B3", "B4/2-B5/2", "-B4/2-B5/2", "B6"],
               ["0", "B7", "-B7", "B8"]],
        "a2": [["B1", "B2", "-2B2", "0"],
               ["0", "B4", "0", "-2B6"],
               ["B3", "B5/2-B4/2", "-B5", "B6"],
               ["0", "-B7", "0", "B8"]],
        "a3": [["B1", "-2B2", "B2", "0"],
               ["-B3", "B5", "B4/2-B5/2", "B6"],
               ["0", "0", "-B4", "-2B6"],
               ["0", "0", "B7", "B8"]],
    }
    symbols = {"B1": ("1:[3]", "2:[3]"), "B2": ("1:[3]", "2:[2,1]"),
               "B3": ("1:[2,1]", "2:[3]"), "B4": ("1:[2,1]", "2:[2,1]"),
               "B5": ("1:[2,1]", "2:[2,1]"), "B6": ("1:[2,1]", "2:[1,1,1]"),
               "B7": ("1:[1,1,1]", "2:[2,1]"), "B8": ("1:[1,1,1]", "2:[1,1,1]")}
    t = _dense_template("K3/S3", q, mats, symbols, {"kind": "kronecker-sym", "n": 3})
    t.row_labels = {v: [(f"{v}:[3]", 0), (f"{v}:[2,1]", 0), (f"{v}:[2,1]", 1), (f"{v}:[1,1,1]", 0)]
                    for v in ("1", "2")}
    return t


def template_s4() -> Template:
    q = subspace_quiver(4)
    z6 = ["0"] * 6
    mats = {
        "a1": [["B1", "B2", "-B2", "-B2"] + z6,
               ["0", "B3", "0", "B3", "B4", "0", "B5", "-2B5", "B5", "0"],
               ["0", "0", "B3", "-B3", "-B4", "-B4", "B5", "B5", "-2B5", "0"],
               ["0"] * 6 + ["B6", "B6", "B6", "B7"]],
        "a2": [["B1", "B2", "-B2", "3B2"] + z6,
               ["0", "B3", "0", "0", "B4", "B4", "B5", "3B5", "0", "0"],
               ["0", "0", "B3", "0", "-B4", "0", "B5", "0", "3B5", "0"],
               ["0"] * 6 + ["B6", "0", "0", "-B7"]],
        "a3": [["B1", "B2", "3B2", "-B2"] + z6,
               ["0", "B3", "0", "0", "-B4", "-B4", "-3B5", "-B5", "0", "0"],
               ["0", "0", "0", "B3", "0", "B4", "0", "-B5", "-3B5", "0"],
               ["0"] * 6 + ["0", "-B6", "0", "-B7"]],
        "a4": [["B1", "-3B2", "-B2", "-B2"] + z6,
               ["0", "0", "-B3", "0", "-B4", "0", "3B5", "0", "B5", "0"],
               ["0", "0", "0", "B3", "0", "-B4", "0", "3B5", "B5", "0"],
               ["0"] * 6 + ["0", "0", "B6", "B7"]],
    }
    # the outer orbit is represented by vertex 1
    symbols = {"B1": ("1:[3]", "5:[4]"), "B2": ("1:[3]", "5:[3,1]"),
               "B3": ("1:[2,1]", "5:[3,1]"), "B4": ("1:[2,1]", "5:[2,2]"),
               "B5": ("1:[2,1]", "5:[2,1,1]"), "B6": ("1:[1,1,1]", "5:[2,1,1]"),
               "B7": ("1:[1,1,1]", "5:[1,1,1,1]")}
    return _dense_template("S4", q, mats, symbols, {"kind": "subspace-sym", "n": 4})


def template_kn_first(n: int) -> Template:
    q = kronecker_quiver(n)
    symbols = {"B1": ("1:[1,1]", "2:[1]"), "B2": ("1:[2]", "2:[1]")}
    comp = {"kind": "gl-natural", "n": n, "seed": ("2", [1])}
    if n == 3:
        mats = {
            "a1": [["0", "-B1", "0"], ["0", "0", "B1"], ["0", "0", "0"], ["0", "B2", "0"],
                   ["0", "0", "B2"], ["0", "0", "0"], ["B2", "0", "0"], ["0", "0", "0"],
                   ["0", "0", "0"]],
            "a2": [["B1", "0", "0"], ["0", "0", "0"], ["0", "0", "-B1"], ["B2", "0", "0"],
                   ["0", "0", "0"], ["0", "0", "B2"], ["0", "0", "0"], ["0", "B2", "0"],
                   ["0", "0", "0"]],
            "a3": [["0", "0", "0"], ["-B1", "0", "0"], ["0", "B1", "0"], ["0", "0", "0"],
                   ["B2", "0", "0"], ["0", "B2", "0"], ["0", "0", "0"], ["0", "0", "0"],
                   ["0", "0", "B2"]],
        }
        return _dense_template("K3 first", q, mats, symbols, comp)
    if n == 4:
        up = {"a1": ((-1, 1, 1), (1, 2, 4), (2, 3, 4)),
              "a2": ((1, -1, -1), (1, 3, 5), (1, 3, 4)),
              "a3": ((-1, 1, 1), (2, 3, 6), (1, 2, 4)),
              "a4": ((-1, 1, -1), (4, 5, 6), (1, 2, 3))}
        down = {"a1": ((1, 1, 1, 1), (1, 2, 4, 7), (2, 3, 4, 1)),
                "a2": ((1, 1, 1, 1), (1, 3, 5, 8), (1, 3, 4, 2)),
                "a3": ((1, 1, 1, 1), (2, 3, 6, 9), (1, 2, 4, 3)),
                "a4": ((1, 1, 1, 1), (4, 5, 6, 10), (1, 2, 3, 4))}
        blocks = {a: [(0, 0, "B1", up[a]), (1, 0, "B2", down[a])] for a in up}
        return _stack_template("K4 first", q, blocks, [6, 10], [4], symbols, comp)
    raise ValueError("templates exist for n = 3 and n = 4")


def template_k3_second() -> Template:
    q = kronecker_quiver(3)
    h = Fraction(1, 2)
    qu = Fraction(1, 4)
    e = Fraction(1, 8)
    blocks = {
        "a1": [(0, 0, "B1", ((1,), (1,), (3,))),
               (1, 0, "B2", ((-2, 2, -1), (1, 3, 7), (1, 2, 3))),
               (1, 1, "B3", ((1, -2, 1, 2, h, -1), (1, 2, 3, 5, 7, 8), (1, 5, 2, 6, 3, 3))),
               (2, 1, "B4", ((3, 1, 1, 1, h, e), (1, 4, 5, 6, 8, 10), (4, 1, 5, 2, 6, 3)))],
        "a2": [(0, 0, "B1", ((1,), (1,), (2,))),
               (1, 0, "B2", ((2, 2, 1, -1), (2, 4, 7, 8), (1, 3, 2, 2))),
               (1, 1, "B3", ((-2, 1, -1, -2, h, h), (1, 2, 4, 6, 7, 8), (4, 1, 3, 6, 2, 2))),
               (2, 1, "B4", ((3, 1, 1, h, qu, e), (2, 4, 5, 7, 9, 10), (5, 4, 1, 3, 6, 2)))],
        "a3": [(0, 0, "B1", ((1,), (1,), (1,))),
               (1, 0, "B2", ((2, 2, 1), (5, 6, 8), (2, 3, 1))),
               (1, 1, "B3", ((-2, 2, -1, 1, -1, h), (3, 4, 5, 6, 7, 8), (4, 5, 2, 3, 1, 1))),
               (2, 1, "B4", ((3, 1, h, h, qu, e), (3, 6, 7, 8, 9, 10), (6, 4, 5, 2, 3, 1)))],
    }
    symbols = {"B1": ("1:[1,1,1]", "2:[1,1]"), "B2": ("1:[2,1]", "2:[1,1]"),
               "B3": ("1:[2,1]", "2:[2]"), "B4": ("1:[3]", "2:[2]")}
    return _stack_template("K3 second", q, blocks, [1, 8, 10], [3, 6], symbols,
                           {"kind": "gl-natural", "n": 3, "seed": ("2", [2])})


def template_k3_sym2() -> Template:
    q = kronecker_quiver(3)
    mats = {
        "a1": [["0", "-B1"], ["0", "0"], ["3B2", "0"], ["0", "0"], ["0", "B2"], ["0", "0"]],
        "a2": [["B1", "0"], ["0", "B1"], ["0", "0"], ["0", "0"], ["2B2", "0"], ["0", "2B2"]],
        "a3": [["0", "0"], ["-B1", "0"], ["0", "0"], ["0", "3B2"], ["0", "0"], ["B2", "0"]],
    }
    symbols = {"B1": ("1:[2,1]", "2:[1]"), "B2": ("1:[3]", "2:[1]")}
    return _dense_template("K3 S2", q, mats, symbols,
                           {"kind": "gl-sym2", "n": 2, "seed": ("2", [1])})


def all_templates() -> list[Template]:
    return [template_k2_s2(), template_k3_s3(), template_s4(), template_kn_first(3),
            template_kn_first(4), template_k3_second(), template_k3_sym2()]


# ----------------------------------------------------------------------
# our side of each template


def component_for(t: Template):
    """(component quiver, idempotent data) matching the template's setting."""
    from .qg import (build_qg_finite, build_qg_gl, component_of, kronecker_symmetric_action,
                     natural_gl_datum, subspace_symmetric_action)
    from .smash import build_idempotent_data
    kind = t.component["kind"]
    q = t.quiver
    if kind == "kronecker-sym":
        qg = build_qg_finite(q, kronecker_symmetric_action(q))
    elif kind == "subspace-sym":
        qg = build_qg_finite(q, subspace_symmetric_action(q))
    elif kind == "gl-natural":
        qg = build_qg_gl(q, natural_gl_datum(q, t.component["n"]), t.component["seed"])
    elif kind == "gl-sym2":
        from .qg import GroupDatum, sym_power_module
        datum = GroupDatum.gl(q, 2, {("1", "2"): sym_power_module(2, t.component.get("scaling"))})
        qg = build_qg_gl(q, datum, t.component["seed"])
    else:
        raise ValueError(kind)
    first = next(iter(t.symbols.values()))[0]
    comp = component_of(qg, first)
    return comp, build_idempotent_data(comp)


def bundle_values(t: Template, comp, n: Representation) -> dict:
    """Template symbol -> our arrow matrix, pairing symbols with arrows of the
    same bundle in order."""
    used: dict = {}
    out = {}
    for s in sorted(t.symbols, key=lambda x: int(x[1:])):
        pair = t.symbols[s]
        names = comp.bundles[pair]
        k = used.get(pair, 0)
        used[pair] = k + 1
        out[s] = n.mats[names[k]]
    return out


# ----------------------------------------------------------------------
# matching arrow bases inside multi-arrow bundles
#
# Two substitution functors that differ by a change of basis inside each
# bundle, and by a change of basis of each V_rho, give isomorphic outputs.
# For a template with a finite group fixing every vertex we recover the
# template's own equivariant structure theta(g), read off the V_rho-blocks,
# find Y_rho intertwining them with ours, and then solve linearly for the
# bundle transformation T.


def _equivariant_structure(q: Quiver, terms: dict, sizes: dict, amat: RatMatrix) -> dict:
    """theta with (g.M)(a_l) theta_h = theta_t M(a_l) for every symbol."""
    from .linalg import sparse_left_kernel
    verts = q.vertices
    off, n = {}, 0
    for v in verts:
        off[v] = n
        n += sizes[v] ** 2
    names = q.arrow_names()
    symbols = sorted({s for tm in terms.values() for s in tm})
    items, col = [], 0
    for l, (a, t, h) in enumerate(q.arrows):
        st, sh = sizes[t], sizes[h]
        for s in symbols:
            twisted = RatMatrix.zeros(st, sh)
            for m, b in enumerate(names):
                c = amat[l, m]
                if c and s in terms[b]:
                    twisted = twisted + terms[b][s].scale(c)
            own = terms[a].get(s, RatMatrix.zeros(st, sh))
            # entry (i, j): sum_k twisted[i][k] th_h[k][j] - sum_k th_t[i][k] own[k][j]
            for i in range(st):
                for j in range(sh):
                    eq = col + i * sh + j
                    for k in range(sh):
                        if twisted[i, k]:
                            items.append((off[h] + k * sh + j, eq, twisted[i, k]))
                    for k in range(st):
                        if own[k, j]:
                            items.append((off[t] + i * st + k, eq, -own[k, j]))
            col += st * sh
    ker = sparse_left_kernel(n, col, items)
    if len(ker) != 1:
        raise ValueError(f"equivariant structure is not unique ({len(ker)} solutions)")
    vec = ker[0]
    return {v: RatMatrix.from_flat(sizes[v], sizes[v], vec[off[v]:off[v] + sizes[v] ** 2])
            for v in verts}


def _label_blocks(row_labels):
    out = {}
    for r, (w, _) in enumerate(row_labels):
        out.setdefault(w, []).append(r)
    return out


def bundle_match(t: Template, comp, data) -> dict:
    """symbol -> {our arrow: coefficient}, or raise if no matching exists."""
    from .linalg import det, inverse, sparse_left_kernel, solve
    act = comp.datum.action
    q = t.quiver
    ours = {a: dict(data.tables[a]) for a in q.arrow_names()}
    our_sizes = {v: data.size(v) for v in q.vertices}
    our_rows = {v: data.positions(v) for v in q.vertices}
    group = act.group()
    theta_p, theta_m = {}, {}
    for g in group:
        theta_p[g] = _equivariant_structure(q, t.terms, t.shapes, act.arrow_matrix(g))
        theta_m[g] = _equivariant_structure(q, ours, our_sizes, act.arrow_matrix(g))
    # scale so that the trivial block is 1: then g -> theta(g) is a homomorphism
    def normalize(theta, rows):
        v = q.vertices[0]
        w, idx = next((w, idx) for w, idx in _label_blocks(rows[v]).items()
                      if len(comp.label(w)) == 1)
        for g in group:
            c = theta[g][v][idx[0], idx[0]]
            theta[g] = {x: m.scale(1 / c) for x, m in theta[g].items()}

    normalize(theta_p, t.row_labels)
    normalize(theta_m, our_rows)
    # Y_w: theta_m block * Y = Y * theta_p block for all g
    ys = {}
    for v in q.vertices:
        pb, mb = _label_blocks(t.row_labels[v]), _label_blocks(our_rows[v])
        for w in mb:
            d = len(mb[w])
            items, col = [], 0
            for g in group:
                tm = theta_m[g][v].submatrix(mb[w], mb[w])
                tp = theta_p[g][v].submatrix(pb[w], pb[w])
                for i in range(d):
                    for j in range(d):
                        for k in range(d):
                            if tm[i, k]:
                                items.append((k * d + j, col + i * d + j, tm[i, k]))
                            if tp[k, j]:
                                items.append((i * d + k, col + i * d + j, -tp[k, j]))
                col += d * d
            ker = sparse_left_kernel(d * d, col, items)
            if len(ker) != 1:
                raise ValueError(f"no unique intertwiner for block {w}")
            ys[w] = RatMatrix.from_flat(d, d, ker[0])
    # T: sum_s' T[s'][s] C^m_{s'} restricted to (w_t, w_h) = Y_t C^p_s Y_h^{-1}
    out = {}
    for s, (wt, wh) in t.symbols.items():
        v_t, v_h = comp.base_vertex(wt), comp.base_vertex(wh)
        arrows = [a for a, tt, hh in q.arrows if tt == v_t and hh == v_h]
        pr_t, pr_h = _label_blocks(t.row_labels[v_t])[wt], _label_blocks(t.row_labels[v_h])[wh]
        mr_t, mr_h = _label_blocks(our_rows[v_t])[wt], _label_blocks(our_rows[v_h])[wh]
        yinv = inverse(ys[wh])
        cand = comp.bundles[(wt, wh)]
        lhs_rows, rhs = [], []
        for b in cand:
            vec = []
            for a in arrows:
                cm = ours[a].get(b)
                blk = cm.submatrix(mr_t, mr_h) if cm is not None else RatMatrix.zeros(len(mr_t), len(mr_h))
                vec.extend(blk.entries)
            lhs_rows.append(vec)
        for a in arrows:
            cp = t.terms[a].get(s)
            blk = cp.submatrix(pr_t, pr_h) if cp is not None else RatMatrix.zeros(len(pr_t), len(pr_h))
            rhs.extend((ys[wt] @ blk @ yinv).entries)
        coeffs = solve(RatMatrix(lhs_rows), RatMatrix([rhs]))
        out[s] = {b: coeffs[0, k] for k, b in enumerate(cand) if coeffs[0, k]}
    for pair, cand in comp.bundles.items():
        syms = [s for s in sorted(out) if t.symbols[s] == pair]
        tm = RatMatrix([[out[s].get(b, 0) for b in cand] for s in syms])
        if len(syms) != len(cand) or det(tm) == 0:
            raise ValueError(f"bundle {pair} admits no invertible matching")
    return out


def matched_values(t: Template, comp, data, n: Representation) -> tuple[dict, Representation]:
    """(symbol values for the template, transformed N) such that our R_c of
    the transformed N is compared with the template at the original values."""
    match = bundle_match(t, comp, data)
    # values: template symbol s gets N(b_s) for the s-th arrow of its bundle;
    # our side uses N'(b) = sum_s T[b][s] N(b_s)
    base = bundle_values(t, comp, n)
    mats = {}
    for b in comp.quiver.arrow_names():
        mats[b] = RatMatrix.zeros(n.mats[b].rows, n.mats[b].cols)
    for s, comb in match.items():
        for b, c in comb.items():
            mats[b] = mats[b] + base[s].scale(c)
    return base, Representation(comp.quiver, dict(n.dims), mats)
