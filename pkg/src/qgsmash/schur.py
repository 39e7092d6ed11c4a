"""Classical Schur algebras S(n,d) inside End(V^{(x)d}), the xi basis, the
idempotent tables for d = 2, 3, and explicit polynomial GL_n irreducibles.

Operators act on column vectors: the operator of xi^I_J has entry 1 at
(I', J') for every biword (I', J') obtained from (I, J) by a simultaneous place
permutation, so it sends e_J to a sum of e_I.  Basis tensors are ordered
lexicographically (first tensor factor most significant), the order of
numpy-style Kronecker products.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, factorial

from .linalg import RatMatrix, rref, solve
from .partitions import (Partition, Tableau, dim_gl_irrep, dim_symgroup_irrep, partitions_of,
                         symgroup_character)
from .semisimple import (DecompositionError, MatrixAlgebra, SemisimpleDecomposition, decompose,
                         matrix_units_from, span_dim)
from .symmetric_group import Permutation, symmetric_group, young_symmetrizer

TENSOR_BUDGET = 4096


class GeneralizedPermutation:
    """Biword with columns (top_k, bottom_k) sorted lexicographically."""

    __slots__ = ("top", "bottom")

    def __init__(self, top, bottom):
        top, bottom = tuple(int(x) for x in top), tuple(int(x) for x in bottom)
        if len(top) != len(bottom):
            raise ValueError("top and bottom rows must have equal length")
        pairs = sorted(zip(top, bottom))
        self.top = tuple(p[0] for p in pairs)
        self.bottom = tuple(p[1] for p in pairs)

    @property
    def degree(self) -> int:
        return len(self.top)

    def pairs(self):
        return list(zip(self.top, self.bottom))

    def __eq__(self, other):
        return isinstance(other, GeneralizedPermutation) and \
            (self.top, self.bottom) == (other.top, other.bottom)

    def __hash__(self):
        return hash((self.top, self.bottom))

    def __lt__(self, other):
        return (self.top, self.bottom) < (other.top, other.bottom)

    def __str__(self):
        return "xi^{" + "".join(map(str, self.top)) + "}_{" + "".join(map(str, self.bottom)) + "}"

    __repr__ = __str__


class XiElement:
    """Rational combination of xi^I_J in S(n,d)."""

    def __init__(self, n: int, d: int, coefficients=None):
        self.n, self.d = n, d
        self.coefficients: dict = {}
        for gp, c in (coefficients or {}).items():
            if not isinstance(gp, GeneralizedPermutation):
                gp = GeneralizedPermutation(*gp)
            if gp.degree != d or any(not 1 <= x <= n for x in gp.top + gp.bottom):
                raise ValueError(f"{gp} is not an index of S({n},{d})")
            c = Fraction(c)
            if c:
                self.coefficients[gp] = self.coefficients.get(gp, 0) + c
        self.coefficients = {g: c for g, c in self.coefficients.items() if c}

    @classmethod
    def basis_element(cls, n, top, bottom) -> "XiElement":
        return cls(n, len(top), {GeneralizedPermutation(top, bottom): 1})

    def __add__(self, other):
        s = dict(self.coefficients)
        for g, c in other.coefficients.items():
            s[g] = s.get(g, 0) + c
        return XiElement(self.n, self.d, s)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return XiElement(self.n, self.d, {g: Fraction(c) * x for g, x in self.coefficients.items()})

    def __eq__(self, other):
        return isinstance(other, XiElement) and (self.n, self.d) == (other.n, other.d) \
            and self.coefficients == other.coefficients

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for g in sorted(self.coefficients):
            c = self.coefficients[g]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            parts.append(f"{sign} {coef}{g}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


def word_index(word, n: int) -> int:
    k = 0
    for x in word:
        k = k * n + (x - 1)
    return k


def words(n: int, d: int) -> list[tuple]:
    return list(product(range(1, n + 1), repeat=d))


def _check_budget(n: int, d: int):
    if n ** d > TENSOR_BUDGET:
        raise ValueError(f"n^d = {n ** d} exceeds the tensor budget {TENSOR_BUDGET}")


@lru_cache(maxsize=None)
def _orbit_items(gp: GeneralizedPermutation, n: int) -> tuple:
    out = set()
    for arr in set(permutations(gp.pairs())):
        out.add((word_index([p[0] for p in arr], n), word_index([p[1] for p in arr], n)))
    return tuple(sorted(out))


def xi_to_operator(x: XiElement) -> RatMatrix:
    _check_budget(x.n, x.d)
    size = x.n ** x.d
    items = []
    for gp, c in x.coefficients.items():
        for i, j in _orbit_items(gp, x.n):
            items.append((i, j, c))
    return RatMatrix.from_sparse(size, size, items)


def schur_basis(n: int, d: int) -> list[GeneralizedPermutation]:
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return [GeneralizedPermutation([p[0] for p in c], [p[1] for p in c])
            for c in combinations_with_replacement(pairs, d)]


def schur_dimension(n: int, d: int) -> int:
    return comb(n * n + d - 1, d)


@lru_cache(maxsize=None)
def schur_algebra(n: int, d: int) -> MatrixAlgebra:
    """S(n,d) realized by the xi basis operators (no closure check: the
    centralizer is closed by construction)."""
    _check_budget(n, d)
    ops = [xi_to_operator(XiElement(n, d, {g: 1})) for g in schur_basis(n, d)]
    return MatrixAlgebra(ops, check=False, name=f"S({n},{d})")


def place_permutation(w: Permutation, n: int, d: int) -> RatMatrix:
    """P_w[I][J] = 1 iff I_k = J_{w(k)}; then P_w P_v = P_{w*v}."""
    items = []
    for word in words(n, d):
        img = tuple(word[w(k + 1) - 1] for k in range(d))
        items.append((word_index(img, n), word_index(word, n), 1))
    return RatMatrix.from_sparse(n ** d, n ** d, items)


def tensor_power(g: RatMatrix, d: int) -> RatMatrix:
    """phi_d(g) = g (x) ... (x) g."""
    out = RatMatrix.identity(1)
    for _ in range(d):
        out = out.kron(g)
    return out


def lie_operator(i: int, j: int, n: int, d: int) -> RatMatrix:
    """Action of the matrix unit E_ij of gl_n on V^{(x)d} (a derivation)."""
    items = []
    for word in words(n, d):
        for k in range(d):
            if word[k] == j:
                img = word[:k] + (i,) + word[k + 1:]
                items.append((word_index(img, n), word_index(word, n), 1))
    return RatMatrix.from_sparse(n ** d, n ** d, items)


def gelfand_tsetlin_hint(n: int, d: int) -> list[RatMatrix]:
    """Quadratic Casimirs of gl_1 < gl_2 < ... < gl_n and the Cartan elements;
    together they generate a split commutative subalgebra of S(n,d)."""
    e = {(i, j): lie_operator(i, j, n, d) for i in range(1, n + 1) for j in range(1, n + 1)}
    out = []
    for k in range(1, n + 1):
        c = None
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                t = e[(i, j)] @ e[(j, i)]
                c = t if c is None else c + t
        out.append(c)
        out.append(e[(k, k)])
    return out


def central_schur_idempotent(lam, n: int, d: int) -> RatMatrix:
    """z_lam = (dim lam / d!) sum_w chi_lam(w) P_w."""
    lam = Partition(lam)
    size = n ** d
    acc = {}
    dim = dim_symgroup_irrep(lam)
    for w in symmetric_group(d):
        c = symgroup_character(lam, w.cycle_type(range(1, d + 1)))
        if not c:
            continue
        for word in words(n, d):
            img = tuple(word[w(k + 1) - 1] for k in range(d))
            key = (word_index(img, n), word_index(word, n))
            acc[key] = acc.get(key, 0) + Fraction(dim * c, factorial(d))
    return RatMatrix.from_sparse(size, size, [(i, j, c) for (i, j), c in acc.items()])


def weight_spaces(e: RatMatrix, n: int, d: int) -> list[tuple]:
    """Weights mu (content vectors) with a nonzero component of e on the mu-weight space."""
    out = set()
    for word in words(n, d):
        if any(e.col(word_index(word, n))):
            out.add(tuple(word.count(i) for i in range(1, n + 1)))
    return sorted(out, reverse=True)


def highest_weight(e: RatMatrix, n: int, d: int) -> Partition:
    ws = weight_spaces(e, n, d)
    if not ws:
        raise ValueError("zero idempotent has no weights")
    return Partition(ws[0])


def image_character(e: RatMatrix, n: int, d: int) -> dict:
    """chi(w) = tr(e P_w) on class representatives, keyed by cycle type."""
    out = {}
    for w in symmetric_group(d):
        ct = w.cycle_type(range(1, d + 1))
        if ct not in out:
            out[ct] = e.trace_product(place_permutation(w, n, d))
    return out


def symmetric_multiplicities(e: RatMatrix, n: int, d: int) -> dict:
    """m_lam = <chi_e, chi_lam>: dim of e V_lam for the GL_n irreducible V_lam."""
    from .partitions import class_size
    chi = image_character(e, n, d)
    out = {}
    for lam in partitions_of(d):
        s = sum(class_size(ct) * val * symgroup_character(lam, ct) for ct, val in chi.items())
        m = Fraction(s, factorial(d))
        if m.denominator != 1:
            raise ArithmeticError("non-integral multiplicity; e is not an idempotent of S(n,d)")
        if m:
            out[lam] = int(m)
    return out


def corner_dim_by_characters(e: RatMatrix, n: int, d: int) -> int:
    """dim eS(n,d)e = sum_lam (dim e V_lam)^2."""
    return sum(m * m for m in symmetric_multiplicities(e, n, d).values())


def corner_dim_direct(e: RatMatrix, n: int, d: int) -> int:
    return span_dim(e @ b @ e for b in schur_algebra(n, d).basis)


# ----------------------------------------------------------------------
# the printed tables for d = 2, 3


def _terms(spec, letters):
    """spec: list of (coef, top, bottom) letter words; letters maps i/j/k to ints.
    Terms naming the same generalized permutation add up."""
    acc = {}
    for coef, top, bottom in spec:
        gp = GeneralizedPermutation([letters[c] for c in top], [letters[c] for c in bottom])
        acc[gp] = acc.get(gp, 0) + Fraction(coef)
    return acc


def _sym_terms(sign: bool):
    out = []
    for w in permutations(range(3)):
        sgn = Permutation([x + 1 for x in w]).sign() if sign else 1
        bottom = "".join("ijk"[x] for x in w)
        out.append((Fraction(sgn, 6), "ijk", bottom))
    return out


_H = Fraction(1, 2)
_T = Fraction(1, 3)

# (label, index arity, terms as (coef, top word, bottom word))
_TABLE_D2 = [
    ("[1,1]", 2, [(_H, "ij", "ij"), (-_H, "ji", "ij")]),
    ("[2]", 1, [(1, "ii", "ii")]),
    ("[2]", 2, [(_H, "ij", "ij"), (_H, "ji", "ij")]),
]

_TABLE_D3 = [
    ("[1,1,1]", 3, _sym_terms(True)),
    ("[2,1]", 2, [(2 * _T, "iij", "iij"), (-_T, "iji", "iij")]),
    ("[2,1]", 2, [(2 * _T, "ijj", "ijj"), (-_T, "ijj", "jij")]),
    ("[2,1]", 3, [(_T, "ijk", "ijk"), (-_T, "ijk", "jki"), (_T, "ijk", "ikj"), (-_T, "ijk", "jik")]),
    ("[2,1]", 3, [(_T, "ijk", "ijk"), (-_T, "ijk", "ikj"), (_T, "ijk", "jik"), (-_T, "ijk", "kij")]),
    ("[3]", 1, [(1, "iii", "iii")]),
    ("[3]", 2, [(_T, "iij", "iij"), (_T, "iji", "iij")]),
    ("[3]", 2, [(_T, "ijj", "ijj"), (_T, "ijj", "jij")]),
    ("[3]", 3, _sym_terms(False)),
]

# The d = 3 table exactly as printed.  Its third [2,1] family starts with
# xi^{ikj}_{ijk}, the same generalized permutation as its third term; read
# that way the element is not idempotent.  _TABLE_D3 uses xi^{ijk}_{ijk} there.
_TABLE_D3_PRINTED = list(_TABLE_D3)
_TABLE_D3_PRINTED[3] = (
    "[2,1]", 3, [(_T, "ikj", "ijk"), (-_T, "ijk", "jki"), (_T, "ijk", "ikj"), (-_T, "ijk", "jik")])


def schur_idempotents(n: int, d: int, printed: bool = False) -> list[tuple[Partition, XiElement]]:
    """The tabulated complete set of primitive orthogonal idempotents of S(n,d),
    d in {2, 3}; index tuples 1 <= i < j < k <= n in lexicographic order within
    each family, families in table order.  printed=True gives the d = 3 table
    letter for letter, including the misprinted family (see _TABLE_D3_PRINTED)."""
    if d not in (2, 3):
        raise ValueError("tabulated idempotents exist for d = 2 and d = 3 only")
    table = _TABLE_D2 if d == 2 else (_TABLE_D3_PRINTED if printed else _TABLE_D3)
    out = []
    for label, arity, spec in table:
        for idx in combinations(range(1, n + 1), arity):
            letters = dict(zip("ijk", idx))
            out.append((Partition.parse(label), XiElement(n, d, _terms(spec, letters))))
    return out


# ----------------------------------------------------------------------
# general d through central characters and Gelfand-Tsetlin refinement


def schur_idempotents_general(n: int, d: int, seed: int = 0) -> SemisimpleDecomposition:
    _check_budget(n, d)
    alg = schur_algebra(n, d)
    labels = partitions_of(d, n)
    central = []
    for lam in labels:
        z = central_schur_idempotent(lam, n, d)
        if highest_weight(z, n, d) != lam:
            raise DecompositionError(f"block {lam} has unexpected highest weight")
        central.append((lam, z))
    return decompose(alg, seed=seed, hint=gelfand_tsetlin_hint(n, d), central=central,
                     check_radical=False)


def schur_decomposition(n: int, d: int, source: str = "auto", seed: int = 0) -> SemisimpleDecomposition:
    """Matrix units of S(n,d) per block.  source: 'table' (d in {2,3}),
    'general', or 'auto' (table when available)."""
    if d == 0:
        one = RatMatrix.identity(1)
        lam = Partition([])
        return SemisimpleDecomposition([(lam, one)], [(lam, 1, one)], {(lam, 1, 1): one})
    if source == "auto":
        source = "table" if d in (2, 3) else "general"
    if source == "general":
        return schur_idempotents_general(n, d, seed)
    if source != "table":
        raise ValueError(f"unknown idempotent source {source!r}")
    blocks = {}
    for lam, x in schur_idempotents(n, d):
        blocks.setdefault(lam, []).append(xi_to_operator(x))
    alg = schur_algebra(n, d)
    units = matrix_units_from(blocks, alg.basis)
    central = []
    for lam, idems in blocks.items():
        z = idems[0]
        for e in idems[1:]:
            z = z + e
        central.append((lam, z))
    primitive = [(lam, i + 1, e) for lam, idems in blocks.items() for i, e in enumerate(idems)]
    return SemisimpleDecomposition(central, primitive, units)


class GLIrreps:
    """Polynomial GL_n irreducibles of degree d from matrix units of S(n,d):
    rho(g)[j][i] = tr(phi_d(g) e^{ij}) / tr(e^{11})."""

    def __init__(self, n: int, d: int, source: str = "auto", seed: int = 0):
        self.n, self.d = n, d
        self.decomposition = schur_decomposition(n, d, source, seed)
        self.labels = sorted(self.decomposition.labels(), reverse=True)
        self._cache = {}

    def dim(self, lam) -> int:
        return self.decomposition.block_size(Partition(lam))

    def matrix(self, lam, g: RatMatrix) -> RatMatrix:
        lam = Partition(lam)
        key = (lam, g)
        if key not in self._cache:
            units = self.decomposition.matrix_units
            k = self.dim(lam)
            phi = tensor_power(g, self.d)
            t11 = units[(lam, 1, 1)].trace()
            rows = [[phi.trace_product(units[(lam, i + 1, j + 1)]) / t11 for i in range(k)]
                    for j in range(k)]
            self._cache[key] = RatMatrix(rows, rows=k, cols=k)
        return self._cache[key]


class GLModule:
    """V_lam as the image of a Young symmetrizer on V^{(x)|lam|}; basis = RREF of
    the column space, action by restricting phi_d(g)."""

    def __init__(self, lam, n: int):
        self.lam = Partition(lam)
        self.n = n
        if len(self.lam) > n:
            raise ValueError(f"{self.lam} has more than {n} rows")
        d = self.lam.size()
        self.d = d
        y = young_symmetrizer(Tableau.row_reading(self.lam))
        op = None
        for w, c in y.support.items():
            t = place_permutation(w, n, d).scale(c)
            op = t if op is None else op + t
        self.projector = op if op is not None else RatMatrix.identity(1)
        red, _ = rref(self.projector.T)
        self.basis_t = red          # rows = basis vectors of the image
        self.dim = red.rows

    def matrix(self, g: RatMatrix) -> RatMatrix:
        """Column-convention matrix of g on the image: phi(g) B = B rho(g)."""
        phi = tensor_power(g, self.d)
        return solve(self.basis_t, self.basis_t @ phi.T).T


def gl_irrep_realization(lam, n: int) -> GLModule:
    return GLModule(lam, n)


def check_idempotent_table(n: int, d: int, printed: bool = False) -> list[tuple[str, bool, str]]:
    """Exact checks on the tabulated family: idempotent, pairwise orthogonal,
    summing to 1 on V^{(x)d}, primitive (dim eSe = 1 with e V_lam of dim 1 for
    its own label lam), and the number of idempotents per label equal to the
    hook-content dimension."""
    fam = schur_idempotents(n, d, printed=printed)
    ops = [(lam, xi_to_operator(x)) for lam, x in fam]
    size = n ** d
    out = []
    bad = [i for i, (_, e) in enumerate(ops) if e @ e != e]
    out.append(("idempotent", not bad, f"failing positions {bad}" if bad else f"{len(ops)} elements"))
    bad = [(i, j) for i, (_, e) in enumerate(ops) for j, (_, f) in enumerate(ops)
           if i != j and not (e @ f).is_zero()]
    out.append(("orthogonal", not bad, f"{len(bad)} nonzero products" if bad else "all products zero"))
    total = RatMatrix.zeros(size, size)
    for _, e in ops:
        total = total + e
    out.append(("sum is identity", total == RatMatrix.identity(size), ""))
    bad = []
    for i, (lam, e) in enumerate(ops):
        try:
            mult = symmetric_multiplicities(e, n, d)
        except ArithmeticError:
            mult = None
        if mult != {lam: 1}:
            bad.append(i)
    out.append(("primitive", not bad, f"failing positions {bad}" if bad else "dim eSe = 1 each"))
    counts: dict = {}
    for lam, _ in ops:
        counts[lam] = counts.get(lam, 0) + 1
    want = {lam: dim_gl_irrep(lam, n) for lam in partitions_of(d, n)}
    out.append(("hook-content multiplicities", counts == want,
                " ".join(f"{lam}:{counts.get(lam, 0)}/{want[lam]}" for lam in want)))
    return out
