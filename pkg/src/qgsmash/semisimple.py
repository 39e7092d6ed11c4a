"""Wedderburn machinery for split semisimple matrix algebras over the rationals:
radical, center, central and primitive idempotents, matrix units, and
idempotents of (not necessarily semisimple) endomorphism algebras."""
from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

import flint

from .linalg import (InconsistentSystem, RatMatrix, as_rational, kernel_basis, rank, rref,
                     solve)


class DecompositionError(RuntimeError):
    pass


def flatten(ms) -> RatMatrix:
    ms = list(ms)
    if not ms:
        return RatMatrix.zeros(0, 0)
    return RatMatrix([m.entries for m in ms], rows=len(ms), cols=len(ms[0].entries))


def span_basis(elements) -> list[RatMatrix]:
    """Reduced-echelon basis of the span of square matrices of one size."""
    elements = list(elements)
    if not elements:
        return []
    r, c = elements[0].shape
    red, _ = rref(flatten(elements))
    return [RatMatrix.from_flat(r, c, red.row(i)) for i in range(red.rows)]


def span_dim(elements) -> int:
    elements = list(elements)
    return rank(flatten(elements)) if elements else 0


class MatrixAlgebra:
    """Algebra spanned by square rational matrices (a faithful realization)."""

    def __init__(self, basis, check: bool = True, name: str | None = None):
        basis = list(basis)
        if not basis:
            raise ValueError("empty basis")
        n = basis[0].rows
        if any(b.shape != (n, n) for b in basis):
            raise ValueError("basis matrices must be square of one size")
        self.basis = basis
        self.size = n
        self.name = name
        self._flat = flatten(basis)
        if check:
            if rank(self._flat) != len(basis):
                raise ValueError("basis elements are linearly dependent")
            for x in basis:
                for y in basis:
                    self.coords(x @ y)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: RatMatrix) -> tuple:
        """Coordinates of x in the basis; raises if x is not in the algebra."""
        try:
            sol = solve(self._flat, RatMatrix([x.entries]))
        except InconsistentSystem:
            raise ValueError("element is not in the algebra") from None
        return sol.row(0)

    def contains(self, x: RatMatrix) -> bool:
        try:
            self.coords(x)
            return True
        except ValueError:
            return False

    def element(self, coeffs) -> RatMatrix:
        out = RatMatrix.zeros(self.size, self.size)
        for c, b in zip(coeffs, self.basis):
            c = as_rational(c)
            if c:
                out = out + b.scale(c)
        return out

    def identity(self) -> RatMatrix:
        """The unit of the algebra (not always the identity matrix)."""
        # unit u solves u*b = b*u = b for all basis b; solve linearly in coordinates
        n2 = self.size * self.size
        rows = []
        for bi in self.basis:
            row = []
            for bj in self.basis:
                row.extend((bi @ bj).entries)
                row.extend((bj @ bi).entries)
            rows.append(row)
        target = []
        for bj in self.basis:
            target.extend(bj.entries)
            target.extend(bj.entries)
        a = RatMatrix(rows, rows=self.dim, cols=2 * n2 * self.dim)
        sol = solve(a, RatMatrix([target]))
        return self.element(sol.row(0))

    def random_element(self, rng: random.Random, height: int = 3) -> RatMatrix:
        return self.element([rng.randint(-height, height) for _ in self.basis])


# ----------------------------------------------------------------------
# polynomials in matrices


def minimal_polynomial(x: RatMatrix):
    return x.to_flint().minpoly()


def poly_eval(p, x: RatMatrix, one: RatMatrix) -> RatMatrix:
    coeffs = [as_rational(c) for c in p.coeffs()]
    out = RatMatrix.zeros(x.rows, x.cols)
    for c in reversed(coeffs):
        out = out @ x
        if c:
            out = out + one.scale(c)
    return out


def primary_idempotents(x: RatMatrix, one: RatMatrix) -> list[tuple]:
    """Split `one` along the primary decomposition of x inside the corner
    algebra with unit `one`.  Returns (factor, idempotent) pairs; zero pieces
    are dropped."""
    m = minimal_polynomial(x)
    _, factors = m.factor()
    if len(factors) == 1:
        return [(factors[0][0], one)]
    out = []
    for f, k in factors:
        q = f ** k
        big = m // q
        g, s, _ = big.xgcd(q)
        if g != 1:
            raise DecompositionError("non-coprime primary factors")
        e = poly_eval((s * big) % m, x, one)
        if not e.is_zero():
            out.append((f, e))
    return out


def lagrange_idempotents(x: RatMatrix, one: RatMatrix, roots) -> list[tuple]:
    """Eigenprojections of a diagonalizable x with the given distinct rational roots."""
    out = []
    for i, r in enumerate(roots):
        e = one
        for j, s in enumerate(roots):
            if j != i:
                e = (e @ (x - one.scale(s))).scale(Fraction(1) / (r - s))
        out.append((r, e))
    return out


# ----------------------------------------------------------------------
# radical, center


def radical(alg: MatrixAlgebra) -> list[RatMatrix]:
    """Kernel of the trace form (x, y) -> tr(xy) on the realization."""
    gram = RatMatrix([[(a @ b).trace() for b in alg.basis] for a in alg.basis])
    return [alg.element(v) for v in kernel_basis(gram)]


def center(alg: MatrixAlgebra) -> list[RatMatrix]:
    rows = []
    for bi in alg.basis:
        row = []
        for bj in alg.basis:
            row.extend((bi @ bj - bj @ bi).entries)
        rows.append(row)
    a = RatMatrix(rows, rows=alg.dim, cols=len(rows[0]))
    return [alg.element(v) for v in kernel_basis(a)]


class SemisimpleDecomposition:
    """Central idempotents, primitive idempotents and matrix units.

    Copy indices are 1-based so that (label, 1, 1) is the designated e^{11}.
    """

    def __init__(self, central, primitive, units):
        self.central_idempotents = central          # list of (label, element)
        self.primitive_idempotents = primitive      # list of (label, copy, element)
        self.matrix_units = units                   # (label, i, j) -> element

    def labels(self):
        return [lab for lab, _ in self.central_idempotents]

    def block_size(self, label) -> int:
        return sum(1 for lab, _, _ in self.primitive_idempotents if lab == label)

    def unit(self, label, i, j) -> RatMatrix:
        return self.matrix_units[(label, i, j)]

    def __repr__(self):
        sizes = ", ".join(f"{lab}:{self.block_size(lab)}" for lab in self.labels())
        return f"SemisimpleDecomposition({sizes})"


def central_idempotents(alg: MatrixAlgebra, rng: random.Random, one=None, budget: int = 20):
    cen = center(alg)
    if one is None:
        one = alg.identity()
    if len(cen) == 1:
        return [one]
    for _ in range(budget):
        c = RatMatrix.zeros(alg.size, alg.size)
        for z in cen:
            c = c + z.scale(rng.randint(-20, 20))
        m = minimal_polynomial(c)
        roots = [as_rational(r) for r, _ in m.roots()]
        idems = [e for _, e in lagrange_idempotents(c, one, roots)
                 if not e.is_zero()] if len(roots) >= len(cen) else []
        if len(idems) == len(cen):
            return idems
    raise DecompositionError("center does not split over the rationals within the retry budget")


def corner_dim(e: RatMatrix, spanning) -> int:
    """dim eAe, computed in flint since it sits in every inner loop."""
    spanning = list(spanning)
    if not spanning:
        return 0
    fe = e.to_flint()
    rows = []
    for b in spanning:
        rows.extend((fe * b.to_flint() * fe).entries())
    return flint.fmpq_mat(len(spanning), e.rows * e.cols, rows).rank()


def split_block(e: RatMatrix, spanning, block_dim: int, rng: random.Random,
                hint=None, budget: int = 20) -> list[RatMatrix]:
    """Primitive orthogonal idempotents summing to the central idempotent e of a
    block isomorphic to Mat_m, m^2 = block_dim."""
    m = isqrt(block_dim)
    if m * m != block_dim:
        raise DecompositionError(f"block of dimension {block_dim} is not a full matrix algebra")
    if m == 1:
        return [e]
    pending = [(e, m)]
    done = []
    failures = 0
    while pending:
        f, size = pending.pop()
        if size == 1:
            done.append(f)
            continue
        if hint:
            x = RatMatrix.zeros(e.rows, e.cols)
            for h in hint:
                x = x + h.scale(rng.randint(-50, 50))
        else:
            x = RatMatrix.zeros(e.rows, e.cols)
            for b in spanning:
                if rng.random() < 0.5:
                    x = x + b.scale(rng.randint(-2, 2))
        x = f @ x @ f
        pieces = [g for _, g in primary_idempotents(x, f)]
        if len(pieces) == 1:
            failures += 1
            if failures > budget:
                raise DecompositionError("no splitting element found within the retry budget")
            pending.append((f, size))
            continue
        for g in pieces:
            # rank of g on the faithful module tracks its share of the block
            sub = isqrt(corner_dim(g, spanning))
            pending.append((g, sub))
    return done


def matrix_units_from(blocks: dict, spanning) -> dict:
    """blocks: label -> ordered list of primitive idempotents of one block.
    Returns (label, i, j) -> e^{ij} with 1-based indices."""
    spanning = list(spanning)
    units = {}
    for label, idems in blocks.items():
        e1 = idems[0]
        up = [e1]       # e^{1j}
        down = [e1]     # e^{j1}
        for ej in idems[1:]:
            u = next((e1 @ b @ ej for b in spanning if not (e1 @ b @ ej).is_zero()), None)
            w = next((ej @ b @ e1 for b in spanning if not (ej @ b @ e1).is_zero()), None)
            if u is None or w is None:
                raise DecompositionError(f"idempotents of block {label} are not linked")
            prod = u @ w
            # prod lies in e1 A e1 = Q e1
            lam = next(p / q for p, q in zip(prod.entries, e1.entries) if q)
            if lam == 0:
                raise DecompositionError(f"degenerate link in block {label}")
            up.append(u)
            down.append(w.scale(Fraction(1) / lam))
        k = len(idems)
        for i in range(k):
            for j in range(k):
                units[(label, i + 1, j + 1)] = idems[0] if i == j == 0 else down[i] @ up[j]
    return units


def decompose(alg: MatrixAlgebra, seed: int = 0, labeler=None, hint=None,
              check_radical: bool = True, central=None) -> SemisimpleDecomposition:
    """Full Wedderburn data of a split semisimple algebra.

    labeler(central_idempotent) -> label, defaults to (block size, discovery index).
    central: optional precomputed (label, central idempotent) pairs.
    hint: elements generating a split commutative subalgebra; random
    combinations of them are used to refine blocks.
    """
    rng = random.Random(seed)
    if check_radical and radical(alg):
        raise DecompositionError("algebra has a nonzero radical")
    if central is None:
        one = alg.identity()
        cents = [(None, z) for z in central_idempotents(alg, rng, one)]
    else:
        cents = list(central)
    central, primitive, blocks = [], [], {}
    for k, (given, z) in enumerate(cents):
        bdim = corner_dim(z, alg.basis)
        if given is not None:
            label = given
        else:
            label = labeler(z) if labeler else (isqrt(bdim), k)
        hint_z = [z @ h for h in hint] if hint else None
        prims = split_block(z, alg.basis, bdim, rng, hint_z)
        for p in prims:
            if corner_dim(p, alg.basis) != 1:
                raise DecompositionError(f"idempotent in block {label} is not primitive")
        central.append((label, z))
        blocks[label] = prims
        primitive.extend((label, i + 1, p) for i, p in enumerate(prims))
    units = matrix_units_from(blocks, alg.basis)
    return SemisimpleDecomposition(central, primitive, units)


# ----------------------------------------------------------------------
# endomorphism algebras that need not be semisimple


def _is_local(e: RatMatrix, spanning) -> bool:
    corner = span_basis(e @ b @ e for b in spanning)
    gram = RatMatrix([[(a @ b).trace() for b in corner] for a in corner])
    # eAe / rad(eAe) is one-dimensional; rad is the kernel of the trace form
    return rank(gram) == 1


def idempotents_in_end(alg: MatrixAlgebra, seed: int = 0, probe_vectors=None,
                       budget: int = 60) -> list[RatMatrix]:
    """Complete set of primitive orthogonal idempotents of a unital matrix
    algebra (typically End(M)).  Idempotents are polynomials in algebra
    elements, so they live in the algebra itself and need no lifting.

    probe_vectors: optional list of coordinate-projection index lists; each
    names a block of coordinates (a vertex space) used to search for elements
    killing a random vector there, which makes splitting reliable.
    """
    rng = random.Random(seed)
    one = alg.identity()
    spanning = alg.basis
    pending = [one]
    done = []
    failures = 0
    while pending:
        e = pending.pop()
        if _is_local(e, spanning):
            done.append(e)
            continue
        corner = span_basis(e @ b @ e for b in spanning)
        x = None
        if probe_vectors and rng.random() < 0.7:
            idx = rng.choice(probe_vectors)
            if idx:
                # elements of the corner annihilating a random vector supported on idx
                v = [Fraction(0)] * alg.size
                for i in idx:
                    v[i] = Fraction(rng.randint(-3, 3))
                vrow = RatMatrix([v])
                imgs = RatMatrix([(vrow @ c).entries for c in corner],
                                 rows=len(corner), cols=alg.size)
                ker = kernel_basis(imgs)
                if ker:
                    x = RatMatrix.zeros(alg.size, alg.size)
                    for coeffs in ker:
                        s = rng.randint(-3, 3)
                        for c, b in zip(coeffs, corner):
                            if c and s:
                                x = x + b.scale(c * s)
        if x is None:
            x = RatMatrix.zeros(alg.size, alg.size)
            for b in corner:
                if rng.random() < 0.6:
                    x = x + b.scale(rng.randint(-3, 3))
        pieces = [g for _, g in primary_idempotents(e @ x @ e, e)]
        if len(pieces) == 1:
            failures += 1
            if failures > budget:
                raise DecompositionError("could not split endomorphism algebra")
            pending.append(e)
            continue
        pending.extend(pieces)
    return done
