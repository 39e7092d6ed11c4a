"""Exact rational matrices and the elimination kernels used everywhere else.

Vectors are rows and act on matrices from the left (x -> x*m).  Small
matrices are handled with plain Fraction arithmetic; beyond a size threshold
rank, reduced echelon forms, products and determinants go through
python-flint's fmpq/fmpz matrices.  Both routes produce identical results, the
reduced echelon form of a subspace being unique.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm

import flint

Rational = Fraction

# products / eliminations above this many entry operations use flint
FLINT_THRESHOLD = 4000


class InconsistentSystem(ValueError):
    """Raised by solve() when x*a = b has no solution."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatMatrix:
    """Immutable dense matrix over the rationals, row-major."""

    __slots__ = ("rows", "cols", "_e", "_hash")

    def __init__(self, data=None, rows: int | None = None, cols: int | None = None):
        if data is None:
            data = []
        data = [list(r) for r in data]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged or mis-sized matrix data")
        self.rows = rows
        self.cols = cols
        self._e = tuple(as_rational(x) for r in data for x in r)
        self._hash = None

    @classmethod
    def _raw(cls, rows: int, cols: int, entries) -> "RatMatrix":
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._e = tuple(entries)
        m._hash = None
        return m

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries) -> "RatMatrix":
        entries = [as_rational(x) for x in entries]
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows*cols")
        return cls._raw(rows, cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls._raw(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        e = [_ZERO] * (n * n)
        for i in range(n):
            e[i * n + i] = _ONE
        return cls._raw(n, n, e)

    @classmethod
    def diag(cls, values) -> "RatMatrix":
        values = [as_rational(v) for v in values]
        n = len(values)
        e = [_ZERO] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = v
        return cls._raw(n, n, e)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, items) -> "RatMatrix":
        """Build from (i, j, value) triples (0-based); repeated positions add up."""
        e = [_ZERO] * (rows * cols)
        for i, j, v in items:
            e[i * cols + j] += as_rational(v)
        return cls._raw(rows, cols, e)

    @classmethod
    def from_flint(cls, m) -> "RatMatrix":
        r, c = m.nrows(), m.ncols()
        if isinstance(m, flint.fmpz_mat):
            return cls._raw(r, c, [Fraction(int(x)) for x in m.entries()])
        return cls._raw(r, c, [Fraction(int(x.p), int(x.q)) for x in m.entries()])

    def to_flint(self):
        return flint.fmpq_mat(self.rows, self.cols,
                              [flint.fmpq(x.numerator, x.denominator) for x in self._e])

    # basic access
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        return self._e

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self._e[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self._e)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._e))
        return self._hash

    def __repr__(self):
        rows = ["[" + ", ".join(rat_str(x) for x in self.row(i)) + "]" for i in range(self.rows)]
        return f"RatMatrix({self.rows}x{self.cols}: [" + ", ".join(rows) + "])"

    # arithmetic
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same(other)
        return RatMatrix._raw(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same(other)
        return RatMatrix._raw(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self):
        return RatMatrix._raw(self.rows, self.cols, [-a for a in self._e])

    def scale(self, s) -> "RatMatrix":
        s = as_rational(s)
        return RatMatrix._raw(self.rows, self.cols, [s * a for a in self._e])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other):
        return self.matmul(other)

    def matmul(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self._e, other._e
        if n * k * m > 512:
            # estimated multiply-adds of the sparse product
            na = sum(1 for x in a if x)
            nb = sum(1 for x in b if x)
            if k and na * nb > FLINT_THRESHOLD * k:
                return RatMatrix.from_flint(self.to_flint() * other.to_flint())
        # sparse-aware schoolbook product
        out = [_ZERO] * (n * m)
        bcols = [[(j, b[t * m + j]) for j in range(m) if b[t * m + j]] for t in range(k)]
        for i in range(n):
            base = i * m
            for t in range(k):
                x = a[i * k + t]
                if x:
                    for j, y in bcols[t]:
                        out[base + j] += x * y
        return RatMatrix._raw(n, m, out)

    def __pow__(self, p: int):
        if not self.is_square() or p < 0:
            raise ValueError("power needs a square matrix and p >= 0")
        result = RatMatrix.identity(self.rows)
        base = self
        while p:
            if p & 1:
                result = result @ base
            base = base @ base
            p >>= 1
        return result

    @property
    def T(self) -> "RatMatrix":
        r, c = self.rows, self.cols
        e = self._e
        return RatMatrix._raw(c, r, [e[i * c + j] for j in range(c) for i in range(r)])

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        return sum((self._e[i * self.cols + i] for i in range(self.rows)), _ZERO)

    def trace_product(self, other: "RatMatrix") -> Fraction:
        """trace(self @ other) without forming the product."""
        if self.cols != other.rows or self.rows != other.cols:
            raise ValueError("trace_product needs shapes (n,m) and (m,n)")
        a, b = self._e, other._e
        n, m = self.rows, self.cols
        total = _ZERO
        for i in range(n):
            for k in range(m):
                x = a[i * m + k]
                if x:
                    y = b[k * n + i]
                    if y:
                        total += x * y
        return total

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        out = [_ZERO] * (r1 * r2 * c1 * c2)
        width = c1 * c2
        for i in range(r1):
            for j in range(c1):
                x = self._e[i * c1 + j]
                if not x:
                    continue
                for p in range(r2):
                    row = (i * r2 + p) * width + j * c2
                    for q in range(c2):
                        y = other._e[p * c2 + q]
                        if y:
                            out[row + q] = x * y
        return RatMatrix._raw(r1 * r2, c1 * c2, out)

    def submatrix(self, rows, cols) -> "RatMatrix":
        rows, cols = list(rows), list(cols)
        return RatMatrix._raw(len(rows), len(cols),
                              [self._e[i * self.cols + j] for i in rows for j in cols])

    def map(self, fn) -> "RatMatrix":
        return RatMatrix._raw(self.rows, self.cols, [as_rational(fn(x)) for x in self._e])


def hstack(mats) -> RatMatrix:
    mats = list(mats)
    if not mats:
        return RatMatrix.zeros(0, 0)
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("hstack needs equal row counts")
    data = []
    for i in range(rows):
        for m in mats:
            data.extend(m.row(i))
    return RatMatrix._raw(rows, sum(m.cols for m in mats), data)


def vstack(mats) -> RatMatrix:
    mats = list(mats)
    if not mats:
        return RatMatrix.zeros(0, 0)
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("vstack needs equal column counts")
    data = []
    for m in mats:
        data.extend(m.entries)
    return RatMatrix._raw(sum(m.rows for m in mats), cols, data)


def block_diag(mats) -> RatMatrix:
    mats = list(mats)
    r = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    items = []
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                x = m[i, j]
                if x:
                    items.append((r0 + i, c0 + j, x))
        r0 += m.rows
        c0 += m.cols
    return RatMatrix.from_sparse(r, c, items)


def block_matrix(grid, row_sizes, col_sizes) -> RatMatrix:
    """Assemble from a grid of blocks; None entries are zero blocks."""
    items = []
    r0 = 0
    for bi, rs in enumerate(row_sizes):
        c0 = 0
        for bj, cs in enumerate(col_sizes):
            b = grid[bi][bj]
            if b is not None:
                if b.shape != (rs, cs):
                    raise ValueError(f"block ({bi},{bj}) has shape {b.shape}, expected {(rs, cs)}")
                for i in range(rs):
                    for j in range(cs):
                        x = b[i, j]
                        if x:
                            items.append((r0 + i, c0 + j, x))
            c0 += cs
        r0 += rs
    return RatMatrix.from_sparse(sum(row_sizes), sum(col_sizes), items)


# ----------------------------------------------------------------------
# elimination kernels


def _rref_python(rows: list[list[Fraction]], ncols: int):
    """Gauss-Jordan in place; pivots leftmost column first, topmost row."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nz:
                        ri[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _rref_flint(m: RatMatrix):
    fm, rank = m.to_flint().rref()
    out = RatMatrix.from_flint(fm)
    pivots = []
    for i in range(rank):
        row = out.row(i)
        pivots.append(next(j for j, x in enumerate(row) if x))
    return out.submatrix(range(rank), range(out.cols)), pivots


def rref(m: RatMatrix, backend: str = "auto"):
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    if backend == "auto":
        backend = "flint" if m.rows * m.cols > FLINT_THRESHOLD else "python"
    if backend == "flint":
        if m.rows == 0 or m.cols == 0:
            return RatMatrix.zeros(0, m.cols), []
        return _rref_flint(m)
    rows, piv = _rref_python(m.tolist(), m.cols)
    return RatMatrix._raw(len(rows), m.cols, [x for r in rows for x in r]), piv


def rank(m: RatMatrix, backend: str = "auto") -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if backend == "auto":
        backend = "flint" if m.rows * m.cols > FLINT_THRESHOLD else "python"
    if backend == "flint":
        return m.to_flint().rank()
    return len(rref(m, backend="python")[1])


def kernel_basis(m: RatMatrix, backend: str = "auto") -> list[tuple]:
    """Basis of {x : x*m = 0}, returned as rows of a reduced echelon matrix."""
    n = m.rows
    if n == 0:
        return []
    red, piv = rref(m.T, backend)
    pivset = set(piv)
    vecs = []
    for f in range(n):
        if f in pivset:
            continue
        v = [_ZERO] * n
        v[f] = _ONE
        for i, p in enumerate(piv):
            x = red[i, f]
            if x:
                v[p] = -x
        vecs.append(v)
    if not vecs:
        return []
    basis, _ = rref(RatMatrix(vecs), backend)
    return [basis.row(i) for i in range(basis.rows)]


def kernel_matrix(m: RatMatrix, backend: str = "auto") -> RatMatrix:
    rows = kernel_basis(m, backend)
    return RatMatrix(rows, rows=len(rows), cols=m.rows)


def row_space(m: RatMatrix, backend: str = "auto") -> RatMatrix:
    return rref(m, backend)[0]


def _bareiss_det(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    if n == 0:
        return _ONE
    # clear denominators row by row so the elimination stays in the integers
    scale = _ONE
    m = []
    for row in a:
        d = reduce(lcm, (x.denominator for x in row), 1)
        scale *= d
        m.append([int(x * d) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return _ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pk - mik * mk[j]) // prev
        prev = pk
    return Fraction(sign * m[n - 1][n - 1]) / scale


def det(m: RatMatrix, backend: str = "auto") -> Fraction:
    """Exact determinant (Bareiss on the integer-scaled matrix)."""
    if not m.is_square():
        raise ValueError(f"det of non-square {m.shape} matrix")
    if backend == "auto":
        backend = "flint" if m.rows > 24 else "python"
    if backend == "flint":
        if m.rows == 0:
            return _ONE
        return as_rational(m.to_flint().det())
    return _bareiss_det(m.tolist())


def solve(a: RatMatrix, b: RatMatrix, backend: str = "auto") -> RatMatrix:
    """Some x with x*a = b; free variables are set to zero.

    Raises InconsistentSystem when no solution exists.
    """
    if a.cols != b.cols:
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    aug = hstack([a.T, b.T])
    red, piv = rref(aug, backend)
    if any(p >= a.rows for p in piv):
        raise InconsistentSystem("x*a = b has no solution")
    x = [[_ZERO] * a.rows for _ in range(b.rows)]
    for i, p in enumerate(piv):
        for r in range(b.rows):
            x[r][p] = red[i, a.rows + r]
    return RatMatrix(x, rows=b.rows, cols=a.rows)


def inverse(m: RatMatrix) -> RatMatrix:
    if not m.is_square():
        raise ValueError("inverse of non-square matrix")
    try:
        return solve(m, RatMatrix.identity(m.rows))
    except InconsistentSystem:
        raise ValueError("matrix is singular") from None


def random_matrix(rows: int, cols: int, rng: random.Random, height: int = 5) -> RatMatrix:
    return RatMatrix._raw(rows, cols, [Fraction(rng.randint(-height, height))
                                        for _ in range(rows * cols)])


def random_invertible(n: int, rng: random.Random, height: int = 3) -> RatMatrix:
    while True:
        m = random_matrix(n, n, rng, height)
        if n == 0 or det(m) != 0:
            return m


# ----------------------------------------------------------------------
# Yale triplets and text interchange


@dataclass(frozen=True)
class YaleTriplet:
    """Three parallel lists: values, 1-based row indices, 1-based column indices."""

    values: tuple
    row_indices: tuple
    col_indices: tuple

    def __post_init__(self):
        if not (len(self.values) == len(self.row_indices) == len(self.col_indices)):
            raise ValueError("Yale triplet lists must have equal length")

    def scaled(self, s) -> "YaleTriplet":
        s = as_rational(s)
        return YaleTriplet(tuple(s * v for v in self.values), self.row_indices, self.col_indices)

    def lines(self) -> list[str]:
        return [" ".join(rat_str(v) for v in self.values),
                " ".join(str(i) for i in self.row_indices),
                " ".join(str(j) for j in self.col_indices)]


def to_yale(m: RatMatrix) -> YaleTriplet:
    vals, ri, ci = [], [], []
    for i in range(m.rows):
        for j in range(m.cols):
            x = m[i, j]
            if x:
                vals.append(x)
                ri.append(i + 1)
                ci.append(j + 1)
    return YaleTriplet(tuple(vals), tuple(ri), tuple(ci))


def from_yale(t: YaleTriplet, shape: tuple[int, int]) -> RatMatrix:
    rows, cols = shape
    items = []
    seen = set()
    for v, i, j in zip(t.values, t.row_indices, t.col_indices):
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ValueError(f"index ({i},{j}) outside shape {shape}")
        if (i, j) in seen:
            raise ValueError(f"duplicate index ({i},{j})")
        seen.add((i, j))
        items.append((i - 1, j - 1, as_rational(v)))
    return RatMatrix.from_sparse(rows, cols, items)


def matrix_to_dict(m: RatMatrix) -> dict:
    return {"shape": [m.rows, m.cols], "entries": [rat_str(x) for x in m.entries]}


def matrix_from_dict(d: dict) -> RatMatrix:
    r, c = d["shape"]
    return RatMatrix.from_flat(r, c, [Fraction(s) for s in d["entries"]])


def yale_to_dict(t: YaleTriplet, shape) -> dict:
    return {"shape": list(shape),
            "values": [rat_str(v) for v in t.values],
            "rows": list(t.row_indices),
            "cols": list(t.col_indices)}


def yale_from_dict(d: dict) -> tuple[YaleTriplet, tuple[int, int]]:
    t = YaleTriplet(tuple(Fraction(v) for v in d["values"]), tuple(d["rows"]), tuple(d["cols"]))
    return t, tuple(d["shape"])


def dumps_matrix(m: RatMatrix) -> str:
    return json.dumps(matrix_to_dict(m))


def loads_matrix(s: str) -> RatMatrix:
    return matrix_from_dict(json.loads(s))


def sparse_to_flint(rows: int, cols: int, items):
    """fmpq_mat from (i, j, value) triples; repeated positions add up."""
    acc: dict = {}
    for i, j, v in items:
        acc[(i, j)] = acc.get((i, j), _ZERO) + as_rational(v)
    m = flint.fmpq_mat(rows, cols)
    for (i, j), v in acc.items():
        if v:
            m[i, j] = flint.fmpq(v.numerator, v.denominator)
    return m


def sparse_left_kernel(rows: int, cols: int, items) -> list[tuple]:
    """kernel_basis() for a matrix given by sparse triples, without a dense
    Fraction copy.  Same reduced echelon output."""
    if rows == 0:
        return []
    if cols == 0:
        return [tuple(Fraction(int(i == j)) for j in range(rows)) for i in range(rows)]
    mt = sparse_to_flint(cols, rows, ((j, i, v) for i, j, v in items))
    red, rk = mt.rref()
    piv = []
    for i in range(rk):
        piv.append(next(j for j in range(rows) if red[i, j] != 0))
    pivset = set(piv)
    vecs = []
    for f in range(rows):
        if f in pivset:
            continue
        v = [_ZERO] * rows
        v[f] = _ONE
        for i, p in enumerate(piv):
            x = red[i, f]
            if x != 0:
                v[p] = -Fraction(int(x.p), int(x.q))
        vecs.append(v)
    if not vecs:
        return []
    basis, _ = rref(RatMatrix(vecs))
    return [basis.row(i) for i in range(basis.rows)]


def sparse_rank(rows: int, cols: int, items) -> int:
    if rows == 0 or cols == 0:
        return 0
    return sparse_to_flint(rows, cols, items).rank()
