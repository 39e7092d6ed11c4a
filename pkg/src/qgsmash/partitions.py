"""Partitions, tableaux, symmetric group characters and the coefficient
families (branching, Littlewood-Richardson, Kronecker)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod


class Partition:
    """Weakly decreasing tuple of positive parts.  Compares as its tuple."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"partition token must look like [2,1], got {text!r}")
        body = text[1:-1].strip()
        return cls([int(x) for x in body.split(",")] if body else [])

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    def size(self) -> int:
        return sum(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self):
        return f"Partition({str(self)})"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for p in self.parts if p > j) for j in range(self.parts[0])])

    def cells(self):
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield (i, j)

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate()
        return [self.parts[i] - j + conj[j] - i - 1 for i, j in self.cells()]

    def contents(self) -> list[int]:
        return [j - i for i, j in self.cells()]

    def addable(self) -> list["Partition"]:
        """Partitions obtained by adding one box, in reverse-lex order."""
        out = []
        for i in range(len(self.parts) + 1):
            if i == 0 or self[i] < self[i - 1]:
                new = list(self.parts) + [0]
                new[i] += 1
                out.append(Partition(new))
        return sorted(out, reverse=True)

    def removable(self) -> list["Partition"]:
        out = []
        for i in range(len(self.parts)):
            if self[i] > self[i + 1]:
                new = list(self.parts)
                new[i] -= 1
                out.append(Partition(new))
        return sorted(out, reverse=True)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(len(other)))


def _as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


@lru_cache(maxsize=None)
def _partitions(d: int, max_part: int, max_rows: int) -> tuple:
    if d == 0:
        return ((),)
    if max_rows == 0:
        return ()
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, first, max_rows - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions of d with at most max_rows parts, reverse-lexicographic."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if max_rows is None:
        max_rows = d
    return [Partition(p) for p in _partitions(d, d, max_rows)]


def hook_product(lam) -> int:
    return prod(_as_partition(lam).hook_lengths())


def dim_symgroup_irrep(lam) -> int:
    lam = _as_partition(lam)
    return factorial(lam.size()) // hook_product(lam)


def dim_gl_irrep(lam, n: int) -> int:
    """Hook-content formula for the polynomial GL_n irreducible of highest weight lam."""
    lam = _as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    num = prod(n + c for c in lam.contents())
    return num // hook_product(lam)


# ----------------------------------------------------------------------
# characters via Murnaghan-Nakayama on beta-sets


def _beta_set(parts, length):
    parts = list(parts) + [0] * (length - len(parts))
    return tuple(parts[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: tuple, cycles: tuple) -> int:
    if not cycles:
        return 1
    r = cycles[0]
    rest = cycles[1:]
    total = 0
    bset = set(beta)
    for b in beta:
        if b - r >= 0 and (b - r) not in bset:
            # height of the rim hook = number of beads strictly between
            sign = -1 if sum(1 for c in beta if b - r < c < b) % 2 else 1
            new = tuple(sorted((c if c != b else b - r) for c in beta), )[::-1]
            total += sign * _mn(new, rest)
    return total


def symgroup_character(lam, cls) -> int:
    """chi_lam on the class of cycle type cls (Murnaghan-Nakayama)."""
    lam, cls = _as_partition(lam), _as_partition(cls)
    if lam.size() != cls.size():
        raise ValueError(f"size mismatch: {lam} vs class {cls}")
    length = max(len(lam), 1)
    return _mn(_beta_set(lam.parts, length), cls.parts)


def class_size(cls) -> int:
    cls = _as_partition(cls)
    d = cls.size()
    denom = 1
    for k in set(cls.parts):
        m = cls.parts.count(k)
        denom *= k ** m * factorial(m)
    return factorial(d) // denom


@lru_cache(maxsize=None)
def character_table(d: int) -> tuple:
    """(partitions, classes, table) with table[i][j] = chi_{parts[i]}(classes[j])."""
    parts = partitions_of(d)
    table = tuple(tuple(symgroup_character(l, c) for c in parts) for l in parts)
    return tuple(parts), tuple(parts), table


def kronecker(rho, pi, sigma) -> int:
    """Multiplicity of V_sigma in V_rho (x) V_pi for the symmetric group."""
    rho, pi, sigma = map(_as_partition, (rho, pi, sigma))
    d = rho.size()
    if pi.size() != d or sigma.size() != d:
        raise ValueError("kronecker coefficient needs partitions of equal size")
    total = 0
    for c in partitions_of(d):
        total += class_size(c) * symgroup_character(rho, c) * symgroup_character(pi, c) \
            * symgroup_character(sigma, c)
    val = Fraction(total, factorial(d))
    assert val.denominator == 1
    return int(val)


# ----------------------------------------------------------------------
# Littlewood-Richardson by lattice-word backtracking


def lr_coefficient(lam, mu, nu) -> int:
    """Number of LR tableaux of skew shape nu/lam and content mu."""
    lam, mu, nu = map(_as_partition, (lam, mu, nu))
    if lam.size() + mu.size() != nu.size() or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if len(mu) == 0:
        return 1 if lam == nu else 0
    # cells of nu/lam in reading order: rows top to bottom, each row right to left
    cells = []
    for i in range(len(nu)):
        for j in range(nu[i] - 1, lam[i] - 1, -1):
            cells.append((i, j))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(mu)

    def ok(i, j, v):
        # rows weakly increase left to right; cell to the right is filled already
        right = filling.get((i, j + 1))
        if right is not None and right < v:
            return False
        # columns strictly increase downward
        if i > 0 and j >= lam[i - 1]:
            above = filling.get((i - 1, j))
            if above is not None and above >= v:
                return False
        return True

    def rec(k):
        if k == len(cells):
            return 1
        i, j = cells[k]
        total = 0
        for v in range(len(mu)):
            if counts[v] >= mu[v]:
                continue
            # lattice condition on the reading word
            if v > 0 and counts[v] + 1 > counts[v - 1]:
                continue
            if not ok(i, j, v):
                continue
            filling[(i, j)] = v
            counts[v] += 1
            total += rec(k + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return rec(0)


def branching_multiplicity(rho, sigma) -> int:
    """Multiplicity of rho (size n-1) in the restriction of sigma (size n)."""
    rho, sigma = _as_partition(rho), _as_partition(sigma)
    if rho.size() + 1 != sigma.size():
        raise ValueError("branching needs sizes n-1 and n")
    return lr_coefficient(rho, Partition([1]), sigma)


# ----------------------------------------------------------------------
# tableaux


class Tableau:
    """A filling of a Young diagram by 1..d, stored row by row."""

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows if len(r))
        self.rows = rows
        self.shape = Partition([len(r) for r in rows])
        d = self.shape.size()
        if sorted(x for r in rows for x in r) != list(range(1, d + 1)):
            raise ValueError("tableau filling must use 1..d exactly once")

    def is_standard(self) -> bool:
        for r in self.rows:
            if any(r[k] >= r[k + 1] for k in range(len(r) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            for j in range(len(self.rows[i + 1])):
                if self.rows[i][j] >= self.rows[i + 1][j]:
                    return False
        return True

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.rows if j < len(r))
                for j in range(len(self.rows[0]))] if self.rows else []

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    @classmethod
    def row_reading(cls, shape) -> "Tableau":
        shape = _as_partition(shape)
        rows, k = [], 1
        for p in shape:
            rows.append(tuple(range(k, k + p)))
            k += p
        return cls(rows)


def standard_tableaux(shape) -> list[Tableau]:
    """All standard tableaux of the shape, ordered by the sequence of rows
    holding 1, 2, ..., d (lexicographically)."""
    shape = _as_partition(shape)
    d = shape.size()
    out = []

    def rec(k, rows):
        if k > d:
            out.append(Tableau(rows))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1, rows)
                rows[i].pop()

    rec(1, [[] for _ in shape])
    return out


def brute_force_lr(lam, mu, nu) -> int:
    """Reference LR count: enumerate all semistandard fillings of nu/lam with content mu
    and keep those whose reverse reading word is a lattice word.  Slow; tests only."""
    lam, mu, nu = map(_as_partition, (lam, mu, nu))
    if lam.size() + mu.size() != nu.size() or not nu.contains(lam):
        return 0
    cells = [(i, j) for i in range(len(nu)) for j in range(lam[i], nu[i])]
    word = [v for v in range(len(mu)) for _ in range(mu[v])]
    count = 0
    for perm in set(permutations(word)):
        fill = dict(zip(cells, perm))
        good = True
        for (i, j), v in fill.items():
            if (i, j + 1) in fill and fill[(i, j + 1)] < v:
                good = False
                break
            if (i + 1, j) in fill and fill[(i + 1, j)] <= v:
                good = False
                break
        if not good:
            continue
        reading = [fill[(i, j)] for i in range(len(nu)) for j in range(nu[i] - 1, lam[i] - 1, -1)]
        seen = [0] * len(mu)
        for v in reading:
            seen[v] += 1
            if v > 0 and seen[v] > seen[v - 1]:
                good = False
                break
        count += good
    return count
