"""Slow reference implementations used only by the tests."""
from fractions import Fraction
from itertools import permutations, product
from math import factorial


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def naive_matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def gauss_rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def perm_sign(p):
    seen, sign = set(), 1
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cycle_type(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def ssyt_count(shape, n):
    """Semistandard tableaux of the shape with entries 1..n, by enumeration."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    count = 0
    for vals in product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all((j == 0 or t[(i, j - 1)] <= t[(i, j)]) and (i == 0 or t[(i - 1, j)] < t[(i, j)])
               for i, j in cells):
            count += 1
    return count


def syt_count(shape):
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    count = 0
    for vals in permutations(range(len(cells))):
        t = dict(zip(cells, vals))
        if all((j == 0 or t[(i, j - 1)] < t[(i, j)]) and (i == 0 or t[(i - 1, j)] < t[(i, j)])
               for i, j in cells):
            count += 1
    return count


def permutation_module_character(d, parts_fixed, p):
    """Character of the permutation module on words with content parts_fixed
    (Young permutation module M^mu): number of words fixed by p."""
    letters = [k for k, c in enumerate(parts_fixed) for _ in range(c)]
    words = set(permutations(letters))
    return sum(1 for w in words if all(w[p[i]] == w[i] for i in range(d)))


def group_order(d):
    return factorial(d)
