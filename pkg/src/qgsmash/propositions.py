"""Semi-invariant families cut out of the printed R_c matrices.

A family is a sub-block (row range x column range) of a template evaluated
with random a x a matrices for its symbols and zero for the rest.  The target
dimension vector alpha is the primitive solution of <alpha, beta> = 0 on a
two-vertex Kronecker quiver, scaled by a.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .linalg import RatMatrix, random_matrix
from .quiver import Representation
from . import templates


@dataclass(frozen=True)
class Family:
    name: str
    template: str           # key into TEMPLATES
    symbols: tuple          # symbols set to random matrices
    rows: tuple             # (start, stop) at a = 1
    cols: tuple
    n: int                  # number of arrows of K_n
    datum: str              # "natural" or "sym2"


TEMPLATES = {
    "k3-first": lambda: templates.template_kn_first(3),
    "k4-first": lambda: templates.template_kn_first(4),
    "k3-second": templates.template_k3_second,
    "k3-sym2": templates.template_k3_sym2,
}

FAMILIES = [
    Family("k3-first-top", "k3-first", ("B1",), (0, 3), (0, 3), 3, "natural"),
    Family("k3-first-low", "k3-first", ("B2",), (3, 9), (0, 3), 3, "natural"),
    Family("k4-first-top", "k4-first", ("B1",), (0, 6), (0, 4), 4, "natural"),
    Family("k4-first-low", "k4-first", ("B2",), (6, 16), (0, 4), 4, "natural"),
    Family("k3-second-b3", "k3-second", ("B3",), (1, 9), (3, 9), 3, "natural"),
    Family("k3-second-b4", "k3-second", ("B4",), (9, 19), (3, 9), 3, "natural"),
    Family("k3-second-b23", "k3-second", ("B2", "B3"), (1, 9), (0, 9), 3, "natural"),
    Family("k3-second-b234", "k3-second", ("B2", "B3", "B4"), (1, 19), (0, 9), 3, "natural"),
    Family("k3-second-all", "k3-second", ("B1", "B2", "B3", "B4"), (0, 19), (0, 9), 3, "natural"),
    Family("k3-sym2-top", "k3-sym2", ("B1",), (0, 2), (0, 2), 3, "sym2"),
    Family("k3-sym2-low", "k3-sym2", ("B2",), (2, 6), (0, 2), 3, "sym2"),
]


def family(name: str) -> Family:
    for f in FAMILIES:
        if f.name == name:
            return f
    raise KeyError(name)


def primitive_alpha(n: int, beta: tuple) -> tuple:
    """Smallest positive (x, y) with x*b1 + y*b2 - n*x*b2 = 0."""
    b1, b2 = beta
    p, q = b2, n * b2 - b1          # x*(b1 - n b2) + y*b2 = 0  ->  (x, y) ~ (b2, n b2 - b1)
    if p <= 0 or q <= 0:
        raise ValueError(f"no positive alpha pairs to zero with {beta}")
    g = gcd(p, q)
    return p // g, q // g


def build(f: Family, a: int = 1, seed: int = 0, height: int = 5) -> tuple[Representation, dict]:
    """(N, alpha) for the family at scale a."""
    t = TEMPLATES[f.template]()
    rng = random.Random(seed)
    values = {s: (random_matrix(a, a, rng, height) if s in f.symbols else RatMatrix.zeros(a, a))
              for s in sorted(t.symbols, key=lambda x: int(x[1:]))}
    full = t.evaluate(values)
    (r0, r1), (c0, c1) = f.rows, f.cols
    q = full.quiver
    (name0, tv, hv) = q.arrows[0]
    dims = {tv: (r1 - r0) * a, hv: (c1 - c0) * a}
    mats = {name: full.mats[name].submatrix(range(r0 * a, r1 * a), range(c0 * a, c1 * a))
            for name, _, _ in q.arrows}
    n = Representation(q, dims, mats)
    x, y = primitive_alpha(f.n, (r1 - r0, c1 - c0))
    return n, {tv: x * a, hv: y * a}


def datum_for(f: Family):
    from .qg import GroupDatum, natural_gl_datum, sym_power_module
    from .quiver import kronecker_quiver
    q = kronecker_quiver(f.n)
    if f.datum == "natural":
        return natural_gl_datum(q, f.n)
    return GroupDatum.gl(q, 2, {("1", "2"): sym_power_module(2)})
