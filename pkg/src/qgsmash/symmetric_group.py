"""Permutations, group algebras of symmetric groups, Young symmetrizers and
finite group actions on quivers (orbits, stabilizers, pair orbits)."""
from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from itertools import permutations
from math import factorial

from .linalg import RatMatrix
from .partitions import Partition, Tableau, dim_symgroup_irrep, partitions_of, \
    symgroup_character
from .semisimple import MatrixAlgebra, SemisimpleDecomposition, decompose


class Permutation:
    """Bijection of 1..m; images[i-1] is the image of i.

    Products compose left to right: i^(p*q) = (i^p)^q.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def from_cycles(cls, m: int, cycles) -> "Permutation":
        img = list(range(1, m + 1))
        for c in cycles:
            for k, x in enumerate(c):
                img[x - 1] = c[(k + 1) % len(c)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(other.images[x - 1] for x in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def cycles(self, points=None) -> list[tuple]:
        points = range(1, len(self.images) + 1) if points is None else points
        seen, out = set(), []
        for p in points:
            if p in seen:
                continue
            c = [p]
            seen.add(p)
            q = self(p)
            while q != p:
                c.append(q)
                seen.add(q)
                q = self(q)
            out.append(tuple(c))
        return out

    def cycle_type(self, points=None) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles(points)), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def moved(self) -> set:
        return {i + 1 for i, x in enumerate(self.images) if x != i + 1}

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "Permutation(" + ("".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()") + ")"


def symmetric_group(m: int) -> list[Permutation]:
    return sorted(Permutation(p) for p in permutations(range(1, m + 1)))


def subgroup_on(points, m: int) -> list[Permutation]:
    """Sym(points) inside S_m."""
    points = sorted(points)
    out = []
    for p in permutations(points):
        img = list(range(1, m + 1))
        for a, b in zip(points, p):
            img[a - 1] = b
        out.append(Permutation(img))
    return sorted(out)


class GroupAlgebraElement:
    """Finite formal combination of permutations with rational coefficients."""

    def __init__(self, support=None):
        self.support = {g: Fraction(c) for g, c in (support or {}).items() if c}

    def __add__(self, other):
        s = dict(self.support)
        for g, c in other.support.items():
            s[g] = s.get(g, 0) + c
        return GroupAlgebraElement(s)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GroupAlgebraElement({g: Fraction(c) * x for g, x in self.support.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        s: dict = {}
        for g, a in self.support.items():
            for h, b in other.support.items():
                k = g * h
                s[k] = s.get(k, 0) + a * b
        return GroupAlgebraElement(s)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.support == other.support

    def __repr__(self):
        return f"GroupAlgebraElement({len(self.support)} terms)"


def _stabilizer_group(blocks, m: int) -> list[Permutation]:
    """Direct product of symmetric groups on the given disjoint blocks."""
    group = [Permutation.identity(m)]
    for blk in blocks:
        if len(blk) > 1:
            sub = subgroup_on(blk, m)
            group = [g * h for g in group for h in sub]
    return group


def young_symmetrizer(t: Tableau) -> GroupAlgebraElement:
    """kappa^{-1} sum_{v in V(T), h in H(T)} sgn(v) v*h with kappa the hook product."""
    if not t.is_standard():
        raise ValueError("young_symmetrizer needs a standard tableau")
    from .partitions import hook_product
    m = t.shape.size()
    rows = _stabilizer_group(t.rows, m)
    cols = _stabilizer_group(t.columns(), m)
    kappa = hook_product(t.shape)
    s: dict = {}
    for v in cols:
        sv = v.sign()
        for h in rows:
            k = v * h
            s[k] = s.get(k, 0) + Fraction(sv, kappa)
    return GroupAlgebraElement(s)


# ----------------------------------------------------------------------
# regular realization and decomposition


class GroupAlgebraRealization:
    """Right regular representation of k[G] for a finite list of permutations:
    basis vector h goes to h*g under g."""

    def __init__(self, elements):
        self.elements = list(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        n = len(self.elements)
        self._mats = {}
        for g in self.elements:
            self._mats[g] = RatMatrix.from_sparse(
                n, n, [(i, self.index[h * g], 1) for i, h in enumerate(self.elements)])
        self.algebra = MatrixAlgebra([self._mats[g] for g in self.elements], check=False)

    def matrix(self, g: Permutation) -> RatMatrix:
        return self._mats[g]

    def matrix_of(self, x: GroupAlgebraElement) -> RatMatrix:
        n = len(self.elements)
        items = []
        for g, c in x.support.items():
            for i, h in enumerate(self.elements):
                items.append((i, self.index[h * g], c))
        return RatMatrix.from_sparse(n, n, items)


def group_algebra_realization(m: int, bound: int = 6) -> GroupAlgebraRealization:
    if m > bound:
        raise ValueError(f"group algebra of S_{m} exceeds the bound {bound}")
    return GroupAlgebraRealization(symmetric_group(m))


def jucys_murphy(points, m: int) -> list[GroupAlgebraElement]:
    points = sorted(points)
    out = []
    for k in range(1, len(points)):
        s = {}
        for i in range(k):
            s[Permutation.from_cycles(m, [(points[i], points[k])])] = Fraction(1)
        out.append(GroupAlgebraElement(s))
    return out


def central_character_idempotent(lam: Partition, elements, points) -> GroupAlgebraElement:
    """(dim lam / |G|) sum_g chi_lam(g) g for G = Sym(points)."""
    order = len(elements)
    d = dim_symgroup_irrep(lam)
    s = {}
    for g in elements:
        c = symgroup_character(lam, g.cycle_type(points)) if points else 1
        if c:
            s[g] = Fraction(d * c, order)
    return GroupAlgebraElement(s)


class SymmetricIrreps:
    """Explicit irreducible representations of G = Sym(points), obtained from
    matrix units of k[G]: V_lam = e^{11} k[G] with basis e^{1j}."""

    def __init__(self, elements, points, m: int, seed: int = 0):
        self.elements = sorted(elements)
        self.points = sorted(points)
        self.m = m
        if len(self.elements) != factorial(len(self.points)):
            raise ValueError("group is not the full symmetric group on its moved points")
        self.real = GroupAlgebraRealization(self.elements)
        k = len(self.points)
        self.labels = partitions_of(k)
        central = [(lam, self.real.matrix_of(central_character_idempotent(lam, self.elements,
                                                                            self.points)))
                   for lam in self.labels]
        hint = [self.real.matrix_of(x) for x in jucys_murphy(self.points, m)]
        self.decomposition: SemisimpleDecomposition = decompose(
            self.real.algebra, seed=seed, hint=hint, central=central, check_radical=False)
        self._cache = {}

    def dim(self, lam) -> int:
        return self.decomposition.block_size(Partition(lam))

    def matrix(self, lam, g: Permutation) -> RatMatrix:
        """rho(g)[j][i] = tr(g e^{ij}) / tr(e^{11}); rows are images of e^{1j}."""
        lam = Partition(lam)
        key = (lam, g)
        if key not in self._cache:
            units = self.decomposition.matrix_units
            d = self.dim(lam)
            phi = self.real.matrix(g)
            t11 = units[(lam, 1, 1)].trace()
            rows = [[phi.trace_product(units[(lam, i + 1, j + 1)]) / t11 for i in range(d)]
                    for j in range(d)]
            self._cache[key] = RatMatrix(rows, rows=d, cols=d)
        return self._cache[key]

    def character(self, lam, g: Permutation) -> int:
        return symgroup_character(lam, g.cycle_type(self.points)) if self.points else 1


# ----------------------------------------------------------------------
# finite group actions on quivers


class FiniteAction:
    """A group of permutations of 1..m acting on a quiver.

    vertex_action[k]: Permutation of vertex positions (1-based) for generator k.
    arrow_action[k]: RatMatrix A with a_l * g = sum_m A[l][m] a_m on the arrow span.
    """

    def __init__(self, quiver, generators, vertex_action, arrow_action, check_words: int = 30,
                 seed: int = 0):
        self.quiver = quiver
        self.generators = list(generators)
        self.vertex_action = list(vertex_action)
        self.arrow_action = list(arrow_action)
        if not (len(self.generators) == len(self.vertex_action) == len(self.arrow_action)):
            raise ValueError("one vertex and arrow action per generator")
        self.m = self.generators[0].degree if self.generators else 0
        self._enumerate()
        self._check(check_words, seed)

    def _enumerate(self):
        nv = len(self.quiver.vertices)
        na = len(self.quiver.arrows)
        ident = (Permutation.identity(self.m), Permutation.identity(nv), RatMatrix.identity(na))
        self.elements = {ident[0]: ident}
        queue = deque([ident])
        while queue:
            g, vg, ag = queue.popleft()
            for s, vs, as_ in zip(self.generators, self.vertex_action, self.arrow_action):
                h = g * s
                data = (h, vg * vs, ag @ as_)
                if h not in self.elements:
                    self.elements[h] = data
                    queue.append(data)
                elif self.elements[h][1:] != data[1:]:
                    raise ValueError("vertex/arrow action is not a homomorphism on the group")
        self.order = len(self.elements)

    def _check(self, words: int, seed: int):
        rng = random.Random(seed)
        q = self.quiver
        for g, (_, vg, ag) in self.elements.items():
            for l, (name, t, h) in enumerate(q.arrows):
                for mcol in range(len(q.arrows)):
                    if ag[l, mcol]:
                        _, t2, h2 = q.arrows[mcol]
                        if (q.index(t2), q.index(h2)) != (vg(q.index(t) + 1) - 1, vg(q.index(h) + 1) - 1):
                            raise ValueError("arrow action does not follow the vertex action")
        elems = list(self.elements)
        for _ in range(words if elems else 0):
            a, b = rng.choice(elems), rng.choice(elems)
            ab = self.elements[a * b]
            if ab[2] != self.elements[a][2] @ self.elements[b][2]:
                raise ValueError("arrow action fails the homomorphism check")

    def vertex_image(self, v: str, g: Permutation) -> str:
        q = self.quiver
        return q.vertices[self.elements[g][1](q.index(v) + 1) - 1]

    def arrow_matrix(self, g: Permutation) -> RatMatrix:
        return self.elements[g][2]

    def group(self) -> list[Permutation]:
        return sorted(self.elements)


class OrbitData:
    def __init__(self):
        self.representatives: list[str] = []
        self.orbit: dict[str, list[str]] = {}
        self.rep_of: dict[str, str] = {}
        self.stabilizer: dict[str, list[Permutation]] = {}
        self.witness: dict[str, Permutation] = {}     # rep * witness[v] = v
        self.pair_reps: dict[tuple, list[str]] = {}   # (u', x') -> reps x'' in O_x'


def orbits_and_stabilizers(act: FiniteAction) -> OrbitData:
    q = act.quiver
    data = OrbitData()
    ident = Permutation.identity(act.m)
    for v in q.vertices:
        if v in data.rep_of:
            continue
        data.representatives.append(v)
        # BFS over generators gives deterministic witnesses
        orbit = [v]
        data.rep_of[v] = v
        data.witness[v] = ident
        queue = deque([v])
        while queue:
            w = queue.popleft()
            for s in act.generators:
                x = act.vertex_image(w, s)
                if x not in data.rep_of:
                    data.rep_of[x] = v
                    data.witness[x] = data.witness[w] * s
                    orbit.append(x)
                    queue.append(x)
        data.orbit[v] = sorted(orbit, key=q.index)
        data.stabilizer[v] = sorted(g for g in act.elements if act.vertex_image(v, g) == v)
    for u in data.representatives:
        stab = data.stabilizer[u]
        for x in data.representatives:
            reps, seen = [], set()
            for y in data.orbit[x]:
                if y in seen:
                    continue
                reps.append(y)
                seen.update(act.vertex_image(y, h) for h in stab)
            data.pair_reps[(u, x)] = reps
    return data


def moved_points(elements) -> list[int]:
    pts = set()
    for g in elements:
        pts |= g.moved()
    return sorted(pts)


def module_multiplicity(act: FiniteAction, orbits: OrbitData, u: str, x: str, x2: str,
                        rho, sigma) -> int:
    """dim Hom_H(V_rho, R_{u x2} (x) V_sigma'') by characters, H = G_u cap G_x2,
    with sigma transported from G_x to G_x2 through the stored witness."""
    q = act.quiver
    rho, sigma = Partition(rho), Partition(sigma)
    t = orbits.witness[x2]
    tinv = t.inverse()
    h_group = [g for g in orbits.stabilizer[u] if act.vertex_image(x2, g) == x2]
    arrows = [i for i, (_, a, b) in enumerate(q.arrows) if a == u and b == x2]
    pu = moved_points(orbits.stabilizer[u])
    px = moved_points(orbits.stabilizer[x])
    total = Fraction(0)
    for h in h_group:
        am = act.arrow_matrix(h)
        chi_r = sum((am[i, i] for i in arrows), Fraction(0))
        if not chi_r:
            continue
        chi_rho = symgroup_character(rho, h.cycle_type(pu)) if pu else 1
        conj = t * h * tinv
        chi_sig = symgroup_character(sigma, conj.cycle_type(px)) if px else 1
        total += chi_rho * chi_r * chi_sig
    val = total / len(h_group)
    if val.denominator != 1:
        raise ArithmeticError("character inner product is not an integer")
    return int(val)
