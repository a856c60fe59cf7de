"""Exact polyhedral cones over the rationals.

Cones carry both descriptions: generators (extreme rays plus a lineality
basis) and a facet/equation system.  Conversion between the two uses a
double description sweep with the combinatorial adjacency test, entirely
in exact arithmetic, so equality of cones is decidable and deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import (
    Vector,
    dot,
    is_zero_vec,
    kernel_basis,
    primitive,
    project_off,
    rref,
    solve,
    unit_vec,
    vadd,
    vec,
    vneg,
    vscale,
    vsub,
)


def _dd(equations: Sequence[Vector], inequalities: Sequence[Vector], dim: int
        ) -> tuple[list[Vector], list[Vector]]:
    """Generators of {x : e.x = 0 for e in equations, a.x >= 0 for a in inequalities}.

    Returns (lineality basis, extreme rays).  Rays are extreme modulo the
    lineality space.
    """
    lin: list[Vector] = [unit_vec(i, dim) for i in range(dim)]
    rays: list[tuple[Vector, frozenset[int]]] = []

    for e in equations:
        vals = [dot(e, l) for l in lin]
        j = next((i for i, v in enumerate(vals) if v != 0), None)
        if j is None:
            continue
        l0, v0 = lin[j], vals[j]
        lin = [vsub(l, vscale(dot(e, l) / v0, l0))
               for i, l in enumerate(lin) if i != j]

    for idx, a in enumerate(inequalities):
        vals = [dot(a, l) for l in lin]
        j = next((i for i, v in enumerate(vals) if v != 0), None)
        if j is not None:
            # a cuts the lineality space: one lineality generator becomes a ray.
            l0, v0 = lin[j], vals[j]
            lin = [vsub(l, vscale(dot(a, l) / v0, l0))
                   for i, l in enumerate(lin) if i != j]
            rays = [(vsub(r, vscale(dot(a, r) / v0, l0)), tight | {idx})
                    for r, tight in rays]
            newray = l0 if v0 > 0 else vneg(l0)
            rays.append((newray, frozenset(range(idx))))
            continue
        pos, zero, neg = [], [], []
        for r, tight in rays:
            s = dot(a, r)
            if s > 0:
                pos.append((r, tight, s))
            elif s < 0:
                neg.append((r, tight, s))
            else:
                zero.append((r, tight | {idx}))
        kept = [(r, t) for r, t, _ in pos] + zero
        for (rp, tp, sp), (rn, tn, sn) in (
                (p, n) for p in pos for n in neg):
            common = tp & tn
            adjacent = not any(
                common <= t for r, t in rays
                if r is not rp and r is not rn)
            if not adjacent:
                continue
            w = vadd(vscale(sp, rn), vscale(-sn, rp))
            if is_zero_vec(w):
                continue
            kept.append((primitive(w), common | {idx}))
        rays = kept

    return [primitive(l, fix_sign=True) for l in lin], [r for r, _ in rays]


class Cone:
    """A rational convex polyhedral cone, immutable after construction."""

    __slots__ = ("ambient_dim", "rays", "lineality", "inequalities",
                 "equations", "_key")

    def __init__(self, ambient_dim: int, rays, lineality, inequalities,
                 equations):
        self.ambient_dim = ambient_dim
        self.rays: tuple[Vector, ...] = rays
        self.lineality: tuple[Vector, ...] = lineality
        self.inequalities: tuple[Vector, ...] = inequalities
        self.equations: tuple[Vector, ...] = equations
        self._key = (ambient_dim, self.rays, self.lineality)

    # -- construction -------------------------------------------------

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], ambient_dim: int
                        ) -> "Cone":
        gens = [vec(g) for g in generators]
        for g in gens:
            if len(g) != ambient_dim:
                raise ValueError("generator dimension mismatch")
        gens = [g for g in gens if not is_zero_vec(g)]
        # V -> H: the dual cone's generators are our facets and span equations.
        dlin, drays = _dd([], gens, ambient_dim)
        equations = tuple(primitive(e, fix_sign=True) for e in rref(dlin)[0])
        ineqs = tuple(sorted(
            a for a in {primitive(project_off(r, equations)) for r in drays}
            if not is_zero_vec(a)))
        # H -> V again for a canonical generator description.
        lin, rays = _dd(equations, ineqs, ambient_dim)
        lin_rows = tuple(primitive(r, fix_sign=True)
                         for r in rref(lin)[0]) if lin else ()
        canon_rays = tuple(sorted(
            {primitive(project_off(r, lin_rows)) for r in rays}))
        return cls(ambient_dim, canon_rays, lin_rows, ineqs, equations)

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[Sequence],
                          ambient_dim: int,
                          equations: Iterable[Sequence] = ()) -> "Cone":
        ineqs = [vec(a) for a in inequalities]
        eqs = [vec(e) for e in equations]
        for row in ineqs + eqs:
            if len(row) != ambient_dim:
                raise ValueError("inequality dimension mismatch")
        lin, rays = _dd(eqs, ineqs, ambient_dim)
        gens = list(rays) + list(lin) + [vneg(l) for l in lin]
        return cls.from_generators(gens, ambient_dim)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Cone":
        return cls.from_generators([], ambient_dim)

    @classmethod
    def full_space(cls, ambient_dim: int) -> "Cone":
        return cls.from_inequalities([], ambient_dim)

    # -- queries -------------------------------------------------------

    @property
    def generators(self) -> tuple[Vector, ...]:
        return self.rays + self.lineality + tuple(vneg(l) for l in self.lineality)

    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    def is_strictly_convex(self) -> bool:
        return not self.lineality

    def contains(self, v: Sequence) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return (all(dot(e, v) == 0 for e in self.equations)
                and all(dot(a, v) >= 0 for a in self.inequalities))

    def relint_contains(self, v: Sequence) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return (all(dot(e, v) == 0 for e in self.equations)
                and all(dot(a, v) > 0 for a in self.inequalities))

    def relint_point(self) -> Vector:
        """A point in the relative interior (sum of the extreme rays)."""
        p = vec([0] * self.ambient_dim)
        for r in self.rays:
            p = vadd(p, r)
        return p

    def dual(self) -> "Cone":
        return Cone.from_inequalities(self.generators, self.ambient_dim)

    def intersect(self, other: "Cone") -> "Cone":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return Cone.from_inequalities(
            self.inequalities + other.inequalities, self.ambient_dim,
            self.equations + other.equations)

    def faces(self) -> list["Cone"]:
        """All faces of the cone, including itself and its minimal face."""
        seen = {self.canonical_key(): self}
        stack = [self]
        while stack:
            c = stack.pop()
            for a in c.inequalities:
                f = Cone.from_inequalities(
                    c.inequalities, self.ambient_dim, c.equations + (a,))
                k = f.canonical_key()
                if k not in seen:
                    seen[k] = f
                    stack.append(f)
        return sorted(seen.values(), key=lambda c: c.canonical_key())

    def is_face_of(self, other: "Cone") -> bool:
        """True iff self is a face of other (self = other when no facet separates)."""
        if not all(other.contains(g) for g in self.generators):
            return False
        tight = [a for a in other.inequalities
                 if all(dot(a, g) == 0 for g in self.generators)]
        u = vec([0] * self.ambient_dim)
        for a in tight:
            u = vadd(u, a)
        face = Cone.from_inequalities(
            other.inequalities, self.ambient_dim, other.equations + (u,))
        return face == self

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def canonical_key(self):
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        if other.ambient_dim != self.ambient_dim:
            return False
        return self.contains_cone(other) and other.contains_cone(self)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return (f"Cone(dim={self.ambient_dim}, rays={list(self.rays)}, "
                f"lineality={list(self.lineality)})")


# -- quotient charts ----------------------------------------------------

def quotient_chart(subspace_gens: Sequence[Sequence], ambient_dim: int
                   ) -> tuple[Vector, ...]:
    """Deterministic ordered basis of the orthogonal complement of the span.

    Obtained from the reduced row echelon kernel with free coordinates in
    increasing order, so identical inputs always yield the same chart.
    """
    gens = [vec(g) for g in subspace_gens]
    for g in gens:
        if len(g) != ambient_dim:
            raise ValueError("dimension mismatch")
    return tuple(kernel_basis(gens, ambient_dim))


def project_to_chart(chart: Sequence[Vector], x: Sequence) -> Vector:
    """Coordinates in the chart of the component of x orthogonal to the kernel."""
    x = vec(x)
    if not chart:
        return ()
    gram = [[dot(b1, b2) for b2 in chart] for b1 in chart]
    coords = solve(gram, [dot(b, x) for b in chart])
    assert coords is not None
    return coords


def embed_from_chart(chart: Sequence[Vector], value: Sequence) -> Vector:
    dim = len(chart[0]) if chart else 0
    v = vec([0] * dim)
    for c, b in zip(value, chart, strict=True):
        v = vadd(v, vscale(Fraction(c), b))
    return v


def quotient_project(subspace_gens: Sequence[Sequence], x, ambient_dim: int | None = None):
    """Project a vector or cone to the canonical chart modulo span(subspace_gens)."""
    if isinstance(x, Cone):
        dim = x.ambient_dim
        chart = quotient_chart(subspace_gens, dim)
        return Cone.from_generators(
            [project_to_chart(chart, g) for g in x.generators], len(chart))
    x = vec(x)
    dim = ambient_dim if ambient_dim is not None else len(x)
    chart = quotient_chart(subspace_gens, dim)
    return project_to_chart(chart, x)


# -- affine feasibility (Fourier-Motzkin) --------------------------------

def affine_feasible(equalities: Sequence[tuple[Sequence, Fraction]],
                    weak: Sequence[tuple[Sequence, Fraction]],
                    strict: Sequence[tuple[Sequence, Fraction]],
                    dim: int) -> bool:
    """Exact feasibility of {x : A x = a, B x >= b, C x > c} over the rationals.

    Constraints are (coefficient vector, rhs) pairs.  Equalities are folded
    into pairs of weak inequalities; variables are eliminated one at a time.
    """
    rows: list[tuple[list[Fraction], Fraction, bool]] = []
    for coeffs, rhs in equalities:
        coeffs = list(vec(coeffs))
        rows.append((coeffs, Fraction(rhs), False))
        rows.append(([-c for c in coeffs], -Fraction(rhs), False))
    for coeffs, rhs in weak:
        rows.append((list(vec(coeffs)), Fraction(rhs), False))
    for coeffs, rhs in strict:
        rows.append((list(vec(coeffs)), Fraction(rhs), True))

    for var in range(dim):
        pos = [r for r in rows if r[0][var] > 0]
        neg = [r for r in rows if r[0][var] < 0]
        rest = [r for r in rows if r[0][var] == 0]
        new = rest
        for cp, bp, sp in pos:
            for cn, bn, sn in neg:
                lam, mu = -cn[var], cp[var]
                coeffs = [lam * a + mu * b for a, b in zip(cp, cn)]
                new.append((coeffs, lam * bp + mu * bn, sp or sn))
        # dedup keeps the blowup in check on small systems
        seen = set()
        rows = []
        for coeffs, rhs, st in new:
            key = (tuple(coeffs), rhs, st)
            if key not in seen:
                seen.add(key)
                rows.append((list(coeffs), rhs, st))

    for coeffs, rhs, st in rows:
        if st:
            if not 0 > rhs:
                return False
        elif not 0 >= rhs:
            return False
    return True
