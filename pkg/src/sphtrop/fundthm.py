"""Tropical hypersurfaces and fundamental-theorem set comparisons.

For a hypersurface V(f) the three sets of the fundamental theorem are
checked against each other: the min-attained-twice locus (a polyhedral
complex), the initial-form criterion, and coordinatewise valuations of
user-supplied witness points.  Only principal ideals are handled; for
those the initial ideal is generated by the initial form of f.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Vector, dot, primitive, vec
from .polyhedra import affine_feasible
from .puiseux import (
    INF,
    ExtendedRational,
    PuiseuxScalar,
    ValuedPolynomial,
    is_finite,
)

Constraint = tuple[Vector, Fraction]  # coeffs . w  (rel)  rhs


def _canon_constraint(coeffs: Sequence[Fraction], rhs: Fraction,
                      fix_sign: bool = False) -> Constraint:
    row = primitive(tuple(coeffs) + (rhs,), fix_sign=fix_sign)
    return row[:-1], row[-1]


@dataclass(frozen=True)
class Cell:
    """An affine polyhedron {w : Aw = a, Bw >= b} in weight space."""

    dim: int
    equalities: tuple[Constraint, ...]
    inequalities: tuple[Constraint, ...]

    def contains(self, w: Sequence[Fraction]) -> bool:
        w = vec(w)
        return (all(dot(c, w) == r for c, r in self.equalities)
                and all(dot(c, w) >= r for c, r in self.inequalities))

    def is_empty(self) -> bool:
        return not affine_feasible(
            list(self.equalities), list(self.inequalities), [], self.dim)


@dataclass(frozen=True)
class TropicalComplex:
    """A finite union of affine cells; the empty union is the empty set."""

    ambient_dim: int
    cells: tuple[Cell, ...]

    @classmethod
    def empty(cls, dim: int) -> "TropicalComplex":
        return cls(dim, ())

    @classmethod
    def whole_space(cls, dim: int) -> "TropicalComplex":
        return cls(dim, (Cell(dim, (), ()),))

    def contains(self, w: Sequence[Fraction]) -> bool:
        w = vec(w)
        if len(w) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return any(cell.contains(w) for cell in self.cells)

    def is_empty_set(self) -> bool:
        return not self.cells


def trop_hypersurface(f: ValuedPolynomial) -> TropicalComplex:
    """The locus where the minimum of v(a_u) + u.w is attained at least twice.

    One cell per pair of terms achieving a common minimum; empty cells are
    pruned by exact Fourier-Motzkin feasibility.
    """
    if f.is_zero():
        raise ValueError("tropical hypersurface of the zero polynomial")
    terms = [(u, c.valuation()) for u, c in f.terms]
    m = f.nvars
    cells: list[Cell] = []
    seen = set()
    for i in range(len(terms)):
        ui, ci = terms[i]
        for j in range(i + 1, len(terms)):
            uj, cj = terms[j]
            eq = _canon_constraint(
                [Fraction(a - b) for a, b in zip(ui, uj)], cj - ci,
                fix_sign=True)
            ineqs = tuple(sorted(
                _canon_constraint([Fraction(a - b) for a, b in zip(uk, ui)],
                                  ci - ck)
                for k, (uk, ck) in enumerate(terms) if k not in (i, j)))
            cell = Cell(m, (eq,), ineqs)
            key = (cell.equalities, cell.inequalities)
            if key in seen:
                continue
            seen.add(key)
            if not cell.is_empty():
                cells.append(cell)
    return TropicalComplex(m, tuple(cells))


def membership_set2(f: ValuedPolynomial, w: Sequence[ExtendedRational]) -> bool:
    """Initial-ideal criterion for a principal ideal.

    The initial ideal of (f) is generated by in_w(f); it contains a
    (unit) monomial exactly when in_w(f) is a nonzero monomial.
    """
    form = f.initial_form(w)
    return not form.is_monomial()


def extended_trop_sets(f: ValuedPolynomial
                       ) -> dict[frozenset[int], TropicalComplex]:
    """Per-orbit tropical sets of the extended theorem (0-based orbit indices).

    A zero restriction means the hypersurface contains the whole orbit, so
    the full stratum is returned; a monomial restriction has empty locus.
    """
    if f.laurent:
        raise ValueError("extended sets require ordinary mode")
    m = f.nvars
    out: dict[frozenset[int], TropicalComplex] = {}
    for mask in range(1 << m):
        sigma = frozenset(i for i in range(m) if mask >> i & 1)
        g = f.restrict_to_orbit(sigma)
        if g.is_zero():
            out[sigma] = TropicalComplex.whole_space(m - len(sigma))
        elif len(g.terms) == 1:
            out[sigma] = TropicalComplex.empty(m - len(sigma))
        else:
            out[sigma] = trop_hypersurface(g)
    return out


def membership_set1(f: ValuedPolynomial, w: Sequence[ExtendedRational]) -> bool:
    """Membership of an extended weight in set (1) of the fundamental theorem."""
    w = tuple(w)
    if all(is_finite(x) for x in w):
        return trop_hypersurface(f).contains(w)
    if f.laurent:
        raise ValueError("infinite weight entry on a Laurent polynomial")
    sigma = frozenset(i for i, x in enumerate(w) if x is INF)
    finite = tuple(x for x in w if x is not INF)
    g = f.restrict_to_orbit(sigma)
    if g.is_zero():
        return True
    if len(g.terms) == 1:
        return False
    return trop_hypersurface(g).contains(finite)


@dataclass(frozen=True)
class WitnessPoint:
    """A torus point with finite-support Puiseux coordinates."""

    coordinates: tuple[PuiseuxScalar, ...]

    def __post_init__(self):
        if any(not c for c in self.coordinates):
            raise ValueError("witness coordinates must be nonzero")

    def valuations(self) -> Vector:
        return tuple(c.valuation() for c in self.coordinates)


@dataclass
class SampleVerdict:
    weight: tuple
    in_complex: bool
    in_initial_set: bool

    @property
    def consistent(self) -> bool:
        return self.in_complex == self.in_initial_set


@dataclass
class WitnessVerdict:
    valuations: tuple
    residual_zero: bool
    in_complex: bool

    @property
    def consistent(self) -> bool:
        return self.residual_zero and self.in_complex


@dataclass
class EquivalenceReport:
    samples: list[SampleVerdict] = field(default_factory=list)
    witnesses: list[WitnessVerdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (all(s.consistent for s in self.samples)
                and all(w.consistent for w in self.witnesses))

    def to_json(self) -> dict:
        from .jsonio import weight_to_json
        return {
            "samples": [
                {"weight": weight_to_json(s.weight),
                 "set1": s.in_complex, "set2": s.in_initial_set,
                 "consistent": s.consistent}
                for s in self.samples],
            "witnesses": [
                {"valuations": weight_to_json(w.valuations),
                 "residual_zero": w.residual_zero,
                 "in_complex": w.in_complex}
                for w in self.witnesses],
            "ok": self.ok,
        }


def check_equivalence(f: ValuedPolynomial,
                      samples: Iterable[Sequence[ExtendedRational]] = (),
                      witnesses: Iterable[WitnessPoint] = ()
                      ) -> EquivalenceReport:
    """Cross-check fundamental-theorem sets on samples and witness points."""
    report = EquivalenceReport()
    for w in samples:
        w = tuple(w)
        report.samples.append(SampleVerdict(
            weight=w,
            in_complex=membership_set1(f, w),
            in_initial_set=membership_set2(f, w)))
    complex_finite = trop_hypersurface(f) if not f.is_zero() else None
    for p in witnesses:
        value = f.evaluate(p.coordinates)
        vv = p.valuations()
        report.witnesses.append(WitnessVerdict(
            valuations=vv,
            residual_zero=not value,
            in_complex=(complex_finite is not None
                        and complex_finite.contains(vv))))
    return report
