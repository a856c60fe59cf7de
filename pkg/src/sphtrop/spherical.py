"""Spherical data, colored cones, colored faces, and colored fans.

A SphericalDatum is the combinatorial shadow of a spherical homogeneous
space: rank, valuation cone, and a palette of named colors with their
images in N_Q.  Colors are identified by name; several colors may share
the same image vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .linalg import Vector, vec
from .polyhedra import Cone


@dataclass(frozen=True)
class Color:
    name: str
    rho: Vector

    def __post_init__(self):
        object.__setattr__(self, "rho", vec(self.rho))


@dataclass(frozen=True)
class SphericalDatum:
    rank: int
    valuation_cone: Cone
    palette: tuple[Color, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "palette", tuple(self.palette))
        if self.valuation_cone.ambient_dim != self.rank:
            raise ValueError("valuation cone ambient dimension must equal the rank")
        names = [c.name for c in self.palette]
        if len(set(names)) != len(names):
            raise ValueError("color names must be unique")
        for c in self.palette:
            if len(c.rho) != self.rank:
                raise ValueError(f"color {c.name} has wrong dimension")

    def color(self, name: str) -> Color:
        for c in self.palette:
            if c.name == name:
                return c
        raise KeyError(f"unknown color {name!r}")


@dataclass(frozen=True)
class ColoredCone:
    cone: Cone
    colors: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "colors", frozenset(self.colors))


@dataclass(frozen=True)
class ColoredFan:
    cones: tuple[ColoredCone, ...]

    def __post_init__(self):
        object.__setattr__(self, "cones", tuple(self.cones))

    def maximal_cones(self) -> list[ColoredCone]:
        out = []
        for cc in self.cones:
            strictly_below = any(
                other is not cc
                and other.cone.contains_cone(cc.cone)
                and other.cone != cc.cone
                for other in self.cones)
            if not strictly_below:
                out.append(cc)
        return out


@dataclass
class ValidationReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    strictly_convex: bool | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "failures": list(self.failures),
                "strictly_convex": self.strictly_convex}


def relint_meets_valuation_cone(datum: SphericalDatum, cone: Cone) -> bool:
    """Exact test of relint(sigma) meeting V, without linear programming.

    A relative-interior point of sigma cap V, when one exists, lies in
    relint(sigma) exactly when the intersection does; the sum of the
    extreme rays of sigma cap V is such a point.
    """
    meet = cone.intersect(datum.valuation_cone)
    return cone.relint_contains(meet.relint_point())


def validate_colored_cone(datum: SphericalDatum, cc: ColoredCone,
                          ) -> ValidationReport:
    """Check the colored-cone axioms; strict convexity is reported separately."""
    sigma = cc.cone
    if sigma.ambient_dim != datum.rank:
        raise ValueError("cone ambient dimension must equal the rank")
    rho_images = [datum.color(name).rho for name in sorted(cc.colors)]

    failures = []
    if not all(sigma.contains(r) for r in rho_images):
        failures.append("rho-containment")
    meet = sigma.intersect(datum.valuation_cone)
    generated = Cone.from_generators(
        list(rho_images) + list(meet.generators), datum.rank)
    if generated != sigma:
        failures.append("generation")
    if not sigma.relint_contains(meet.relint_point()):
        failures.append("interior-meets-V")
    strictly_convex = (sigma.is_strictly_convex()
                       and all(any(x != 0 for x in r) for r in rho_images))
    return ValidationReport(ok=not failures, failures=failures,
                            strictly_convex=strictly_convex)


def colored_faces(datum: SphericalDatum, cc: ColoredCone) -> list[ColoredCone]:
    """All colored faces of a valid colored cone, including the cone itself.

    A face tau qualifies when relint(tau) meets V; it inherits the colors
    of cc whose images land in tau.
    """
    report = validate_colored_cone(datum, cc)
    if not report.ok:
        raise ValueError(f"invalid colored cone: {report.failures}")
    out = []
    for tau in cc.cone.faces():
        if not relint_meets_valuation_cone(datum, tau):
            continue
        inherited = frozenset(
            name for name in cc.colors
            if tau.contains(datum.color(name).rho))
        out.append(ColoredCone(tau, inherited))
    return out


def validate_colored_fan(datum: SphericalDatum, fan: ColoredFan,
                         require_strict: bool = False) -> ValidationReport:
    """Face closure, relint disjointness inside V, and optional strictness."""
    failures: list[str] = []
    strict = True
    valid_members: list[ColoredCone] = []
    for i, cc in enumerate(fan.cones):
        rep = validate_colored_cone(datum, cc)
        if not rep.ok:
            failures.append(f"member-invalid[{i}]: {','.join(rep.failures)}")
        else:
            valid_members.append(cc)
        if not rep.strictly_convex:
            strict = False

    members = {(cc.cone.canonical_key(), cc.colors) for cc in fan.cones}
    for cc in valid_members:
        for face in colored_faces(datum, cc):
            if (face.cone.canonical_key(), face.colors) not in members:
                failures.append(
                    f"face-closure: missing face {face.cone.rays} "
                    f"with colors {sorted(face.colors)}")

    for i, a in enumerate(fan.cones):
        for b in fan.cones[i + 1:]:
            if a.cone == b.cone:
                failures.append("interior-overlap: duplicate cone with "
                                "different colors")
                continue
            meet = a.cone.intersect(b.cone).intersect(datum.valuation_cone)
            y = meet.relint_point()
            if a.cone.relint_contains(y) and b.cone.relint_contains(y):
                failures.append(
                    f"interior-overlap: cones {a.cone.rays} and {b.cone.rays}"
                    " share relative-interior points inside V")

    if require_strict and not strict:
        failures.append("strict-convexity")
    return ValidationReport(ok=not failures, failures=failures,
                            strictly_convex=strict)
