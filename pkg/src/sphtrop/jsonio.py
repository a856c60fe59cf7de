"""JSON (de)serialization for all package objects.

Rationals are serialized as strings "p/q" (or "p" when integral) so files
stay exact; infinite values are the string "inf".  All emitters sort keys
deterministically so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .fundthm import Cell, TropicalComplex
from .linalg import Vector, vec
from .polyhedra import Cone
from .puiseux import INF, ExtendedRational, PuiseuxScalar, ValuedPolynomial
from .spherical import Color, ColoredCone, ColoredFan, SphericalDatum
from .troposphere import ExtendedTrop, Stratum, stratum_key


def frac_to_json(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def frac_from_json(s) -> Fraction:
    return Fraction(s)


def vector_to_json(v: Sequence[Fraction]) -> list[str]:
    return [frac_to_json(x) for x in v]


def vector_from_json(data) -> Vector:
    return vec(Fraction(x) for x in data)


def weight_to_json(w: Sequence[ExtendedRational]) -> list[str]:
    return ["inf" if x is INF else frac_to_json(x) for x in w]


def weight_from_json(data) -> tuple[ExtendedRational, ...]:
    return tuple(INF if x == "inf" else Fraction(x) for x in data)


# -- cones, data, fans ---------------------------------------------------

def cone_to_json(c: Cone) -> dict:
    return {
        "ambient_dim": c.ambient_dim,
        "generators": [vector_to_json(g) for g in c.generators],
        "inequalities": [vector_to_json(h) for h in c.inequalities],
        "equations": [vector_to_json(e) for e in c.equations],
    }


def cone_from_json(data) -> Cone:
    dim = data["ambient_dim"]
    if "generators" in data:
        return Cone.from_generators(
            [vector_from_json(g) for g in data["generators"]], dim)
    ineqs = [vector_from_json(h) for h in data.get("inequalities", [])]
    for e in data.get("equations", []):
        h = vector_from_json(e)
        ineqs.append(h)
        ineqs.append(tuple(-x for x in h))
    return Cone.from_inequalities(ineqs, dim)


def datum_to_json(d: SphericalDatum) -> dict:
    return {
        "rank": d.rank,
        "valuation_cone": cone_to_json(d.valuation_cone),
        "palette": [{"name": c.name, "rho": vector_to_json(c.rho)}
                    for c in d.palette],
    }


def datum_from_json(data) -> SphericalDatum:
    vc = data["valuation_cone"]
    vc = dict(vc, ambient_dim=vc.get("ambient_dim", data["rank"]))
    return SphericalDatum(
        rank=data["rank"],
        valuation_cone=cone_from_json(vc),
        palette=tuple(Color(c["name"], vector_from_json(c["rho"]))
                      for c in data.get("palette", [])))


def fan_to_json(f: ColoredFan) -> dict:
    return {"cones": [{"generators": [vector_to_json(g)
                                      for g in cc.cone.generators],
                       "colors": sorted(cc.colors)}
                      for cc in f.cones]}


def fan_from_json(data, rank: int) -> ColoredFan:
    cones = []
    for item in data["cones"]:
        cone = Cone.from_generators(
            [vector_from_json(g) for g in item["generators"]], rank)
        cones.append(ColoredCone(cone, frozenset(item.get("colors", []))))
    return ColoredFan(tuple(cones))


# -- extended tropicalizations -------------------------------------------

def trop_to_json(t: ExtendedTrop) -> dict:
    keys = sorted(t.strata)
    index = {k: i for i, k in enumerate(keys)}
    strata = []
    for k in keys:
        s = t.strata[k]
        strata.append({
            "face_generators": [vector_to_json(g)
                                for g in s.face.cone.generators],
            "colors": sorted(s.labels),
            "quotient_dim": s.quotient_dim,
            "valuation_cone_image": cone_to_json(s.valuation_cone_image),
            "adjacent": sorted(index[a] for a in t.adjacency.get(k, ())),
        })
    return {"ambient_rank": t.ambient_rank, "strata": strata}


def trop_from_json(data) -> ExtendedTrop:
    from .polyhedra import quotient_chart

    rank = data["ambient_rank"]
    strata = []
    for item in data["strata"]:
        face = ColoredCone(
            Cone.from_generators([vector_from_json(g)
                                  for g in item["face_generators"]], rank),
            frozenset(item["colors"]))
        chart = quotient_chart(face.cone.generators, rank)
        strata.append(Stratum(
            face=face, chart=chart,
            valuation_cone_image=cone_from_json(item["valuation_cone_image"]),
            labels=face.colors))
    adjacency = {}
    for item, s in zip(data["strata"], strata):
        adjacency[s.key] = frozenset(strata[i].key for i in item["adjacent"])
    return ExtendedTrop(rank, strata, adjacency)


# -- polynomials and complexes -------------------------------------------

def scalar_to_json(s: PuiseuxScalar) -> list[dict]:
    return [{"exponent": frac_to_json(e), "coeff": frac_to_json(c)}
            for e, c in s.terms]


def scalar_from_json(data) -> PuiseuxScalar:
    return PuiseuxScalar.from_terms(
        (Fraction(t["exponent"]), Fraction(t["coeff"])) for t in data)


def polynomial_to_json(f: ValuedPolynomial) -> dict:
    return {
        "nvars": f.nvars,
        "laurent": f.laurent,
        "terms": [{"exponents": list(u), "coefficient": scalar_to_json(c)}
                  for u, c in f.terms],
    }


def polynomial_from_json(data) -> ValuedPolynomial:
    coeffs = {tuple(t["exponents"]): scalar_from_json(t["coefficient"])
              for t in data["terms"]}
    return ValuedPolynomial.from_dict(data["nvars"], coeffs,
                                      laurent=data["laurent"])


def complex_to_json(cx: TropicalComplex) -> dict:
    def constraint(c):
        return {"coeffs": vector_to_json(c[0]), "rhs": frac_to_json(c[1])}
    return {
        "ambient_dim": cx.ambient_dim,
        "cells": [{"equalities": [constraint(c) for c in cell.equalities],
                   "inequalities": [constraint(c) for c in cell.inequalities]}
                  for cell in cx.cells],
    }


def complex_from_json(data) -> TropicalComplex:
    def constraint(c):
        return (vector_from_json(c["coeffs"]), Fraction(c["rhs"]))
    cells = tuple(
        Cell(data["ambient_dim"],
             tuple(constraint(c) for c in cell["equalities"]),
             tuple(constraint(c) for c in cell["inequalities"]))
        for cell in data["cells"])
    return TropicalComplex(data["ambient_dim"], cells)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
