"""Builtin example corpus: the rank-1 and rank-2 embedding tables, the
blowup of the rank-2 cone, the two-color rank-1 datum, and the running
tropical polynomial.

Each fan entry comes with the expected stratum shapes (quotient dimension
and sorted label list) so golden tests can diff computed output directly.
"""

from __future__ import annotations

from .polyhedra import Cone
from .puiseux import ValuedPolynomial
from .spherical import Color, ColoredCone, ColoredFan, SphericalDatum

E3_TEXT = "2*t + (t^-1 + 3*t^3)*x1 + (7 - t^1000)*x2 - 6*x1^2 + 4*t^-2*x1*x2"


def e3_polynomial() -> ValuedPolynomial:
    return ValuedPolynomial.parse(E3_TEXT, laurent=True)


def table1_datum() -> SphericalDatum:
    """Rank 1, valuation cone the whole line, one color at +1."""
    return SphericalDatum(1, Cone.full_space(1), (Color("D", (1,)),))


def table1_fans() -> dict[str, tuple[ColoredFan, list[tuple[int, list[str]]]]]:
    zero = ColoredCone(Cone.zero(1))
    pos = ColoredCone(Cone.from_generators([(1,)], 1))
    pos_d = ColoredCone(Cone.from_generators([(1,)], 1), {"D"})
    neg = ColoredCone(Cone.from_generators([(-1,)], 1))
    return {
        "A2-0": (ColoredFan((zero,)), [(1, [])]),
        "A2": (ColoredFan((zero, pos_d)), [(1, []), (0, ["D"])]),
        "Bl0A2": (ColoredFan((zero, pos)), [(1, []), (0, [])]),
        "P2-0": (ColoredFan((zero, neg)), [(1, []), (0, [])]),
        "P2": (ColoredFan((zero, pos_d, neg)),
               [(1, []), (0, ["D"]), (0, [])]),
        "Bl0P2": (ColoredFan((zero, pos, neg)),
                  [(1, []), (0, []), (0, [])]),
    }


def table2_datum() -> SphericalDatum:
    """Rank 2, valuation cone the halfplane x >= y, one color at (-1, 1)."""
    valuation = Cone.from_generators([(1, 1), (-1, -1), (1, -1)], 2)
    return SphericalDatum(2, valuation, (Color("D", (-1, 1)),))


def table2_fans() -> dict[str, tuple[ColoredFan, list[tuple[int, list[str]]]]]:
    zero = ColoredCone(Cone.zero(2))
    ray_10 = ColoredCone(Cone.from_generators([(1, 0)], 2))
    ray_11 = ColoredCone(Cone.from_generators([(1, 1)], 2))
    ray_neg = ColoredCone(Cone.from_generators([(-1, -1)], 2))
    cone_a4 = ColoredCone(Cone.from_generators([(-1, 1), (1, 0)], 2), {"D"})
    cone_bl = ColoredCone(Cone.from_generators([(1, 0), (1, 1)], 2))
    cone_p4 = ColoredCone(Cone.from_generators([(1, 0), (-1, -1)], 2))
    return {
        "Gl2": (ColoredFan((zero,)), [(2, [])]),
        "A4-0": (ColoredFan((zero, ray_10)), [(2, []), (1, [])]),
        "A4": (ColoredFan((zero, ray_10, cone_a4)),
               [(2, []), (1, []), (0, ["D"])]),
        "Bl0A4": (ColoredFan((zero, ray_10, ray_11, cone_bl)),
                  [(2, []), (1, []), (1, []), (0, [])]),
        "P4-0": (ColoredFan((zero, ray_10, ray_neg, cone_p4)),
                 [(2, []), (1, []), (1, []), (0, [])]),
        "P4": (ColoredFan((zero, ray_10, ray_neg, cone_p4, cone_a4)),
               [(2, []), (1, []), (1, []), (0, ["D"]), (0, [])]),
        "Bl0P4": (ColoredFan((zero, ray_10, ray_11, ray_neg, cone_bl,
                              cone_p4)),
                  [(2, []), (1, []), (1, []), (1, []), (0, []), (0, [])]),
    }


def blowup_a4() -> tuple[SphericalDatum, ColoredFan]:
    return table2_datum(), table2_fans()["Bl0A4"][0]


def p1xp1() -> tuple[SphericalDatum, ColoredFan]:
    """Rank 1, valuation cone the positive ray, two colors both at -1.

    The only embedding is the fan with the uncolored ray; putting either
    color on the ray is invalid because the color sits outside the cone.
    """
    datum = SphericalDatum(
        1, Cone.from_generators([(1,)], 1),
        (Color("D1", (-1,)), Color("D2", (-1,))))
    fan = ColoredFan((ColoredCone(Cone.zero(1)),
                      ColoredCone(Cone.from_generators([(1,)], 1))))
    return datum, fan


def all_fans() -> list[tuple[str, SphericalDatum, ColoredFan,
                             list[tuple[int, list[str]]]]]:
    out = []
    d1 = table1_datum()
    for name, (fan, expected) in table1_fans().items():
        out.append((f"table1/{name}", d1, fan, expected))
    d2 = table2_datum()
    for name, (fan, expected) in table2_fans().items():
        out.append((f"table2/{name}", d2, fan, expected))
    dp, fp = p1xp1()
    out.append(("p1xp1", dp, fp, [(1, []), (0, [])]))
    return out
