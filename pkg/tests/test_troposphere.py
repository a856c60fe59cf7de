from fractions import Fraction as F

import pytest

from sphtrop.examples import all_fans, blowup_a4, table2_datum
from sphtrop.fundthm import TropicalComplex, extended_trop_sets
from sphtrop.linalg import vadd, vscale
from sphtrop.polyhedra import Cone
from sphtrop.puiseux import INF, ValuedPolynomial
from sphtrop.spherical import Color, ColoredCone, ColoredFan, SphericalDatum
from sphtrop.troposphere import (
    assemble_subvariety_trop,
    contains_point,
    evaluate_point,
    limit_point,
    stratum_valuation_cone,
    tropicalize_embedding,
)


def bl0a4_trop():
    datum, fan = blowup_a4()
    return datum, tropicalize_embedding(datum, fan)


def test_strata_shapes_match_expected():
    for name, datum, fan, expected in all_fans():
        t = tropicalize_embedding(datum, fan)
        got = sorted(((s.quotient_dim, sorted(s.labels))
                      for s in t.strata.values()), reverse=True)
        assert got == sorted(expected, reverse=True), name


def test_stratum_count_equals_colored_face_count():
    datum, fan = blowup_a4()
    t = tropicalize_embedding(datum, fan)
    assert len(t.strata) == 4


def test_stratum_valuation_cones():
    datum = table2_datum()
    line = stratum_valuation_cone(datum, Cone.from_generators([(1, 0)], 2))
    assert line.dim() == 1 and len(line.lineality) == 1
    ray = stratum_valuation_cone(datum, Cone.from_generators([(1, 1)], 2))
    assert ray.dim() == 1 and ray.is_strictly_convex()
    whole = stratum_valuation_cone(datum, Cone.zero(2))
    assert whole == datum.valuation_cone
    with pytest.raises(ValueError):
        stratum_valuation_cone(datum, Cone.from_generators([(-1, 1)], 2))


def test_evaluate_point():
    _, t = bl0a4_trop()
    tau = Cone.from_generators([(1, 1)], 2)
    p = limit_point(t, (3, 1), tau)
    assert evaluate_point(p, (1, -1)) == 2
    assert evaluate_point(p, (1, 0)) is INF
    with pytest.raises(ValueError):
        evaluate_point(p, (-1, 0))
    open_p = limit_point(t, (3, 1), Cone.zero(2))
    assert evaluate_point(open_p, (1, 0)) == 3


def test_contains_point():
    _, t = bl0a4_trop()
    open_s = t.stratum_of_face(Cone.zero(2))
    assert contains_point(t, open_s.point((5, 1)))
    assert not contains_point(t, open_s.point((0, 1)))
    ray_s = t.stratum_of_face(Cone.from_generators([(1, 1)], 2))
    good = ray_s.valuation_cone_image.relint_point()
    assert contains_point(t, ray_s.point(good))
    assert not contains_point(t, ray_s.point(vscale(F(-1), good)))


def test_convergence_to_limit_point():
    datum, t = bl0a4_trop()
    sigma = Cone.from_generators([(1, 0), (1, 1)], 2)
    dual_gens = sigma.dual().generators
    w = (F(3), F(1))
    for tau in [Cone.zero(2), Cone.from_generators([(1, 0)], 2),
                Cone.from_generators([(1, 1)], 2), sigma]:
        r = tau.intersect(datum.valuation_cone).relint_point()
        p = limit_point(t, w, tau)
        for u in dual_gens:
            limit = evaluate_point(p, u)
            vals = [sum(a * b for a, b in zip(u, vadd(w, vscale(F(n), r))))
                    for n in range(1, 30)]
            if limit is INF:
                assert all(b > a for a, b in zip(vals, vals[1:]))
            else:
                assert all(v == limit for v in vals)


def test_gluing_dedups_shared_faces():
    datum = table2_datum()
    # two maximal cones sharing the ray (1,0)
    fan = ColoredFan((ColoredCone(Cone.zero(2)),
                      ColoredCone(Cone.from_generators([(1, 0)], 2)),
                      ColoredCone(Cone.from_generators([(1, 1)], 2)),
                      ColoredCone(Cone.from_generators([(-1, -1)], 2)),
                      ColoredCone(Cone.from_generators([(1, 0), (1, 1)], 2)),
                      ColoredCone(Cone.from_generators([(1, 0), (-1, -1)], 2))))
    t = tropicalize_embedding(datum, fan)
    assert len(t.strata) == 6


def test_adjacency_reflects_face_order():
    _, t = bl0a4_trop()
    sigma_key = t.stratum_of_face(
        Cone.from_generators([(1, 0), (1, 1)], 2)).key
    assert t.adjacency[sigma_key] == frozenset(t.strata)
    zero_key = t.stratum_of_face(Cone.zero(2)).key
    assert t.adjacency[zero_key] == frozenset({zero_key})


def test_rank_zero_datum_is_a_point():
    datum = SphericalDatum(0, Cone.zero(0), ())
    t = tropicalize_embedding(datum, ColoredFan((ColoredCone(Cone.zero(0)),)))
    assert len(t.strata) == 1
    (s,) = t.strata.values()
    assert s.quotient_dim == 0


def test_invalid_fan_rejected():
    datum = table2_datum()
    fan = ColoredFan((ColoredCone(Cone.from_generators([(1, 0)], 2)),))
    with pytest.raises(ValueError):
        tropicalize_embedding(datum, fan)


def test_assemble_subvariety_trop():
    # toric plane: empty palette, V everything, fan the closed quadrant
    datum = SphericalDatum(2, Cone.full_space(2), ())
    quadrant = Cone.from_generators([(1, 0), (0, 1)], 2)
    fan = ColoredFan(tuple(ColoredCone(f) for f in quadrant.faces()))
    t = tropicalize_embedding(datum, fan)
    f = ValuedPolynomial.parse("x1 + x2 + 1", laurent=False)
    sets = extended_trop_sets(f)
    per_stratum = {}
    face_of_sigma = {frozenset(): Cone.zero(2),
                     frozenset({0}): Cone.from_generators([(1, 0)], 2),
                     frozenset({1}): Cone.from_generators([(0, 1)], 2),
                     frozenset({0, 1}): quadrant}
    for sigma, cx in sets.items():
        key = t.stratum_of_face(face_of_sigma[sigma]).key
        per_stratum[key] = cx
    subset = assemble_subvariety_trop(t, per_stratum)
    assert not subset.is_empty()
    # the sigma = {0,1} piece (constant restriction) is empty
    corner = t.stratum_of_face(quadrant).key
    assert subset.sets[corner].is_empty_set()


def test_assemble_rejects_escaping_sets():
    datum, fan = blowup_a4()
    t = tropicalize_embedding(datum, fan)
    open_key = t.stratum_of_face(Cone.zero(2)).key
    whole = TropicalComplex.whole_space(2)
    with pytest.raises(ValueError):
        assemble_subvariety_trop(t, {open_key: whole})
