import pytest

from curvevals.ideal import PRESETS, FractionalIdeal, dual_direct
from curvevals.lattice import ValueSet
from curvevals.poincare import (
    LaurentPoly,
    alpha,
    poincare_of_values,
    poincare_poly,
    poincare_symmetry_check,
)
from randideals import PLANE_CURVES, random_ideals


def P(name, preset, curves):
    return poincare_poly(FractionalIdeal.preset(curves[name], preset))


def test_examples(curves):
    assert str(P("cusp", "O_D", curves)) == "1 - t + t^2"
    assert str(P("cusp", "kahler", curves)) == "t"
    assert str(P("node", "O_D", curves)) == "-1 + t1*t2"
    assert str(P("tacnode", "O_D", curves)) == "-1 + t1^2*t2^2"
    assert str(P("E6", "O_D", curves)) == "1 - t + t^3 - t^5 + t^6"
    assert P("node", "O_Dtilde", curves) == LaurentPoly(2)


def test_alpha_pointwise():
    S = ValueSet((0,), (2,), [(0,), (2,)])
    assert [alpha(S, (v,)) for v in range(-1, 4)] == [0, 1, -1, 1, 0]


def test_laurent_algebra():
    t = LaurentPoly(1, {(1,): 1})
    one = LaurentPoly(1, {(0,): 1})
    q = (one - t) * (one + t)
    assert str(q) == "1 - t^2"
    assert q.invert_variables().shift((2,)) == -q
    assert q.evaluate((3,)) == -8
    assert LaurentPoly.from_json(q.to_json()) == q
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


@pytest.mark.parametrize("name", PLANE_CURVES)
@pytest.mark.parametrize("preset", PRESETS)
def test_symmetry_presets(curves, name, preset):
    rep = poincare_symmetry_check(FractionalIdeal.preset(curves[name], preset))
    assert rep.ok, (rep.P, rep.P_dual, rep.expected_dual, rep.c_mismatches)


def test_symmetry_against_direct_dual():
    for name, I in random_ideals(seed=5, per_curve=1):
        rep = poincare_symmetry_check(I, dual_direct(I).values)
        assert rep.ok, name


def test_non_gorenstein_breaks_symmetry(curves):
    I = FractionalIdeal.preset(curves["(t3,t4,t5)"], "O_D")
    assert not poincare_symmetry_check(I, dual_direct(I).values).ok
    assert poincare_of_values(I.values) == LaurentPoly(1, {(0,): 1, (1,): -1, (3,): 1})
