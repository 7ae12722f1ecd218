import pytest

from curvevals.catalog import poly
from curvevals.coeffs import QQ
from curvevals.curve import (
    BranchParam,
    BranchSeed,
    Curve,
    LiftError,
    conductor_delgado,
    conductor_direct,
    delta_mu,
    hensel_lift_branch,
    sqh_parametrize,
)
from curvevals.poly import poly_eval_series
from curvevals.series import TruncatedSeries as T

CUSP = poly({(2, 0): 1, (0, 3): -1})
DEFORMED = poly({(5, 0): 1, (0, 6): -1, (2, 4): 1})


def S(terms, trunc=None):
    from curvevals.series import INF

    return T.from_dict(terms, QQ, INF if trunc is None else trunc)


def test_poly_eval_series():
    assert poly_eval_series(CUSP, [S({2: 1}), S({3: 1})]).terms() == {4: 1, 9: -1}
    g = poly({(2, 0): 1, (0, 3): -1, (1, 2): 1})
    assert poly_eval_series(g, [S({2: 1}), S({3: 1})]).terms() == {4: 1, 8: 1, 9: -1}


def test_sqh_parametrization_satisfies_equation():
    b = sqh_parametrize(DEFORMED, 40)
    assert b.coords[0] == S({6: 1})
    assert b.coords[1].terms()[5] == 1 and b.coords[1].trunc == 40
    r = poly_eval_series(DEFORMED, b.coords)
    assert not r.coeffs and r.trunc >= 40


def test_hensel_agrees_with_sqh():
    lifted = hensel_lift_branch(DEFORMED, BranchSeed(({6: 1}, {5: 1}), free=1), 40)
    assert lifted.coords[1].agrees_with(sqh_parametrize(DEFORMED, 40).coords[1])


def test_unliftable_seed():
    with pytest.raises(LiftError):
        hensel_lift_branch(CUSP, BranchSeed(({1: 1}, {1: 1}), free=1), 10)


def test_branch_validation():
    with pytest.raises(ValueError):
        BranchParam([S({2: 1}), S({4: 1})])  # not primitive
    with pytest.raises(ValueError):
        BranchParam([S({-1: 1}), S({3: 1})])
    with pytest.raises(ValueError):
        Curve([BranchParam([S({1: 1}), S({})])] * 2)
    with pytest.raises(ValueError):
        Curve([BranchParam([S({2: 1}), S({3: 1})])], [poly({(2, 0): 1, (0, 3): 1})])


@pytest.mark.parametrize(
    "name, gamma, delta, mu",
    [
        ("cusp", (2,), 1, 2),
        ("E8", (8,), 4, 8),
        ("x5-y6", (20,), 10, 20),
        ("node", (1, 1), 1, 1),
        ("tacnode", (2, 2), 2, 3),
        ("A5", (3, 3), 3, 5),
        ("cusp+tangent", (5, 3), 4, 7),
        ("two cusps", (8, 8), 8, 15),
        ("D4", (2, 2, 2), 3, 4),
        ("(t3,t4,t5)", (3,), 2, 4),
        ("three axes", (1, 1, 1), 2, 2),
    ],
)
def test_conductor_delta_mu(curves, name, gamma, delta, mu):
    c = curves[name]
    assert c.gamma == gamma
    assert delta_mu(c) == (delta, mu)


@pytest.mark.parametrize("name", ["node", "tacnode", "A5", "cusp+tangent", "two cusps", "D4", "lines+tangency"])
def test_conductor_two_ways(curves, name):
    c = curves[name]
    assert conductor_delgado(c) == conductor_direct(c)


def test_intersection_multiplicities(curves):
    assert curves["node"].intersection_table[0][1] == 1
    assert curves["tacnode"].intersection_table[0][1] == 2
    assert curves["two cusps"].intersection_table[1][0] == 6


def test_branch_semigroups(curves):
    assert curves["cusp"].semigroups[0] == ([0], 2)
    assert curves["x5-y6"].semigroups[0][1] == 20
    assert curves["node"].semigroups[0] == ([], 0)


def test_space_curves_not_certified(curves):
    assert curves["cusp"].gorenstein_certified
    assert not curves["(t3,t4,t5)"].gorenstein_certified
