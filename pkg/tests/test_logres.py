import json

import pytest

from curvevals.catalog import poly
from curvevals.logres import (
    InvariantViolation,
    branch_sum_inclusion_check,
    conductor_gap_check,
    curve_report,
    default_dmax,
    jacobian_minimum_check,
    local_dimension,
    milnor_direct,
    quasihomogeneous_jacobian_check,
    residue_values,
    residue_values_from_kahler,
    teissier_check,
    tjurina_direct,
    tjurina_via_values,
    torsion_dimension,
)
from randideals import PLANE_CURVES

SUMMARY = {
    # name: (delta, mu, tau, negative residue values, dim R/O~)
    "cusp": (1, 2, 2, [[-1]], 1),
    "E6": (3, 6, 6, [[-5], [-2], [-1]], 3),
    "W-(4,6,13)": (8, 16, 14, [[-9], [-7], [-5], [-3], [-2], [-1]], 6),
    "tacnode": (2, 3, 3, [[-1, -1]], 1),
    "A5": (3, 5, 5, [[-2, -2], [-1, -1]], 2),
}


@pytest.mark.parametrize("name", sorted(SUMMARY))
def test_report_values(curves, name):
    r = curve_report(curves[name], "cross-check")
    delta, mu, tau, neg, dim = SUMMARY[name]
    assert (r["delta"], r["mu"], r["tau"], r["negative_R"], r["dim_R_over_Otilde"]) == (delta, mu, tau, neg, dim)
    json.dumps(r)


def test_direct_local_algebra():
    cusp = poly({(2, 0): 1, (0, 3): -1})
    assert tjurina_direct(cusp) == milnor_direct(cusp) == 2
    w = poly({(0, 4): 1, (3, 2): -2, (6, 0): 1, (5, 1): -4, (7, 0): -1})
    assert (tjurina_direct(w), milnor_direct(w)) == (14, 16)
    # a semi-quasi-homogeneous deformation that is not quasi-homogeneous
    g = poly({(5, 0): 1, (0, 6): -1, (2, 4): 1})
    assert (tjurina_direct(g), milnor_direct(g)) == (18, 20)
    x = poly({(1, 0): 1})
    y = poly({(0, 1): 1})
    assert local_dimension([x, y], 5) == 1
    assert local_dimension([x * x, y], 5) == 2
    assert default_dmax(cusp) == 6


@pytest.mark.parametrize("name", PLANE_CURVES)
def test_tau_two_ways(curves, name):
    c = curves[name]
    R = residue_values(c)
    assert R.same_as(residue_values_from_kahler(c))
    assert tjurina_via_values(c, R) == tjurina_direct(c.equation())


@pytest.mark.parametrize("name", PLANE_CURVES)
def test_structural_checks(curves, name):
    c = curves[name]
    assert teissier_check(c).ok
    assert torsion_dimension(c) >= 0
    assert jacobian_minimum_check(c).ok
    assert conductor_gap_check(c).ok
    if c.p >= 2:
        assert branch_sum_inclusion_check(c).ok


def test_quasihomogeneous_check(curves):
    assert quasihomogeneous_jacobian_check(curves["E8"]).ok
    assert quasihomogeneous_jacobian_check(curves["tacnode"]).ok
    assert not quasihomogeneous_jacobian_check(curves["W-(4,6,13)"]).ok


def test_full_report(curves):
    r = curve_report(curves["cusp+tangent"], "full")
    assert all(r["checks"].values())
    assert r["tau_direct"] == r["tau"]


def test_space_curve_caveats(curves):
    r = curve_report(curves["(t3,t4,t5)"], "full")
    assert r["caveats"] and not r["checks"]["dual_O_D_symmetry"]


def test_invariant_violation_is_assertion():
    assert issubclass(InvariantViolation, AssertionError)
