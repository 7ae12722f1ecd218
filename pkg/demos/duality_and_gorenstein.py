"""Duality of value sets, and where it breaks.

On a plane curve the values of the dual are predicted by the symmetry
v in val(I^dual) iff Delta(gamma - v - 1, val(I)) is empty.  The monomial
space curve (t^3, t^4, t^5) is not Gorenstein and the prediction fails for
O_D itself.
"""
from curvevals import catalog
from curvevals.ideal import FractionalIdeal, dual_direct, dual_values_symmetry
from curvevals.poincare import poincare_symmetry_check
from curvevals.series import SeriesVector, TruncatedSeries

tac = catalog.get("tacnode")


def vec(*comps):
    return SeriesVector(TruncatedSeries.from_dict(c, tac.field) for c in comps)


# a pole on both branches, plus an element vanishing on the second one
I = FractionalIdeal(tac, [vec({-1: 1}, {-1: 1, 1: 1}), vec({1: 1}, {})])
print("I          :", I.values)
print("symmetry   :", dual_values_symmetry(I))
print("direct dual:", dual_direct(I).values)
rep = poincare_symmetry_check(I)
print(f"P_I = {rep.P},  P_dual = {rep.P_dual},  symmetric: {rep.ok}")

space = catalog.get("(t3,t4,t5)")
O = FractionalIdeal.preset(space, "O_D")
print("\n(t^3, t^4, t^5): gorenstein certified?", space.gorenstein_certified)
print("symmetry predicts:", dual_values_symmetry(O))
print("actual dual      :", dual_direct(O).values)
