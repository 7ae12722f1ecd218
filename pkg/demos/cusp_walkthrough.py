"""The cusp y^2 = x^3, one module at a time.

Run: python3 demos/cusp_walkthrough.py
"""
from curvevals import catalog
from curvevals.ideal import FractionalIdeal, dual_direct
from curvevals.logres import curve_report
from curvevals.poincare import poincare_poly

cusp = catalog.get("cusp")
print(f"branch: {cusp.branches[0]}")
print(f"conductor gamma = {cusp.gamma}")

# Value sets are stored as a window [lam, nu] plus the members inside it;
# everything at or above nu belongs to the set.
for name in ("O_D", "kahler", "jacobian", "residues"):
    I = FractionalIdeal.preset(cusp, name)
    print(f"{name:>9}: {I.values}")

# The dual of the Jacobian ideal is the residue module.  Computing it by
# linear algebra gives the same values as reading it off the symmetry.
J = FractionalIdeal.preset(cusp, "jacobian")
print("residues via the direct dual:", dual_direct(J).values)

print("Poincare polynomial of O_D:", poincare_poly(FractionalIdeal.preset(cusp, "O_D")))

rep = curve_report(cusp, verify="full")
print(f"delta={rep['delta']} mu={rep['mu']} tau={rep['tau']} (direct tau {rep['tau_direct']})")
print("checks:", ", ".join(k for k, v in rep["checks"].items() if v))
