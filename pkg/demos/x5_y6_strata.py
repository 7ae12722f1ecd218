"""Residue values split the tau = 18 stratum of x^5 - y^6.

The family x^5 - y^6 + s1 x^2y^4 + s2 x^3y^3 + s3 x^3y^4 is
equisingular.  Sampling one point per stratum shows that tau only
separates three strata, while the negative values of the residue
module separate four.
"""
from curvevals.catalog import poly
from curvevals.strata import DeformationFamily, markdown_table, scan_strata

family = DeformationFamily(poly({(5, 0): 1, (0, 6): -1}), ((2, 4), (3, 3), (3, 4)))
points = [(0, 0, 0), (0, 0, 1), (1, 0, 0), (0, 1, 0), (3, 0, -2), (0, 5, 1)]

result = scan_strata(family, points)
print(markdown_table(result))

for s in result.samples:
    if s.tau_direct == s.mu_direct:
        print(f"{tuple(int(x) for x in s.point)}: quasi-homogeneous, Jacobian check {s.quasihomogeneous_check}")
