"""Jacobian ideal, Kähler differentials, logarithmic residues and Tjurina numbers.

The residue module is reached as the dual of the Jacobian ideal; no
logarithmic vector fields are computed.  Two independent formulas give its
values (the symmetry route from the Jacobian values, and the route from the
values of the Kähler differentials), and :func:`residue_values` insists
that they agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .curve import Curve, delta_mu
from .ideal import FractionalIdeal
from .lattice import ValueSet, box_points, staircase_length, symmetric_dual
from .linalg import Echelon
from .poly import Poly, poly_eval_series
from .series import INF, mv_add, mv_sub

__all__ = [
    "InvariantViolation",
    "kahler_values",
    "omega_values",
    "jacobian_values",
    "teissier_check",
    "residue_values",
    "residue_values_from_kahler",
    "tjurina_via_values",
    "local_dimension",
    "tjurina_direct",
    "milnor_direct",
    "default_dmax",
    "torsion_dimension",
    "quasihomogeneous_jacobian_check",
    "branch_sum_inclusion_check",
    "CheckReport",
    "jacobian_minimum_check",
    "conductor_gap_check",
    "curve_report",
]


class InvariantViolation(AssertionError):
    """Two routes to the same quantity disagree."""


@dataclass
class CheckReport:
    ok: bool
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def kahler_values(curve: Curve) -> ValueSet:
    """Values of the ideal generated by the derivative vectors of the branches."""
    for i, b in enumerate(curve.branches):
        if all(not c.derivative().coeffs for c in b.coords):
            raise ValueError(f"branch {i} has vanishing derivative")
    return FractionalIdeal.preset(curve, "kahler").values


def omega_values(curve: Curve) -> ValueSet:
    """``val(Omega^1)``: the Kähler ideal values shifted by one."""
    return kahler_values(curve).shift((1,) * curve.p)


def jacobian_values(curve: Curve, cross_check: bool = True) -> ValueSet:
    """``val(J_D) = gamma + val(Kähler ideal)``.

    With equations, the ideal generated by ``f_x, f_y`` along the branches is
    computed directly as well and the two must coincide.
    """
    shifted = kahler_values(curve).shift(curve.gamma)
    if cross_check and curve.equations is not None:
        direct = FractionalIdeal.preset(curve, "jacobian").values
        if not direct.same_as(shifted):
            a, b = direct.difference(shifted)
            raise InvariantViolation(f"Jacobian values disagree: only direct {a}, only shifted {b}")
    return shifted


def teissier_check(curve: Curve) -> CheckReport:
    """``val(f_x) = gamma + val(y) - 1`` and ``val(f_y) = gamma + val(x) - 1``."""
    if not curve.is_plane or curve.equations is None:
        raise ValueError("the identities need a plane curve with equations")
    f = curve.equation()
    g = curve.gamma
    one = (1,) * curve.p
    vx, vy = curve.coordinate_values()
    vals = []
    for d in (f.diff(0), f.diff(1)):
        vals.append(tuple(poly_eval_series(d, b.coords).order() for b in curve.branches))
    expect_fx = mv_sub(mv_add(g, vy), one)
    expect_fy = mv_sub(mv_add(g, vx), one)
    ok = vals[0] == expect_fx and vals[1] == expect_fy
    rep = CheckReport(ok, {"val_fx": vals[0], "gamma+val_y-1": expect_fx,
                           "val_fy": vals[1], "gamma+val_x-1": expect_fy})
    if not ok:
        raise InvariantViolation(f"Teissier identities fail: {rep.details}")
    return rep


def residue_values_from_kahler(curve: Curve, window: tuple | None = None) -> ValueSet:
    """``{v : Delta(-v, val(Omega^1)) empty}``."""
    om = omega_values(curve)
    if window is None:
        jac = kahler_values(curve).shift(curve.gamma)
        window = (mv_sub(curve.gamma, jac.nu), mv_sub(curve.gamma, jac.lam))
    lam, nu = window
    return ValueSet.from_predicate(lam, nu, lambda v: not om.delta_nonempty(tuple(-x for x in v)))


def residue_values(curve: Curve) -> ValueSet:
    """Values of the residue module, by the symmetry route and checked by the Kähler route."""
    jac = jacobian_values(curve)
    sym = symmetric_dual(jac, curve.gamma)
    other = residue_values_from_kahler(curve, (sym.lam, sym.nu))
    if not sym.same_as(other):
        a, b = sym.difference(other)
        raise InvariantViolation(f"residue values disagree: only symmetric {a}, only Kähler {b}")
    return sym


def tjurina_via_values(curve: Curve, residues: ValueSet | None = None) -> int:
    """``tau = delta + dim R/O_Dtilde``."""
    R = residue_values(curve) if residues is None else residues
    delta, _ = delta_mu(curve)
    return delta + staircase_length(R, (0,) * curve.p)


# direct local algebra ------------------------------------------------------
def default_dmax(f: Poly) -> int:
    """Degree cap: the local dimension is at most ``(deg f - 1)^2``."""
    d = max(f.degree, 2)
    return (d - 1) ** 2 + 2


def local_dimension(gens: Sequence[Poly], dmax: int) -> int:
    """``dim C{x_1..x_n}/(gens)`` for an ideal supported at the origin.

    The codimension of ``(gens) + m^d`` is computed for ``d = 1, 2, ...``;
    the first repetition proves ``m^(d-1)`` lies in the ideal (Nakayama), so
    that value is the answer.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("the zero ideal is not supported at a point")
    n = gens[0].nvars
    for g in gens:
        if g.constant_term():
            return 0
    prev = None
    for d in range(1, dmax + 1):
        monos = [e for e in _monomials(n, d)]
        ech = Echelon(key=lambda c: (-sum(c), c))
        for g in gens:
            og = g.order
            for s in _monomials(n, d - og):
                row = {}
                for e, c in g.terms.items():
                    e2 = tuple(a + b for a, b in zip(e, s))
                    if sum(e2) < d:
                        row[e2] = c
                if row:
                    ech.add(row)
        codim = len(monos) - len(ech)
        if prev is not None and codim == prev:
            return codim
        prev = codim
    raise ValueError(f"no stabilization up to degree {dmax}: singularity not isolated?")


def _monomials(n: int, d: int):
    """Exponent vectors in ``n`` variables of total degree ``< d``."""
    if d <= 0:
        return
    if n == 1:
        for a in range(d):
            yield (a,)
        return
    for a in range(d):
        for rest in _monomials(n - 1, d - a):
            yield (a,) + rest


def tjurina_direct(f: Poly, dmax: int | None = None) -> int:
    """``dim C{x,y}/(f, f_x, f_y)``."""
    dmax = default_dmax(f) if dmax is None else dmax
    return local_dimension([f] + [f.diff(i) for i in range(f.nvars)], dmax)


def milnor_direct(f: Poly, dmax: int | None = None) -> int:
    """``dim C{x,y}/(f_x, f_y)``."""
    dmax = default_dmax(f) if dmax is None else dmax
    return local_dimension([f.diff(i) for i in range(f.nvars)], dmax)


def torsion_dimension(curve: Curve, tau: int | None = None) -> int:
    """``tau``, verified as ``dim R/O_D`` from the value sets."""
    R = residue_values(curve)
    if tau is None:
        tau = tjurina_via_values(curve, R)
    od = FractionalIdeal.preset(curve, "O_D").values
    nu = tuple(max(a, b) for a, b in zip(R.nu, od.nu))
    dim = staircase_length(R, nu) - staircase_length(od, nu)
    if dim != tau:
        raise InvariantViolation(f"dim R/O_D = {dim} but tau = {tau}")
    return tau


def quasihomogeneous_jacobian_check(curve: Curve) -> CheckReport:
    """Whether ``val(J_D) = gamma - 1 + (val(O_D) minus {0})`` on the window."""
    g = curve.gamma
    p = curve.p
    jac = jacobian_values(curve)
    od = FractionalIdeal.preset(curve, "O_D").values
    shift = tuple(x - 1 for x in g)
    lo = mv_add(shift, od.lam)
    hi = tuple(max(a, b) for a, b in zip(jac.nu, mv_add(shift, od.nu)))
    zero = (0,) * p
    only_j, only_s = [], []
    for v in box_points(lo, hi):
        u = mv_sub(v, shift)
        in_s = u != zero and u in od
        in_j = v in jac
        if in_j and not in_s:
            only_j.append(v)
        elif in_s and not in_j:
            only_s.append(v)
    ok = not only_j and not only_s
    return CheckReport(ok, {"only_jacobian": only_j, "only_shifted_semigroup": only_s})


def branch_sum_inclusion_check(curve: Curve, R: ValueSet | None = None) -> CheckReport:
    """Products of the branch residue values lie in the residue values of the curve."""
    if curve.p < 2:
        raise ValueError("needs at least two branches")
    R = residue_values(curve) if R is None else R
    parts = [residue_values(curve.branch_curve(i)) for i in range(curve.p)]
    axes = [[v[0] for v in part.points(hi=(max(0, R.nu[i]),))] for i, part in enumerate(parts)]
    missing = []
    for v in _product(axes):
        if v not in R:
            missing.append(v)
    return CheckReport(not missing, {"missing": missing})


def _product(axes):
    import itertools

    return itertools.product(*axes)


# reports -----------------------------------------------------------------
def jacobian_minimum_check(curve: Curve, jac: ValueSet | None = None) -> CheckReport:
    """Componentwise minimum of ``val(J_D)`` is ``gamma + multiplicities - 1``."""
    jac = jacobian_values(curve) if jac is None else jac
    expected = tuple(g + m - 1 for g, m in zip(curve.gamma, curve.multiplicities))
    got = jac.minimum()
    return CheckReport(got == expected, {"minimum": got, "expected": expected})


def conductor_gap_check(curve: Curve) -> CheckReport:
    """``Delta(gamma - 1, val(O_D))`` is empty."""
    od = FractionalIdeal.preset(curve, "O_D").values
    v = tuple(g - 1 for g in curve.gamma)
    return CheckReport(not od.delta_nonempty(v), {"point": v})


def curve_report(curve: Curve, verify: str = "cross-check", dmax: int | None = None) -> dict:
    """Invariants and value sets of ``curve`` as a JSON-ready dict.

    ``verify`` is ``"none"``, ``"cross-check"`` (second routes for tau, mu,
    the residue values and the Teissier identities) or ``"full"`` (adds the
    dual and Poincaré checks and the value algorithms).  A failed identity
    that must hold raises :class:`InvariantViolation`.
    """
    from .ideal import dual_direct, value_set_rank_oracle
    from .poincare import poincare_of_values, poincare_symmetry_check

    if verify not in ("none", "cross-check", "full"):
        raise ValueError(f"unknown verification level {verify!r}")
    delta, mu = delta_mu(curve)
    od = FractionalIdeal.preset(curve, "O_D").values
    if verify == "none":
        jac = kahler_values(curve).shift(curve.gamma)
        R = symmetric_dual(jac, curve.gamma)
    else:
        jac = jacobian_values(curve)
        R = residue_values(curve)
    tau = tjurina_via_values(curve, R)
    om = omega_values(curve)
    checks: dict = {}
    caveats = []
    if not curve.gorenstein_certified:
        caveats.append("not a plane curve: the Gorenstein property is assumed, not verified")
    report = {
        "name": curve.name,
        "p": curve.p,
        "m": curve.m,
        "gamma": list(curve.gamma),
        "delta": delta,
        "mu": mu,
        "tau": tau,
        "multiplicities": list(curve.multiplicities),
        "val_O": od.to_json(),
        "val_J": jac.to_json(),
        "val_Omega1": om.to_json(),
        "val_R": R.to_json(),
        "negative_R": [list(v) for v in R.negative_part()],
        "dim_R_over_Otilde": tau - delta,
        "zero_divisor_values_R": sorted(
            (["inf" if x == INF else x for x in v] for v in R.zero_divisor_values()), key=str
        ),
        "normal_crossing_residues": not R.negative_part(),
        "checks": checks,
        "caveats": caveats,
    }
    if verify == "none":
        return report
    checks["residues_two_routes"] = True
    if curve.is_plane and curve.equations is not None:
        f = curve.equation()
        td = tjurina_direct(f, dmax)
        md = milnor_direct(f, dmax)
        report["tau_direct"] = td
        report["mu_direct"] = md
        if td != tau:
            raise InvariantViolation(f"tau from values {tau} but direct {td}")
        if md != mu:
            raise InvariantViolation(f"mu = 2 delta - p + 1 = {mu} but direct {md}")
        checks["tau_routes_agree"] = True
        checks["mu_routes_agree"] = True
        checks["teissier"] = teissier_check(curve).ok
        qh = quasihomogeneous_jacobian_check(curve)
        checks["quasihomogeneous_jacobian"] = qh.ok
        if td == md and not qh.ok:
            raise InvariantViolation("quasi-homogeneous curve fails the Jacobian value identity")
    if curve.is_plane:
        mc = jacobian_minimum_check(curve, jac)
        checks["jacobian_minimum"] = mc.ok
        if not mc.ok:
            raise InvariantViolation(f"min val(J) = {mc.details['minimum']}, expected {mc.details['expected']}")
    checks["torsion_dimension"] = torsion_dimension(curve, tau) == tau
    gap = conductor_gap_check(curve)
    checks["conductor_gap"] = gap.ok
    if not gap.ok and curve.gorenstein_certified:
        raise InvariantViolation("Delta(gamma - 1, val(O_D)) is not empty")
    zero = (0,) * curve.p
    checks["contains_normalization"] = all(v in R for v in box_points(zero, tuple(max(0, x) for x in R.nu)))
    if verify == "full":
        for pname in ("O_D", "jacobian" if curve.is_plane and curve.equations is not None else "kahler"):
            I = FractionalIdeal.preset(curve, pname)
            D = dual_direct(I)
            sym = symmetric_dual(I.values, curve.gamma)
            ok = sym.same_as(D.values)
            checks[f"dual_{pname}_symmetry"] = ok
            if not ok and curve.gorenstein_certified:
                raise InvariantViolation(f"dual of {pname}: symmetry route and direct route differ")
            if not ok:
                caveats.append(f"dual of {pname} differs from the symmetric prediction: the curve is not Gorenstein")
            ps = poincare_symmetry_check(I, D.values)
            checks[f"poincare_{pname}"] = ps.ok
            if not ps.ok and curve.gorenstein_certified:
                raise InvariantViolation(f"Poincaré symmetry fails for {pname}")
        report["poincare_O"] = poincare_of_values(od).to_json()
        oracle = value_set_rank_oracle(FractionalIdeal.preset(curve, "kahler"))
        if curve.p == 1:
            from .stdbasis import value_algo_p1

            checks["value_algo_p1"] = value_algo_p1(FractionalIdeal.preset(curve, "kahler")).same_as(oracle)
        elif curve.p == 2 and curve.equations is not None:
            from .stdbasis import value_algo_p2

            res = FractionalIdeal.preset(curve, "residues")
            checks["value_algo_p2"] = value_algo_p2(res).same_as(value_set_rank_oracle(res))
        if curve.p >= 2:
            checks["branch_sum_inclusion"] = branch_sum_inclusion_check(curve, R).ok
        for k, v in checks.items():
            if k.startswith("value_algo") and not v:
                raise InvariantViolation(f"{k} disagrees with the rank oracle")
    return report
