"""Fractional ideals of the total ring of fractions and their value sets.

An ideal is given by finitely many generators (series vectors) over the
local ring ``O_D`` of a :class:`~curvevals.curve.Curve`.  Its value set is
computed exactly from the finite-dimensional quotient ``I / t^nu O_Dtilde``:
a point ``v`` of the window is a value when, for every branch ``k``, some
element has order exactly ``v_k`` on branch ``k`` and order at least ``v_j``
on every other branch.
"""
from __future__ import annotations

import itertools
from functools import cached_property
from typing import Sequence

from .curve import Curve, monomials_below
from .lattice import ValueSet, box_points, staircase_c, staircase_length, symmetric_dual
from .linalg import Echelon, kernel
from .series import (
    INF,
    SeriesVector,
    TruncatedSeries,
    TruncationError,
    mv_add,
    mv_inf,
    mv_le,
    mv_sub,
)

__all__ = [
    "PRESETS",
    "FractionalIdeal",
    "value_set_rank_oracle",
    "ell",
    "c_I",
    "dual_values_symmetry",
    "dual_direct",
]

PRESETS = ("O_D", "O_Dtilde", "conductor", "kahler", "jacobian", "residues")


def _one(curve: Curve) -> SeriesVector:
    f = curve.field
    return SeriesVector([TruncatedSeries(f, 0, [f.one], INF)] * curve.p)


def _unit_vector(curve: Curve, k: int, e: int) -> SeriesVector:
    f = curve.field
    comps = [TruncatedSeries.zero(f)] * curve.p
    comps = list(comps)
    comps[k] = TruncatedSeries(f, e, [f.one], INF)
    return SeriesVector(comps)


def _lower_value(g: SeriesVector) -> tuple:
    """Componentwise order, with ``INF`` for exact zeros and the truncation as a bound otherwise."""
    return tuple(c.start if c.coeffs else (INF if c.exact else c.trunc) for c in g.components)


class FractionalIdeal:
    """The ``O_D``-module generated by ``generators`` inside ``Q(O_D)``.

    ``lam`` is the componentwise minimum of the generator orders and ``nu``
    the componentwise minimum of ``val(g) + gamma`` over non-zero divisors
    ``g`` of the ideal, so that ``t^nu O_Dtilde <= I <= t^lam O_Dtilde``.
    A caller that knows a better ``nu`` may pass it.
    """

    def __init__(self, curve: Curve, generators: Sequence[SeriesVector], nu: Sequence[int] | None = None,
                 name: str = ""):
        gens = [g for g in generators]
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for g in gens:
            if g.p != curve.p:
                raise ValueError(f"generator has {g.p} components, curve has {curve.p} branches")
            if g.field != curve.field:
                raise ValueError("generator over a different field")
        self.curve = curve
        self.generators = tuple(gens)
        self.name = name
        lows = [_lower_value(g) for g in gens]
        lam = []
        for k in range(curve.p):
            m = min(v[k] for v in lows)
            if m == INF:
                raise ValueError(f"all generators vanish on branch {k}")
            lam.append(m)
        self.lam = tuple(lam)
        if nu is None:
            nu = self._nu_from_nonzerodivisors()
        self.nu = tuple(int(x) for x in nu)
        if not mv_le(self.lam, self.nu):
            raise ValueError("nu must dominate lam")

    # bounds -------------------------------------------------------------
    def _nu_from_nonzerodivisors(self) -> tuple:
        gamma = self.curve.gamma
        best = None
        for g in self.generators:
            if g.is_nonzero_divisor():
                cand = mv_add(tuple(c.start for c in g.components), gamma)
                best = cand if best is None else mv_inf(best, cand)
        if best is None:
            for c in range(1, 64):
                h = self.generators[0]
                power = 1
                for g in self.generators[1:]:
                    power *= c
                    h = h + g.scale(power)
                if h.is_nonzero_divisor():
                    best = mv_add(tuple(s.start for s in h.components), gamma)
                    break
        if best is None:
            raise ValueError("no non-zero divisor found among generator combinations")
        return best

    @classmethod
    def preset(cls, curve: Curve, name: str) -> "FractionalIdeal":
        if name not in PRESETS:
            raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
        gamma = curve.gamma
        if name == "O_D":
            return cls(curve, [_one(curve)], name="O_D")
        if name in ("O_Dtilde", "conductor"):
            gens = [_unit_vector(curve, k, j) for k in range(curve.p) for j in range(gamma[k])]
            gens.append(_one(curve))
            if name == "O_Dtilde":
                return cls(curve, gens, nu=(0,) * curve.p, name="O_Dtilde")
            gens = [g.shift(gamma) for g in gens]
            return cls(curve, gens, nu=gamma, name="conductor")
        if name == "kahler":
            return cls(curve, _nonzero(curve.derivative_vectors()), name="kahler")
        if name == "jacobian":
            return cls(curve, jacobian_generators(curve), name="jacobian")
        # residues
        jac = cls.preset(curve, "jacobian")
        out = dual_direct(jac)
        out.name = "residues"
        return out

    # linear algebra -----------------------------------------------------
    def spanning_rows(self, nu: Sequence[int] | None = None) -> list:
        """Coefficient rows of ``x^a g_i`` modulo ``t^nu`` (columns ``(k, e)``, ``e >= lam_k``).

        Only monomials with ``val(x^a) + val(g_i)`` not above ``nu`` are used;
        the others lie in ``t^nu O_Dtilde``.
        """
        nu = self.nu if nu is None else tuple(nu)
        curve = self.curve
        cvals = curve.coordinate_values()
        coords = curve.coordinate_vectors()
        rows = []
        for g in self.generators:
            low = _lower_value(g)
            rel = tuple(n - l for n, l in zip(nu, low))
            cache = {}

            def prod(a):
                if a in cache:
                    return cache[a]
                if not any(a):
                    r = g.truncate(nu)
                else:
                    j = max(i for i, x in enumerate(a) if x)
                    prev = list(a)
                    prev[j] -= 1
                    r = prod(tuple(prev)).mul(coords[j], limits=nu)
                cache[a] = r
                return r

            for a in monomials_below(cvals, rel):
                h = prod(a)
                row = {}
                for k, s in enumerate(h.components):
                    if s.trunc < nu[k]:
                        raise TruncationError(
                            f"ideal {self.name or ''} needs branch {k} to t^{nu[k]}, have t^{s.trunc}; raise the truncation"
                        )
                    for e, c in s.terms().items():
                        if e < nu[k]:
                            row[(k, e)] = c
                if row:
                    rows.append(row)
        return rows

    @cached_property
    def basis_rows(self) -> list:
        """A basis of ``I / t^nu O_Dtilde`` in echelon form."""
        return Echelon().extend(self.spanning_rows()).rows()

    def ell_direct(self, v: Sequence[int]) -> int:
        """``dim I / I_v`` as a rank: project onto the columns below ``v``."""
        v = tuple(v)
        w = tuple(min(max(a, l), n) for a, l, n in zip(v, self.lam, self.nu))
        if any(a > n for a, n in zip(v, self.nu)):
            raise ValueError("ell_direct works inside the window [lam, nu]")
        ech = Echelon()
        for row in self.basis_rows:
            ech.add({c: a for c, a in row.items() if c[1] < w[c[0]]})
        return len(ech)

    def branch_orders(self, k: int, floor: Sequence[int]) -> set:
        """Orders on branch ``k`` of elements whose other orders are at least ``floor``."""
        def key(col):
            j, e = col
            if j == k:
                return (1, e)
            if e < floor[j]:
                return (0, j, e)
            return (2, j, e)

        ech = Echelon(key).extend(self.basis_rows)
        return {c[1] for c in ech.pivots if c[0] == k}

    # values -------------------------------------------------------------
    @cached_property
    def values(self) -> ValueSet:
        return value_set_rank_oracle(self)

    def ell(self, v, order=None) -> int:
        return staircase_length(self.values, v, order)

    def c(self, v) -> int:
        return staircase_c(self.values, v)

    def dual_values(self) -> ValueSet:
        return dual_values_symmetry(self)

    def dual(self) -> "FractionalIdeal":
        return dual_direct(self)

    def __repr__(self):
        return f"<FractionalIdeal {self.name or '?'}: {len(self.generators)} generators, lam={self.lam}, nu={self.nu}>"


def _nonzero(vectors):
    return [g for g in vectors if any(c.coeffs for c in g.components)]


def jacobian_generators(curve: Curve) -> list:
    """``f_x, f_y`` along the branches, or ``t^gamma`` times the derivative vectors."""
    from .poly import poly_eval_series

    f = curve.equation()
    if f is not None:
        gens = []
        for i in range(curve.m):
            d = f.diff(i)
            gens.append(SeriesVector(poly_eval_series(d, b.coords) for b in curve.branches))
        return _nonzero(gens)
    return [g.shift(curve.gamma) for g in _nonzero(curve.derivative_vectors())]


def value_set_rank_oracle(I: FractionalIdeal) -> ValueSet:
    """Value set of ``I`` on ``[lam, nu]`` by exact rank computations."""
    lam, nu = I.lam, I.nu
    p = I.curve.p
    if p == 1:
        ech = Echelon().extend(I.basis_rows)
        pts = [(c[1],) for c in ech.pivots] + [nu]
        return ValueSet(lam, nu, pts)
    orders = []
    for k in range(p):
        table = {}
        ranges = [range(lam[j], nu[j] + 1) if j != k else (None,) for j in range(p)]
        for floor in itertools.product(*ranges):
            table[floor] = I.branch_orders(k, floor)
        orders.append(table)
    pts = []
    for v in box_points(lam, nu):
        ok = True
        for k in range(p):
            if v[k] == nu[k]:
                continue
            floor = tuple(None if j == k else v[j] for j in range(p))
            if v[k] not in orders[k][floor]:
                ok = False
                break
        if ok:
            pts.append(v)
    return ValueSet(lam, nu, pts)


def ell(v, I: FractionalIdeal) -> int:
    return I.ell(v)


def c_I(v, I: FractionalIdeal) -> int:
    return I.c(v)


def dual_values_symmetry(I: FractionalIdeal) -> ValueSet:
    """Values of the dual: ``v`` with ``Delta(gamma - v - 1, val(I))`` empty."""
    return symmetric_dual(I.values, I.curve.gamma)


def _od_reducer(curve: Curve, bound: Sequence[int]) -> Echelon:
    from .curve import _od_echelon

    return _od_echelon(curve, bound)


def dual_direct(I: FractionalIdeal) -> FractionalIdeal:
    """``{h : h I <= O_D}`` by linear algebra.

    Unknown ``h`` is supported on exponents ``[gamma - nu, gamma - lam)``;
    ``h g_i`` taken modulo ``t^gamma`` must reduce to zero against the
    monomials of ``O_D``.  The solutions plus generators of
    ``t^(gamma - lam) O_Dtilde`` generate the dual.
    """
    curve = I.curve
    gamma = curve.gamma
    p = curve.p
    lo = mv_sub(gamma, I.nu)
    hi = mv_sub(gamma, I.lam)
    od = _od_reducer(curve, gamma)
    unknowns = [(k, e) for k in range(p) for e in range(lo[k], hi[k])]
    images = []
    field = curve.field
    for k, e in unknowns:
        img = {}
        for i, g in enumerate(I.generators):
            s = g.components[k]
            limit = gamma[k] - e
            if s.trunc < limit:
                raise TruncationError(f"dual needs generator {i} on branch {k} to t^{limit}; raise the truncation")
            row = {}
            for ee, c in s.terms().items():
                if ee < limit:
                    row[(k, ee + e)] = c
            red = od.reduce(row)
            for col, c in red.items():
                img[(i, col)] = c
        images.append(img)
    sols = kernel(images, one=field.one)
    gens = []
    for sol in sols:
        comps = []
        for k in range(p):
            terms = {unknowns[idx][1]: c for idx, c in sol.items() if unknowns[idx][0] == k}
            comps.append(TruncatedSeries.from_dict(terms, field))
        gens.append(SeriesVector(comps))
    for k in range(p):
        for j in range(gamma[k]):
            gens.append(_unit_vector(curve, k, hi[k] + j))
    gens.append(_one(curve).shift(hi))
    name = f"dual({I.name})" if I.name else "dual"
    return FractionalIdeal(curve, gens, nu=hi, name=name)
