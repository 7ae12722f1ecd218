"""Standard bases along one branch, and the value algorithms built on them.

Everything here works with full series vectors but only looks at the order
on one *focus* branch.  :class:`SubalgebraBasis` closes the coordinate
functions under the cancellation of equal leading orders; :class:`ModuleBasis`
does the same for an ideal over that subalgebra.  The projected value set
is then ``{val(e) + s}`` over basis elements ``e`` and semigroup elements
``s``.
"""
from __future__ import annotations

from functools import reduce as _fold
from math import gcd
from typing import Sequence

from .lattice import ValueSet, negative_window_reconstruct
from .semigroup import representations, semigroup_conductor, semigroup_elements
from .series import INF, IndeterminateOrderError, SeriesVector, TruncatedSeries, TruncationError

__all__ = [
    "AlgorithmError",
    "SubalgebraBasis",
    "ModuleBasis",
    "value_algo_p1",
    "value_algo_p2",
    "projected_values",
]


class AlgorithmError(RuntimeError):
    """An internal expectation of a value algorithm failed."""


def _focus_order(g: SeriesVector, f: int):
    c = g.components[f]
    if c.coeffs:
        return c.start
    return INF if c.exact else None


class SubalgebraBasis:
    """Standard basis of the algebra generated by ``elements`` along branch ``focus``.

    ``limits`` caps the precision kept on each branch (products are cut
    there), which keeps exact Laurent polynomials from growing.
    """

    def __init__(self, elements: Sequence[SeriesVector], focus: int = 0, limits: Sequence | None = None,
                 cap: int = 10_000):
        self.focus = focus
        self.cap = cap
        self.elements: list = []
        self.values: list = []
        first = elements[0]
        self.p = first.p
        self.field = first.field
        self.limits = tuple(limits) if limits is not None else (INF,) * self.p
        self._products: dict = {}
        for g in elements:
            o = _focus_order(g, focus)
            if o is None:
                raise IndeterminateOrderError("generator vanishes on the focus branch up to truncation")
            if o == INF:
                continue
            if o <= 0:
                raise ValueError("subalgebra generators must vanish at the origin")
            self._add(g.truncate(self.limits))
        if not self.elements:
            raise ValueError("no generator is nonzero on the focus branch")

    def _add(self, g: SeriesVector):
        self.elements.append(g)
        self.values.append(g.components[self.focus].start)
        self._products = {}

    @property
    def gcd(self) -> int:
        return _fold(gcd, self.values, 0)

    def conductor(self) -> int:
        return semigroup_conductor(self.values)

    def one(self) -> SeriesVector:
        f = self.field
        return SeriesVector([TruncatedSeries(f, 0, [f.one], INF)] * self.p)

    def product(self, a: tuple) -> SeriesVector:
        p = self._products.get(a)
        if p is None:
            if not any(a):
                p = self.one()
            else:
                j = max(i for i, x in enumerate(a) if x)
                prev = list(a)
                prev[j] -= 1
                p = self.product(tuple(prev)).mul(self.elements[j], limits=self.limits)
            self._products[a] = p
        return p

    def product_with_value(self, s: int):
        reps = representations(s, self.values, limit=1)
        return self.product(reps[0]) if reps else None

    def subduce(self, r: SeriesVector, bound) -> SeriesVector:
        f = self.focus
        while True:
            c = r.components[f]
            if not c.coeffs or c.start >= bound:
                return r
            p = self.product_with_value(c.start)
            if p is None:
                return r
            r = r - p.scale(c.coeffs[0] / p.components[f].coeffs[0])

    def run(self) -> "SubalgebraBasis":
        while self._pass():
            pass
        return self

    def _pass(self) -> bool:
        f = self.focus
        w = 1
        while True:
            if self.gcd == 1:
                bound = self.conductor()
                if w >= bound:
                    return False
            else:
                bound = INF
                if w > self.cap or w >= self.limits[f]:
                    raise TruncationError("value closure did not reach gcd 1 within the known precision")
            reps = representations(w, self.values)
            if len(reps) >= 2:
                base = self.product(reps[0])
                lead = base.components[f].coeffs[0]
                for b in reps[1:]:
                    other = self.product(b)
                    diff = base - other.scale(lead / other.components[f].coeffs[0])
                    r = self.subduce(diff, bound)
                    c = r.components[f]
                    if not c.coeffs:
                        if c.exact or (bound != INF and c.trunc >= bound):
                            continue
                        raise TruncationError(f"value closure needs branch {f} beyond t^{c.trunc}; raise the truncation")
                    if c.start < bound and not representations(c.start, self.values, limit=1):
                        self._add(r)
                        return True
            w += 1

    def semigroup(self) -> tuple[set, int]:
        c = self.conductor()
        return semigroup_elements(self.values, c), c


class ModuleBasis:
    """Standard basis along the focus branch of the module generated by ``generators``.

    Values at or above ``bound`` are known to belong to the projection and
    are not tracked.
    """

    def __init__(self, algebra: SubalgebraBasis, generators: Sequence[SeriesVector], bound: int,
                 limits: Sequence | None = None):
        self.algebra = algebra
        self.focus = algebra.focus
        self.bound = bound
        self.limits = tuple(limits) if limits is not None else (INF,) * algebra.p
        self.elements: list = []
        self.values: list = []
        for g in generators:
            self._insert(g.truncate(self.limits))

    def _times(self, s: int, i: int) -> SeriesVector:
        h = self.algebra.product_with_value(s) if s else self.algebra.one()
        return h.mul(self.elements[i], limits=self.limits)

    def _value_rep(self, w):
        """``(index, s)`` with ``w = values[index] + s`` and ``s`` in the semigroup."""
        vals = self.algebra.values
        for i, v in enumerate(self.values):
            s = w - v
            if s == 0 or (s > 0 and representations(s, vals, limit=1)):
                return i, s
        return None

    def subduce(self, r: SeriesVector) -> SeriesVector:
        f = self.focus
        while True:
            c = r.components[f]
            if not c.coeffs or c.start >= self.bound:
                return r
            rep = self._value_rep(c.start)
            if rep is None:
                return r
            q = self._times(rep[1], rep[0])
            r = r - q.scale(c.coeffs[0] / q.components[f].coeffs[0])

    def _insert(self, g: SeriesVector) -> bool:
        r = self.subduce(g)
        c = r.components[self.focus]
        if not c.coeffs:
            if c.exact or c.trunc >= self.bound:
                return False
            raise TruncationError(f"module closure needs branch {self.focus} beyond t^{c.trunc}; raise the truncation")
        if c.start >= self.bound:
            return False
        self.elements.append(r)
        self.values.append(c.start)
        return True

    def run(self) -> "ModuleBasis":
        while self._pass():
            pass
        return self

    def _pass(self) -> bool:
        f = self.focus
        vals = self.algebra.values
        n = len(self.elements)
        for i in range(n):
            for j in range(i + 1, n):
                vi, vj = self.values[i], self.values[j]
                start = max(vi, vj)
                for w in range(start, self.bound):
                    si, sj = w - vi, w - vj
                    if si and not representations(si, vals, limit=1):
                        continue
                    if sj and not representations(sj, vals, limit=1):
                        continue
                    a = self._times(si, i)
                    b = self._times(sj, j)
                    diff = a - b.scale(a.components[f].coeffs[0] / b.components[f].coeffs[0])
                    if self._insert(diff):
                        return True
        return False

    def projected_values(self, lo: int) -> set:
        """Values in ``[lo, bound)`` of the projection."""
        out = set()
        for w in range(lo, self.bound):
            if self._value_rep(w) is not None:
                out.add(w)
        return out

    def element_with_value(self, w: int) -> SeriesVector:
        rep = self._value_rep(w)
        if rep is None:
            raise KeyError(w)
        return self._times(rep[1], rep[0])


def projected_values(I, focus: int, limits=None) -> tuple[set, ModuleBasis]:
    """``val_focus(I)`` on ``[lam_focus, nu_focus)`` together with the module basis.

    ``limits`` is the precision kept for the module elements on each branch
    (default ``nu``).  The coordinate algebra keeps enough extra precision
    for its products with elements of order ``lam``.
    """
    curve = I.curve
    if limits is None:
        limits = list(I.nu)
    gamma = curve.gamma
    alg_limits = []
    for k in range(curve.p):
        need = limits[k] - I.lam[k]
        if k == focus:
            need = max(need, 2 * gamma[k] + 2)
        alg_limits.append(need)
    alg = SubalgebraBasis(curve.coordinate_vectors(), focus, alg_limits).run()
    mod = ModuleBasis(alg, I.generators, I.nu[focus], limits).run()
    return mod.projected_values(I.lam[focus]), mod


def value_algo_p1(I) -> ValueSet:
    """Value set of an ideal on a one-branch curve by value closure."""
    if I.curve.p != 1:
        raise ValueError("value_algo_p1 needs an irreducible curve")
    vals, _ = projected_values(I, 0)
    return ValueSet(I.lam, I.nu, [(v,) for v in vals] + [I.nu])


def value_algo_p2(I, trace: list | None = None) -> ValueSet:
    """Values of the residue module of a two-branch plane curve.

    ``I`` must be the residue module (the dual of the Jacobian ideal built
    from the equations).  The part of the value set below 0 is assembled one
    level ``-k`` of the first branch at a time, using witnesses on the
    second branch, and the full set is rebuilt from it.  ``trace`` (a list)
    receives one entry per level.
    """
    from .ideal import FractionalIdeal

    curve = I.curve
    if curve.p != 2:
        raise ValueError("value_algo_p2 needs exactly two branches")
    if curve.equations is None:
        raise ValueError("value_algo_p2 needs the branch equations")
    if any(n > 0 for n in I.nu):
        raise ValueError("value_algo_p2 expects a module containing O_Dtilde (nu <= 0)")
    trace = [] if trace is None else trace
    field = curve.field
    zero = TruncatedSeries.zero(field)

    def mono(e):
        return TruncatedSeries(field, e, [field.one], INF)

    # values <= 0 of the residue modules of the two branches
    sub_vals, sub_mods = [], []
    for i in range(2):
        Ri = FractionalIdeal.preset(curve.branch_curve(i), "residues")
        vals, mod = projected_values(Ri, 0)
        sub_vals.append({v for v in vals if v <= 0} | set(range(Ri.nu[0], 1)))
        sub_mods.append((Ri, mod))

    # first step: val_1 of the module, with elements realizing each value
    vals1, mod1 = projected_values(I, 0, limits=(I.nu[0], 1))
    vals1 = set(vals1) | set(range(I.nu[0], 1))

    def realize_first(v1):
        if v1 >= I.nu[0]:
            return SeriesVector([mono(v1), zero])
        g = mod1.element_with_value(v1)
        return SeriesVector([g.components[0], g.components[1].truncate(1)])

    # second step
    e2 = SeriesVector([zero, mono(0)])
    R2, mod2 = sub_mods[1]
    witnesses = {}
    for v2 in sorted(sub_vals[1]):
        if v2 >= R2.nu[0]:
            witnesses[v2] = SeriesVector([zero, mono(v2)])
        else:
            w = mod2.element_with_value(v2)
            witnesses[v2] = SeriesVector([zero, w.components[0].truncate(1)])
    M = {(0, v2) for v2 in witnesses}
    q = -min(vals1)
    for k in range(1, q + 1):
        if -k not in vals1:
            trace.append((-k, "not a value on branch 1"))
            continue
        col2 = {v2 for (_, v2) in M}
        if -k in sub_vals[0]:
            M |= {(-k, v2) for v2 in col2}
            trace.append((-k, "first case"))
            continue
        rho = realize_first(-k)
        w2 = _second_order(rho)
        if w2 is None or w2 > 0:
            rho = rho + e2
            w2 = 0
        steps = 0
        while w2 is not None and w2 <= 0 and w2 in col2:
            wit = witnesses[w2]
            c2 = rho.components[1]
            rho = rho - wit.scale(c2.coeffs[0] / wit.components[1].coeffs[0])
            if _first_order(rho) != -k:
                raise AlgorithmError(f"level {-k}: cancellation changed the first-branch order")
            w2 = _second_order(rho)
            steps += 1
            if steps > 10_000:
                raise AlgorithmError(f"level {-k}: cancellation did not terminate")
        if w2 is None or w2 > 0:
            # the second order can be pushed above 0, which forces the first-case outcome
            M |= {(-k, v2) for v2 in col2}
            trace.append((-k, "second case, cancelled past 0"))
            continue
        M.add((-k, w2))
        M |= {(-k, v2) for v2 in col2 if v2 <= w2}
        witnesses[w2] = rho
        trace.append((-k, f"second case, new second coordinate {w2}"))
    return negative_window_reconstruct(M)


def _first_order(g: SeriesVector):
    c = g.components[0]
    if not c.coeffs:
        raise AlgorithmError("element lost its first-branch component")
    return c.start


def _second_order(g: SeriesVector):
    """Order on branch 2, or ``None`` when it is zero up to its precision (above 0)."""
    c = g.components[1]
    if c.coeffs:
        return c.start
    if c.exact or c.trunc >= 1:
        return None
    raise TruncationError("branch-2 order undetermined below 1")
