"""Numerical semigroups and the value closure of a single branch.

The closure is a subalgebra standard basis in one variable: start from the
coordinate series, and whenever two products of basis elements share a
value, cancel their leading terms and reduce the difference against
products of the basis.  A reduced remainder with a value outside the
current semigroup is a new basis element.
"""
from __future__ import annotations

from functools import reduce as _fold
from math import gcd
from typing import Iterable, Sequence

from .series import INF, IndeterminateOrderError, TruncatedSeries, TruncationError

__all__ = [
    "semigroup_elements",
    "semigroup_conductor",
    "semigroup_gaps",
    "in_semigroup",
    "representations",
    "SemigroupClosure",
    "branch_value_closure",
]


def semigroup_elements(gens: Sequence[int], bound: int) -> set:
    """All elements of the monoid generated by ``gens`` that are ``< bound``."""
    gens = sorted({g for g in gens if g > 0})
    member = [False] * max(bound, 0)
    if bound > 0:
        member[0] = True
    for n in range(1, bound):
        for g in gens:
            if g > n:
                break
            if member[n - g]:
                member[n] = True
                break
    return {n for n in range(bound) if member[n]}


def semigroup_conductor(gens: Sequence[int]) -> int:
    """Smallest ``c`` with ``c + N`` inside the semigroup (gcd must be 1)."""
    gens = sorted({g for g in gens if g > 0})
    if not gens:
        raise ValueError("empty generator list")
    if _fold(gcd, gens) != 1:
        raise ValueError("generators have gcd > 1: no conductor")
    if gens[0] == 1:
        return 0
    m = gens[0]
    member = [True]
    run = 1
    n = 0
    last_gap = -1
    while run < m:
        n += 1
        ok = any(g <= n and member[n - g] for g in gens)
        member.append(ok)
        if ok:
            run += 1
        else:
            run = 0
            last_gap = n
    return last_gap + 1


def semigroup_gaps(gens: Sequence[int]) -> list:
    c = semigroup_conductor(gens)
    s = semigroup_elements(gens, c)
    return [n for n in range(c) if n not in s]


def in_semigroup(n: int, gens: Sequence[int]) -> bool:
    if n < 0:
        return False
    return n in semigroup_elements(gens, n + 1)


def representations(w: int, gens: Sequence[int], limit: int = 64) -> list:
    """Exponent vectors ``a`` with ``sum a_i gens_i == w`` (at most ``limit``)."""
    out: list = []
    k = len(gens)

    def rec(i, rest, acc):
        if len(out) >= limit:
            return
        if i == k - 1:
            g = gens[i]
            if rest % g == 0:
                out.append(tuple(acc + [rest // g]))
            return
        g = gens[i]
        for a in range(rest // g, -1, -1):
            rec(i + 1, rest - a * g, acc + [a])

    if k:
        rec(0, w, [])
    return out


class SemigroupClosure:
    """Standard basis of the subalgebra generated by some series in ``t``.

    ``elements`` are the basis series and ``values`` their orders; after
    :meth:`run`, the values generate the full value semigroup of the algebra.
    """

    def __init__(self, series: Iterable[TruncatedSeries], cap: int = 10_000):
        self.elements: list = []
        self.values: list = []
        self.cap = cap
        self._products: dict = {}
        for s in series:
            if s.is_zero():
                if not s.exact:
                    raise IndeterminateOrderError("coordinate is zero up to its truncation")
                continue
            o = s.order()
            if o <= 0:
                raise ValueError("coordinate series must vanish at the origin")
            self._add(s)

    def _add(self, s: TruncatedSeries):
        self.elements.append(s)
        self.values.append(s.order())
        self._products = {}

    @property
    def gcd(self) -> int:
        return _fold(gcd, self.values, 0)

    def conductor(self) -> int:
        return semigroup_conductor(self.values)

    def _product(self, a: tuple) -> TruncatedSeries:
        p = self._products.get(a)
        if p is None:
            field = self.elements[0].field
            p = TruncatedSeries(field, 0, [field.one], INF)
            for s, k in zip(self.elements, a):
                if k:
                    p = p.mul(s.pow(k))
            self._products[a] = p
        return p

    def subduce(self, r: TruncatedSeries, bound) -> TruncatedSeries:
        """Reduce ``r`` against basis products while its value is in the semigroup.

        Stops early once the order reaches ``bound`` (everything from there on
        lies in the semigroup).
        """
        while r.coeffs:
            w = r.start
            if w >= bound:
                return r
            reps = representations(w, self.values, limit=1)
            if not reps:
                return r
            p = self._product(reps[0])
            r = r - p.scale(r.coeffs[0] / p.coeffs[0])
        return r

    def run(self) -> "SemigroupClosure":
        while True:
            if self._pass():
                continue
            return self

    def _pass(self) -> bool:
        """One sweep over equal-value product pairs; True if a generator was added."""
        w = 1
        while True:
            if self.gcd == 1:
                bound = self.conductor()
                if w >= bound:
                    return False
            else:
                bound = INF
                if w > self.cap:
                    raise ValueError("value closure did not reach gcd 1; is the parametrization primitive?")
            reps = representations(w, self.values)
            if len(reps) >= 2:
                base = self._product(reps[0])
                for b in reps[1:]:
                    other = self._product(b)
                    diff = base - other.scale(base.coeffs[0] / other.coeffs[0])
                    r = self.subduce(diff, bound)
                    if not r.coeffs:
                        if r.exact:
                            continue
                        if bound != INF and r.trunc >= bound:
                            continue
                        raise TruncationError(
                            f"value closure needs coefficients beyond t^{r.trunc}; raise the truncation"
                        )
                    if r.start < bound and representations(r.start, self.values, limit=1) == []:
                        self._add(r)
                        return True
            w += 1

    def semigroup(self) -> tuple[set, int]:
        c = self.conductor()
        return semigroup_elements(self.values, c), c


def branch_value_closure(coords: Sequence[TruncatedSeries]) -> tuple[list, int]:
    """``(sorted semigroup elements below the conductor, conductor)`` of a branch."""
    cl = SemigroupClosure(coords).run()
    s, c = cl.semigroup()
    return sorted(s), c
