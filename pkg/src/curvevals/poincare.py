"""Poincaré polynomials of value filtrations and their duality."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .lattice import ValueSet, _mv, box_points, staircase_c, symmetric_dual
from .series import mv_sub

__all__ = [
    "LaurentPoly",
    "alpha",
    "alpha_I",
    "poincare_poly",
    "poincare_of_values",
    "poincare_symmetry_check",
    "SymmetryReport",
]


class LaurentPoly:
    """Integer Laurent polynomial in ``p`` variables, stored sparsely."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[Sequence[int], int] | None = None):
        self.p = p
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != p:
                raise ValueError(f"exponent {e} has wrong length for {p} variables")
            c = int(c)
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
                if not self.terms[e]:
                    del self.terms[e]

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.p, out)

    def __neg__(self):
        return LaurentPoly(self.p, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.p, {e: c * other for e, c in self.terms.items()})
        out = {}
        for (e, c), (f, d) in itertools.product(self.terms.items(), other.terms.items()):
            k = tuple(a + b for a, b in zip(e, f))
            out[k] = out.get(k, 0) + c * d
        return LaurentPoly(self.p, out)

    __rmul__ = __mul__

    def invert_variables(self) -> "LaurentPoly":
        """``P(1/t_1, ..., 1/t_p)``."""
        return LaurentPoly(self.p, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by ``t^exps``."""
        exps = _mv(exps)
        return LaurentPoly(self.p, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def support(self) -> list:
        return sorted(self.terms)

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term = term * x**k
            total += term
        return total

    def to_json(self) -> dict:
        return {"terms": [{"exps": list(e), "coeff": self.terms[e]} for e in sorted(self.terms)]}

    @classmethod
    def from_json(cls, data: dict, p: int | None = None) -> "LaurentPoly":
        items = data["terms"]
        if p is None:
            if not items:
                raise ValueError("cannot infer the number of variables of an empty polynomial")
            p = len(items[0]["exps"])
        return cls(p, {tuple(t["exps"]): t["coeff"] for t in items})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ["t"] if self.p == 1 else [f"t{i + 1}" for i in range(self.p)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"


def alpha(S: ValueSet, v: Sequence[int]) -> int:
    """``sum over J of (-1)^|J| c(v - e_J)`` for the value set ``S``."""
    v = _mv(v)
    p = len(v)
    total = 0
    for mask in range(1 << p):
        w = tuple(x - ((mask >> i) & 1) for i, x in enumerate(v))
        sign = -1 if bin(mask).count("1") % 2 else 1
        total += sign * staircase_c(S, w)
    return total


def alpha_I(v: Sequence[int], I) -> int:
    return alpha(I.values, v)


def poincare_of_values(S: ValueSet) -> LaurentPoly:
    """The polynomial ``sum alpha(v) t^v`` over the box ``[lam, nu]``.

    Outside the box every ``alpha`` vanishes; the ring of one coordinate
    beyond each end is probed as a sanity check.
    """
    terms = {}
    for v in box_points(S.lam, S.nu):
        a = alpha(S, v)
        if a:
            terms[v] = a
    for v in _frame(S.lam, S.nu):
        if alpha(S, v):
            raise AssertionError(f"alpha({v}) nonzero outside [lam, nu]")
    return LaurentPoly(S.p, terms)


def _frame(lam, nu):
    """Points just outside the box along each face."""
    p = len(lam)
    for i in range(p):
        for x in (lam[i] - 1, nu[i] + 1):
            lo = list(lam)
            hi = list(nu)
            lo[i] = hi[i] = x
            yield from box_points(lo, hi)


def poincare_poly(I) -> LaurentPoly:
    return poincare_of_values(I.values)


@dataclass
class SymmetryReport:
    ok: bool
    P: LaurentPoly
    P_dual: LaurentPoly
    expected_dual: LaurentPoly
    c_mismatches: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def poincare_symmetry_check(I, dual_values: ValueSet | None = None, gamma=None) -> SymmetryReport:
    """Check ``P_dual = (-1)^(p+1) t^gamma P(1/t)`` and ``c_dual(v) = p - c(gamma - v - 1)``.

    ``I`` is a fractional ideal or a bare value set (then ``gamma`` is needed).
    """
    S = I if isinstance(I, ValueSet) else I.values
    if gamma is None:
        gamma = I.curve.gamma
    gamma = _mv(gamma)
    p = S.p
    D = symmetric_dual(S, gamma) if dual_values is None else dual_values
    P = poincare_of_values(S)
    Pd = poincare_of_values(D)
    expected = P.invert_variables().shift(gamma) * (1 if p % 2 else -1)
    lo = tuple(min(a, b) - 1 for a, b in zip(D.lam, mv_sub(gamma, S.nu)))
    hi = tuple(max(a, b) + 1 for a, b in zip(D.nu, mv_sub(gamma, S.lam)))
    bad = []
    for v in box_points(lo, hi):
        w = tuple(g - x - 1 for g, x in zip(gamma, v))
        if staircase_c(D, v) != p - staircase_c(S, w):
            bad.append(v)
    return SymmetryReport(Pd == expected and not bad, P, Pd, expected, bad)
