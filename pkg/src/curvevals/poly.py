"""Sparse multivariate polynomials over a coefficient field."""
from __future__ import annotations

from typing import Mapping, Sequence

from .coeffs import NumberField, QQ
from .series import INF, TruncatedSeries

__all__ = ["Poly", "poly_eval_series"]


class Poly:
    """A polynomial ``sum c_a x^a`` stored as ``{exponent tuple: coeff}``."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, terms: Mapping[Sequence[int], object], nvars: int | None = None, field: NumberField = QQ):
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if any(e < 0 for e in exps):
                raise ValueError("polynomial exponents must be nonnegative")
            if nvars is None:
                nvars = len(exps)
            if len(exps) != nvars:
                raise ValueError("inconsistent number of variables in polynomial terms")
            c = field(c)
            if c:
                clean[exps] = clean.get(exps, field.zero) + c
        if nvars is None:
            raise ValueError("cannot infer the number of variables of an empty polynomial")
        self.field = field
        self.nvars = nvars
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def from_list(cls, items, nvars=None, field: NumberField = QQ) -> "Poly":
        """From ``[(coeff, exps), ...]``."""
        acc: dict = {}
        for c, e in items:
            e = tuple(e)
            acc[e] = acc.get(e, field.zero) + field(c)
        return cls(acc, nvars, field)

    @classmethod
    def variable(cls, i: int, nvars: int, field: NumberField = QQ) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars, field)

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, self.field.zero) + c
        return Poly(t, self.nvars, self.field)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = self.field(other)
            return Poly({e: c * a for e, a in self.terms.items()}, self.nvars, self.field)
        self._check(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, self.field.zero) + c1 * c2
        return Poly(t, self.nvars, self.field)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, i: int) -> "Poly":
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return Poly(t, self.nvars, self.field)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def order(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin)."""
        return min((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = "xyzuvw" if self.nvars <= 6 else None
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            mono = []
            for i, k in enumerate(e):
                if k:
                    v = names[i] if names else f"x{i}"
                    mono.append(v if k == 1 else f"{v}^{k}")
            parts.append(f"{self.terms[e]}" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)


def poly_eval_series(f: Poly, coords: Sequence[TruncatedSeries], limit=INF) -> TruncatedSeries:
    """Compose ``f(x_1(t), ..., x_m(t))``, known up to the product truncations.

    ``limit`` caps the truncation of the result (useful for exact inputs with
    many terms, where only low orders matter).
    """
    if len(coords) != f.nvars:
        raise ValueError(f"polynomial in {f.nvars} variables evaluated at {len(coords)} coordinates")
    field = coords[0].field if coords else f.field
    cache = [{0: TruncatedSeries(field, 0, [field.one], INF), 1: s.truncate(limit)} for s in coords]

    def power(i, k):
        c = cache[i]
        if k not in c:
            c[k] = power(i, k - 1).mul(c[1], limit)
        return c[k]

    total = TruncatedSeries.zero(field, limit)
    for e, c in f.terms.items():
        term = TruncatedSeries(field, 0, [field(c)], INF)
        for i, k in enumerate(e):
            if k:
                term = term.mul(power(i, k), limit)
        total = total + term
    return total
