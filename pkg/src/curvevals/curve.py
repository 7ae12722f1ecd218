"""Curve germs given by branch parametrizations.

A :class:`Curve` is an ordered list of branches ``t -> (x_1(t), ..., x_m(t))``
with optional plane equations ``f_i`` (one per branch).  Parametrizations
come from explicit series, from a seed lifted through an equation
(:func:`hensel_lift_branch`), or automatically for semi-quasi-homogeneous
equations (:func:`sqh_parametrize`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce as _fold
from math import gcd
from typing import Sequence

from gmpy2 import iroot, mpq

from .coeffs import NumberField, QQ
from .linalg import Echelon
from .poly import Poly, poly_eval_series
from .semigroup import branch_value_closure
from .series import (
    INF,
    IndeterminateOrderError,
    SeriesVector,
    TruncatedSeries,
    TruncationError,
    mv_add,
)

__all__ = [
    "LiftError",
    "BranchSeed",
    "BranchParam",
    "Curve",
    "hensel_lift_branch",
    "sqh_parametrize",
    "intersection_multiplicity",
    "branch_semigroup",
    "conductor_delgado",
    "conductor_direct",
    "delta_mu",
    "monomials_below",
]


class LiftError(ValueError):
    """A seed cannot be lifted to a parametrization."""


@dataclass(frozen=True)
class BranchSeed:
    """Leading terms of a branch.

    ``coords[j]`` maps exponents to coefficients.  Every coordinate except
    ``free`` is taken as exact; the ``free`` one is a prefix to be completed
    by lifting.
    """

    coords: tuple
    free: int = 1
    field: NumberField = QQ

    def __post_init__(self):
        if not 0 <= self.free < len(self.coords):
            raise ValueError("free coordinate index out of range")
        if not any(any(c for c in d.values()) for d in self.coords):
            raise ValueError("seed has no nonzero coefficient")

    @property
    def multiplicity(self) -> int:
        return min(min((e for e, c in d.items() if c), default=INF) for d in self.coords)


class BranchParam:
    """A primitive parametrization with nonnegative exponents."""

    def __init__(self, coords: Sequence[TruncatedSeries]):
        coords = tuple(coords)
        if len(coords) < 2:
            raise ValueError("a branch needs at least two coordinates")
        f = coords[0].field
        for c in coords:
            if c.field != f:
                raise ValueError("branch coordinates over different fields")
            if c.coeffs and c.start < 0:
                raise ValueError("branch parametrizations must not have negative exponents")
            if c.coeffs and c.start == 0:
                raise ValueError("branch coordinates must vanish at t = 0")
        orders = [c.order_bound for c in coords if c.coeffs]
        if not orders:
            raise ValueError("all coordinates vanish")
        self.coords = coords
        self.field = f
        self.multiplicity = min(orders)
        support = [e for c in coords for e in c.terms()]
        if _fold(gcd, support, 0) != 1:
            raise ValueError("parametrization is not primitive (all exponents share a factor)")

    @property
    def m(self) -> int:
        return len(self.coords)

    @property
    def trunc(self):
        return min(c.trunc for c in self.coords)

    def coordinate_orders(self, safe_bound=None) -> tuple:
        return tuple(c.order(safe_bound) for c in self.coords)

    def derivative(self) -> tuple:
        return tuple(c.derivative() for c in self.coords)

    def __repr__(self):
        return "BranchParam(" + ", ".join(repr(c) for c in self.coords) + ")"


def hensel_lift_branch(f: Poly, seed: BranchSeed, N: int, max_steps: int | None = None) -> BranchParam:
    """Complete ``seed`` to a branch of ``f = 0`` known modulo ``t^N``.

    The non-free coordinates are kept exactly; the free one is solved order
    by order from the leading term of the residual divided by the leading
    term of ``df/d(free)``.  A correction must land strictly above the seed
    prefix and must strictly raise the residual order, otherwise the seed is
    rejected.
    """
    if f.nvars != len(seed.coords):
        raise ValueError("seed and equation have different numbers of coordinates")
    field = seed.field
    k_free = seed.free
    base = [TruncatedSeries.from_dict(d, field) for d in seed.coords]
    y_terms = {e: field(c) for e, c in seed.coords[k_free].items() if field(c)}
    prefix_top = max(y_terms, default=0)
    fy = f.diff(k_free)
    steps = 0
    cap = max_steps if max_steps is not None else 4 * N + 64
    # The free coordinate is correct modulo t^(o - e) once the residual has order o.
    last_o = -1
    dy_limit = 2 * N + 64
    while True:
        coords = list(base)
        coords[k_free] = TruncatedSeries.from_dict(y_terms, field)
        dy = poly_eval_series(fy, coords, dy_limit)
        if not dy.coeffs:
            raise LiftError("seed not liftable; supply finer seed or explicit parametrization")
        e = dy.start
        limit = N + e + 1
        r = poly_eval_series(f, coords, limit)
        if not r.coeffs:
            break
        o = r.start
        if o >= N + e:
            break
        if o <= last_o:
            raise LiftError("seed not liftable; supply finer seed or explicit parametrization")
        last_o = o
        k = o - e
        if k <= prefix_top:
            raise LiftError("seed not liftable; supply finer seed or explicit parametrization")
        c = -r.coeffs[0] / dy.coeffs[0]
        y_terms[k] = y_terms.get(k, field.zero) + c
        steps += 1
        if steps > cap:
            raise LiftError("lifting did not converge")
    coords = list(base)
    coords[k_free] = TruncatedSeries.from_dict(y_terms, field)
    if steps or poly_eval_series(f, coords).coeffs:
        # the free coordinate is correct modulo t^(o - e), and o >= N + e
        coords[k_free] = TruncatedSeries.from_dict(y_terms, field, trunc=N)
    return BranchParam(coords)


def _rational_root(q, n: int):
    """A rational ``c`` with ``c**n == q``, or ``None``."""
    q = mpq(q)
    sign = 1
    if q < 0:
        if n % 2 == 0:
            return None
        sign = -1
        q = -q
    a, ea = iroot(q.numerator, n)
    b, eb = iroot(q.denominator, n)
    if ea and eb:
        return sign * mpq(a, b)
    return None


def sqh_parametrize(F: Poly, N: int) -> BranchParam:
    """Branch of ``F = x^a - y^b + (higher weighted terms)`` with ``x = t^b, y = c t^a + ...``."""
    if F.nvars != 2:
        raise ValueError("semi-quasi-homogeneous parametrization is for plane curves")
    pure_x = [(e[0], c) for e, c in F.terms.items() if e[1] == 0]
    pure_y = [(e[1], c) for e, c in F.terms.items() if e[0] == 0]
    if not pure_x or not pure_y:
        raise ValueError("equation needs pure powers of x and y")
    a, u = min(pure_x)
    b, w = min(pure_y)
    if gcd(a, b) != 1:
        raise ValueError(f"gcd({a},{b}) != 1: not an irreducible semi-quasi-homogeneous germ")
    for (i, j), _ in F.terms.items():
        if (i, j) in ((a, 0), (0, b)):
            continue
        if i * b + j * a <= a * b:
            raise ValueError(f"monomial x^{i} y^{j} violates the weight condition")
    if F.field.is_rational:
        c = _rational_root(-u / w, b)
    else:
        c = None
        if -u / w == F.field.one:
            c = F.field.one
    if c is None:
        raise LiftError("leading coefficient needs a root outside the field; supply a seed")
    seed = BranchSeed(({b: 1}, {a: c}), free=1, field=F.field)
    return hensel_lift_branch(F, seed, N)


def monomials_below(orders: Sequence[Sequence], bound: Sequence) -> list:
    """Exponent vectors ``a`` whose value ``sum a_j orders[j]`` is not ``>= bound``.

    ``orders[j]`` is the value of coordinate ``j`` (entries may be ``INF``).
    """
    m = len(orders)
    p = len(bound)
    out = []

    def value(acc):
        v = [0] * p
        for j, a in enumerate(acc):
            if a:
                for k in range(p):
                    v[k] += a * orders[j][k]
        return v

    def rec(j, acc):
        v = value(acc)
        if all(v[k] >= bound[k] for k in range(p)):
            return
        if j == m:
            out.append(tuple(acc))
            return
        a = 0
        while True:
            acc2 = acc + [a]
            v2 = value(acc2 + [0] * (m - j - 1))
            if all(v2[k] >= bound[k] for k in range(p)):
                break
            rec(j + 1, acc2)
            a += 1

    rec(0, [])
    return out


class Curve:
    """A reduced curve germ: ``p`` branches in ``C^m`` plus optional equations."""

    def __init__(
        self,
        branches: Sequence[BranchParam],
        equations: Sequence[Poly] | None = None,
        name: str = "",
    ):
        branches = tuple(branches)
        if not branches:
            raise ValueError("a curve needs at least one branch")
        m = branches[0].m
        f = branches[0].field
        for b in branches:
            if b.m != m:
                raise ValueError("branches live in different ambient dimensions")
            if b.field != f:
                raise ValueError("branches over different fields")
        self.branches = branches
        self.field = f
        self.m = m
        self.name = name
        self.equations = tuple(equations) if equations else None
        if self.equations is not None:
            if m != 2:
                raise ValueError("equations are supported for plane curves only")
            if len(self.equations) != len(branches):
                raise ValueError("need one equation per branch")
            for i, (fi, b) in enumerate(zip(self.equations, branches)):
                r = poly_eval_series(fi, b.coords)
                if r.coeffs:
                    raise ValueError(f"branch {i} does not satisfy its equation (residual {r})")
        self._check_distinct()

    def _check_distinct(self):
        for i in range(self.p):
            for j in range(i + 1, self.p):
                diff = [a - b for a, b in zip(self.branches[i].coords, self.branches[j].coords)]
                if all(not d.coeffs and d.exact for d in diff):
                    raise ValueError(f"branches {i} and {j} coincide")

    @property
    def p(self) -> int:
        return len(self.branches)

    @property
    def is_plane(self) -> bool:
        return self.m == 2

    @property
    def gorenstein_certified(self) -> bool:
        """Plane curves are Gorenstein; other embeddings are taken on trust."""
        return self.is_plane

    @property
    def trunc(self) -> tuple:
        return tuple(b.trunc for b in self.branches)

    @property
    def multiplicities(self) -> tuple:
        return tuple(b.multiplicity for b in self.branches)

    def equation(self) -> Poly | None:
        """The reduced equation ``f = f_1 ... f_p`` when all ``f_i`` are given."""
        if self.equations is None:
            return None
        return _fold(lambda a, b: a * b, self.equations)

    def coordinate_vector(self, j: int) -> SeriesVector:
        return SeriesVector(b.coords[j] for b in self.branches)

    def coordinate_vectors(self) -> list:
        return [self.coordinate_vector(j) for j in range(self.m)]

    def derivative_vectors(self) -> list:
        return [SeriesVector(b.coords[j].derivative() for b in self.branches) for j in range(self.m)]

    def coordinate_values(self) -> list:
        """``val(x_j)`` for every coordinate (exactly zero components give ``INF``)."""
        out = []
        for j in range(self.m):
            v = []
            for b in self.branches:
                c = b.coords[j]
                if c.coeffs:
                    v.append(c.start)
                elif c.exact:
                    v.append(INF)
                else:
                    raise IndeterminateOrderError("coordinate vanishes up to truncation; give it exactly")
            out.append(tuple(v))
        return out

    def branch_curve(self, i: int) -> "Curve":
        eqs = [self.equations[i]] if self.equations is not None else None
        return Curve([self.branches[i]], eqs, name=f"{self.name}[{i}]")

    @cached_property
    def semigroups(self) -> tuple:
        return tuple(branch_semigroup(b) for b in self.branches)

    @cached_property
    def intersection_table(self) -> tuple:
        if self.equations is None:
            raise ValueError("intersection multiplicities need equations")
        return tuple(
            tuple(0 if i == j else intersection_multiplicity(self, i, j) for j in range(self.p))
            for i in range(self.p)
        )

    @cached_property
    def gamma(self) -> tuple:
        if self.p == 1:
            return (self.semigroups[0][1],)
        if self.is_plane and self.equations is not None:
            return conductor_delgado(self)
        return conductor_direct(self)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Curve{label}: p={self.p}, m={self.m}>"


def intersection_multiplicity(curve: Curve, i: int, j: int) -> int:
    """``val_i(f_j)``: the order of ``f_j`` along branch ``i``."""
    if i == j:
        raise ValueError("intersection multiplicity needs two distinct branches")
    if curve.equations is None:
        raise ValueError("equation of branch j is missing")
    r = poly_eval_series(curve.equations[j], curve.branches[i].coords)
    if not r.coeffs:
        if r.exact:
            raise ValueError(f"branches {i} and {j} share a component")
        raise TruncationError(f"f_{j} vanishes on branch {i} up to t^{r.trunc}; raise the truncation")
    return r.start


def branch_semigroup(branch: BranchParam) -> tuple[list, int]:
    """Semigroup elements below the conductor, and the conductor."""
    return branch_value_closure(branch.coords)


def conductor_delgado(curve: Curve) -> tuple:
    """``gamma_j = c_j + sum_{i != j} val_j(f_i)`` for plane curves."""
    table = curve.intersection_table
    out = []
    for j in range(curve.p):
        c = curve.semigroups[j][1]
        out.append(c + sum(table[j][i] for i in range(curve.p) if i != j))
    return tuple(out)


def _od_echelon(curve: Curve, bound: Sequence[int]) -> Echelon:
    """Echelon of the monomials of O_D modulo ``t^bound`` (columns ``(k, e)``)."""
    vals = curve.coordinate_values()
    coords = curve.coordinate_vectors()
    ech = Echelon()
    for k, b in enumerate(curve.branches):
        if b.trunc < bound[k]:
            raise TruncationError(f"branch {k} known to t^{b.trunc}, need t^{bound[k]}")
    cache: dict = {}
    field = curve.field
    one = SeriesVector([TruncatedSeries(field, 0, [field.one], INF)] * curve.p)

    def mono(a):
        if a in cache:
            return cache[a]
        if not any(a):
            r = one
        else:
            j = max(i for i, x in enumerate(a) if x)
            prev = list(a)
            prev[j] -= 1
            r = mono(tuple(prev)).mul(coords[j], limits=bound)
        cache[a] = r
        return r

    for a in monomials_below(vals, bound):
        g = mono(a)
        row = {}
        for k, s in enumerate(g.components):
            for e, c in s.terms().items():
                if e < bound[k]:
                    row[(k, e)] = c
        ech.add(row)
    return ech


def _conductor_holds(curve: Curve, B: Sequence[int]) -> bool:
    mult = curve.multiplicities
    top = mv_add(B, mult)
    ech = _od_echelon(curve, top)
    for k in range(curve.p):
        for j in range(mult[k]):
            if not ech.contains({(k, B[k] + j): curve.field.one}):
                return False
    return True


def conductor_direct(curve: Curve) -> tuple:
    """Smallest ``B`` with ``t^B O_Dtilde`` inside ``O_D``, by rank tests.

    A Nakayama argument reduces the inclusion to the finitely many
    ``t^(B_k + j) e_k`` with ``j`` below the branch multiplicity, tested
    modulo ``t^(B + multiplicity)``.
    """
    p = curve.p
    B = [max(2, 2 * m) for m in curve.multiplicities]
    while not _conductor_holds(curve, B):
        B = [2 * b for b in B]
        if max(B) > 1 << 16:
            raise RuntimeError("conductor search diverged")
    for k in range(p):
        lo, hi = 0, B[k]
        while lo < hi:
            mid = (lo + hi) // 2
            trial = list(B)
            trial[k] = mid
            if _conductor_holds(curve, trial):
                hi = mid
            else:
                lo = mid + 1
        B[k] = lo
    return tuple(B)


def delta_mu(curve: Curve) -> tuple[int, int]:
    """``delta = |gamma| - ell(gamma, O_D)`` and ``mu = 2 delta - p + 1``."""
    from .ideal import FractionalIdeal

    od = FractionalIdeal.preset(curve, "O_D")
    g = curve.gamma
    delta = sum(g) - od.ell(g)
    return delta, 2 * delta - curve.p + 1
