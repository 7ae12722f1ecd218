"""Truncated Laurent series, series vectors over the branches, and values.

A :class:`TruncatedSeries` stores ``sum c_e t^e`` for exponents
``start <= e < trunc``.  ``trunc`` is either an integer (coefficients at or
beyond it are unknown) or ``INF`` for a series that is known exactly, i.e. a
Laurent polynomial.  Coefficients are elements of a :class:`NumberField`.

Values live in ``(Z u {oo})^p`` and are plain tuples; ``INF`` is
``math.inf``, which compares and adds correctly with Python integers.
"""
from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .coeffs import NumberField, QQ

__all__ = [
    "INF",
    "IndeterminateOrderError",
    "TruncationError",
    "ShapeError",
    "TruncatedSeries",
    "SeriesVector",
    "val",
    "mv_inf",
    "mv_sup",
    "mv_add",
    "mv_sub",
    "mv_le",
    "mv_is_finite",
    "format_value",
]

INF = math.inf


class TruncationError(ArithmeticError):
    """A computation needs coefficients beyond the known truncation."""


class IndeterminateOrderError(TruncationError):
    """All stored coefficients vanish but the truncation is too low to conclude."""


class ShapeError(ValueError):
    """Operands have different branch counts or coefficient fields."""


def _min_trunc(a, b):
    return a if a <= b else b


class TruncatedSeries:
    """A Laurent series known up to (excluding) ``trunc``.

    ``coeffs[i]`` is the coefficient of ``t^(start+i)``.  After construction
    the first stored coefficient is nonzero unless the series is zero up to
    its truncation, in which case ``coeffs`` is empty.
    """

    __slots__ = ("field", "start", "coeffs", "trunc")

    def __init__(self, field: NumberField, start: int, coeffs: Sequence, trunc=INF):
        if trunc != INF and not isinstance(trunc, int):
            raise TypeError("truncation must be an int or INF")
        c = list(coeffs)
        if trunc != INF and start + len(c) > trunc:
            del c[max(trunc - start, 0):]
        i = 0
        while i < len(c) and not c[i]:
            i += 1
        start += i
        c = c[i:]
        while c and not c[-1]:
            c.pop()
        if not c:
            start = trunc if trunc != INF else 0
        self.field = field
        self.start = start
        self.coeffs = c
        self.trunc = trunc

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field: NumberField = QQ, trunc=INF) -> "TruncatedSeries":
        return cls(field, 0, [], trunc)

    @classmethod
    def monomial(cls, exp: int, coeff=None, field: NumberField = QQ, trunc=INF) -> "TruncatedSeries":
        c = field.one if coeff is None else field(coeff)
        return cls(field, exp, [c], trunc)

    @classmethod
    def from_dict(cls, terms: Mapping[int, object], field: NumberField = QQ, trunc=INF) -> "TruncatedSeries":
        if not terms:
            return cls.zero(field, trunc)
        lo, hi = min(terms), max(terms)
        c = [field.zero] * (hi - lo + 1)
        for e, a in terms.items():
            c[e - lo] = field(a)
        return cls(field, lo, c, trunc)

    # basic queries ------------------------------------------------------
    @property
    def exact(self) -> bool:
        return self.trunc == INF

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    @property
    def order_bound(self):
        """Exact order if nonzero, otherwise the lower bound ``trunc``."""
        return self.start if self.coeffs else self.trunc

    def order(self, safe_bound=None):
        """Order in ``t``; ``INF`` for the zero series.

        A non-exact series whose known coefficients all vanish only gets
        order ``INF`` when ``trunc >= safe_bound``; otherwise the order is
        indeterminate and an :class:`IndeterminateOrderError` is raised.
        """
        if self.coeffs:
            return self.start
        if self.exact or (safe_bound is not None and self.trunc >= safe_bound):
            return INF
        raise IndeterminateOrderError(
            f"series is zero up to t^{self.trunc}; raise the truncation to decide its order"
        )

    def leading_coefficient(self):
        if not self.coeffs:
            raise IndeterminateOrderError("zero series has no leading coefficient")
        return self.coeffs[0]

    def coeff(self, e: int):
        if e >= self.trunc:
            raise TruncationError(f"coefficient of t^{e} requested beyond truncation {self.trunc}")
        i = e - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def terms(self) -> dict:
        return {self.start + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def max_exp(self):
        """Largest exponent with a stored nonzero coefficient (None if zero)."""
        return self.start + len(self.coeffs) - 1 if self.coeffs else None

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.field is not self.field and other.field != self.field:
            raise ShapeError("series over different coefficient fields")

    def truncate(self, n) -> "TruncatedSeries":
        if n >= self.trunc:
            return self
        return TruncatedSeries(self.field, self.start, self.coeffs, n)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        trunc = _min_trunc(self.trunc, other.trunc)
        if not self.coeffs:
            return other.truncate(trunc) if other.coeffs else TruncatedSeries.zero(self.field, trunc)
        if not other.coeffs:
            return self.truncate(trunc)
        lo = min(self.start, other.start)
        hi = max(self.start + len(self.coeffs), other.start + len(other.coeffs))
        if trunc != INF:
            hi = min(hi, trunc)
        if hi <= lo:
            return TruncatedSeries.zero(self.field, trunc)
        zero = self.field.zero
        c = [zero] * (hi - lo)
        for i, a in enumerate(self.coeffs):
            k = self.start + i - lo
            if k < len(c):
                c[k] = a
        for i, a in enumerate(other.coeffs):
            k = other.start + i - lo
            if k < len(c):
                c[k] = c[k] + a
        return TruncatedSeries(self.field, lo, c, trunc)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.field, self.start, [-a for a in self.coeffs], self.trunc)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        c = self.field(c)
        if not c:
            return TruncatedSeries.zero(self.field, INF)
        return TruncatedSeries(self.field, self.start, [c * a for a in self.coeffs], self.trunc)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``t^k``."""
        trunc = self.trunc + k if self.trunc != INF else INF
        return TruncatedSeries(self.field, self.start + k, self.coeffs, trunc)

    def mul(self, other: "TruncatedSeries", limit=INF) -> "TruncatedSeries":
        """Product; known up to ``min(N_a + ord(b), N_b + ord(a))`` capped at ``limit``."""
        self._check(other)
        trunc = _min_trunc(self.trunc + other.order_bound, other.trunc + self.order_bound)
        trunc = _min_trunc(trunc, limit)
        if not self.coeffs or not other.coeffs:
            return TruncatedSeries.zero(self.field, trunc)
        lo = self.start + other.start
        n = len(self.coeffs) + len(other.coeffs) - 1
        if trunc != INF:
            n = min(n, trunc - lo)
        if n <= 0:
            return TruncatedSeries.zero(self.field, trunc)
        zero = self.field.zero
        out = [zero] * n
        b = other.coeffs
        nb = len(b)
        for i, x in enumerate(self.coeffs):
            if i >= n:
                break
            if not x:
                continue
            top = min(nb, n - i)
            for j in range(top):
                y = b[j]
                if y:
                    out[i + j] += x * y
        return TruncatedSeries(self.field, lo, out, trunc)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def pow(self, k: int, limit=INF) -> "TruncatedSeries":
        if k < 0:
            raise ValueError("negative powers: use invert_unit")
        result = TruncatedSeries(self.field, 0, [self.field.one], INF)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, limit)
            k >>= 1
            if k:
                base = base.mul(base, limit)
        return result

    def derivative(self) -> "TruncatedSeries":
        c = [a * (self.start + i) for i, a in enumerate(self.coeffs)]
        trunc = self.trunc - 1 if self.trunc != INF else INF
        return TruncatedSeries(self.field, self.start - 1, c, trunc)

    def invert_unit(self, n=None) -> "TruncatedSeries":
        """Inverse of ``c t^o (1 + ...)``; result has ``start = -o``.

        For a truncated input the relative precision is kept.  An exact
        monomial inverts exactly; any other exact input needs an explicit
        truncation ``n`` for the result.
        """
        if not self.coeffs:
            raise IndeterminateOrderError("cannot invert a series that is zero up to truncation")
        o = self.start
        if self.trunc == INF and len(self.coeffs) == 1 and n is None:
            return TruncatedSeries(self.field, -o, [self.field.one / self.coeffs[0]], INF)
        if self.trunc == INF:
            if n is None:
                raise TruncationError("inverting an exact series needs an explicit truncation")
            trunc = n
        else:
            trunc = -o + (self.trunc - o)
            if n is not None:
                trunc = min(trunc, n)
        length = trunc + o
        if length <= 0:
            return TruncatedSeries.zero(self.field, trunc)
        a = self.coeffs
        inv0 = self.field.one / a[0]
        out = [inv0]
        for k in range(1, length):
            s = self.field.zero
            for j in range(1, min(k, len(a) - 1) + 1):
                s += a[j] * out[k - j]
            out.append(-s * inv0)
        return TruncatedSeries(self.field, -o, out, trunc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.trunc == other.trunc
            and self.start == other.start
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.start, self.trunc, tuple(self.coeffs)))

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Equality of coefficients on the common known range."""
        diff = self - other
        return diff.is_zero()

    def __repr__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for i, c in enumerate(self.coeffs):
                if c:
                    parts.append(f"{c}*t^{self.start + i}")
            body = " + ".join(parts)
        tail = "" if self.exact else f" + O(t^{self.trunc})"
        return body + tail


class SeriesVector:
    """One truncated series per branch; a model of an element of Q(O_D)."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[TruncatedSeries]):
        comps = tuple(components)
        if not comps:
            raise ShapeError("a series vector needs at least one branch")
        f = comps[0].field
        for c in comps[1:]:
            if c.field != f:
                raise ShapeError("components over different coefficient fields")
        self.components = comps

    @classmethod
    def monomial(cls, exps: Sequence, field: NumberField = QQ, coeff=None) -> "SeriesVector":
        """``t^exps`` with ``None`` entries meaning a zero component."""
        comps = []
        for e in exps:
            if e is None or e == INF:
                comps.append(TruncatedSeries.zero(field))
            else:
                comps.append(TruncatedSeries.monomial(int(e), coeff, field))
        return cls(comps)

    @property
    def p(self) -> int:
        return len(self.components)

    @property
    def field(self) -> NumberField:
        return self.components[0].field

    def __getitem__(self, i) -> TruncatedSeries:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def _check(self, other: "SeriesVector"):
        if not isinstance(other, SeriesVector):
            raise TypeError("expected a SeriesVector")
        if other.p != self.p:
            raise ShapeError(f"branch counts differ: {self.p} vs {other.p}")
        if other.field != self.field:
            raise ShapeError("series vectors over different coefficient fields")

    def __add__(self, other):
        self._check(other)
        return SeriesVector(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other):
        self._check(other)
        return SeriesVector(a - b for a, b in zip(self.components, other.components))

    def __neg__(self):
        return SeriesVector(-a for a in self.components)

    def mul(self, other, limits=None):
        self._check(other)
        if limits is None:
            limits = [INF] * self.p
        return SeriesVector(a.mul(b, lim) for a, b, lim in zip(self.components, other.components, limits))

    def __mul__(self, other):
        if isinstance(other, SeriesVector):
            return self.mul(other)
        return self.scale(other)

    def scale(self, c):
        return SeriesVector(a.scale(c) for a in self.components)

    __rmul__ = scale

    def shift(self, exps: Sequence[int]):
        return SeriesVector(a.shift(k) for a, k in zip(self.components, exps))

    def derivative(self):
        return SeriesVector(a.derivative() for a in self.components)

    def truncate(self, ns: Sequence):
        return SeriesVector(a.truncate(n) for a, n in zip(self.components, ns))

    @property
    def truncs(self) -> tuple:
        return tuple(c.trunc for c in self.components)

    @property
    def order_bounds(self) -> tuple:
        return tuple(c.order_bound for c in self.components)

    def is_nonzero_divisor(self) -> bool:
        return all(c.coeffs for c in self.components)

    def val(self, safe_bound=None) -> tuple:
        return val(self, safe_bound)

    def __eq__(self, other):
        if not isinstance(other, SeriesVector):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "SeriesVector(" + ", ".join(repr(c) for c in self.components) + ")"


def val(g, safe_bound=None) -> tuple:
    """The value ``(val_1(g), ..., val_p(g))`` of a series vector.

    ``safe_bound`` (an int or a per-branch sequence) is the truncation above
    which a component that is zero up to truncation is declared zero.
    """
    if isinstance(g, TruncatedSeries):
        g = SeriesVector([g])
    if safe_bound is None or isinstance(safe_bound, (int, float)):
        bounds = [safe_bound] * g.p
    else:
        bounds = list(safe_bound)
    return tuple(c.order(b) for c, b in zip(g.components, bounds))


# value helpers ----------------------------------------------------------
def mv_inf(a: Sequence, b: Sequence) -> tuple:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def mv_sup(a: Sequence, b: Sequence) -> tuple:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mv_add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mv_sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mv_le(a: Sequence, b: Sequence) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mv_is_finite(a: Sequence) -> bool:
    return all(x != INF for x in a)


def format_value(v: Sequence) -> str:
    return "(" + ",".join("inf" if x == INF else str(int(x)) for x in v) + ")"
