"""Exact coefficient fields Q[z]/(m(z)).

Elements of the rational field (``m = z + c``) are plain :class:`gmpy2.mpq`
values, which keeps the hot loops of series products and eliminations cheap.
Proper extensions use :class:`FieldElement`, a residue vector of length
``deg(m)``.  Both kinds support ``+ - * /``, negation, equality and truth
testing, so the rest of the package is written against that protocol only.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from gmpy2 import mpq

MPQ = type(mpq(0))

__all__ = [
    "FieldMismatchError",
    "NumberField",
    "FieldElement",
    "QQ",
    "parse_rational",
    "format_rational",
]


class FieldMismatchError(ValueError):
    """Operands belong to different coefficient fields."""


def parse_rational(value) -> mpq:
    """Parse ``int``, ``Fraction``, ``mpq`` or a ``"p/q"`` string into an mpq."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        if "/" in text:
            num, den = text.split("/", 1)
            return mpq(int(num), int(den))
        return mpq(int(text))
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    if isinstance(value, (int, Fraction, Rational, MPQ)):
        return mpq(value)
    raise TypeError(f"cannot read {value!r} as a rational")


def format_rational(value) -> str:
    q = mpq(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _poly_trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [mpq(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        factor = a[-1] / lead
        q[shift] = factor
        for i, bc in enumerate(b):
            a[shift + i] -= factor * bc
        a.pop()
    return _poly_trim(q), a


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [mpq(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _is_irreducible_small(coeffs: Sequence[mpq]) -> bool:
    """Irreducibility over Q for degree <= 4 (delegated to sympy's factoring)."""
    import sympy

    z = sympy.Symbol("z")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * z**i for i, c in enumerate(coeffs))
    return sympy.Poly(expr, z, domain=sympy.QQ).is_irreducible


class NumberField:
    """The field Q[z]/(m(z)) for a monic irreducible ``m``.

    ``min_poly`` lists the coefficients of ``m`` from the constant term up,
    ending with the leading ``1``.  Irreducibility is verified for degree
    at most 4 and taken on trust above that (``irreducibility_verified``).
    """

    def __init__(self, min_poly: Iterable = ("0", "1")):
        coeffs = [parse_rational(c) for c in min_poly]
        coeffs = _poly_trim(coeffs)
        if len(coeffs) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.min_poly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        if self.degree == 1:
            self.irreducibility_verified = True
        elif self.degree <= 4:
            if not _is_irreducible_small(coeffs):
                raise ValueError(f"minimal polynomial {self.describe()} is reducible over Q")
            self.irreducibility_verified = True
        else:
            self.irreducibility_verified = False
        if self.degree == 1:
            self.zero = mpq(0)
            self.one = mpq(1)
        else:
            self.zero = FieldElement(self, (mpq(0),) * self.degree)
            self.one = FieldElement(self, (mpq(1),) + (mpq(0),) * (self.degree - 1))

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def gen(self):
        """The class of ``z``."""
        if self.degree == 1:
            return -self.min_poly[0]
        return self.element([0, 1])

    def describe(self) -> str:
        terms = []
        for i, c in enumerate(self.min_poly):
            if c:
                terms.append(f"{format_rational(c)}*z^{i}")
        return " + ".join(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self) -> int:
        return hash(self.min_poly)

    def __repr__(self) -> str:
        if self.degree == 1 and self.min_poly[0] == 0:
            return "NumberField(QQ)"
        return f"NumberField({self.describe()})"

    def reduce(self, poly: Sequence) -> tuple:
        """Canonical residue of a polynomial in ``z`` (length ``degree``)."""
        c = [mpq(x) for x in poly]
        _, r = _poly_divmod(c, self.min_poly)
        r = list(r) + [mpq(0)] * (self.degree - len(r))
        return tuple(r[: self.degree])

    def element(self, residue: Sequence):
        """Element with the given residue coefficients (reduced mod m)."""
        res = self.reduce([parse_rational(x) for x in residue])
        if self.degree == 1:
            return res[0]
        return FieldElement(self, res)

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            return self.element(value)
        q = parse_rational(value)
        if self.degree == 1:
            return q
        return FieldElement(self, (q,) + (mpq(0),) * (self.degree - 1))

    def residue(self, a) -> tuple:
        """Residue vector of an element (length ``degree``)."""
        if isinstance(a, FieldElement):
            return a.residue
        return (mpq(a),) + (mpq(0),) * (self.degree - 1)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        return self.one / a

    def to_json(self) -> dict:
        return {"min_poly": [format_rational(c) for c in self.min_poly]}

    def element_to_json(self, a):
        if self.degree == 1:
            return format_rational(a)
        return [format_rational(c) for c in self.residue(a)]

    def element_from_json(self, data):
        if isinstance(data, list):
            return self.element(data)
        return self(data)


QQ = NumberField(("0", "1"))


class FieldElement:
    """Element of a proper extension Q[z]/(m), stored as its reduced residue."""

    __slots__ = ("field", "residue")

    def __init__(self, field: NumberField, residue: Sequence[mpq]):
        if len(residue) != field.degree:
            raise ValueError("residue length must equal the field degree")
        self.field = field
        self.residue = tuple(residue)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError("operands lie in different fields")
            return other
        if not isinstance(other, (int, Fraction, MPQ)):
            return NotImplemented
        return FieldElement(self.field, (mpq(other),) + (mpq(0),) * (self.field.degree - 1))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.residue, o.residue)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.residue, o.residue)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.residue))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prod = _poly_mul(self.residue, o.residue)
        return FieldElement(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Inverse via the extended Euclidean algorithm on (residue, m)."""
        a = _poly_trim(list(self.residue))
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        r0, r1 = list(self.field.min_poly), a
        s0, s1 = [], [mpq(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant because m is irreducible
        if len(r0) != 1:
            raise ArithmeticError("minimal polynomial is not irreducible")
        c = r0[0]
        return FieldElement(self.field, self.field.reduce([x / c for x in s0]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __bool__(self) -> bool:
        return any(self.residue)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.residue == other.residue
        if not isinstance(other, (int, Fraction, MPQ)):
            return NotImplemented
        return self.residue[0] == other and not any(self.residue[1:])

    def __hash__(self) -> int:
        if not any(self.residue[1:]):
            return hash(self.residue[0])
        return hash(self.residue)

    def __repr__(self) -> str:
        parts = []
        for i, c in enumerate(self.residue):
            if c:
                parts.append(format_rational(c) + ("" if i == 0 else "*z" if i == 1 else f"*z^{i}"))
        return "(" + (" + ".join(parts) if parts else "0") + ")"
