"""Value sets in (Z u {oo})^p and the combinatorics on them.

A :class:`ValueSet` is stored as a window ``[lam, nu]`` together with the
points of the window that belong to the set.  Everything outside follows
from two facts about value sets of fractional ideals: every point is at
least ``lam``, and ``v`` belongs to the set exactly when ``inf(v, nu)`` does.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator, Sequence

from .series import INF, mv_inf, mv_le, mv_sub, mv_add

__all__ = [
    "ValueSet",
    "box_points",
    "negative_window_reconstruct",
    "check_inf_closed",
    "check_valquimonte",
    "staircase_length",
    "staircase_c",
    "symmetric_dual",
    "monotone_path",
    "lambda_set",
    "extend_membership",
]


def _mv(v) -> tuple:
    return (v,) if isinstance(v, int) else tuple(v)


def box_points(lo: Sequence[int], hi: Sequence[int]) -> Iterator[tuple]:
    """All integer points of ``[lo, hi]`` in lexicographic order."""
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


class ValueSet:
    """A value set given by its window ``[lam, nu]`` and the box points in it.

    ``nu + N^p`` is inside the set and the set is inside ``lam + N^p``.
    """

    __slots__ = ("p", "lam", "nu", "box", "_hash")

    def __init__(self, lam: Sequence[int], nu: Sequence[int], box: Iterable[Sequence[int]]):
        lam = tuple(int(x) for x in lam)
        nu = tuple(int(x) for x in nu)
        if len(lam) != len(nu) or not lam:
            raise ValueError("lam and nu must have the same positive length")
        if not mv_le(lam, nu):
            raise ValueError(f"lam {lam} is not below nu {nu}")
        pts = set()
        for v in box:
            v = tuple(int(x) for x in v)
            if len(v) != len(lam):
                raise ValueError("box point of wrong length")
            if not (mv_le(lam, v) and mv_le(v, nu)):
                raise ValueError(f"box point {v} outside [{lam}, {nu}]")
            pts.add(v)
        if nu not in pts:
            raise ValueError("nu must belong to the value set")
        self.p = len(lam)
        self.lam = lam
        self.nu = nu
        self.box = frozenset(pts)
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def quadrant(cls, base: Sequence[int]) -> "ValueSet":
        base = tuple(base)
        return cls(base, base, [base])

    @classmethod
    def from_predicate(cls, lam, nu, pred: Callable[[tuple], bool]) -> "ValueSet":
        lam = tuple(lam)
        nu = tuple(nu)
        return cls(lam, nu, [v for v in box_points(lam, nu) if pred(v)])

    # membership ---------------------------------------------------------
    def __contains__(self, v) -> bool:
        v = _mv(v)
        if any(x == INF for x in v):
            raise ValueError("membership is for finite values; see zero_divisor_values")
        return mv_inf(v, self.nu) in self.box

    contains = __contains__

    def points(self, lo: Sequence[int] | None = None, hi: Sequence[int] | None = None) -> list:
        """Members in the window ``[lo, hi]`` (defaults to ``[lam, nu]``)."""
        lo = self.lam if lo is None else tuple(lo)
        hi = self.nu if hi is None else tuple(hi)
        lo = tuple(max(a, b) for a, b in zip(lo, self.lam))
        return [v for v in box_points(lo, hi) if v in self]

    def __iter__(self):
        return iter(sorted(self.box))

    # Lambda / Delta -----------------------------------------------------
    def lambda_nonempty(self, v: Sequence[int], i: int) -> bool:
        """Whether some member ``b`` has ``b_i = v_i`` and ``b >= v``."""
        v = _mv(v)
        w = mv_inf(v, self.nu)
        if v[i] < self.lam[i]:
            return False
        target = w[i]
        for b in self.box:
            if b[i] == target and mv_le(w, b):
                return True
        return False

    def delta_i_nonempty(self, v: Sequence[int], i: int) -> bool:
        """Whether some member ``b`` has ``b_i = v_i`` and ``b_j > v_j`` for ``j != i``."""
        v = _mv(v)
        if v[i] < self.lam[i]:
            return False
        nu = self.nu
        target = min(v[i], nu[i])
        for b in self.box:
            if b[i] != target:
                continue
            ok = True
            for j in range(self.p):
                if j == i:
                    continue
                if v[j] >= nu[j]:
                    if b[j] != nu[j]:
                        ok = False
                        break
                elif b[j] <= v[j]:
                    ok = False
                    break
            if ok:
                return True
        return False

    def delta_nonempty(self, v: Sequence[int], i: int | None = None) -> bool:
        if i is not None:
            return self.delta_i_nonempty(v, i)
        return any(self.delta_i_nonempty(v, k) for k in range(self.p))

    def delta_set(self, v: Sequence[int], i: int | None = None, hi: Sequence[int] | None = None) -> set:
        """Elements of ``Delta_i(v)`` (or of ``Delta(v)``) inside the window up to ``hi``.

        ``hi`` defaults to ``max(v, nu) + 1`` so that every pattern shows up.
        """
        v = _mv(v)
        if hi is None:
            hi = tuple(max(a, b) + 1 for a, b in zip(v, self.nu))
        idx = range(self.p) if i is None else [i]
        out = set()
        for k in idx:
            lo = [a + 1 for a in v]
            lo[k] = v[k]
            top = list(hi)
            top[k] = v[k]
            for b in box_points(lo, top):
                if b in self:
                    out.add(b)
        return out

    # derived sets -------------------------------------------------------
    def zero_divisor_values(self) -> set:
        """Values with infinite coordinates, as patterns read off the faces.

        For a box point ``w`` whose coordinates in ``Z`` equal ``nu``, every
        nonempty subset of ``Z`` can be sent to infinity.  A finite coordinate
        equal to ``nu_j`` then stands for ``nu_j + N``.  The all-infinite
        pattern (the value of 0) is listed only for ``p >= 2``.
        """
        out = set()
        nu = self.nu
        for w in self.box:
            Z = [j for j in range(self.p) if w[j] == nu[j]]
            for r in range(1, len(Z) + 1):
                for sub in itertools.combinations(Z, r):
                    if r == self.p and self.p == 1:
                        continue
                    out.add(tuple(INF if j in sub else w[j] for j in range(self.p)))
        return out

    def shift(self, s: Sequence[int]) -> "ValueSet":
        s = tuple(s)
        return ValueSet(mv_add(self.lam, s), mv_add(self.nu, s), (mv_add(b, s) for b in self.box))

    def rebase(self, lam: Sequence[int] | None = None, nu: Sequence[int] | None = None) -> "ValueSet":
        """The same set on another window (``lam`` may only go down)."""
        lam = self.lam if lam is None else tuple(lam)
        nu = self.nu if nu is None else tuple(nu)
        if not mv_le(lam, self.lam):
            if any(v in self for v in self._low_points(lam)):
                raise ValueError("new lam cuts off members")
        if not mv_le(self.nu, nu):
            for v in box_points(mv_inf(nu, self.nu), self.nu):
                if mv_le(nu, v) and v not in self:
                    raise ValueError("new nu does not bound the quadrant")
        return ValueSet.from_predicate(lam, nu, self.__contains__)

    def _low_points(self, lam):
        for b in self.box:
            if not mv_le(lam, b):
                yield b

    def common_window(self, other: "ValueSet") -> tuple:
        lam = mv_inf(self.lam, other.lam)
        nu = tuple(max(a, b) for a, b in zip(self.nu, other.nu))
        return lam, nu

    def same_as(self, other: "ValueSet") -> bool:
        """Equality of the represented sets (windows may differ)."""
        if self.p != other.p:
            return False
        lam, nu = self.common_window(other)
        return all((v in self) == (v in other) for v in box_points(lam, nu))

    def difference(self, other: "ValueSet") -> tuple[list, list]:
        """Points in self but not other, and in other but not self (common window)."""
        lam, nu = self.common_window(other)
        a, b = [], []
        for v in box_points(lam, nu):
            x, y = v in self, v in other
            if x and not y:
                a.append(v)
            elif y and not x:
                b.append(v)
        return a, b

    def minimum(self) -> tuple:
        """Componentwise minimum of the set."""
        out = list(self.nu)
        for b in self.box:
            out = [min(x, y) for x, y in zip(out, b)]
        return tuple(out)

    def negative_part(self) -> list:
        """Members ``v <= 0`` other than 0 itself."""
        zero = (0,) * self.p
        return sorted(v for v in self.points(hi=zero) if v != zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ValueSet):
            return NotImplemented
        return self.same_as(other)

    def __hash__(self):
        # canonical window: shrink nu as far as the quadrant allows
        if self._hash is None:
            self._hash = hash((self.p, self.minimum()))
        return self._hash

    def __repr__(self) -> str:
        return f"ValueSet(lam={self.lam}, nu={self.nu}, box={sorted(self.box)})"

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "nu": list(self.nu), "box": [list(b) for b in sorted(self.box)]}

    @classmethod
    def from_json(cls, data: dict) -> "ValueSet":
        return cls(data["lambda"], data["nu"], data["box"])


def lambda_set(v, S: ValueSet, i: int) -> bool:
    """Whether ``Lambda_i(v, S)`` is nonempty."""
    return S.lambda_nonempty(v, i)


def extend_membership(S: ValueSet, v) -> bool:
    return v in S


def negative_window_reconstruct(W: Iterable[Sequence[int]]) -> ValueSet:
    """Full value set from its part below 0, for sets containing ``N^p``."""
    W = {tuple(w) for w in W}
    if not W:
        raise ValueError("empty window")
    p = len(next(iter(W)))
    zero = (0,) * p
    if zero not in W:
        raise ValueError("the window must contain 0")
    for w in W:
        if not mv_le(w, zero):
            raise ValueError(f"{w} is not <= 0")
    lam = tuple(min(w[k] for w in W) for k in range(p))
    return ValueSet(lam, zero, W)


def check_inf_closed(S: ValueSet) -> list:
    """Pairs of box points whose infimum is missing (empty when inf-closed)."""
    bad = []
    pts = sorted(S.box)
    for a, b in itertools.combinations(pts, 2):
        if mv_inf(a, b) not in S:
            bad.append((a, b))
    return bad


def check_valquimonte(S: ValueSet, pairs: Iterable | None = None) -> list:
    """Failures of the exchange property on the window.

    For members ``v != w`` with ``v_i = w_i`` there must be a member ``u``
    with ``u_i > v_i``, ``u_j >= min(v_j, w_j)`` and equality wherever
    ``v_j != w_j``.  Searched within the window up to ``nu + 1``.
    """
    pts = sorted(S.box)
    hi = tuple(x + 1 for x in S.nu)
    if pairs is None:
        pairs = itertools.combinations(pts, 2)
    bad = []
    for v, w in pairs:
        for i in range(S.p):
            if v[i] != w[i]:
                continue
            lo = []
            top = []
            for j in range(S.p):
                m = min(v[j], w[j])
                if j == i:
                    lo.append(v[i] + 1)
                    top.append(hi[i])
                elif v[j] != w[j]:
                    lo.append(m)
                    top.append(m)
                else:
                    lo.append(m)
                    top.append(max(hi[j], m))
            if not any(u in S for u in box_points(lo, top)):
                bad.append((v, w, i))
    return bad


def monotone_path(start: Sequence[int], end: Sequence[int], order: Sequence[int] | None = None) -> list:
    """Unit steps ``(point, i)`` from ``start`` to ``end``, raising coordinates in ``order``."""
    cur = list(start)
    order = range(len(cur)) if order is None else order
    steps = []
    for i in order:
        while cur[i] < end[i]:
            steps.append((tuple(cur), i))
            cur[i] += 1
    return steps


def staircase_length(S: ValueSet, v: Sequence[int], order: Sequence[int] | None = None) -> int:
    """``dim I / I_v`` read off the value set by counting nonempty Lambda along a path."""
    v = _mv(v)
    w = tuple(max(a, b) for a, b in zip(v, S.lam))
    return sum(1 for pt, i in monotone_path(S.lam, w, order) if S.lambda_nonempty(pt, i))


def staircase_c(S: ValueSet, v: Sequence[int]) -> int:
    """``dim I_v / I_(v+1)``."""
    v = _mv(v)
    total = 0
    for pt, i in monotone_path(v, tuple(x + 1 for x in v)):
        # steps below lam in their own coordinate do not change I_v
        if pt[i] >= S.lam[i] and S.lambda_nonempty(tuple(max(a, b) for a, b in zip(pt, S.lam)), i):
            total += 1
    return total


def symmetric_dual(S: ValueSet, gamma: Sequence[int]) -> ValueSet:
    """``{v : Delta(gamma - v - 1, S) empty}`` on the window ``[gamma - nu, gamma - lam]``."""
    gamma = tuple(gamma)
    lam = mv_sub(gamma, S.nu)
    nu = mv_sub(gamma, S.lam)
    return ValueSet.from_predicate(
        lam, nu, lambda v: not S.delta_nonempty(tuple(g - x - 1 for g, x in zip(gamma, v)))
    )
