"""Exact sparse row elimination.

Rows are dictionaries ``{column: coefficient}`` with nonzero field
coefficients.  Columns are arbitrary hashable labels; the elimination order
is given by a sort key on the labels, so the same data can be reduced under
different column orders (the value computations rely on this).
"""
from __future__ import annotations

from typing import Callable, Hashable, Iterable

from gmpy2 import mpq

__all__ = ["Echelon", "rank", "kernel"]


def _lead(row: dict, key):
    return min(row, key=key)


class Echelon:
    """Incrementally maintained row echelon form with monic pivots.

    ``add(row)`` reduces the row against the current pivots (leading-term
    reduction under ``key``) and stores it if it is independent.  The stored
    rows are not fully inter-reduced; only their leading columns are distinct.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None):
        self.key = key if key is not None else (lambda c: c)
        self.pivots: dict = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Fully reduce a row: no column of the result is a pivot column."""
        row = {c: a for c, a in row.items() if a}
        key = self.key
        pivots = self.pivots
        done: dict = {}
        while row:
            c = _lead(row, key)
            a = row.pop(c)
            prow = pivots.get(c)
            if prow is None:
                done[c] = a
                continue
            for c2, b in prow.items():
                if c2 == c:
                    continue
                v = row.get(c2)
                v = -a * b if v is None else v - a * b
                if v:
                    row[c2] = v
                else:
                    row.pop(c2, None)
        return done

    def reduce_lead(self, row: dict) -> dict:
        """Reduce only until the leading column is not a pivot."""
        row = {c: a for c, a in row.items() if a}
        key = self.key
        pivots = self.pivots
        while row:
            c = _lead(row, key)
            prow = pivots.get(c)
            if prow is None:
                return row
            a = row[c]
            for c2, b in prow.items():
                v = row.get(c2)
                v = -a * b if v is None else v - a * b
                if v:
                    row[c2] = v
                else:
                    row.pop(c2, None)
        return row

    def add(self, row: dict):
        """Insert a row; returns its new pivot column or ``None`` if dependent."""
        r = self.reduce_lead(row)
        if not r:
            return None
        c = _lead(r, self.key)
        a = r[c]
        inv = 1 / (mpq(a) if isinstance(a, int) else a)
        self.pivots[c] = {c2: a * inv for c2, a in r.items()}
        return c

    def extend(self, rows: Iterable[dict]) -> "Echelon":
        for r in rows:
            self.add(r)
        return self

    def rows(self) -> list:
        return list(self.pivots.values())

    def pivot_columns(self) -> list:
        return sorted(self.pivots, key=self.key)

    def contains(self, row: dict) -> bool:
        return not self.reduce_lead(row)


def rank(rows: Iterable[dict], key=None) -> int:
    return len(Echelon(key).extend(rows))


def kernel(images: list, key=None, one=None) -> list:
    """Basis of ``{u : sum_i u_i * images[i] = 0}`` as dicts ``{i: coeff}``.

    ``images[i]`` is the image row of the i-th unknown.  Works by echelon of
    the augmented rows ``[image_i | e_i]`` with image columns ordered first.
    """
    inner = key if key is not None else (lambda c: c)

    def aug_key(c):
        tag, lab = c
        return (0, inner(lab)) if tag == 0 else (1, lab)

    ech = Echelon(aug_key)
    for i, img in enumerate(images):
        row = {(0, c): a for c, a in img.items() if a}
        row[(1, i)] = mpq(1) if one is None else one
        ech.add(row)
    out = []
    for piv, row in ech.pivots.items():
        if piv[0] == 1:
            out.append({lab: a for (tag, lab), a in row.items() if tag == 1})
    return out
