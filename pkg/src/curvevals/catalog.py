"""Small library of curve germs used in tests and demos.

Every entry is a function returning a fresh :class:`~curvevals.curve.Curve`
with exact polynomial parametrizations (and equations for plane curves).
"""
from __future__ import annotations

from typing import Callable

from .coeffs import QQ
from .curve import BranchParam, Curve
from .poly import Poly
from .series import TruncatedSeries

__all__ = ["branch", "poly", "CATALOG", "get", "plane_names"]


def branch(*coords, field=QQ) -> BranchParam:
    """``branch({2: 1}, {3: 1})`` is ``t -> (t^2, t^3)``."""
    return BranchParam([TruncatedSeries.from_dict(c, field) for c in coords])


def poly(terms: dict, field=QQ) -> Poly:
    """``poly({(3, 0): 1, (0, 2): -1})`` is ``x^3 - y^2``."""
    return Poly(terms, field=field)


def _cusp():
    return Curve([branch({2: 1}, {3: 1})], [poly({(3, 0): 1, (0, 2): -1})], name="cusp")


def _e6():
    return Curve([branch({3: 1}, {4: 1})], [poly({(4, 0): 1, (0, 3): -1})], name="E6")


def _a4():
    return Curve([branch({2: 1}, {5: 1})], [poly({(5, 0): 1, (0, 2): -1})], name="A4")


def _e8():
    return Curve([branch({3: 1}, {5: 1})], [poly({(5, 0): 1, (0, 3): -1})], name="E8")


def _x5y6():
    return Curve([branch({6: 1}, {5: 1})], [poly({(5, 0): 1, (0, 6): -1})], name="x5-y6")


def _w18():
    # (t^4, t^6 + t^7): semigroup <4, 6, 13>
    b = branch({4: 1}, {6: 1, 7: 1})
    # (y^2 - x^3)^2 - 4 x^5 y - x^7 vanishes on it
    f = poly({(0, 4): 1, (3, 2): -2, (6, 0): 1, (5, 1): -4, (7, 0): -1})
    return Curve([b], [f], name="W-(4,6,13)")


def _node():
    return Curve([branch({1: 1}, {}), branch({}, {1: 1})], [poly({(0, 1): 1}), poly({(1, 0): 1})], name="node")


def _tacnode():
    return Curve(
        [branch({1: 1}, {2: 1}), branch({1: 1}, {2: -1})],
        [poly({(0, 1): 1, (2, 0): -1}), poly({(0, 1): 1, (2, 0): 1})],
        name="tacnode",
    )


def _a5():
    return Curve(
        [branch({1: 1}, {3: 1}), branch({1: 1}, {3: -1})],
        [poly({(0, 1): 1, (3, 0): -1}), poly({(0, 1): 1, (3, 0): 1})],
        name="A5",
    )


def _cusp_line():
    return Curve(
        [branch({2: 1}, {3: 1}), branch({1: 1}, {})],
        [poly({(3, 0): 1, (0, 2): -1}), poly({(0, 1): 1})],
        name="cusp+tangent",
    )


def _cusp_transverse():
    return Curve(
        [branch({2: 1}, {3: 1}), branch({}, {1: 1})],
        [poly({(3, 0): 1, (0, 2): -1}), poly({(1, 0): 1})],
        name="cusp+transverse",
    )


def _two_cusps():
    return Curve(
        [branch({2: 1}, {3: 1}), branch({2: -1}, {3: 1})],
        [poly({(3, 0): 1, (0, 2): -1}), poly({(3, 0): 1, (0, 2): 1})],
        name="two cusps",
    )


def _cusp_parabola():
    # y^2 = x^3 and y = x^2
    return Curve(
        [branch({2: 1}, {3: 1}), branch({1: 1}, {2: 1})],
        [poly({(3, 0): 1, (0, 2): -1}), poly({(0, 1): 1, (2, 0): -1})],
        name="cusp+parabola",
    )


def _three_lines():
    return Curve(
        [branch({1: 1}, {}), branch({}, {1: 1}), branch({1: 1}, {1: 1})],
        [poly({(0, 1): 1}), poly({(1, 0): 1}), poly({(0, 1): 1, (1, 0): -1})],
        name="D4",
    )


def _tangent_triple():
    # y = 0, y = x^2, y = -x^2
    return Curve(
        [branch({1: 1}, {}), branch({1: 1}, {2: 1}), branch({1: 1}, {2: -1})],
        [poly({(0, 1): 1}), poly({(0, 1): 1, (2, 0): -1}), poly({(0, 1): 1, (2, 0): 1})],
        name="J10-like triple",
    )


def _lines_tangency():
    # x = 0, y = 0, y = x^2
    return Curve(
        [branch({}, {1: 1}), branch({1: 1}, {}), branch({1: 1}, {2: 1})],
        [poly({(1, 0): 1}), poly({(0, 1): 1}), poly({(0, 1): 1, (2, 0): -1})],
        name="lines+tangency",
    )


def _space_monomial():
    return Curve([branch({3: 1}, {4: 1}, {5: 1})], name="(t3,t4,t5)")


def _space_axes():
    return Curve(
        [branch({1: 1}, {}, {}), branch({}, {1: 1}, {}), branch({}, {}, {1: 1})],
        name="three axes",
    )


CATALOG: dict[str, Callable[[], Curve]] = {
    "cusp": _cusp,
    "E6": _e6,
    "A4": _a4,
    "E8": _e8,
    "x5-y6": _x5y6,
    "W-(4,6,13)": _w18,
    "node": _node,
    "tacnode": _tacnode,
    "A5": _a5,
    "cusp+tangent": _cusp_line,
    "cusp+transverse": _cusp_transverse,
    "two cusps": _two_cusps,
    "cusp+parabola": _cusp_parabola,
    "D4": _three_lines,
    "J10-like triple": _tangent_triple,
    "lines+tangency": _lines_tangency,
    "(t3,t4,t5)": _space_monomial,
    "three axes": _space_axes,
}


def get(name: str) -> Curve:
    return CATALOG[name]()


def plane_names() -> list:
    return [n for n, f in CATALOG.items() if f().is_plane]
