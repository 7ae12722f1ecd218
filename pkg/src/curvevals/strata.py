"""Sampling deformation families and grouping samples by residue values.

A sample is summarized by its Tjurina number and by the negative values of
the residue module; samples with the same pair form one stratum.  Only the
sampled points are classified; no stratum geometry is computed.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coeffs import QQ, format_rational
from .curve import Curve, LiftError, delta_mu, hensel_lift_branch, sqh_parametrize
from .logres import (
    quasihomogeneous_jacobian_check,
    residue_values,
    tjurina_direct,
    tjurina_via_values,
    milnor_direct,
)
from .lattice import staircase_length
from .poly import Poly
from .series import TruncationError, IndeterminateOrderError

__all__ = [
    "DeformationFamily",
    "SampleRecord",
    "StratumReport",
    "ScanResult",
    "evaluate_family",
    "analyze_sample",
    "scan_strata",
    "random_points",
    "markdown_table",
]


@dataclass(frozen=True)
class DeformationFamily:
    """``F = f + sum s_k x^i y^j`` with one parameter per monomial.

    ``coeffs`` optionally scales each deformation monomial (default 1).
    With ``sqh=False`` the weight condition is not enforced and fibers are
    parametrized only from explicit seeds.
    """

    base: Poly
    monomials: tuple
    names: tuple = ()
    coeffs: tuple = ()
    sqh: bool = True

    def __post_init__(self):
        mons = tuple(tuple(int(x) for x in m) for m in self.monomials)
        object.__setattr__(self, "monomials", mons)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"s{k + 1}" for k in range(len(mons))))
        if not self.coeffs:
            object.__setattr__(self, "coeffs", tuple(self.base.field.one for _ in mons))
        if len(self.names) != len(mons) or len(self.coeffs) != len(mons):
            raise ValueError("one name and coefficient per deformation monomial")
        for m in mons:
            if len(m) != self.base.nvars:
                raise ValueError(f"monomial {m} has the wrong number of exponents")
        if self.sqh:
            a, b = _sqh_exponents(self.base)
            for i, j in mons:
                if i * b + j * a <= a * b:
                    raise ValueError(f"x^{i} y^{j} does not have weight above the base")

    @property
    def k(self) -> int:
        return len(self.monomials)


def _sqh_exponents(f: Poly) -> tuple:
    xs = [e[0] for e in f.terms if e[1] == 0]
    ys = [e[1] for e in f.terms if e[0] == 0]
    if not xs or not ys:
        raise ValueError("base equation needs pure powers of x and y")
    return min(xs), min(ys)


def evaluate_family(F: DeformationFamily, point: Sequence) -> Poly:
    if len(point) != F.k:
        raise ValueError(f"point has {len(point)} coordinates, family has {F.k} parameters")
    fld = F.base.field
    terms = dict(F.base.terms)
    for m, c, s in zip(F.monomials, F.coeffs, point):
        s = fld(s)
        if s:
            terms[m] = terms.get(m, fld.zero) + c * s
    return Poly(terms, F.base.nvars, fld)


@dataclass
class SampleRecord:
    point: tuple
    tau_direct: int
    mu_direct: int
    tau_values: int | None = None
    delta: int | None = None
    mu: int | None = None
    negatives: tuple | None = None
    dim: int | None = None
    quasihomogeneous_check: bool | None = None
    multiplicities: tuple | None = None
    flags: list = field(default_factory=list)

    @property
    def key(self) -> tuple:
        return (self.tau_direct, self.negatives)

    def to_json(self) -> dict:
        return {
            "point": [format_rational(x) for x in self.point],
            "tau_direct": self.tau_direct,
            "mu_direct": self.mu_direct,
            "tau_values": self.tau_values,
            "delta": self.delta,
            "mu": self.mu,
            "negatives": None if self.negatives is None else list(self.negatives),
            "dim": self.dim,
            "quasihomogeneous_check": self.quasihomogeneous_check,
            "multiplicities": None if self.multiplicities is None else list(self.multiplicities),
            "flags": list(self.flags),
        }


def _fiber_curve(f: Poly, N: int, seeds=None) -> Curve:
    if not seeds:
        return Curve([sqh_parametrize(f, N)], [f])
    branches = []
    equations = []
    for s in seeds:
        g, seed = s if isinstance(s, tuple) else (None, s)
        h = g if g is not None else f
        if h.field != seed.field:
            h = Poly({e: seed.field(c) for e, c in h.terms.items()}, h.nvars, seed.field)
        branches.append(hensel_lift_branch(h, seed, N))
        equations.append(g)
    if all(g is not None for g in equations):
        return Curve(branches, equations)
    if len(branches) == 1:
        return Curve(branches, [f])
    # branch equations unknown: the curve is handled through its parametrization
    return Curve(branches)


def analyze_sample(
    F: DeformationFamily,
    point: Sequence,
    N: int | None = None,
    seeds=None,
    dmax: int | None = None,
    max_escalations: int = 4,
) -> SampleRecord:
    """All invariants of the fiber over ``point``.

    ``tau`` is always computed from the equation; the values route needs a
    parametrization (automatic for irreducible semi-quasi-homogeneous fibers,
    otherwise from ``seeds``: a list of :class:`BranchSeed`, each lifted on
    the fiber equation, or ``(branch equation, seed)`` pairs).  On
    a truncation failure the precision is doubled and the sample redone.
    """
    point = tuple(QQ(x) if not hasattr(x, "field") else x for x in point)
    f = evaluate_family(F, point)
    rec = SampleRecord(point, tjurina_direct(f, dmax), milnor_direct(f, dmax))
    if seeds is None and not F.sqh:
        rec.flags.append("no parametrization: tau only")
        return rec
    if N is not None:
        n = N
    elif seeds:
        n = 4 * f.degree + 8
    else:
        a, b = _sqh_exponents(f)
        n = 2 * (a - 1) * (b - 1) + 8
    for _ in range(max_escalations + 1):
        try:
            curve = _fiber_curve(f, n, seeds)
            R = residue_values(curve)
            delta, mu = delta_mu(curve)
            rec.tau_values = tjurina_via_values(curve, R)
            rec.delta, rec.mu = delta, mu
            rec.multiplicities = tuple(sorted(curve.multiplicities))
            rec.dim = staircase_length(R, (0,) * curve.p)
            rec.negatives = tuple(sorted((v[0] if curve.p == 1 else v for v in R.negative_part()), reverse=True))
            if rec.tau_direct == rec.mu_direct:
                rec.quasihomogeneous_check = quasihomogeneous_jacobian_check(curve).ok
            if rec.tau_values != rec.tau_direct:
                rec.flags.append(f"tau mismatch: values {rec.tau_values}, direct {rec.tau_direct}")
            if mu != rec.mu_direct:
                rec.flags.append(f"mu mismatch: 2delta-p+1 = {mu}, direct {rec.mu_direct}")
            return rec
        except (TruncationError, IndeterminateOrderError):
            n *= 2
        except (LiftError, ValueError) as exc:
            rec.flags.append(f"no parametrization: {exc}")
            return rec
    rec.flags.append(f"truncation still insufficient at N={n}")
    return rec


@dataclass
class StratumReport:
    tau: int
    negatives: tuple | None
    members: list
    dim: int | None

    @property
    def key(self):
        return (self.tau, self.negatives)

    def to_json(self) -> dict:
        return {
            "tau": self.tau,
            "negatives": None if self.negatives is None else list(self.negatives),
            "dim": self.dim,
            "members": [[format_rational(x) for x in m.point] for m in self.members],
        }


@dataclass
class ScanResult:
    strata: list
    samples: list
    notes: list

    def to_json(self) -> dict:
        return {
            "strata": [s.to_json() for s in self.strata],
            "samples": [s.to_json() for s in self.samples],
            "notes": list(self.notes),
        }


def _analyze_job(args):
    F, point, N, seeds, dmax = args
    return analyze_sample(F, point, N, seeds, dmax)


def scan_strata(
    F: DeformationFamily,
    points: Sequence[Sequence],
    N: int | None = None,
    seeds: dict | None = None,
    dmax: int | None = None,
    threads: int = 1,
) -> ScanResult:
    """Analyze every point and group them by ``(tau, negative residue values)``.

    Results are merged in the order of ``points`` whatever ``threads`` is.
    """
    seeds = seeds or {}
    jobs = [(F, tuple(pt), N, seeds.get(tuple(pt)), dmax) for pt in points]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            samples = list(ex.map(_analyze_job, jobs))
    else:
        samples = [_analyze_job(j) for j in jobs]
    groups: dict = {}
    for s in samples:
        groups.setdefault(s.key, []).append(s)
    strata = []
    notes = []
    for (tau, neg), members in groups.items():
        dims = {m.dim for m in members}
        if len(dims) > 1:
            notes.append(f"stratum tau={tau} has members with different dim R/O: {sorted(dims, key=str)}")
        strata.append(StratumReport(tau, neg, members, members[0].dim))
    strata.sort(key=lambda s: -s.tau)
    by_tau: dict = {}
    for s in strata:
        by_tau.setdefault(s.tau, []).append(s)
    for tau, group in by_tau.items():
        if len(group) > 1:
            notes.append(f"the tau = {tau} samples split into {len(group)} strata by residue values")
    for name, attr in (("delta", "delta"), ("mu", "mu_direct"), ("multiplicity", "multiplicities")):
        vals = {getattr(s, attr) for s in samples if getattr(s, attr) is not None}
        if len(vals) > 1:
            notes.append(f"{name} is not constant ({sorted(vals)}): the plan is not equisingular")
    for s in samples:
        for flag in s.flags:
            notes.append(f"sample {_fmt_point(s.point)}: {flag}")
    return ScanResult(strata, samples, notes)


def _fmt_point(pt) -> str:
    return "(" + ", ".join(format_rational(x) for x in pt) + ")"


def random_points(k: int, count: int, seed: int, support: Sequence[int] | None = None, height: int = 5) -> list:
    """``count`` random rational points with nonzero entries exactly on ``support``."""
    rng = random.Random(seed)
    support = range(k) if support is None else support
    pts = []
    for _ in range(count):
        pt = [Fraction(0)] * k
        for i in support:
            num = 0
            while num == 0:
                num = rng.randint(-height, height)
            pt[i] = Fraction(num, rng.randint(1, height))
        pts.append(tuple(pt))
    return pts


def markdown_table(result: ScanResult, names: Sequence[str] | None = None) -> str:
    lines = ["| tau | samples | dim R/O | negative values |", "|---|---|---|---|"]
    for s in result.strata:
        neg = "n/a" if s.negatives is None else ", ".join(str(v) for v in s.negatives)
        dim = "n/a" if s.dim is None else str(s.dim)
        pts = " ".join(_fmt_point(m.point) for m in s.members)
        lines.append(f"| {s.tau} | {pts} | {dim} | {neg} |")
    out = "\n".join(lines)
    if result.notes:
        out += "\n\n" + "\n".join(f"- {n}" for n in result.notes)
    return out + "\n"
