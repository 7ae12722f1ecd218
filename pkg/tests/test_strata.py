from fractions import Fraction

import pytest

from curvevals.catalog import poly
from curvevals.io import load_json, plan_from_json
from curvevals.strata import (
    DeformationFamily,
    analyze_sample,
    evaluate_family,
    markdown_table,
    random_points,
    scan_strata,
)

from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
BASE = poly({(5, 0): 1, (0, 6): -1})
FAMILY = DeformationFamily(BASE, ((2, 4), (3, 3), (3, 4)))


def test_family_validation():
    with pytest.raises(ValueError):
        DeformationFamily(BASE, ((1, 1),))  # weight below the base
    with pytest.raises(ValueError):
        DeformationFamily(BASE, ((2, 4),), names=("a", "b"))
    front = poly({(10, 0): 1, (0, 8): 1})
    with pytest.raises(ValueError):
        DeformationFamily(front, ((5, 4),))  # weight equal to the base
    assert DeformationFamily(front, ((5, 4),), sqh=False).k == 1


def test_evaluate_family():
    f = evaluate_family(FAMILY, (2, 0, Fraction(1, 3)))
    assert f == poly({(5, 0): 1, (0, 6): -1, (2, 4): 2, (3, 4): Fraction(1, 3)})
    with pytest.raises(ValueError):
        evaluate_family(FAMILY, (1, 2))


def test_single_sample():
    rec = analyze_sample(FAMILY, (0, 0, 1))
    assert (rec.tau_direct, rec.tau_values, rec.mu_direct, rec.delta, rec.dim) == (19, 19, 20, 10, 9)
    assert rec.negatives == (-1, -2, -3, -4, -7, -8, -9, -13, -14)
    assert rec.quasihomogeneous_check is None and rec.flags == []


def test_tau_only_without_seeds():
    F = DeformationFamily(poly({(10, 0): 1, (0, 8): 1}), ((5, 4), (3, 6)), sqh=False)
    rec = analyze_sample(F, (0, 1))
    assert rec.tau_direct == 54 and rec.negatives is None
    assert rec.flags == ["no parametrization: tau only"]


def test_scan_parallel_matches_sequential():
    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 5)]
    seq = scan_strata(FAMILY, pts)
    par = scan_strata(FAMILY, pts, threads=2)
    assert seq.to_json() == par.to_json()
    assert [s.tau for s in seq.strata] == [20, 19, 18, 18]
    assert [len(s.members) for s in seq.strata] == [1, 1, 2, 1]
    assert "| 20 | (0, 0, 0) | 10 |" in markdown_table(seq)


def test_random_points_deterministic():
    a = random_points(3, 4, seed=1, support=[0, 2])
    assert a == random_points(3, 4, seed=1, support=[0, 2])
    assert all(p[1] == 0 and p[0] != 0 and p[2] != 0 for p in a)


def test_plan_files():
    F, pts, seeds = plan_from_json(load_json(DATA / "plan_x5_y6.json"))
    assert F.k == 3 and len(pts) == 4 and seeds == {}
    F, pts, seeds = plan_from_json(load_json(DATA / "plan_front_seeded.json"))
    assert set(seeds) == set(pts)


def test_seeded_reducible_fiber():
    F, pts, seeds = plan_from_json(load_json(DATA / "plan_front_seeded.json"))
    rec = analyze_sample(F, pts[0], seeds=seeds[pts[0]])
    assert (rec.tau_direct, rec.tau_values, rec.dim) == (63, 63, 31)
    assert rec.flags == []
