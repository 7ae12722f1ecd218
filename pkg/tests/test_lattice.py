import pytest
from hypothesis import given, settings, strategies as st

from curvevals.ideal import FractionalIdeal
from curvevals.lattice import (
    ValueSet,
    check_inf_closed,
    check_valquimonte,
    extend_membership,
    lambda_set,
    negative_window_reconstruct,
    staircase_c,
    staircase_length,
    symmetric_dual,
)
from curvevals.series import INF
from randideals import random_ideals

INF_ = INF
TACNODE_O = ValueSet((0, 0), (2, 2), [(0, 0), (1, 1), (2, 2)])


def test_membership_beyond_window():
    assert (5, 2) in TACNODE_O and extend_membership(TACNODE_O, (5, 2))
    assert (1, 7) not in TACNODE_O and (7, 2) in TACNODE_O
    assert (1, 0) not in TACNODE_O and (-1, 3) not in TACNODE_O
    with pytest.raises(ValueError):
        (INF_, 1) in TACNODE_O


def test_window_validation():
    with pytest.raises(ValueError):
        ValueSet((0, 0), (2, 2), [(0, 0)])  # nu missing
    with pytest.raises(ValueError):
        ValueSet((0, 0), (2, 2), [(3, 0), (2, 2)])


def test_delta_and_lambda():
    assert TACNODE_O.delta_set((1, 1)) == set()
    assert TACNODE_O.delta_nonempty((1, 0))
    assert lambda_set((1, 1), TACNODE_O, 0)
    assert not lambda_set((1, 0), TACNODE_O, 1)


def test_staircase_counts():
    assert [staircase_length(TACNODE_O, v) for v in [(0, 0), (1, 1), (2, 2), (3, 1)]] == [0, 1, 2, 3]
    assert staircase_c(TACNODE_O, (2, 2)) == 2 and staircase_c(TACNODE_O, (0, 0)) == 1


def test_symmetric_dual_of_tacnode():
    # O_D of the tacnode is Gorenstein: its dual is itself
    assert symmetric_dual(TACNODE_O, (2, 2)).same_as(TACNODE_O)
    J = ValueSet((2, 2), (4, 4), [(2, 2), (3, 3), (3, 4), (4, 3), (4, 4)])
    assert symmetric_dual(J, (2, 2)).same_as(ValueSet((-1, -1), (0, 0), [(-1, -1), (0, 0)]))


def test_negative_window_reconstruct(curves):
    R = FractionalIdeal.preset(curves["A5"], "residues").values
    assert R.negative_part() == [(-2, -2), (-1, -1)]
    W = [v for v in R.points() if all(x <= 0 for x in v)]
    assert negative_window_reconstruct(W).same_as(R)


def test_zero_divisor_values(curves):
    O = FractionalIdeal.preset(curves["tacnode"], "O_D").values
    assert O.zero_divisor_values() == {(INF_, 2), (2, INF_), (INF_, INF_)}


def test_json_round_trip():
    assert ValueSet.from_json(TACNODE_O.to_json()) == TACNODE_O


IDEALS = random_ideals(seed=7, per_curve=1)


@settings(max_examples=len(IDEALS), derandomize=True, deadline=None)
@given(st.sampled_from(IDEALS))
def test_value_set_axioms(item):
    _, I = item
    S = I.values
    assert check_inf_closed(S) == []
    assert check_valquimonte(S) == []


@settings(max_examples=30, derandomize=True, deadline=None)
@given(st.sampled_from([x for x in IDEALS if x[1].curve.p >= 2]), st.data())
def test_staircase_path_independence(item, data):
    _, I = item
    S = I.values
    p = S.p
    v = tuple(data.draw(st.integers(S.lam[i] - 1, S.nu[i] + 2)) for i in range(p))
    order = data.draw(st.permutations(range(p)))
    assert staircase_length(S, v, order) == staircase_length(S, v)
