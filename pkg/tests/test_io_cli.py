import json
import subprocess
import sys
from pathlib import Path

import pytest

from curvevals import catalog
from curvevals.cli import main
from curvevals.coeffs import QQ, NumberField
from curvevals.io import (
    InputError,
    curve_from_json,
    ideal_from_json,
    poly_from_json,
    poly_to_json,
    series_from_json,
    series_to_json,
)
from curvevals.series import TruncatedSeries as T

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, obj, name="in.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return p


def test_series_round_trip():
    s = T.from_dict({2: 1, 5: QQ("-3/4")}, QQ, 9)
    d = series_to_json(s)
    assert d == {"min_exp": 2, "trunc": 9, "coeffs": {"2": "1", "5": "-3/4"}}
    assert series_from_json(d) == s
    assert series_from_json({"3": "1"}).exact
    K = NumberField(["1", "0", "1"])
    z = series_from_json({"1": ["0", "1"]}, K)
    assert (z * z).terms()[2] == K(-1)
    with pytest.raises(InputError):
        series_from_json({"min_exp": 3, "coeffs": {"1": "1"}})
    with pytest.raises(InputError):
        series_from_json({"a": "1"})


def test_poly_round_trip():
    f = catalog.get("E6").equations[0]
    assert poly_from_json(poly_to_json(f)) == f
    with pytest.raises(InputError):
        poly_from_json([])


def test_curve_inputs():
    c = curve_from_json(json.loads((DATA / "cusp.json").read_text()))
    assert c.gamma == (2,) and c.equations is not None
    c = curve_from_json(json.loads((DATA / "x5_y6.json").read_text()))
    assert c.gamma == (20,)
    assert curve_from_json({"catalog": "tacnode"}).p == 2
    with pytest.raises(InputError):
        curve_from_json({"catalog": "nope"})
    with pytest.raises(InputError):
        curve_from_json({"branches": [{"x": {"2": "1"}, "y": {"4": "1"}}]})


def test_ideal_inputs():
    c = catalog.get("cusp")
    assert ideal_from_json("kahler", c).values.minimum() == (1,)
    I = ideal_from_json({"polynomials": [[{"coeff": "1", "exps": [0, 1]}]]}, c)
    assert I.values.minimum() == (3,)
    with pytest.raises(InputError):
        ideal_from_json({"preset": "nope"}, c)
    with pytest.raises(InputError):
        ideal_from_json({}, c)


@pytest.mark.parametrize("cmd", ["analyze", "dual", "poincare"])
def test_commands_json(capsys, cmd):
    code, out, _ = run(capsys, cmd, "-i", DATA / "tacnode.json", "--verify", "full")
    assert code == 0
    data = json.loads(out)
    assert data["gamma"] == [2, 2]


def test_analyze_fields(capsys):
    code, out, _ = run(capsys, "analyze", "-i", DATA / "cusp.json")
    data = json.loads(out)
    assert (data["delta"], data["mu"], data["tau"]) == (1, 2, 2)
    assert data["negative_R"] == [[-1]]


def test_poincare_cusp(capsys):
    code, out, _ = run(capsys, "poincare", "-i", DATA / "cusp.json")
    assert json.loads(out)["P_text"] == "1 - t + t^2"


def test_dual_with_ideal_flag(capsys):
    code, out, _ = run(capsys, "dual", "-i", DATA / "node.json", "--ideal", "conductor")
    data = json.loads(out)
    assert code == 0 and data["val_dual"]["box"] == [[0, 0]]


def test_space_curve_caveat(capsys):
    code, out, _ = run(capsys, "dual", "-i", DATA / "space_345.json")
    data = json.loads(out)
    assert code == 0 and not data["checks"]["dual_direct_agrees"]
    assert any("not Gorenstein" in c for c in data["caveats"])


def test_strata_markdown(capsys):
    code, out, _ = run(capsys, "strata", "-i", DATA / "plan_x5_y6.json", "--output-format", "markdown")
    assert code == 0
    assert "| 18 | (0, 1, 0) | 8 | -1, -2, -3, -4, -7, -8, -9, -13 |" in out


def test_empty_plan(capsys, tmp_path):
    plan = json.loads((DATA / "plan_x5_y6.json").read_text())
    plan["samples"] = []
    code, out, _ = run(capsys, "strata", "-i", write(tmp_path, plan))
    assert code == 0 and json.loads(out)["strata"] == []


def test_random_plan_uses_seed(capsys, tmp_path):
    plan = json.loads((DATA / "plan_x5_y6.json").read_text())
    plan["samples"] = {"random": {"count": 2, "support": [2]}}
    p = write(tmp_path, plan)
    outs = [run(capsys, "strata", "-i", p, "--seed", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert all(s["tau"] == 19 for s in json.loads(outs[0])["strata"])


def test_exit_codes(capsys, tmp_path):
    bad = write(tmp_path, '{"branches": [', "bad.json")
    code, _, err = run(capsys, "analyze", "-i", bad)
    assert code == 2 and "line 1" in err
    assert run(capsys, "analyze", "-i", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "analyze", "-i", DATA / "cusp.json", "--truncation", "0")[0] == 2
    short = write(tmp_path, {"branches": [{"x": {"min_exp": 2, "trunc": 3, "coeffs": {"2": "1"}}, "y": {"3": "1"}}]})
    code, _, err = run(capsys, "analyze", "-i", short)
    assert code == 3 and "truncation" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "curvevals", "poincare", "-i", str(DATA / "cusp.json")],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(res.stdout)["symmetric"] is True


def test_invariant_violation_exit(capsys, monkeypatch):
    from curvevals import cli
    from curvevals.logres import InvariantViolation

    def boom(*a, **k):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli, "curve_report", boom)
    code, _, err = run(capsys, "analyze", "-i", DATA / "cusp.json")
    assert code == 4 and "forced" in err


def test_report_json_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "-i", DATA / "x5_y6.json", "--verify", "full")
    data = json.loads(out)
    assert json.loads(json.dumps(data)) == data
    neg = [v[0] for v in data["negative_R"]]
    assert neg == [-19, -14, -13, -9, -8, -7, -4, -3, -2, -1]


def test_low_truncation_warns(capsys, caplog, tmp_path):
    curve = json.loads((DATA / "x5_y6.json").read_text())
    curve["equations"][0].append({"coeff": "1", "exps": [2, 4]})
    code, out, _ = run(capsys, "analyze", "-i", write(tmp_path, curve), "--truncation", "40")
    assert code == 0
    assert "below the automatic bound" in caplog.text
