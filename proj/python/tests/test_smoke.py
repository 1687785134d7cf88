import json
import math
import os
from pathlib import Path

import pytest

import motivic_zeta as mz

FIXTURES = Path(os.environ.get("MOTIVIC_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def fixture(name):
    return json.loads((FIXTURES / name).read_text())


def test_zeta_of_p1():
    z = mz.zeta_series(fixture("p1.json"), 4)
    assert z["coeffs"] == ["1", "6", "31", "156", "781"]
    r = mz.zeta_rational(fixture("p1.json"))
    assert r["den"] == ["1", "-6", "5"]
    assert r["degree"] == -2


def test_functional_equation_and_determinant():
    rep = mz.functional_equation(fixture("elliptic_f5_motive.json"))
    assert rep["holds"]
    assert mz.determinant(fixture("p1.json")) == "5"


def test_reconstruction():
    rec = mz.traces_to_zeta([1 + 5**n for n in range(1, 9)])
    assert rec["stabilized"]
    assert rec["value"]["den"] == ["1", "-6", "5"]


def test_point_counts_and_weil():
    assert mz.count_points(fixture("elliptic_f5.json"), 1) == 9
    w = mz.weil_check(fixture("elliptic_f5.json"), 1, 8)
    assert w["stabilized"] and w["riemann_hypothesis"] and w["functional_equation"]


def test_hasse_weil_value_and_pole():
    v = mz.hasse_weil(fixture("p1.json"), 5, 2)
    assert math.isclose(v.real, 125 / 96, rel_tol=1e-12)
    with pytest.raises(mz.PoleError):
        mz.hasse_weil(fixture("p1.json"), 5, 0)


def test_budget_and_bad_input():
    with pytest.raises(mz.ResourceError):
        mz.count_points(fixture("elliptic_f5.json"), 6, budget=1000)
    with pytest.raises(mz.MotivicError):
        mz.count_points(fixture("bad_variety.json"))
    with pytest.raises(mz.MotivicError):
        mz.zeta_rational("{not json")


def test_numerical_k0_and_measures():
    assert mz.num_grothendieck({"chi": [[1, 3, 6], [0, 1, 3], [0, 0, 1]]})["rank"] == 3
    assert not mz.num_grothendieck(fixture("gram_nonagreeing.json"))["kernels_agree"]
    w = mz.non_factoring_witness(2, 3)
    assert w["count_projective"] == "13" and w["count_points"] == "3" and w["obstructs"]
    assert mz.measure_eval({"op": "projective", "n": 2}, 3)["count"] == "13"
