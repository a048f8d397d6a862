import json
import os
import sys

import pytest

ext = os.environ.get("QSU2_EXT_DIR")
if ext and ext not in sys.path:
    sys.path.insert(0, ext)

try:
    import qsu2
except ImportError:  # fall back to the bare extension next to the build tree
    import _qsu2 as qsu2  # type: ignore


def test_normal_form():
    assert qsu2.normal_form_str("g g* - g* g") == "0"
    e = qsu2.parse("a* a + g* g")
    assert repr(e) == "1"


def test_qint():
    assert repr(qsu2.qint(3)) == "mu^4 + mu^2 + 1"
    v = qsu2.qint(2).eval("1/2")
    assert v == ("5/4", "0")


def test_haar():
    e = qsu2.parse("g g*")
    h = qsu2.haar(e)
    assert repr(h) == "1/(mu^2 + 1)"


def test_delta_singlet():
    table = json.loads(qsu2.delta_table_json(1))
    singlet = [t for t in table if t["k"] == 0][0]
    # -delta(eps) touches only the singlet and triplet pairs
    for term in singlet["delta"]:
        assert term["k1"] <= 1 and term["k2"] <= 1


def test_eom_singlet_free():
    eom = json.loads(qsu2.eom_json(1, 4))
    singlet = [e for e in eom["equations"] if e["index"]["k"] == 0][0]
    assert len(singlet["terms"]) == 1
    assert singlet["terms"][0]["symbols"][0]["type"] == "d*F"


def test_curvature_triplet():
    table = json.loads(qsu2.curvature_json(1, 4))
    eta_plus = [t for t in table if t["index"] == {"k": 1, "m": 1}][0]
    kinds = sorted(s["type"] for term in eta_plus["terms"] for s in term["symbols"])
    assert "dA" in kinds and "A" in kinds


def test_suites():
    rep = json.loads(qsu2.suite("scalar", seed=7))
    assert rep["pass"] is True
    rep = json.loads(qsu2.suite("cocycle", seed=7))
    assert rep["pass"] is True


def test_calculus_object():
    calc = qsu2.Calculus(1)
    z = calc.harmonic(0, 0)
    assert repr(z) == "1"
    assert calc.selection_rule(1) is True
    with pytest.raises(Exception):
        calc.harmonic(1, 5)
