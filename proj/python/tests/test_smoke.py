from fractions import Fraction

import pytest

import fsplit

NODE = "char=2; vars=x,y; ideal=x*y; sop=x+y"
CUSP = "char=5; vars=x,y; ideal=y^2-x^3"
NODE3 = """
char = 2
vars = x, y, z
ideal = x*y
equidimensional = true
connected = true
chain.c = x | x,y,z
"""


def test_node_e1():
    doc = fsplit.se(NODE, 1)
    assert doc["schema"] == fsplit.SCHEMA
    assert doc["report"]["q"] == 2
    assert doc["report"]["lambda"] == "1"
    assert fsplit.fraction(doc["report"]["s_e"]) == Fraction(1, 2)


def test_cusp_is_not_split():
    assert fsplit.se(CUSP, 1, oracle=False)["report"]["s_e"] == "0"


def test_oracle_cross_check():
    doc = fsplit.se("char=3; vars=x,y,z; ideal=x^2+y^2+z^2", 2, oracle=True)
    assert doc["report"]["oracle_lambda"] == doc["report"]["lambda"] == "41"


def test_signature_sequence():
    reports = fsplit.signature(NODE, 3)["signature"]["reports"]
    assert [r["s_e"] for r in reports] == ["1", "1/2", "1/4", "1/8"]


def test_budget_stop_keeps_partial_results():
    doc = fsplit.signature("char=3; vars=x,y,z; ideal=x^2+y^2+z^2", 4, budget=20)
    assert doc["error"]["kind"] == "CostGuardExceeded"
    assert len(doc["signature"]["reports"]) >= 1


def test_probe():
    doc = fsplit.probe(NODE3, "x | x,z | x,y | x,y,z", e=1)
    assert [v["report"]["s_e"] for v in doc["scan"]["values"]] == ["1", "1", "1/2", "1/2"]
    assert doc["pass"] is True
    assert doc["kunz"]["holds"] is True
    assert doc["monotonicity"][0]["holds"] is True


def test_gorenstein_matches():
    assert fsplit.gorenstein(NODE, e=2)["report"] == fsplit.se(NODE, 2)["report"]


def test_errors_carry_their_kind():
    with pytest.raises(fsplit.FsplitError) as info:
        fsplit.se("char=4; vars=x", 1)
    assert info.value.kind == "NonPrimeCharacteristic"
    with pytest.raises(fsplit.FsplitError) as info:
        fsplit.gorenstein("char=3; vars=x,y; ideal=x^2,x*y,y^2", sop="")
    assert info.value.kind == "NotGorenstein"
