import pytest

import bhat


def test_colength():
    assert bhat.colength("x^2, y^3") == 6
    assert bhat.colength("x^4, x^3*y, x*y^3, y^4") == 11


def test_maximal_ideal_table():
    p = bhat.Pair("x, y", "x, y", r_max=4, s_max=4)
    t = p.table()
    assert t[2][3] == 15
    assert all(t[r][s] == (r + s) * (r + s + 1) // 2 for r in range(5) for s in range(5))


def test_coefficients_and_h2():
    p = bhat.Pair("x^2, x*y, y^2", "x^2, y^2")
    c = p.coefficients()["bhattacharya"]
    assert c["e11"] == 4
    h = p.classify_h2(0, 0)
    assert h["verdict"] == "InfiniteDetected"
    assert h["slope"] == "1"
    assert p.classify_h2(1, 1)["verdict"] == "Finite"


def test_verify_depth_zero():
    rep = bhat.Pair("x^4, x^3*y, x*y^3, y^4", "x, y").verify()
    assert rep["report_version"] == 1
    bad = [b for b in rep["blocks"] if b["asserted"] and b["decidable"] and not b["agree"]]
    assert not bad


def test_errors():
    with pytest.raises(bhat.BhatError, match="position"):
        bhat.colength("x^2, y^+")
    with pytest.raises(bhat.BhatError):
        bhat.Pair("x", "x, y")
