from fractions import Fraction

import pytest

import tautheight

CIRCLE = {"vertices": [{"id": "a", "q": 0}], "edges": [{"u": "a", "v": "a", "length": "1"}]}


def test_difference_surface():
    h = tautheight.height_coefficients([1, -1], 3)
    assert (h["a"], h["b"], h["c"]) == (Fraction(1, 9), Fraction(-1, 36), 0)


def test_curve_table():
    for g in range(2, 7):
        h = tautheight.height_coefficients([1], g)
        assert h["a"] == Fraction(1, 8 * (g - 1))
        assert h["c"] == Fraction(g - 1, g)


def test_empty_multi_index():
    h = tautheight.height_coefficients([], 4)
    assert (h["a"], h["b"], h["c"]) == (0, 0, 0)


def test_circle_invariants():
    r = tautheight.invariants(CIRCLE)
    assert r["tau"] == Fraction(1, 12)
    assert r["phi"] == 0
    assert r["alpha"] == Fraction(1, 12)
    assert r["delta_i"] == {0: 1}


def test_format_round_trip():
    text = tautheight.format_graph(CIRCLE)
    assert tautheight.format_graph(text) == text


def test_errors():
    with pytest.raises(tautheight.InputError):
        tautheight.height_coefficients([1, 0], 3)
    with pytest.raises(tautheight.CapacityError):
        tautheight.height_coefficients([1] * 8, 8)
    with pytest.raises(tautheight.GraphValidationError, match="disconnected"):
        tautheight.invariants({"vertices": [{"id": "a", "q": 1}, {"id": "b", "q": 1}], "edges": []})
    with pytest.raises(tautheight.GraphParseError):
        tautheight.invariants("not json")
    with pytest.raises(ValueError):
        tautheight.invariants("not json")


def test_verify_and_wilms():
    ok, report = tautheight.verify("paper", "2..4")
    assert ok
    assert report["summary"]["failed"] == 0
    assert tautheight.wilms_constant(4) == -12
    assert "paper" in tautheight.suite_names()
