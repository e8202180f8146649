from fractions import Fraction

import pytest

import tamefiber


def test_resolve():
    res = tamefiber.resolve(3, 4, 13)
    assert res["r"] == 9
    assert res["b"] == [2, 2, 5]
    assert res["mu"] == [4, 3, 2, 1, 3]
    assert res["stable"]


def test_traces_agree():
    assert tamefiber.trace_polynomial(2, 3, 13) == {0: 2, 9: 1}
    assert tamefiber.trace_polynomial(3, 4, 13) == tamefiber.trace_closed_form(3, 4, 13)


def test_fiber_pipeline():
    g = tamefiber.FiberGraph.catalog("ogg:4")
    assert g.lcm == 12
    assert tamefiber.h1_character(g, 13) == {4: 1, 10: 1}
    assert tamefiber.self_intersections(g, 13)["v4"] == -2
    assert tamefiber.compute_jumps(g) == [Fraction(1, 4), Fraction(3, 4)]


def test_parse_round_trip():
    g = tamefiber.FiberGraph.catalog("kodaira:IV")
    h = tamefiber.FiberGraph.parse(g.to_text())
    assert h.edges == g.edges
    assert tamefiber.compute_jumps(h) == [Fraction(1, 3)]


def test_errors_carry_the_kind():
    with pytest.raises(tamefiber.TamefiberError, match="NotStable"):
        tamefiber.trace_closed_form(3, 4, 5)
    with pytest.raises(tamefiber.TamefiberError, match="not connected"):
        tamefiber.FiberGraph.parse("vertex a genus=0 mult=1\nvertex b genus=1 mult=1\n")
    with pytest.raises(ValueError):
        tamefiber.FiberGraph.catalog("kodaira:V")
