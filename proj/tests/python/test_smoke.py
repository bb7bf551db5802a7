from fractions import Fraction

import pytest

import syzgap

FORMS = ["x", "y", "x+y", "x+e*y"]


@pytest.fixture(scope="module")
def f9():
    return syzgap.Field(3, 2, "e^2+2e+2")


@pytest.fixture(scope="module")
def xy(f9):
    return syzgap.Cell(f9, "x", "y", forms=FORMS)


def test_example_maximum(xy):
    assert syzgap.delta(xy, [2, 2, 2, 2], 9) == Fraction(2, 9)
    assert syzgap.delta(xy, [10, 10, 2, 2], 27) == Fraction(2, 27)


def test_grid_shape(xy):
    g = syzgap.grid(xy, 27, "t1,t1,t2,t2")
    assert g["side"] == 28
    assert len(g["values"]) == 28 * 28
    assert g["values"][0] == 0


def test_verifiers(xy):
    assert syzgap.verify(xy, "A", 9)["passed"]
    assert syzgap.verify(xy, "C", 9)["passed"]
    assert syzgap.verify_cone(xy, [2, 2, 2, 2], 9, 27)["passed"]


def test_syzygy_gap_and_colength():
    f3 = syzgap.Field(3)
    assert syzgap.syzygy_gap(f3, "x", "y", "x+y") == (1, 1)
    assert syzgap.colength(f3, ["x^2", "y^2"]) == 4


def test_han():
    assert syzgap.han_delta_star([1, 1, 1], 3) == 1
    assert syzgap.han_delta_star([Fraction(1, 3)] * 3, 3) == Fraction(1, 3)


def test_operators(f9, xy):
    fixed = syzgap.magnify(xy, 3, [2, 2, 0, 0])
    assert syzgap.delta_equivalent(fixed, xy)
    cell, linear = syzgap.canonicalize(xy)
    assert not linear
    assert syzgap.delta_equivalent(syzgap.reflect(syzgap.reflect(xy, 1), 1), xy)


def test_hilbert_kunz(xy):
    assert syzgap.newbound_lhs(xy, [2, 2, 2, 2], 9) == 2
    f3 = syzgap.Field(3)
    v = syzgap.surface_colength(f3, "x", "y", ["x", "y", "x+y"], [1, 1, 1], 1, "x^2+x*y+y^2", 3)
    assert Fraction(v, 9) == syzgap.mu_formula(1, 3, 1, 1)


def test_errors(f9):
    with pytest.raises(ValueError):
        syzgap.Cell(f9, "x", "x", forms=FORMS)
    with pytest.raises(ValueError):
        syzgap.Field(3, 2, "e^2+1+")
