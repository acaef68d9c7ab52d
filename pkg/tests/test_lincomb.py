from fractions import Fraction

import pytest
from hypothesis import given

from conftest import lincombs, objects, rationals
from hopf_forest.algebras import HHO
from hopf_forest.combinatorics import parse_heap
from hopf_forest.errors import AlgebraMismatchError, UndefinedTermError
from hopf_forest.algebras import HO
from hopf_forest.lincomb import (
    LinComb,
    convolution_power,
    convolve,
    extend_linearly,
    format_rational,
    identity_endo,
    parse_rational,
    tensor,
    unit_endo,
)
from hopf_forest.machinery import reduced_iterated_coproduct

X, Y = LinComb.basis("x"), LinComb.basis("y")


def test_addition_examples():
    assert LinComb({"x": 1}) + LinComb({"x": -1}) == LinComb()
    assert (LinComb({"x": Fraction(1, 2)}) + LinComb({"x": Fraction(1, 2), "y": 1})
            == LinComb({"x": 1, "y": 1}))
    assert LinComb() + LinComb({"y": 3}) == LinComb({"y": 3})


def test_scaling_examples():
    assert 0 * LinComb({"x": 5}) == LinComb()
    assert Fraction(-1, 2) * LinComb({"x": 2}) == LinComb({"x": -1})
    a = LinComb({"x": 3, "y": Fraction(2, 7)})
    assert 1 * a == a


def test_zero_coefficients_are_dropped():
    a = LinComb({"x": 0, "y": 1})
    assert list(a) == ["y"]
    assert LinComb({"x": 0}) == 0


def test_extend_linearly_examples():
    a = LinComb({"x": 2, "y": -1})
    assert extend_linearly(LinComb.basis, a) == a
    f = {"x": LinComb({"u": 1, "v": 1})}
    assert extend_linearly(f.__getitem__, LinComb({"x": 2})) == LinComb({"u": 2, "v": 2})
    g = {"x": LinComb({"u": 1}), "y": LinComb({"u": -1})}
    assert extend_linearly(g.__getitem__, LinComb({"x": 1, "y": 1})) == LinComb()


def test_extend_linearly_names_the_missing_basis():
    with pytest.raises(UndefinedTermError, match="'y'"):
        extend_linearly({"x": X}.__getitem__, LinComb({"x": 1, "y": 1}))


def test_tensor_examples():
    assert tensor(X, Y) == LinComb({("x", "y"): 1})
    assert tensor(2 * X, Fraction(1, 2) * Y) == LinComb({("x", "y"): 1})
    assert tensor(LinComb(), Y) == LinComb()


def test_tensor_flattens():
    xy = tensor(X, Y)
    assert tensor(xy, X) == tensor(X, tensor(Y, X)) == LinComb({("x", "y", "x"): 1})


@given(lincombs, lincombs, lincombs)
def test_vector_space_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == 0
    assert a + LinComb() == a


@given(rationals, rationals, lincombs, lincombs)
def test_scalar_laws(p, q, a, b):
    assert p * (a + b) == p * a + p * b
    assert (p + q) * a == p * a + q * a
    assert (p * q) * a == p * (q * a)


@given(lincombs, lincombs)
def test_tensor_is_bilinear(a, b):
    assert tensor(a + b, b) == tensor(a, b) + tensor(b, b)
    assert tensor(3 * a, b) == 3 * tensor(a, b) == tensor(a, 3 * b)


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_rational_parsing():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert format_rational(Fraction(4, 2)) == "2"
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(ValueError):
        parse_rational("1/0")


@given(lincombs)
def test_text_and_json_round_trip(a):
    assert LinComb.parse(str(a), str) == a
    assert LinComb.from_json(a.to_json(), str) == a


def test_text_form_is_sorted_and_explicit():
    assert str(LinComb({"y": Fraction(-1, 2), "x": 1})) == "1*x + -1/2*y"
    assert str(LinComb()) == "0"
    assert str(tensor(X, Y)) == "1*x ⊗ y"


def test_hash_matches_equality():
    assert hash(LinComb({"x": 1, "y": 2})) == hash(LinComb([("y", 2), ("x", 1)]))


@given(objects("heap", 4))
def test_unit_endo_is_convolution_unit(x):
    ident = identity_endo(HHO)
    assert convolve(unit_endo(HHO), ident)(x) == LinComb.basis(x) == convolve(ident, unit_endo(HHO))(x)


@given(objects("heap", 4))
def test_convolution_is_associative(x):
    f = identity_endo(HHO) - unit_endo(HHO)
    g = identity_endo(HHO) + 2 * unit_endo(HHO)
    h = -identity_endo(HHO)
    assert convolve(convolve(f, g), h)(x) == convolve(f, convolve(g, h))(x)


def test_id_minus_one_squared_kills_degree_one():
    f = identity_endo(HHO) - unit_endo(HHO)
    assert convolve(f, f)(parse_heap("0(1())")) == 0


@given(objects("heap", 2, min_degree=2))
def test_cube_vanishes_in_degree_two(x):
    f = identity_endo(HHO) - unit_endo(HHO)
    assert convolution_power(f, 3)(x) == 0
    # oracle: every reduced triple coproduct of a degree-2 element is empty
    assert reduced_iterated_coproduct(HHO, x, 2) == 0


def test_convolution_power_zero_is_unit():
    ident = identity_endo(HHO)
    x = parse_heap("0(2() 1())")
    assert convolution_power(ident, 0)(x) == 0
    assert (ident ** 1)(x) == LinComb.basis(x)


def test_mixing_algebras_is_rejected():
    with pytest.raises(AlgebraMismatchError):
        convolve(identity_endo(HO), identity_endo(HHO))
