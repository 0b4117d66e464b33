from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import RICH, elements, homogeneous_elements
from loopcohom import BaseAlgebraSpec, DegreeMarker, GeneratorSpec, GradedAlgebra, SpecError, add, degree_of, multiply
from loopcohom.graded import normalize, to_fraction


def test_odd_generator_squares_to_zero():
    z = RICH.gen("z3")
    assert multiply(z, z).is_zero()


def test_even_generators_commute_into_a_monomial():
    prod = multiply(RICH.gen("y2"), RICH.gen("y4"))
    assert prod == RICH.element([(1, "1", {"y2": 1, "y4": 1})])
    assert prod == multiply(RICH.gen("y4"), RICH.gen("y2"))


def test_koszul_sign_generator_past_base_element():
    prod = multiply(RICH.gen("z3"), RICH.base_element("c3"))
    assert prod == RICH.element([(-1, "c3", {"z3": 1})])


def test_odd_generators_anticommute_in_declaration_order():
    w, z = RICH.gen("w1"), RICH.gen("z3")
    assert w * z == RICH.element([(1, "1", {"w1": 1, "z3": 1})])
    assert z * w == -(w * z)


def test_x5_squared_vanishes_in_su3_base(su3):
    x5 = su3.algebra.base_element("x5")
    assert multiply(x5, x5).is_zero()


def test_base_products_follow_table():
    a, c = RICH.base_element("a1"), RICH.base_element("c3")
    assert a * c == RICH.base_element("ac4")
    assert c * a == -RICH.base_element("ac4")
    # generator y2 (even) between odd base elements: no extra sign
    assert (a * RICH.gen("y2")) * c == RICH.element([(1, "ac4", {"y2": 1})])
    # w1 odd: moving it past c3 costs a sign
    assert (RICH.gen("w1")) * c == RICH.element([(-1, "c3", {"w1": 1})])


def test_add_examples(su3):
    alg = su3.algebra
    y2 = alg.gen("y2")
    assert add(y2, alg.zero()) == y2
    assert add(y2, -1 * y2).is_zero()
    s = add(alg.base_element("x5"), alg.element([(1, "x5", {"y2": 1})]))
    assert len(s) == 2
    assert [k for k, _ in s.items()] == [(1, (0, 0)), (1, (1, 0))]


def test_degree_of_examples(su3):
    alg = su3.algebra
    assert degree_of(alg.element([(1, "x5", {"y2": 1, "y4": 1})])) == 11
    assert degree_of(alg.one()) == 0
    assert degree_of(alg.gen("y2") + alg.gen("y4")) is DegreeMarker.INHOMOGENEOUS
    assert degree_of(alg.zero()) is DegreeMarker.ANY


def test_canonical_term_order():
    a = RICH.element([(2, "c3", {"y2": 1}), (1, "1", {"w1": 1}), (3, "1", {"y4": 1}), (5, "a1", {})])
    keys = [k for k, _ in a.items()]
    assert keys == sorted(keys)
    assert keys[0][0] == 0 and keys[-1][0] == RICH.base.index["c3"]


def test_normalize_merges_and_drops():
    a = normalize(RICH, [(1, "a1", {"y2": 1}), (-1, "a1", {"y2": 1}), (2, "1", {"z3": 2})])
    assert a.is_zero()
    b = normalize(RICH, [("1/2", "1", {"y2": 1}), ("1/2", "1", {"y2": 1})])
    assert b == RICH.gen("y2")


def test_str_rendering():
    a = RICH.element([("-3/2", "a1", {"y2": 2}), (1, "1", {})])
    assert str(a) == "1 - 3/2*a1*y2^2"
    assert str(RICH.zero()) == "0"


@settings(max_examples=200)
@given(homogeneous_elements(), homogeneous_elements())
def test_graded_commutativity(a, b):
    sign = -1 if a.degree * b.degree % 2 else 1
    assert multiply(a, b) == sign * multiply(b, a)


@settings(max_examples=150)
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(), elements(), elements())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(homogeneous_elements())
def test_odd_elements_square_to_zero(a):
    if a.degree % 2:
        assert (a * a).is_zero()


def test_odd_base_elements_square_to_zero():
    for name, deg in zip(RICH.base.names, RICH.base.degrees):
        b = RICH.base_element(name)
        if deg % 2:
            assert (b * b).is_zero()


@given(elements())
def test_normalize_idempotent(a):
    again = normalize(RICH, [(c, b, m) for (b, m), c in a.items()])
    assert again == a
    assert again.items() == a.items()


@settings(max_examples=150)
@given(homogeneous_elements(), homogeneous_elements())
def test_degree_additive(a, b):
    p = a * b
    if p:
        assert p.degree == a.degree + b.degree


def test_generator_parity():
    assert GeneratorSpec("z", 3).is_odd
    assert not GeneratorSpec("y", 2).is_odd


@pytest.mark.parametrize("degree", [0, -1])
def test_generator_degree_must_be_positive(degree):
    with pytest.raises(SpecError):
        GeneratorSpec("g", degree)


def test_duplicate_symbols_rejected():
    base = BaseAlgebraSpec.trivial()
    with pytest.raises(SpecError, match="duplicate"):
        GradedAlgebra(base, [("y", 2), ("y", 4)])
    with pytest.raises(SpecError, match="duplicate"):
        GradedAlgebra(BaseAlgebraSpec([("1", 0), ("y", 2)], "1"), [("y", 2)])


def test_unknown_symbol():
    with pytest.raises(SpecError, match="not found"):
        RICH.gen("nope")
    with pytest.raises(SpecError, match="not found"):
        RICH.element([(1, "nope", {})])


def test_base_rejects_second_degree_zero_element():
    with pytest.raises(SpecError, match="degree-0"):
        BaseAlgebraSpec([("1", 0), ("e", 0)], "1")


def test_base_rejects_degree_mismatch():
    with pytest.raises(SpecError, match="degree"):
        BaseAlgebraSpec([("1", 0), ("a", 2), ("b", 3)], "1", {("a", "a"): {"b": 1}})


def test_base_rejects_noncommutative_table():
    with pytest.raises(SpecError, match="commutativity"):
        BaseAlgebraSpec(
            [("1", 0), ("a", 2), ("b", 2), ("c", 4)], "1",
            {("a", "b"): {"c": 1}, ("b", "a"): {"c": 2}},
        )


def test_base_rejects_odd_square():
    with pytest.raises(SpecError, match="commutativity"):
        BaseAlgebraSpec([("1", 0), ("a", 1), ("b", 2)], "1", {("a", "a"): {"b": 1}})


def test_base_rejects_nonassociative_table():
    # (a a) b = c b = e but a (a b) = 0
    with pytest.raises(SpecError, match="associativity"):
        BaseAlgebraSpec(
            [("1", 0), ("a", 2), ("b", 2), ("c", 4), ("e", 6)], "1",
            {("a", "a"): {"c": 1}, ("a", "c"): {"e": 1}, ("b", "c"): {"e": 1}},
        )


def test_base_fills_symmetric_partner():
    base = BaseAlgebraSpec([("1", 0), ("a", 1), ("c", 3), ("ac", 4)], "1", {("a", "c"): {"ac": 1}})
    alg = GradedAlgebra(base)
    assert alg.base_element("c") * alg.base_element("a") == -alg.base_element("ac")


@pytest.mark.parametrize("bad", [0.5, True, "1.5", "x", "1/0"])
def test_to_fraction_rejects_inexact(bad):
    with pytest.raises(SpecError):
        to_fraction(bad)


@pytest.mark.parametrize("text,value", [("3", 3), ("-2/6", Fraction(-1, 3)), (" 7/3 ", Fraction(7, 3))])
def test_to_fraction(text, value):
    assert to_fraction(text) == value
