from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopcohom import (
    BaseAlgebraSpec,
    ComplexSpec,
    GradedAlgebra,
    ValidationError,
    apply_d,
    check_differential,
    enumerate_basis,
)
from loopcohom.errors import UnvalidatedSpecError
from loopcohom.graded import Element
from loopcohom.randomspec import random_spec


def test_d_y4_is_x5(su3):
    alg = su3.algebra
    assert apply_d(su3, alg.gen("y4")) == alg.base_element("x5")
    assert apply_d(su3, alg.gen("y2")).is_zero()


@pytest.mark.parametrize("p,q", [(0, 1), (1, 1), (0, 2), (2, 3), (3, 2), (5, 1)])
def test_d_of_y_monomial(su3, p, q):
    alg = su3.algebra
    got = apply_d(su3, alg.element([(1, "1", {"y2": p, "y4": q})]))
    assert got == alg.element([(q, "x5", {"y2": p, "y4": q - 1})])


def test_unit_is_closed(su3):
    assert apply_d(su3, su3.algebra.one()).is_zero()


def test_x5_y4_is_closed(su3):
    # d(x5 y4) = -x5 * x5 = 0
    assert apply_d(su3, su3.algebra.element([(1, "x5", {"y4": 1})])).is_zero()


def test_su3_fixture_passes(su3):
    assert check_differential(su3).ok


def test_homogeneity_violation_names_symbol():
    base = BaseAlgebraSpec([("1", 0), ("x5", 5)], "1")
    alg = GradedAlgebra(base, [("y2", 2)])
    spec = ComplexSpec(alg, {"y2": alg.element([(1, "x5", {"y2": 1})])}, 10)
    report = check_differential(spec)
    assert not report.ok
    assert report.symbols("homogeneity") == {"y2"}
    with pytest.raises(ValidationError):
        spec.validate()


def test_inhomogeneous_assignment():
    alg = GradedAlgebra(BaseAlgebraSpec.trivial(), [("y2", 2), ("x3", 3), ("w5", 5)])
    spec = ComplexSpec(alg, {"y2": alg.gen("x3") + alg.gen("w5")}, 10)
    assert "inhomogeneous" in str(check_differential(spec))


def test_d_squared_violation():
    alg = GradedAlgebra(BaseAlgebraSpec.trivial(), [("y2", 2), ("x3", 3), ("w4", 4)])
    spec = ComplexSpec(alg, {"y2": alg.gen("x3"), "x3": alg.gen("w4")}, 10)
    report = check_differential(spec)
    assert report.symbols("d_squared") == {"y2"}
    assert report.symbols("homogeneity") == set()


def test_leibniz_violation_three_element_base():
    # a*a = b but d(a) = z and d(b) = 0, while Leibniz demands d(b) = 2 a z;
    # a*b = 0 also breaks, since d(a) b = z b
    base = BaseAlgebraSpec([("1", 0), ("a", 2), ("b", 4)], "1", {("a", "a"): {"b": 1}})
    alg = GradedAlgebra(base, [("z", 3)])
    spec = ComplexSpec(alg, {"a": alg.gen("z")}, 10)
    report = check_differential(spec)
    assert report.symbols("leibniz") == {"a*a", "a*b", "b*a"}
    assert report.symbols("d_squared") == set()


def test_leibniz_violation_base_only():
    # a*b = c, d(a) = b: d(a*a) = 0 but d(a) a + a d(a) = 2c
    base = BaseAlgebraSpec([("1", 0), ("a", 2), ("b", 3), ("c", 5)], "1", {("a", "b"): {"c": 1}})
    alg = GradedAlgebra(base)
    spec = ComplexSpec(alg, {"a": alg.base_element("b")}, 10)
    assert "a*a" in check_differential(spec).symbols("leibniz")


def test_consistent_base_differential():
    base = BaseAlgebraSpec([("1", 0), ("e", 4), ("f", 5)], "1")
    alg = GradedAlgebra(base)
    assert check_differential(ComplexSpec(alg, {"e": alg.base_element("f")}, 10)).ok


def test_apply_d_refuses_unvalidated():
    alg = GradedAlgebra(BaseAlgebraSpec.trivial(), [("y2", 2)])
    spec = ComplexSpec(alg, {}, 10)
    with pytest.raises(UnvalidatedSpecError):
        apply_d(spec, alg.gen("y2"))


@st.composite
def spec_and_elements(draw, count=2):
    spec = random_spec(draw(st.integers(0, 10_000)))
    out = []
    for _ in range(count):
        n = draw(st.integers(0, spec.max_degree))
        basis = enumerate_basis(spec, n).entries
        if not basis:
            out.append(spec.algebra.zero())
            continue
        keys = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3, unique=True))
        coeffs = draw(st.lists(st.integers(-4, 4).filter(bool), min_size=len(keys), max_size=len(keys)))
        out.append(Element(spec.algebra, dict(zip(keys, map(Fraction, coeffs)))))
    return spec, out


@settings(max_examples=120, deadline=None)
@given(spec_and_elements())
def test_leibniz_rule(data):
    spec, (u, v) = data
    if not u:
        return
    sign = -1 if u.degree % 2 else 1
    assert apply_d(spec, u * v) == apply_d(spec, u) * v + sign * (u * apply_d(spec, v))


@settings(max_examples=120, deadline=None)
@given(spec_and_elements())
def test_d_squared_zero(data):
    spec, (u, v) = data
    assert apply_d(spec, apply_d(spec, u + v)).is_zero()
    assert apply_d(spec, apply_d(spec, u * v)).is_zero()


@settings(max_examples=80, deadline=None)
@given(spec_and_elements(), st.integers(-3, 3), st.fractions(-2, 2, max_denominator=3))
def test_linearity(data, alpha, beta):
    spec, (u, v) = data
    assert apply_d(spec, alpha * u + beta * v) == alpha * apply_d(spec, u) + beta * apply_d(spec, v)


@settings(max_examples=60, deadline=None)
@given(spec_and_elements(count=1))
def test_degree_raised_by_one(data):
    spec, (u,) = data
    du = apply_d(spec, u)
    if u and du:
        assert du.degree == u.degree + 1
