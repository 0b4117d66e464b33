import pytest
from hypothesis import strategies as st

from loopcohom import BaseAlgebraSpec, GradedAlgebra, su3_so3_example
from loopcohom.randomspec import monomial_quotient

# L(a1, c3) (x) R[b2]/(b2^2): odd and even base elements with sign-carrying products
_MONOS = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
_NAMES = ["1", "a1", "b2", "c3", "ab3", "ac4", "bc5", "abc6"]


def rich_base() -> BaseAlgebraSpec:
    basis, products = monomial_quotient([1, 2, 3], _MONOS, _NAMES)
    return BaseAlgebraSpec(basis, "1", products)


def rich_algebra() -> GradedAlgebra:
    return GradedAlgebra(rich_base(), [("w1", 1), ("y2", 2), ("z3", 3), ("y4", 4)])


RICH = rich_algebra()

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


@st.composite
def monomials(draw, alg=RICH, max_exp=2):
    exps = []
    for g in alg.generators:
        exps.append(draw(st.integers(0, 1 if g.is_odd else max_exp)))
    return tuple(exps)


@st.composite
def elements(draw, alg=RICH, max_terms=4):
    n = draw(st.integers(0, max_terms))
    terms = []
    for _ in range(n):
        terms.append((draw(coefficients), draw(st.integers(0, len(alg.base) - 1)), draw(monomials(alg))))
    return alg.element(terms)


@st.composite
def homogeneous_elements(draw, alg=RICH, max_terms=3):
    """A nonzero homogeneous element of random degree."""
    first = (draw(st.integers(0, len(alg.base) - 1)), draw(monomials(alg)))
    deg = alg.key_degree(first)
    keys = [first]
    for _ in range(draw(st.integers(0, max_terms - 1))):
        key = (draw(st.integers(0, len(alg.base) - 1)), draw(monomials(alg)))
        if alg.key_degree(key) == deg:
            keys.append(key)
    terms = [(draw(coefficients), b, m) for b, m in keys]
    a = alg.element(terms)
    if not a:
        a = alg.element([(1, first[0], first[1])])
    return a


@pytest.fixture
def su3():
    return su3_so3_example(20)




# test_acceptance appends its "criterion N: PASS|FAIL" lines here so they
# show up in the summary even when output is captured
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
