from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopcohom import (
    ComplexSpec,
    DegreeOutOfRange,
    apply_d,
    betti,
    cohomology,
    contractible_model,
    dimensions,
    enumerate_basis,
    loop_space_model,
    make_complex,
    matrix_of_d,
    poincare_table,
    representatives,
    ring_structure,
)
from loopcohom.errors import ResourceCapExceeded, UnvalidatedSpecError
from loopcohom.graded import BaseAlgebraSpec, Element
from loopcohom.linalg import SparseMatrixQ, kernel_basis, rank
from loopcohom.oracle import dense_betti
from loopcohom.randomspec import random_spec

seeds = st.integers(0, 50_000)


def keyset(alg, terms):
    return {alg.element([(1, b, m)]).items()[0][0] for b, m in terms}


def test_basis_degree_zero(su3):
    assert enumerate_basis(su3, 0).entries == ((0, (0, 0)),)


def test_basis_degree_four(su3):
    got = set(enumerate_basis(su3, 4).entries)
    assert got == keyset(su3.algebra, [("1", {"y2": 2}), ("1", {"y4": 1})])


def test_basis_degree_nine(su3):
    got = set(enumerate_basis(su3, 9).entries)
    assert got == keyset(su3.algebra, [("x5", {"y2": 2}), ("x5", {"y4": 1})])


def test_basis_is_sorted(su3):
    for n in range(22):
        entries = enumerate_basis(su3, n).entries
        assert list(entries) == sorted(entries)


def test_basis_window(su3):
    enumerate_basis(su3, 21)
    with pytest.raises(DegreeOutOfRange):
        enumerate_basis(su3, 22)
    with pytest.raises(DegreeOutOfRange):
        enumerate_basis(su3, -1)


def test_dimensions_su3(su3):
    assert dimensions(su3, 6) == [1, 0, 1, 0, 2, 1, 2]


def test_dimensions_polynomial_and_exterior():
    assert dimensions(loop_space_model([3], 10), 10) == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]
    ext = make_complex(BaseAlgebraSpec.trivial(), [("z3", 3)], max_degree=8)
    assert dimensions(ext, 8) == [1, 0, 0, 1, 0, 0, 0, 0, 0]


def test_matrix_of_d_examples(su3):
    m4 = matrix_of_d(su3, 4)
    assert m4.shape == (1, 2)
    # d(y2^2) = 0, d(y4) = x5
    basis4 = enumerate_basis(su3, 4).entries
    col = m4.column(basis4.index((0, (0, 1))))
    assert list(col.values()) == [1]
    assert rank(m4) == 1
    assert matrix_of_d(su3, 1).shape == (1, 0)
    with pytest.raises(DegreeOutOfRange):
        matrix_of_d(su3, 21)


def test_betti_su3(su3):
    assert betti(su3, 20) == {n: int(n % 2 == 0) for n in range(21)}


def test_betti_window(su3):
    with pytest.raises(DegreeOutOfRange):
        betti(su3, 21)


def test_unvalidated_refused(su3):
    raw = ComplexSpec(su3.algebra, su3.differential, 10)
    with pytest.raises(UnvalidatedSpecError):
        betti(raw, 4)


def test_representatives_su3(su3):
    alg = su3.algebra
    assert representatives(su3, 5) == []
    assert representatives(su3, 2) == [alg.gen("y2")]
    (r4,) = representatives(su3, 4)
    assert r4 == alg.gen("y2") ** 2


def test_ring_structure_su3(su3):
    res = ring_structure(su3, 20)
    assert res.product(2, 0, 2, 0) == (1,)
    assert res.product(2, 0, 4, 0) == (1,)
    assert res.product(2, 0, 20, 0) is None
    assert res.product(0, 0, 2, 0) == (1,)  # unit
    assert poincare_table(res)[:3] == [(0, 1), (1, 0), (2, 1)]


def test_poincare_table_acyclic():
    res = cohomology(contractible_model([3, 5], 8))
    assert poincare_table(res) == [(0, 1)] + [(n, 0) for n in range(1, 9)]


def test_cohomology_has_no_products(su3):
    res = cohomology(su3, 8)
    assert res.ring_constants == {}
    assert res.betti == betti(su3, 8)
    assert res.dims[9] == len(enumerate_basis(su3, 9))


def test_basis_cap(monkeypatch):
    monkeypatch.setenv("LOOPCOHOM_MAX_BASIS", "3")
    spec = loop_space_model([3, 5, 7], 30)
    with pytest.raises(ResourceCapExceeded):
        betti(spec, 30)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_rank_nullity_and_nonnegative_betti(seed):
    spec = random_spec(seed)
    b = betti(spec, spec.max_degree)
    for n in range(spec.max_degree + 1):
        m = matrix_of_d(spec, n)
        assert m.cols == rank(m) + len(kernel_basis(m))
        assert b[n] >= 0


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_euler_telescoping(seed):
    spec = random_spec(seed)
    top = spec.max_degree
    b = betti(spec, top)
    dims = dimensions(spec, top)
    lhs = sum((-1) ** n * (dims[n] - b[n]) for n in range(top + 1))
    assert lhs == (-1) ** top * rank(matrix_of_d(spec, top))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_matches_oracle(seed):
    spec = random_spec(seed)
    assert betti(spec, spec.max_degree) == dense_betti(spec, spec.max_degree)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_representatives_are_independent_cocycles(seed):
    spec = random_spec(seed, truncation=8)
    b = betti(spec, 8)
    for n in range(9):
        reps = representatives(spec, n)
        assert len(reps) == b[n]
        for r in reps:
            assert apply_d(spec, r).is_zero()
        # independent modulo boundaries: adding them to the boundaries raises the rank
        boundary = matrix_of_d(spec, n - 1).columns() if n else []
        index = enumerate_basis(spec, n).index()
        vecs = [{index[k]: c for k, c in r._terms.items()} for r in reps]
        size = len(index)
        with_reps = rank(SparseMatrixQ.from_columns(size, boundary + vecs))
        assert with_reps == rank(SparseMatrixQ.from_columns(size, boundary)) + len(reps)


def _mul(res, d1, x, d2, y):
    """Product of class vectors x (degree d1) and y (degree d2)."""
    out = [Fraction(0)] * res.betti[d1 + d2]
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            if a and b:
                for k, c in enumerate(res.ring_constants[d1, i, d2, j]):
                    out[k] += a * b * c
    return out


def _unit(res, d, i):
    v = [Fraction(0)] * res.betti[d]
    v[i] = Fraction(1)
    return v


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_ring_graded_commutative_and_associative(seed):
    spec = random_spec(seed, truncation=8)
    res = ring_structure(spec, 8)
    for (d1, i, d2, j), c in res.ring_constants.items():
        sign = -1 if d1 * d2 % 2 else 1
        assert tuple(sign * x for x in res.ring_constants[d2, j, d1, i]) == c
    nonzero = [n for n in range(9) if res.betti[n]]
    for d1 in nonzero:
        for d2 in nonzero:
            for d3 in nonzero:
                if d1 + d2 + d3 > 8:
                    continue
                for i in range(res.betti[d1]):
                    for j in range(res.betti[d2]):
                        for k in range(res.betti[d3]):
                            a, b, c = _unit(res, d1, i), _unit(res, d2, j), _unit(res, d3, k)
                            left = _mul(res, d1 + d2, _mul(res, d1, a, d2, b), d3, c)
                            right = _mul(res, d1, a, d2 + d3, _mul(res, d2, b, d3, c))
                            assert left == right


@settings(max_examples=30, deadline=None)
@given(seeds, st.data())
def test_betti_invariant_under_coboundary_shift(seed, data):
    # d(g) = c  ->  c + d(b) is the automorphism g -> g + b
    spec = random_spec(seed)
    alg = spec.algebra
    last = len(alg.generators) - 1
    g = alg.generators[last]
    pool = [k for k in enumerate_basis(spec, g.degree).entries if k[1][last] == 0]
    if not pool:
        return
    keys = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3, unique=True))
    b = Element(alg, {k: Fraction(data.draw(st.integers(1, 5))) for k in keys})
    diff = spec.differential
    diff[g.name] = diff[g.name] + apply_d(spec, b)
    shifted = ComplexSpec(alg, diff, spec.max_degree).validate()
    assert betti(shifted, spec.max_degree) == betti(spec, spec.max_degree)
