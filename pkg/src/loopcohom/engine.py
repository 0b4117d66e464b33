"""Degree-by-degree cohomology of a validated ComplexSpec.

Computing H^n needs the bases of degrees n-1, n and n+1, so a spec
truncated at ``max_degree`` yields reliable Betti numbers through
``max_degree`` (bases are enumerated up to ``max_degree + 1``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .differential import ComplexSpec, _d_key
from .errors import DegreeOutOfRange, InconsistencyError, ResourceCapExceeded, UnvalidatedSpecError
from .graded import Element
from .linalg import SparseMatrixQ, independent_modulo, kernel_basis, rank, solve_in_span

DEFAULT_MAX_BASIS = 200_000
MAX_BASIS_ENV = "LOOPCOHOM_MAX_BASIS"


def max_basis_size() -> int:
    value = os.environ.get(MAX_BASIS_ENV)
    return int(value) if value else DEFAULT_MAX_BASIS


@dataclass(frozen=True)
class DegreeBasis:
    degree: int
    entries: tuple  # ((base_index, monomial), ...) in canonical order

    def __len__(self):
        return len(self.entries)

    def index(self) -> dict:
        return {key: i for i, key in enumerate(self.entries)}


@dataclass
class CohomologyResult:
    betti: dict[int, int]
    representatives: dict[int, list[Element]]
    ring_constants: dict[tuple[int, int, int, int], tuple[Fraction, ...]] = field(default_factory=dict)
    max_reliable_degree: int = 0
    dims: dict[int, int] = field(default_factory=dict)
    ranks: dict[int, int] = field(default_factory=dict)

    def product(self, d1: int, i: int, d2: int, j: int) -> Optional[tuple[Fraction, ...]]:
        """Coordinates of [r_{d1,i}] * [r_{d2,j}] over the degree d1+d2
        representatives; None when that degree is beyond the window."""
        if d1 + d2 > self.max_reliable_degree:
            return None
        return self.ring_constants[d1, i, d2, j]


def _require(spec: ComplexSpec):
    if not spec.validated:
        raise UnvalidatedSpecError("spec has not been validated; call spec.validate()")


def _monomials(spec: ComplexSpec, k: int, cap: int) -> list[tuple]:
    """Exponent vectors of LW of total degree k, unsorted."""
    cache = spec._cache.setdefault("monomials", {})
    if k in cache:
        return cache[k]
    degs = spec.algebra.gen_degrees
    odd = spec.algebra.gen_odd
    n = len(degs)
    out: list[tuple] = []
    exps = [0] * n

    def rec(i, remaining):
        if i == n:
            if remaining == 0:
                out.append(tuple(exps))
                if len(out) > cap:
                    raise ResourceCapExceeded(f"more than {cap} monomials in degree {k}")
            return
        top = 1 if odd[i] else remaining // degs[i]
        for e in range(min(top, remaining // degs[i]) + 1):
            exps[i] = e
            rec(i + 1, remaining - e * degs[i])
        exps[i] = 0

    if k >= 0:
        rec(0, k)
    cache[k] = out
    return out


def enumerate_basis(spec: ComplexSpec, n: int) -> DegreeBasis:
    """All ``(base, monomial)`` pairs of total degree n, canonically ordered."""
    _require(spec)
    if not 0 <= n <= spec.max_degree + 1:
        raise DegreeOutOfRange(f"degree {n} outside 0..{spec.max_degree + 1}")
    return _basis(spec, n)


def _basis(spec: ComplexSpec, n: int) -> DegreeBasis:
    cache = spec._cache.setdefault("basis", {})
    if n in cache:
        return cache[n]
    cap = max_basis_size()
    entries = []
    for b, bd in enumerate(spec.base.degrees):
        if bd <= n:
            entries.extend((b, m) for m in _monomials(spec, n - bd, cap))
            if len(entries) > cap:
                raise ResourceCapExceeded(f"basis in degree {n} exceeds {cap} elements")
    basis = DegreeBasis(n, tuple(sorted(entries)))
    cache[n] = basis
    return basis


def dimensions(spec: ComplexSpec, up_to: int) -> list[int]:
    _require(spec)
    if up_to > spec.max_degree + 1:
        raise DegreeOutOfRange(f"degree {up_to} outside 0..{spec.max_degree + 1}")
    return [len(_basis(spec, n)) for n in range(up_to + 1)]


def matrix_of_d(spec: ComplexSpec, n: int) -> SparseMatrixQ:
    """Matrix of d: C^n -> C^(n+1); column j holds d of basis element j."""
    _require(spec)
    if n + 1 > spec.max_degree + 1:
        raise DegreeOutOfRange(f"d_{n} needs degree {n + 1} > {spec.max_degree + 1}")
    return _matrix(spec, n)


def _matrix(spec: ComplexSpec, n: int) -> SparseMatrixQ:
    cache = spec._cache.setdefault("matrix", {})
    if n in cache:
        return cache[n]
    if n < 0:
        m = SparseMatrixQ(len(_basis(spec, 0)), 0)
    else:
        src = _basis(spec, n)
        dst = _basis(spec, n + 1).index()
        entries = {}
        for j, key in enumerate(src.entries):
            for k, c in _d_key(spec, key).items():
                entries[dst[k], j] = c
        m = SparseMatrixQ(len(dst), len(src), entries)
    cache[n] = m
    return m


def _rank(spec: ComplexSpec, n: int) -> int:
    cache = spec._cache.setdefault("rank", {})
    if n not in cache:
        cache[n] = 0 if n < 0 else rank(_matrix(spec, n))
    return cache[n]


def _check_window(spec: ComplexSpec, up_to: int):
    _require(spec)
    if up_to > spec.max_degree:
        raise DegreeOutOfRange(
            f"cohomology through degree {up_to} needs max_degree >= {up_to}, spec has {spec.max_degree}"
        )


def betti(spec: ComplexSpec, up_to: int) -> dict[int, int]:
    """``{n: dim H^n}`` for n = 0..up_to."""
    _check_window(spec, up_to)
    out = {}
    for n in range(up_to + 1):
        dim = len(_basis(spec, n))
        out[n] = dim - _rank(spec, n) - _rank(spec, n - 1)
    return out


def _element_to_vector(spec: ComplexSpec, basis: DegreeBasis, a: Element) -> list[Fraction]:
    index = basis.index()
    v = [Fraction(0)] * len(basis)
    for key, c in a._terms.items():
        v[index[key]] = c
    return v


def _representative_vectors(spec: ComplexSpec, n: int) -> list[dict[int, Fraction]]:
    cache = spec._cache.setdefault("reps", {})
    if n in cache:
        return cache[n]
    kernel = kernel_basis(_matrix(spec, n))
    boundaries = _matrix(spec, n - 1).columns() if n > 0 else []
    candidates = [{i: c for i, c in enumerate(v) if c} for v in kernel]
    kept = independent_modulo(boundaries, candidates)
    cache[n] = [candidates[i] for i in kept]
    return cache[n]


def representatives(spec: ComplexSpec, n: int) -> list[Element]:
    """Cocycles whose classes form a basis of H^n."""
    _check_window(spec, n)
    basis = _basis(spec, n)
    return [
        Element(spec.algebra, {basis.entries[i]: c for i, c in v.items()})
        for v in _representative_vectors(spec, n)
    ]


def _class_coordinates(spec: ComplexSpec, n: int, a: Element) -> tuple[Fraction, ...]:
    """Coordinates of the class of cocycle ``a`` over representatives(n)."""
    reps = _representative_vectors(spec, n)
    cache = spec._cache.setdefault("class_matrix", {})
    if n not in cache:
        basis = _basis(spec, n)
        cols = list(reps) + (_matrix(spec, n - 1).columns() if n > 0 else [])
        cache[n] = SparseMatrixQ.from_columns(len(basis), cols)
    target = _element_to_vector(spec, _basis(spec, n), a)
    x = solve_in_span(cache[n], target)
    if x is None:
        raise InconsistencyError(f"degree {n} cocycle {a} is not in span of representatives + boundaries")
    return tuple(x[: len(reps)])


def ring_structure(spec: ComplexSpec, up_to: int) -> CohomologyResult:
    """Betti numbers, representatives and products of representatives for
    every pair whose product degree is at most ``up_to``."""
    _check_window(spec, up_to)
    b = betti(spec, up_to)
    reps = {n: representatives(spec, n) for n in range(up_to + 1)}
    constants = {}
    for d1 in range(up_to + 1):
        for d2 in range(up_to + 1 - d1):
            if not reps[d1] or not reps[d2]:
                continue
            for i, r1 in enumerate(reps[d1]):
                for j, r2 in enumerate(reps[d2]):
                    prod = r1 * r2
                    constants[d1, i, d2, j] = _class_coordinates(spec, d1 + d2, prod)
    for n in range(up_to + 1):
        if len(reps[n]) != b[n]:
            raise InconsistencyError(f"degree {n}: {len(reps[n])} representatives, betti {b[n]}")
    return CohomologyResult(
        betti=b,
        representatives=reps,
        ring_constants=constants,
        max_reliable_degree=up_to,
        dims={n: len(_basis(spec, n)) for n in range(up_to + 2)},
        ranks={n: _rank(spec, n) for n in range(up_to + 1)},
    )


def cohomology(spec: ComplexSpec, up_to: int | None = None) -> CohomologyResult:
    """Betti numbers and representatives, without ring constants."""
    up_to = spec.max_degree if up_to is None else up_to
    _check_window(spec, up_to)
    b = betti(spec, up_to)
    return CohomologyResult(
        betti=b,
        representatives={n: representatives(spec, n) for n in range(up_to + 1)},
        max_reliable_degree=up_to,
        dims={n: len(_basis(spec, n)) for n in range(up_to + 2)},
        ranks={n: _rank(spec, n) for n in range(up_to + 1)},
    )


def poincare_table(result: CohomologyResult) -> list[tuple[int, int]]:
    return sorted(result.betti.items())


__all__ = [
    "CohomologyResult",
    "DegreeBasis",
    "betti",
    "cohomology",
    "dimensions",
    "enumerate_basis",
    "matrix_of_d",
    "poincare_table",
    "representatives",
    "ring_structure",
]
