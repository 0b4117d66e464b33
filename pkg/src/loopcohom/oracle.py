"""Naive dense cross-check for the engine.

Shares nothing with the engine's basis enumeration or elimination: the
basis is found by brute-force iteration over bounded exponent vectors and
ranks come from a plain dense Gauss-Jordan pass. Only for small inputs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .differential import ComplexSpec, apply_d
from .errors import InconsistencyError, ResourceCapExceeded
from .graded import Element

DEFAULT_CAP = 2000


def brute_force_basis(spec: ComplexSpec, n: int) -> list[tuple]:
    alg = spec.algebra
    ranges = []
    for g in alg.generators:
        ranges.append(range(2) if g.is_odd else range(n // g.degree + 1))
    out = []
    for b, bd in enumerate(alg.base.degrees):
        for exps in itertools.product(*ranges):
            if bd + sum(e * g.degree for e, g in zip(exps, alg.generators)) == n:
                out.append((b, exps))
    return out


def dense_matrix(spec: ComplexSpec, src: list, dst: list) -> list[list[Fraction]]:
    """Rows indexed by dst, columns by src."""
    where = {key: i for i, key in enumerate(dst)}
    mat = [[Fraction(0)] * len(src) for _ in dst]
    for j, key in enumerate(src):
        image = apply_d(spec, Element(spec.algebra, {key: Fraction(1)}))
        for k, c in image._terms.items():
            mat[where[k]][j] = c
    return mat


def dense_rank(mat: list[list[Fraction]]) -> int:
    a = [row[:] for row in mat]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def _matmul(a, b):
    if not a or not b or not b[0]:
        return []
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def dense_betti(spec: ComplexSpec, up_to: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Betti numbers through ``up_to``; also checks d_{n+1} d_n = 0 on
    every pair of computed matrices."""
    bases = []
    for n in range(up_to + 2):
        basis = brute_force_basis(spec, n)
        if len(basis) > cap:
            raise ResourceCapExceeded(f"oracle: {len(basis)} basis elements in degree {n} (cap {cap})")
        bases.append(basis)
    mats = [dense_matrix(spec, bases[n], bases[n + 1]) for n in range(up_to + 1)]
    for n in range(up_to):
        prod = _matmul(mats[n + 1], mats[n])
        if any(x != 0 for row in prod for x in row):
            raise InconsistencyError(f"oracle: d_{n + 1} d_{n} != 0")
    ranks = [dense_rank(m) for m in mats]
    return {n: len(bases[n]) - ranks[n] - (ranks[n - 1] if n else 0) for n in range(up_to + 1)}
