"""Exact sparse linear algebra over Q.

The main path is Gaussian elimination on dict-of-dicts rows with a
Markowitz-style pivot choice: among all remaining nonzeros take the one
minimising (row count) * (column count), ties broken by smallest
``(row, col)``. A dense fraction-free Bareiss rank is kept as an
independent second backend.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Vector = list  # dense list of Fractions


class SparseMatrixQ:
    """``rows x cols`` matrix with entries stored as ``{(i, j): Fraction}``."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside a {rows}x{cols} matrix")
            if v:
                clean[i, j] = Fraction(v)
        self.entries = clean

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[dict]) -> SparseMatrixQ:
        entries = {(i, j): v for j, col in enumerate(columns) for i, v in col.items()}
        return cls(rows, len(columns), entries)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], cols: int | None = None) -> SparseMatrixQ:
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v}
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> SparseMatrixQ:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> dict[int, dict[int, Fraction]]:
        out: dict[int, dict[int, Fraction]] = {}
        for (i, j), v in self.entries.items():
            out.setdefault(i, {})[j] = v
        return out

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def columns(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def matvec(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.cols:
            raise ValueError(f"vector of length {len(x)} for {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            if x[j]:
                out[i] += v * x[j]
        return out

    def matmul(self, other: SparseMatrixQ) -> SparseMatrixQ:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        right = other.row_dicts()
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in right.get(k, {}).items():
                out[i, j] = out.get((i, j), 0) + a * b
        return SparseMatrixQ(self.rows, other.cols, out)

    def transpose(self) -> SparseMatrixQ:
        return SparseMatrixQ(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> SparseMatrixQ:
        """Row i moves to row_perm[i], column j to col_perm[j]."""
        return SparseMatrixQ(
            self.rows, self.cols,
            {(row_perm[i], col_perm[j]): v for (i, j), v in self.entries.items()},
        )

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other):
        if not isinstance(other, SparseMatrixQ):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"SparseMatrixQ({self.rows}x{self.cols}, nnz={self.nnz})"


def _eliminate(rows: dict[int, dict[int, Fraction]], pivot_limit: int, jordan: bool):
    """Markowitz elimination in place.

    Only columns ``< pivot_limit`` may hold pivots. Returns the pivot list
    ``[(row, col), ...]`` in elimination order and the rows left over
    without a pivot. With ``jordan`` the pivot rows are back-substituted so
    each one holds its pivot column and non-pivot columns only.
    """
    active = {r: row for r, row in rows.items() if row}
    col_rows: dict[int, set[int]] = {}
    for r, row in active.items():
        for c in row:
            col_rows.setdefault(c, set()).add(r)

    pivots: list[tuple[int, int]] = []
    while active:
        best = None
        best_cost = None
        for r in sorted(active, key=lambda r: (len(active[r]), r)):
            row = active[r]
            n_row = len(row)
            if best_cost is not None and n_row > best_cost:
                break
            for c in row:
                if c >= pivot_limit:
                    continue
                cost = n_row * len(col_rows[c])
                if best_cost is None or cost < best_cost or (cost == best_cost and (r, c) < best):
                    best, best_cost = (r, c), cost
        if best is None:
            break
        r, c = best
        prow = active.pop(r)
        for cc in prow:
            col_rows[cc].discard(r)
        p = prow[c]
        for r2 in list(col_rows[c]):
            row2 = active[r2]
            f = row2[c] / p
            for cc, v in prow.items():
                nv = row2.get(cc, 0) - f * v
                if nv:
                    if cc not in row2:
                        col_rows.setdefault(cc, set()).add(r2)
                    row2[cc] = nv
                else:
                    del row2[cc]
                    col_rows[cc].discard(r2)
        rows[r] = prow
        pivots.append((r, c))

    if jordan:
        # a pivot row only touches pivot columns chosen after it
        for k in range(len(pivots) - 1, -1, -1):
            r, c = pivots[k]
            prow = rows[r]
            for r2, _ in pivots[:k]:
                row2 = rows[r2]
                if c not in row2:
                    continue
                f = row2[c] / prow[c]
                for cc, v in prow.items():
                    nv = row2.get(cc, 0) - f * v
                    if nv:
                        row2[cc] = nv
                    else:
                        del row2[cc]
    return pivots, active


def rank(m: SparseMatrixQ, method: str = "markowitz") -> int:
    """Exact rank over Q; ``method`` is ``"markowitz"`` or ``"bareiss"``."""
    if method == "bareiss":
        return rank_bareiss(m)
    if method != "markowitz":
        raise ValueError(f"unknown elimination method {method!r}")
    pivots, _ = _eliminate(m.row_dicts(), m.cols, jordan=False)
    return len(pivots)


def kernel_basis(m: SparseMatrixQ) -> list[Vector]:
    """Basis of the right kernel, one vector per non-pivot column (ascending)."""
    rows = m.row_dicts()
    pivots, _ = _eliminate(rows, m.cols, jordan=True)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(m.cols):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in pivots:
            row = rows[r]
            if f in row:
                v[c] = -row[f] / row[c]
        basis.append(v)
    return basis


def solve_in_span(columns: SparseMatrixQ, v: Sequence) -> Vector | None:
    """Coefficients ``x`` with ``columns @ x == v``, or None if v is not in
    the column span. Free variables are set to zero."""
    if len(v) != columns.rows:
        raise ValueError(f"vector of length {len(v)} for {columns.rows} rows")
    aug = columns.cols
    rows = columns.row_dicts()
    for i, x in enumerate(v):
        if x:
            rows.setdefault(i, {})[aug] = Fraction(x)
    pivots, leftover = _eliminate(rows, aug, jordan=True)
    if any(leftover.values()):
        return None
    x = [Fraction(0)] * columns.cols
    for r, c in pivots:
        row = rows[r]
        x[c] = row.get(aug, Fraction(0)) / row[c]
    return x


def rank_bareiss(m: SparseMatrixQ) -> int:
    """Rank by fraction-free Bareiss elimination on an integer copy.

    Each row is scaled by the lcm of its denominators first; that does not
    change the rank.
    """
    dense = m.to_dense()
    a = []
    for row in dense:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        a.append([int(x * scale) for x in row])
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        for i in range(r + 1, nrows):
            ai = a[i]
            aic = ai[c]
            for j in range(c + 1, ncols):
                num = pr[c] * ai[j] - aic * pr[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division not exact"
                ai[j] = q
            ai[c] = 0
        prev = pr[c]
        r += 1
    return r


def reduce_against(basis: dict[int, dict[int, Fraction]], v: dict[int, Fraction]) -> dict[int, Fraction]:
    """Reduce sparse ``v`` by an echelon basis keyed on leading index.

    Each basis vector has coefficient 1 at its key and nothing at smaller
    indices.
    """
    v = dict(v)
    while v:
        lead = min(v)
        b = basis.get(lead)
        if b is None:
            return v
        f = v[lead]
        for k, x in b.items():
            nv = v.get(k, 0) - f * x
            if nv:
                v[k] = nv
            else:
                v.pop(k, None)
    return v


def insert_into(basis: dict[int, dict[int, Fraction]], v: dict[int, Fraction]) -> bool:
    """Add ``v`` to the echelon ``basis`` if independent; report whether it was."""
    r = reduce_against(basis, v)
    if not r:
        return False
    lead = min(r)
    f = r[lead]
    basis[lead] = {k: x / f for k, x in r.items()}
    return True


def independent_modulo(span: Iterable[dict], candidates: Iterable[dict]) -> list[int]:
    """Indices of candidates, taken greedily in order, that are linearly
    independent modulo ``span`` and the candidates already kept."""
    basis: dict[int, dict[int, Fraction]] = {}
    for v in span:
        insert_into(basis, v)
    kept = []
    for idx, v in enumerate(candidates):
        if insert_into(basis, v):
            kept.append(idx)
    return kept
