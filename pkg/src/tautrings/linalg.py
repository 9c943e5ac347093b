"""Exact dense-semantics linear algebra over the rationals.

Matrices carry Fraction entries in a dict keyed by (row, col); zero entries
are simply absent.  This keeps the huge-but-sparse tensor-space matrices
tractable while the API stays that of an ordinary dense matrix.  All rank
and kernel computations are exact integer/rational eliminations; no
floating point is used anywhere.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Sequence


class QMatrix:
    """A rows x cols matrix over Q."""

    def __init__(self, rows: int, cols: int,
                 entries: dict[tuple[int, int], Fraction] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError((i, j))
                v = Fraction(v)
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "QMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        e = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = Fraction(v)
                if v:
                    e[(i, j)] = v
        return cls(rows, cols, e)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols)

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[dict[int, Fraction]]) -> "QMatrix":
        cols = list(columns)
        e = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v:
                    e[(i, j)] = Fraction(v)
        return cls(rows, len(cols), e)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries.get((i, j), Fraction(0))

    def __eq__(self, other) -> bool:
        return (isinstance(other, QMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, dict[int, Fraction]] = {}
        for (i, k), v in self.entries.items():
            by_row.setdefault(i, {})[k] = v
        ocols: dict[int, dict[int, Fraction]] = {}
        for (k, j), v in other.entries.items():
            ocols.setdefault(k, {})[j] = v
        e: dict[tuple[int, int], Fraction] = {}
        for i, rowd in by_row.items():
            acc: dict[int, Fraction] = {}
            for k, v in rowd.items():
                for j, w in ocols.get(k, {}).items():
                    acc[j] = acc.get(j, Fraction(0)) + v * w
            for j, v in acc.items():
                if v:
                    e[(i, j)] = v
        return QMatrix(self.rows, other.cols, e)

    def scale(self, c) -> "QMatrix":
        c = Fraction(c)
        return QMatrix(self.rows, self.cols,
                       {k: v * c for k, v in self.entries.items()} if c else {})

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        e = dict(self.entries)
        for (i, j), v in other.entries.items():
            e[(i, j + self.cols)] = v
        return QMatrix(self.rows, self.cols + other.cols, e)

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       {(j, i): v for (i, j), v in self.entries.items()})

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def is_zero(self) -> bool:
        return not self.entries

    def to_lists(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def _int_rows(self) -> list[dict[int, int]]:
        """Rows with cleared denominators, as col -> int dicts."""
        by_row: dict[int, dict[int, Fraction]] = {}
        for (i, j), v in self.entries.items():
            by_row.setdefault(i, {})[j] = v
        out = []
        for i, rowd in by_row.items():
            lcm = 1
            for v in rowd.values():
                lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
            out.append({j: int(v * lcm) for j, v in rowd.items()})
        return out

    def rank(self) -> int:
        piv, _ = _eliminate(self._int_rows())
        return len(piv)

    def kernel_basis(self) -> "QMatrix":
        """Matrix whose columns form a basis of the right kernel."""
        cols = kernel_basis_columns(self._int_rows(), self.cols)
        return QMatrix.from_columns(self.cols, cols)

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"


def _eliminate(rows: list[dict[int, int]]):
    """Fraction-free sparse Gaussian elimination.

    Returns (pivots, pivot_rows): pivots is the list of pivot columns in
    elimination order, pivot_rows the corresponding reduced integer rows.
    Pivot row k has zero in all pivot columns of steps < k.
    """
    rows_d = {i: dict(r) for i, r in enumerate(rows) if r}
    cols_rows: dict[int, set[int]] = {}
    for i, r in rows_d.items():
        for c in r:
            cols_rows.setdefault(c, set()).add(i)
    pivots: list[int] = []
    pivot_rows: list[dict[int, int]] = []
    pivoted: set[int] = set()
    while True:
        best = None
        best_len = None
        for c, rs in cols_rows.items():
            if c in pivoted or not rs:
                continue
            if best is None or len(rs) < best_len:
                best, best_len = c, len(rs)
        if best is None:
            break
        c = best
        prow_i = min(cols_rows[c], key=lambda i: (len(rows_d[i]), i))
        pr = rows_d[prow_i]
        pv = pr[c]
        pivots.append(c)
        pivot_rows.append(pr)
        pivoted.add(c)
        for i in list(cols_rows[c]):
            if i == prow_i:
                continue
            ri = rows_d[i]
            v = ri[c]
            g = math.gcd(pv, v)
            m1, m2 = pv // g, v // g
            new = {cc: vv * m1 for cc, vv in ri.items()}
            for cc, vv in pr.items():
                nv = new.get(cc, 0) - vv * m2
                if nv:
                    new[cc] = nv
                else:
                    new.pop(cc, None)
            g = 0
            for vv in new.values():
                g = math.gcd(g, vv)
                if g == 1:
                    break
            if g > 1:
                new = {cc: vv // g for cc, vv in new.items()}
            for cc in ri:
                if cc not in new:
                    cols_rows[cc].discard(i)
            for cc in new:
                if cc not in ri:
                    cols_rows.setdefault(cc, set()).add(i)
            if new:
                rows_d[i] = new
            else:
                del rows_d[i]
        for cc in pr:
            cols_rows[cc].discard(prow_i)
        del rows_d[prow_i]
    return pivots, pivot_rows


def kernel_basis_columns(rows: list[dict[int, int]], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of the kernel of the integer row system, one dict per vector.

    Back-substitutes through the elimination in reverse order; pivot row k
    may involve pivot columns of later steps and free columns only.
    """
    pivots, pivot_rows = _eliminate(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v: dict[int, Fraction] = {f: Fraction(1)}
        for c, pr in zip(reversed(pivots), reversed(pivot_rows)):
            s = Fraction(0)
            for cc, coef in pr.items():
                if cc == c:
                    continue
                if cc in v:
                    s += coef * v[cc]
            if s:
                v[c] = -s / pr[c]
        basis.append(v)
    return basis


def rank_of_int_rows(rows: list[dict[int, int]]) -> int:
    piv, _ = _eliminate(rows)
    return len(piv)


def subspace_equal(b1: QMatrix, b2: QMatrix) -> bool:
    """Do the column spans of b1 and b2 coincide?"""
    if b1.rows != b2.rows:
        raise ValueError("ambient dimensions differ")
    r1 = b1.rank()
    r2 = b2.rank()
    if r1 != r2:
        return False
    return b1.hstack(b2).rank() == r1


def random_matrix(rows: int, cols: int, rng: random.Random,
                  lo: int = -9, hi: int = 9) -> QMatrix:
    e = {}
    for i in range(rows):
        for j in range(cols):
            v = rng.randint(lo, hi)
            if v:
                e[(i, j)] = Fraction(v)
    return QMatrix(rows, cols, e)
