"""Exact matrices and elimination.

``ExactMatrix`` stores columns as ``{row: value}`` dicts.  The model
matrices in this package have at most two nonzero entries per column, so
column-sparse storage keeps products over Z[q] cheap.  Matrices act on
column vectors: column ``c`` is the image of basis vector ``c``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from gelfand.scalars import QPoly


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[dict[int, object]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            self.cols = [dict() for _ in range(ncols)]
        else:
            if len(cols) != ncols:
                raise ValueError("column count mismatch")
            self.cols = [{r: v for r, v in col.items() if v} for col in cols]

    @classmethod
    def identity(cls, n: int, one=1) -> ExactMatrix:
        return cls(n, n, [{i: one} for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> ExactMatrix:
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> ExactMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        cols = [{i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]):
        r, c = key
        return self.cols[c].get(r, 0)

    def __setitem__(self, key: tuple[int, int], value) -> None:
        r, c = key
        if value:
            self.cols[c][r] = value
        else:
            self.cols[c].pop(r, None)

    def entries(self) -> Iterable[tuple[int, int, object]]:
        """Nonzero entries as ``(row, col, value)``, column-major."""
        for c, col in enumerate(self.cols):
            for r in sorted(col):
                yield r, c, col[r]

    def to_rows(self, zero=0) -> list[list[object]]:
        rows = [[zero] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            rows[r][c] = v
        return rows

    def copy(self) -> ExactMatrix:
        return ExactMatrix(self.nrows, self.ncols, [dict(col) for col in self.cols])

    def map(self, fn: Callable[[object], object]) -> ExactMatrix:
        return ExactMatrix(
            self.nrows, self.ncols, [{r: fn(v) for r, v in col.items()} for col in self.cols]
        )

    def specialize(self, q0) -> ExactMatrix:
        """Evaluate QPoly entries at ``q0``; other entries become Fractions."""
        return self.map(lambda v: v.specialize(q0) if isinstance(v, QPoly) else Fraction(v))

    def transpose(self) -> ExactMatrix:
        out = ExactMatrix(self.ncols, self.nrows)
        for r, c, v in self.entries():
            out.cols[r][c] = v
        return out

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out_cols = []
        for col in other.cols:
            acc: dict[int, object] = {}
            for k, b in col.items():
                for r, a in self.cols[k].items():
                    prev = acc.get(r)
                    acc[r] = a * b if prev is None else prev + a * b
            out_cols.append(acc)
        return ExactMatrix(self.nrows, other.ncols, out_cols)

    def _combine(self, other: ExactMatrix, sgn: int) -> ExactMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out_cols = []
        for a, b in zip(self.cols, other.cols):
            acc = dict(a)
            for r, v in b.items():
                prev = acc.get(r)
                term = v if sgn > 0 else -v
                acc[r] = term if prev is None else prev + term
            out_cols.append(acc)
        return ExactMatrix(self.nrows, self.ncols, out_cols)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return self._combine(other, 1)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self._combine(other, -1)

    def __neg__(self) -> ExactMatrix:
        return self.map(lambda v: -v)

    def scale(self, s) -> ExactMatrix:
        return self.map(lambda v: s * v)

    def __rmul__(self, s) -> ExactMatrix:
        return self.scale(s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.cols, other.cols)
        )

    __hash__ = None

    def first_difference(self, other: ExactMatrix) -> tuple[int, int, object, object] | None:
        """First entry (row-major order) where the two matrices differ."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        for r in range(self.nrows):
            for c in range(self.ncols):
                if self[r, c] != other[r, c]:
                    return r, c, self[r, c], other[r, c]
        return None

    def trace(self):
        return sum((self.cols[i].get(i, 0) for i in range(min(self.shape))), 0)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix:
        pos = {r: k for k, r in enumerate(rows)}
        out = []
        for c in cols:
            out.append({pos[r]: v for r, v in self.cols[c].items() if r in pos})
        return ExactMatrix(len(rows), len(cols), out)

    def is_monomial(self) -> bool:
        """At most one nonzero per column."""
        return all(len(col) <= 1 for col in self.cols)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.cols))})"


def rref(rows: Sequence[Sequence[object]]) -> tuple[int, list[list[Fraction]]]:
    """Reduced row-echelon form over Q.  Returns ``(rank, reduced rows)``."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivot_row = 0
    for c in range(ncols):
        p = next((r for r in range(pivot_row, nrows) if m[r][c] != 0), None)
        if p is None:
            continue
        m[pivot_row], m[p] = m[p], m[pivot_row]
        inv = 1 / m[pivot_row][c]
        m[pivot_row] = [x * inv for x in m[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivot_row, m


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(map(int, row)) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (piv * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def sparse_rank(rows: Iterable[dict[int, Fraction]]) -> int:
    """Rank of a sparse system over Q, rows given as ``{column: value}``.

    Incremental elimination: each incoming row is reduced against the
    pivots found so far and becomes a new pivot if anything survives.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                pivots[lead] = {c: v * inv for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def commutant_dim(mats: Sequence[ExactMatrix]) -> int:
    """Dimension of ``{X : XM = MX for every M in mats}`` over Q.

    Unknowns are the entries ``X[i, j]`` (index ``i*d + j``).  For each
    generator the equation ``(XM - MX)[i, j] = 0`` is one sparse row.
    QPoly entries must be specialized first.
    """
    if not mats:
        raise ValueError("need at least one matrix")
    d = mats[0].nrows
    for m in mats:
        if m.shape != (d, d):
            raise ValueError("commutant needs square matrices of one size")

    def rows() -> Iterable[dict[int, Fraction]]:
        for m in mats:
            mrows: list[dict[int, object]] = [dict() for _ in range(d)]
            for r, c, v in m.entries():
                mrows[r][c] = v
            for i in range(d):
                for j in range(d):
                    eq: dict[int, Fraction] = {}
                    # (XM)[i,j] = sum_k X[i,k] M[k,j]
                    for k, v in m.cols[j].items():
                        key = i * d + k
                        eq[key] = eq.get(key, 0) + v
                    # (MX)[i,j] = sum_k M[i,k] X[k,j]
                    for k, v in mrows[i].items():
                        key = k * d + j
                        eq[key] = eq.get(key, 0) - v
                    if any(eq.values()):
                        yield eq

    return d * d - sparse_rank(rows())
