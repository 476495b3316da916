"""Exact linear algebra over Q(i): matrices, RREF, nullspaces.

Sparse rows are dicts column -> nonzero Scalar; elimination is plain
fraction-managed Gauss-Jordan, deterministic for a fixed row order.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .scalar import ONE, ZERO, Scalar


class ScalarMatrix:
    """A square matrix of Scalars."""

    __slots__ = ("n", "rows", "_det")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = rows
        self._det: Optional[Scalar] = None

    @staticmethod
    def identity(n: int) -> "ScalarMatrix":
        return ScalarMatrix(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(n: int) -> "ScalarMatrix":
        return ScalarMatrix([[ZERO] * n for _ in range(n)])

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def __mul__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row = self.rows[i]
            out.append(
                [sum((row[k] * cols[j][k] for k in range(n)), ZERO) for j in range(n)]
            )
        return ScalarMatrix(out)

    def __add__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return ScalarMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return ScalarMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def scale(self, c: Scalar) -> "ScalarMatrix":
        return ScalarMatrix([[a * c for a in r] for r in self.rows])

    def commutator(self, other: "ScalarMatrix") -> "ScalarMatrix":
        return self * other - other * self

    def determinant(self) -> Scalar:
        if self._det is not None:
            return self._det
        n = self.n
        m = [list(r) for r in self.rows]
        det = ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                self._det = ZERO
                return ZERO
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            det = det * m[col][col]
            inv = m[col][col].inverse()
            for r in range(col + 1, n):
                if not m[r][col]:
                    continue
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] = m[r][c] - factor * m[col][c]
        self._det = det
        return det

    def is_invertible(self) -> bool:
        return bool(self.determinant())

    def inverse(self) -> "ScalarMatrix":
        n = self.n
        m = [list(r) + [ONE if i == j else ZERO for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
            inv = m[col][col].inverse()
            m[col] = [v * inv for v in m[col]]
            for r in range(n):
                if r == col or not m[r][col]:
                    continue
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
        return ScalarMatrix([row[n:] for row in m])

    def conjugate_by(self, b: "ScalarMatrix") -> "ScalarMatrix":
        """B^-1 * A * B."""
        return b.inverse() * self * b

    def is_diagonal(self) -> bool:
        return all(
            not self.rows[i][j]
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def vec(self) -> list:
        """Row-major flattening (a11, a12, ..., ann)."""
        return [c for row in self.rows for c in row]

    @staticmethod
    def from_vec(entries, n: int) -> "ScalarMatrix":
        entries = list(entries)
        if len(entries) != n * n:
            raise ValueError("wrong number of entries")
        return ScalarMatrix([entries[i * n : (i + 1) * n] for i in range(n)])

    def __str__(self) -> str:
        cells = [[str(c) for c in row] for row in self.rows]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join(
            "[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in cells
        )


# -- sparse elimination -------------------------------------------------------


class RowReducer:
    """Incremental RREF over sparse rows (dict col -> Scalar)."""

    def __init__(self):
        self.pivot_rows: dict = {}  # pivot col -> normalized row dict

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def pivots(self) -> list:
        return sorted(self.pivot_rows)

    def reduce(self, row: dict) -> dict:
        """Project row to its canonical residual modulo the row space.

        Pivot rows are kept fully reduced (entries only at the own pivot and
        at free columns), so clearing each pivot column once, in ascending
        order, leaves a residual supported on free columns only.
        """
        row = dict(row)
        for col in sorted(c for c in row if c in self.pivot_rows):
            factor = row.get(col)
            if not factor:
                continue
            pivot = self.pivot_rows[col]
            for c, v in pivot.items():
                s = row.get(c)
                w = factor * v
                if s is None:
                    row[c] = -w
                else:
                    s = s - w
                    if s:
                        row[c] = s
                    else:
                        del row[c]
        return row

    def add(self, row: dict) -> bool:
        """Reduce and insert if independent; True iff rank grew."""
        residual = self.reduce(row)
        if not residual:
            return False
        col = min(residual)
        inv = residual[col].inverse()
        normalized = {c: v * inv for c, v in residual.items()}
        # keep full reduction: clear the new pivot column from older rows
        for pcol, prow in self.pivot_rows.items():
            coef = prow.get(col)
            if coef is None:
                continue
            for c, v in normalized.items():
                s = prow.get(c)
                w = coef * v
                if s is None:
                    prow[c] = -w
                else:
                    s = s - w
                    if s:
                        prow[c] = s
                    else:
                        del prow[c]
        self.pivot_rows[col] = normalized
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def sparse_rref(rows: Iterable[dict]) -> RowReducer:
    red = RowReducer()
    for row in rows:
        red.add(row)
    return red


def nullspace(rows: Iterable[dict], ncols: int) -> list:
    """Canonical nullspace basis of a sparse system.

    One basis vector per free column (ascending), with entry 1 at its own
    free column and the negated reduced coefficients at pivot columns.
    """
    red = sparse_rref(rows)
    pivots = red.pivots()
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: ONE}
        for pcol in pivots:
            coef = red.pivot_rows[pcol].get(free)
            if coef is not None:
                vec[pcol] = -coef
        basis.append(vec)
    return basis


def span_reducer(vectors: Iterable[dict]) -> RowReducer:
    """RREF of a list of vectors, for membership tests against their span."""
    return sparse_rref(vectors)


def dense_to_sparse(vec) -> dict:
    return {i: c for i, c in enumerate(vec) if c}


def sparse_to_dense(vec: dict, ncols: int) -> list:
    return [vec.get(i, ZERO) for i in range(ncols)]
