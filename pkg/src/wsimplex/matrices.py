"""Dense exact matrices over the Gaussian rationals.

Small and dense on purpose: every boundary, coboundary and Laplacian matrix
in this package is desk-sized, and exactness matters more than speed.  Rows
and columns carry optional simplex labels so operator matrices stay readable.
"""

from __future__ import annotations

import math

import numpy as np

from .gaussian import GaussianRational


class ExactMatrix:
    __slots__ = ("rows", "cols", "data", "row_labels", "col_labels")

    def __init__(self, data, row_labels=None, col_labels=None, cols=None):
        rows = [[GaussianRational.coerce(x) for x in row] for row in data]
        self.rows = len(rows)
        if rows:
            self.cols = len(rows[0])
            for r in rows:
                if len(r) != self.cols:
                    raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols
        self.data = rows
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None
        if self.row_labels is not None and len(self.row_labels) != self.rows:
            raise ValueError("row label count mismatch")
        if self.col_labels is not None and len(self.col_labels) != self.cols:
            raise ValueError("column label count mismatch")

    @classmethod
    def zeros(cls, rows: int, cols: int, row_labels=None, col_labels=None):
        data = [[0] * cols for _ in range(rows)]
        return cls(data, row_labels, col_labels, cols=cols)

    @classmethod
    def identity(cls, n: int):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def diagonal(cls, values, row_labels=None, col_labels=None):
        vals = list(values)
        n = len(vals)
        data = [[vals[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(data, row_labels, col_labels, cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.data[i][j]

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i: int):
        return list(self.data[i])

    def column(self, j: int):
        return [self.data[i][j] for i in range(self.rows)]

    # -- algebra ------------------------------------------------------------

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = [[sum((self.data[i][k] * other.data[k][j] for k in range(self.cols)),
                    GaussianRational(0))
                for j in range(other.cols)]
               for i in range(self.rows)]
        return ExactMatrix(out, self.row_labels, other.col_labels, cols=other.cols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = [[self.data[i][j] + other.data[i][j] for j in range(self.cols)]
               for i in range(self.rows)]
        return ExactMatrix(out, self.row_labels or other.row_labels,
                           self.col_labels or other.col_labels, cols=self.cols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        out = [[-x for x in row] for row in self.data]
        return ExactMatrix(out, self.row_labels, self.col_labels, cols=self.cols)

    def scale(self, scalar) -> "ExactMatrix":
        c = GaussianRational.coerce(scalar)
        out = [[c * x for x in row] for row in self.data]
        return ExactMatrix(out, self.row_labels, self.col_labels, cols=self.cols)

    def transpose(self) -> "ExactMatrix":
        out = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return ExactMatrix(out, self.col_labels, self.row_labels, cols=self.rows)

    def conj_transpose(self) -> "ExactMatrix":
        out = [[self.data[i][j].conjugate() for i in range(self.rows)]
               for j in range(self.cols)]
        return ExactMatrix(out, self.col_labels, self.row_labels, cols=self.rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def is_hermitian(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.data[i][j] == self.data[j][i].conjugate()
                   for i in range(self.rows) for j in range(i + 1))

    def is_integral(self) -> bool:
        return all(x.is_integer() for row in self.data for x in row)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self.data]

    # -- numerics ---------------------------------------------------------------

    def to_ndarray(self) -> np.ndarray:
        real = all(x.is_real() for row in self.data for x in row)
        dtype = np.float64 if real else np.complex128
        out = np.zeros((self.rows, self.cols), dtype=dtype)
        for i, row in enumerate(self.data):
            for j, x in enumerate(row):
                out[i, j] = float(x.re) if real else complex(x)
        return out

    def frobenius_norm(self) -> float:
        return math.sqrt(sum(float(x.abs2()) for row in self.data for x in row))

    def rank(self) -> int:
        """Exact rank by Gaussian elimination over Q(i)."""
        m = [row[:] for row in self.data]
        rank = 0
        for col in range(self.cols):
            pivot = None
            for i in range(rank, self.rows):
                if m[i][col]:
                    pivot = i
                    break
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            head = m[rank][col]
            for i in range(rank + 1, self.rows):
                if m[i][col]:
                    factor = m[i][col] / head
                    m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
            rank += 1
            if rank == self.rows:
                break
        return rank

    def __repr__(self) -> str:
        if self.rows * self.cols > 64:
            return f"ExactMatrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"
