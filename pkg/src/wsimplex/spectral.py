"""Cohomology dimensions, Hodge Laplacians and harmonic cochains.

Cochain spaces are the duals of the chain spaces in the same simplex bases,
so dimension counting is exact linear algebra: in degree n the cohomology
dimension is dim C^n minus the ranks of the coboundaries leaving and
entering degree n.  The degree-n Laplacian

    L_n = A_{n-1} A_{n-1}^* + A_n^* A_n,     A_k = coboundary matrix k,

is Hermitian positive semidefinite, its kernel dimension equals the
cohomology dimension, and the kernel vectors are exactly the cochains
annihilated by both the coboundary and the adjoint coboundary.

``zero_multiplicity_formulas`` evaluates the closed-form zero-eigenvalue
counts of the down part, the up part and the full Laplacian from chain-space
and cohomology dimensions alone; tests confirm them against exact kernel
ranks and against counted near-zero eigenvalues.

``weighted_inner_laplacian`` swaps the standard inner products for diagonal
ones given by positive simplex weights; the resulting matrices are similar
to Hermitian ones via conjugation by the square roots of the weights, which
is how ``weighted_inner_spectrum`` extracts their (real, non-negative)
spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .chains import adjoint_matrix, coboundary_matrix
from .complexes import Simplex, SimplicialComplex
from .eigen import Spectrum, spectrum_of_ndarray
from .matrices import ExactMatrix
from .weights import WeightFunction

ZERO_TOL_SCALE = 1e-9


class SpectralMismatchError(RuntimeError):
    """Float zero count disagrees with the exact kernel dimension."""


def cohomology_dim(complex: SimplicialComplex, phi: WeightFunction, n: int) -> int:
    """dim H^n = dim C^n - rank(coboundary n) - rank(coboundary n-1),
    computed exactly.  Degrees below 0 have dimension 0."""
    if n < 0:
        return 0
    out = coboundary_matrix(complex, phi, n)
    into = coboundary_matrix(complex, phi, n - 1)
    return len(complex.basis(n)) - out.rank() - into.rank()


def up_down_matrices(
    complex: SimplicialComplex, phi: WeightFunction, n: int
) -> tuple[ExactMatrix, ExactMatrix]:
    """(up, down) parts of the degree-n Laplacian: A_n^* A_n and
    A_{n-1} A_{n-1}^*."""
    a_n = coboundary_matrix(complex, phi, n)
    a_prev = coboundary_matrix(complex, phi, n - 1)
    return adjoint_matrix(a_n) @ a_n, a_prev @ adjoint_matrix(a_prev)


def laplacian_matrix(complex: SimplicialComplex, phi: WeightFunction, n: int) -> ExactMatrix:
    up, down = up_down_matrices(complex, phi, n)
    return up + down


class InnerProductWeights:
    """Positive rational weight per simplex, defining diagonal inner
    products on the cochain spaces."""

    def __init__(self, table: Mapping | None = None, default=None):
        self._table: dict[Simplex, Fraction] = {}
        if table:
            for key, value in table.items():
                self._table[Simplex(key)] = self._positive(key, value)
        self._default = None if default is None else self._positive("default", default)

    @staticmethod
    def _positive(key, value) -> Fraction:
        out = Fraction(value)
        if out <= 0:
            raise ValueError(f"inner product weight for {key} must be positive, got {value}")
        return out

    @classmethod
    def uniform(cls, value=1) -> "InnerProductWeights":
        return cls(default=value)

    def value(self, simplex) -> Fraction:
        s = Simplex(simplex)
        if s in self._table:
            return self._table[s]
        if self._default is not None:
            return self._default
        raise KeyError(f"no inner product weight for {s}")

    def diagonal(self, complex: SimplicialComplex, n: int) -> list[Fraction]:
        return [self.value(s) for s in complex.basis(n)]


def weighted_inner_laplacian(
    complex: SimplicialComplex,
    phi: WeightFunction,
    w: InnerProductWeights,
    n: int,
) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Degree-n Laplacian parts for the diagonal inner products given by w:

        up   = W_n^{-1} A_n^* W_{n+1} A_n
        down = A_{n-1} W_{n-1}^{-1} A_{n-1}^* W_n

    With every weight 1 this reduces to ``up_down_matrices``.  Returns
    (up, down, up + down); the matrices need not be Hermitian."""
    labels_n = complex.basis(n)
    a_n = coboundary_matrix(complex, phi, n)
    a_prev = coboundary_matrix(complex, phi, n - 1)
    w_n = w.diagonal(complex, n)
    w_up = w.diagonal(complex, n + 1)
    w_dn = w.diagonal(complex, n - 1)
    inv_n = ExactMatrix.diagonal([Fraction(1) / x for x in w_n], labels_n, labels_n)
    diag_n = ExactMatrix.diagonal(w_n, labels_n, labels_n)
    diag_up = ExactMatrix.diagonal(w_up)
    inv_dn = ExactMatrix.diagonal([Fraction(1) / x for x in w_dn])
    up = inv_n @ adjoint_matrix(a_n) @ diag_up @ a_n
    down = a_prev @ inv_dn @ adjoint_matrix(a_prev) @ diag_n
    return up, down, up + down


def spectrum(matrix: ExactMatrix) -> Spectrum:
    """Spectrum of an exactly Hermitian matrix (checked before any floats)."""
    if not matrix.is_hermitian():
        raise ValueError("matrix is not Hermitian; for weighted inner products "
                         "use weighted_inner_spectrum")
    return spectrum_of_ndarray(matrix.to_ndarray())


def weighted_inner_spectrum(matrix: ExactMatrix, w_diag) -> Spectrum:
    """Spectrum of a weighted-inner-product Laplacian part.

    w_diag holds the positive weights of the matrix's own degree.  The
    matrix is conjugated by diag(sqrt(w)), which lands on a Hermitian
    matrix with the same eigenvalues."""
    vals = [Fraction(x) for x in w_diag]
    if len(vals) != matrix.rows or matrix.rows != matrix.cols:
        raise ValueError("weight count must match a square matrix")
    if any(v <= 0 for v in vals):
        raise ValueError("inner product weights must be positive")
    roots = np.array([np.sqrt(float(v)) for v in vals])
    m = matrix.to_ndarray()
    sym = (roots[:, None] * m) / roots[None, :] if len(vals) else m
    sym = (sym + sym.conj().T) / 2.0
    return spectrum_of_ndarray(sym)


def zero_multiplicity_formulas(
    complex: SimplicialComplex, phi: WeightFunction, n: int
) -> tuple[int, int, int]:
    """Zero-eigenvalue multiplicities (down part, up part, full Laplacian)
    in degree n, from chain-space dimensions and cohomology dimensions."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    dim_c = [len(complex.basis(j)) for j in range(n + 1)]
    h = [cohomology_dim(complex, phi, j) for j in range(n + 1)]
    down = dim_c[n]
    for j in range(n):
        down -= (-1) ** (n + j - 1) * (dim_c[j] - h[j])
    up = dim_c[n]
    for j in range(n + 1):
        up -= (-1) ** (n + j) * (dim_c[j] - h[j])
    return down, up, h[n]


@dataclass
class HarmonicBasis:
    """Orthonormal basis of the degree-n harmonic cochains."""

    dimension: int
    labels: tuple
    vectors: np.ndarray

    @property
    def count(self) -> int:
        return self.vectors.shape[1]


def harmonic_basis(
    complex: SimplicialComplex,
    phi: WeightFunction,
    n: int,
    zero_tol: float | None = None,
) -> HarmonicBasis:
    """Near-kernel eigenvectors of the degree-n Laplacian.

    The count is cross-checked against the exact cohomology dimension; a
    mismatch means the tolerance split eigenvalues badly and raises."""
    lap = laplacian_matrix(complex, phi, n)
    spec = spectrum(lap)
    if zero_tol is None:
        zero_tol = ZERO_TOL_SCALE * (1.0 + lap.frobenius_norm())
    vectors = spec.vectors_below(zero_tol)
    expected = cohomology_dim(complex, phi, n)
    if vectors.shape[1] != expected:
        raise SpectralMismatchError(
            f"degree {n}: {vectors.shape[1]} eigenvalues below {zero_tol:.3e} "
            f"but exact kernel dimension is {expected}"
        )
    return HarmonicBasis(n, complex.basis(n), vectors)


# -- inner product weight text format ----------------------------------------


def parse_inner_weights_text(text: str) -> InnerProductWeights:
    """Lines 'simplex | value' with positive rational values."""
    table = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("|")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'simplex | value'")
        try:
            s = Simplex(int(tok) for tok in parts[0].split())
            value = Fraction(parts[1].strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        table[s] = value
    return InnerProductWeights(table, default=1)


def read_inner_weights_file(path) -> InnerProductWeights:
    with open(path, encoding="utf-8") as fh:
        return parse_inner_weights_text(fh.read())
