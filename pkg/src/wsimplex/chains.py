"""Weighted boundary and coboundary operators as exact matrices.

The weighted boundary of an n-simplex s is

    sum_i (-1)^i * phi(s, d_i s) * d_i s

and ``boundary_matrix`` writes it in the lexicographic simplex bases.  The
coboundary in degree n is the transpose of the boundary in degree n+1 (both
bases are self-dual here), and the adjoint against the standard inner
product is the conjugate transpose.  All three demand a validated weight
function: for an unvalidated table the composite of two boundaries need not
vanish and none of the homological formulas downstream apply.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import Simplex, SimplicialComplex
from .gaussian import GaussianRational
from .matrices import ExactMatrix
from .weights import WeightFunction


def _check_pair(complex: SimplicialComplex, phi: WeightFunction) -> None:
    if phi.complex != complex:
        raise ValueError("weight function belongs to a different complex")
    phi.require_validated()


def boundary_matrix(complex: SimplicialComplex, phi: WeightFunction, n: int) -> ExactMatrix:
    """Matrix of the weighted boundary C_n -> C_{n-1}; zero-sized outside
    the range 1..max_dim."""
    _check_pair(complex, phi)
    rows = complex.basis(n - 1)
    cols = complex.basis(n)
    index = {s: i for i, s in enumerate(rows)}
    out = ExactMatrix.zeros(len(rows), len(cols), row_labels=rows, col_labels=cols)
    if n >= 1:
        for j, s in enumerate(cols):
            for i in range(n + 1):
                sign = 1 if i % 2 == 0 else -1
                out.data[index[s.face(i)]][j] = phi.value(s, i) * sign
    return out


def coboundary_matrix(complex: SimplicialComplex, phi: WeightFunction, n: int) -> ExactMatrix:
    """Matrix of the weighted coboundary C^n -> C^{n+1}: the transpose of
    the degree-(n+1) boundary matrix."""
    return boundary_matrix(complex, phi, n + 1).transpose()


def adjoint_matrix(matrix: ExactMatrix) -> ExactMatrix:
    """Adjoint against the standard inner product: conjugate transpose."""
    return matrix.conj_transpose()


@dataclass
class Chain:
    """Formal combination of equal-dimension simplices."""

    dimension: int
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for s, c in self.coefficients.items():
            s = Simplex(s)
            if s.dim != self.dimension:
                raise ValueError(f"{s} has dimension {s.dim}, chain has {self.dimension}")
            c = GaussianRational.coerce(c)
            if c:
                clean[s] = c
        self.coefficients = clean

    def coefficient(self, simplex) -> GaussianRational:
        return self.coefficients.get(Simplex(simplex), GaussianRational(0))

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "Chain") -> "Chain":
        if self.dimension != other.dimension:
            raise ValueError("chain dimensions differ")
        coeffs = dict(self.coefficients)
        for s, c in other.coefficients.items():
            coeffs[s] = coeffs.get(s, GaussianRational(0)) + c
        return Chain(self.dimension, coeffs)

    def scale(self, scalar) -> "Chain":
        c = GaussianRational.coerce(scalar)
        return Chain(self.dimension, {s: c * v for s, v in self.coefficients.items()})

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dimension == other.dimension and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        if not self.coefficients:
            return f"Chain(dim {self.dimension}: 0)"
        parts = " + ".join(f"({c})*{s}" for s, c in sorted(self.coefficients.items()))
        return f"Chain(dim {self.dimension}: {parts})"


def apply_boundary(complex: SimplicialComplex, phi: WeightFunction, chain: Chain) -> Chain:
    """Weighted boundary of a chain; 0-chains map to the empty (-1)-chain."""
    _check_pair(complex, phi)
    n = chain.dimension
    for s in chain.coefficients:
        if s not in complex:
            raise ValueError(f"{s} is not in the complex")
    out: dict[Simplex, GaussianRational] = {}
    if n >= 1:
        for s, c in chain.coefficients.items():
            for i in range(n + 1):
                sign = 1 if i % 2 == 0 else -1
                t = s.face(i)
                out[t] = out.get(t, GaussianRational(0)) + phi.value(s, i) * c * sign
    return Chain(n - 1, out)
