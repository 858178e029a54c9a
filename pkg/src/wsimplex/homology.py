"""Integer homology of weighted complexes via Smith normal form.

``smith_normal_form`` diagonalises an integer matrix by unimodular row and
column operations, always pivoting on a smallest-magnitude nonzero entry
(ties broken by lowest row, then column) and repairing the divisibility
chain d1 | d2 | ... by folding any offending row into the pivot row.  The
returned transforms satisfy U @ M @ V == diag(d) with |det U| = |det V| = 1.

``gcd_minors_oracle`` is the independent route to the same invariants: the
product d1*...*dk equals the gcd of all k x k minor determinants, so the two
implementations check each other without sharing any code.

Homology of a validated integer-weighted complex in degree n comes from the
normal forms of the two adjacent boundary matrices: the free rank is
dim C_n - rank(d_n) - rank(d_{n+1}) and the torsion coefficients are the
diagonal entries of SNF(d_{n+1}) that exceed 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, prod

from .chains import boundary_matrix
from .complexes import SimplicialComplex
from .matrices import ExactMatrix
from .weights import WeightFunction


def _int_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, ExactMatrix):
        return matrix.to_int_rows()
    rows = [[int(x) for x in row] for row in matrix]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rows")
    return rows


def integer_det(matrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free)."""
    a = _int_rows(matrix)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass
class SNFResult:
    diagonal: list[int]
    rank: int
    U: list[list[int]] | None = None
    V: list[list[int]] | None = None


def smith_normal_form(matrix, transforms: bool = False) -> SNFResult:
    """Smith normal form of an integer matrix.

    With ``transforms`` the unimodular U (rows x rows) and V (cols x cols)
    with U @ M @ V diagonal are returned as plain nested lists.
    """
    m = _int_rows(matrix)
    nr = len(m)
    nc = len(m[0]) if m else 0
    U = [[int(i == j) for j in range(nr)] for i in range(nr)] if transforms else None
    V = [[int(i == j) for j in range(nc)] for i in range(nc)] if transforms else None

    def swap_rows(a, b):
        m[a], m[b] = m[b], m[a]
        if U is not None:
            U[a], U[b] = U[b], U[a]

    def negate_row(a):
        m[a] = [-x for x in m[a]]
        if U is not None:
            U[a] = [-x for x in U[a]]

    def row_combine(dst, src, q):
        # row dst -= q * row src
        m[dst] = [x - q * y for x, y in zip(m[dst], m[src])]
        if U is not None:
            U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def swap_cols(a, b):
        for row in m:
            row[a], row[b] = row[b], row[a]
        if V is not None:
            for row in V:
                row[a], row[b] = row[b], row[a]

    def col_combine(dst, src, q):
        # col dst -= q * col src
        for row in m:
            row[dst] -= q * row[src]
        if V is not None:
            for row in V:
                row[dst] -= q * row[src]

    t = 0
    bound = min(nr, nc)
    while t < bound:
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = abs(m[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
                    if v == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        if m[t][t] < 0:
            negate_row(t)
        pivot = m[t][t]
        clean = True
        for i in range(t + 1, nr):
            if m[i][t]:
                row_combine(i, t, m[i][t] // pivot)
                if m[i][t]:
                    clean = False
        for j in range(t + 1, nc):
            if m[t][j]:
                col_combine(j, t, m[t][j] // pivot)
                if m[t][j]:
                    clean = False
        if not clean:
            continue
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            # fold the offending row in; the next division pass shrinks the pivot
            row_combine(t, offender, -1)
            continue
        t += 1

    diagonal = [m[i][i] for i in range(bound)]
    rank = sum(1 for d in diagonal if d)
    return SNFResult(diagonal, rank, U, V)


def gcd_minors_oracle(matrix, k: int) -> int:
    """gcd of all k x k minor determinants (0 when k is out of range or all
    minors vanish).  Independent check: it equals d1*...*dk from the SNF."""
    rows = _int_rows(matrix)
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    if k <= 0:
        raise ValueError("minor order must be positive")
    if k > min(nr, nc):
        return 0
    g = 0
    for ridx in combinations(range(nr), k):
        for cidx in combinations(range(nc), k):
            sub = [[rows[i][j] for j in cidx] for i in ridx]
            g = gcd(g, integer_det(sub))
            if g == 1:
                return 1
    return g


@dataclass
class HomologyGroup:
    """Finitely generated abelian group: torsion summands plus a free part."""

    torsion: list[int]
    free_rank: int

    def __post_init__(self):
        self.torsion = [int(d) for d in self.torsion]
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def weighted_homology(complex: SimplicialComplex, phi: WeightFunction, n: int) -> HomologyGroup:
    """Homology with integer coefficients in degree n.

    Needs integer weight entries; rational or complex weights have no
    torsion story and are rejected.
    """
    if not phi.is_integral():
        raise ValueError("integer homology needs integer weight values")
    if n < 0:
        return HomologyGroup([], 0)
    lower = smith_normal_form(boundary_matrix(complex, phi, n))
    upper = smith_normal_form(boundary_matrix(complex, phi, n + 1))
    free = len(complex.basis(n)) - lower.rank - upper.rank
    torsion = [d for d in upper.diagonal if d > 1]
    return HomologyGroup(torsion, free)


def ngon_homology_closed_form(alphas) -> HomologyGroup:
    """Degree-0 homology of the weighted n-cycle, directly from the vertex
    weights: the k-th invariant factor is the quotient of consecutive gcds
    of k-fold products of distinct entries, and the last one is always 0."""
    a = [int(x) for x in alphas]
    if len(a) < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if any(int(x) != x for x in alphas):
        raise ValueError("closed form needs integer weights")
    n = len(a)
    ds = []
    prev = 1
    for k in range(1, n):
        g = 0
        for combo in combinations(a, k):
            g = gcd(g, prod(combo))
            if g == 1:
                break
        ds.append(0 if prev == 0 else g // prev)
        prev = g
    ds.append(0)
    torsion = [d for d in ds if d > 1]
    free = sum(1 for d in ds if d == 0)
    return HomologyGroup(torsion, free)
