"""Finite abstract simplicial complexes.

A simplex is a strictly ascending tuple of non-negative vertex indices; the
ascending order fixes the orientation used everywhere else.  A complex stores
every face of every simplex handed to it, and ``basis(n)`` returns the
n-simplices in lexicographic order, which is the basis ordering all matrices
in this package are written in.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Simplex(tuple):
    """Strictly ascending tuple of vertex indices."""

    __slots__ = ()

    def __new__(cls, vertices):
        if isinstance(vertices, Simplex):
            return vertices
        vs = tuple(vertices)
        if not vs:
            raise ValueError("a simplex needs at least one vertex")
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex {v!r} is not a non-negative integer")
        for a, b in zip(vs, vs[1:]):
            if a >= b:
                raise ValueError(f"vertices {vs} not strictly ascending")
        return super().__new__(cls, vs)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def face(self, i: int) -> "Simplex":
        """Codimension-one face obtained by deleting vertex number i."""
        if self.dim == 0:
            raise IndexError("a vertex has no faces")
        if not 0 <= i <= self.dim:
            raise IndexError(f"face index {i} out of range for {self}")
        return Simplex(self[:i] + self[i + 1 :])

    def faces(self) -> Iterator["Simplex"]:
        for i in range(len(self)):
            yield self.face(i)

    def __repr__(self) -> str:
        return "[" + ",".join(str(v) for v in self) + "]"


def face(simplex, i: int) -> Simplex:
    return Simplex(simplex).face(i)


class SimplicialComplex:
    """Finite complex, closed under taking faces."""

    def __init__(self, simplices: Iterable):
        members: set[Simplex] = set()
        todo = [Simplex(s) for s in simplices]
        while todo:
            s = todo.pop()
            if s in members:
                continue
            members.add(s)
            if s.dim >= 1:
                todo.extend(s.faces())
        by_dim: dict[int, list[Simplex]] = {}
        for s in members:
            by_dim.setdefault(s.dim, []).append(s)
        self._basis = {d: tuple(sorted(v)) for d, v in by_dim.items()}
        self._members = frozenset(members)

    @property
    def max_dim(self) -> int:
        return max(self._basis) if self._basis else -1

    def basis(self, n: int) -> tuple[Simplex, ...]:
        """The n-simplices in lexicographic order (empty if out of range)."""
        return self._basis.get(n, ())

    def dim_chain_space(self, n: int) -> int:
        return len(self.basis(n))

    @property
    def vertices(self) -> tuple[Simplex, ...]:
        return self.basis(0)

    def simplices(self) -> Iterator[Simplex]:
        for d in sorted(self._basis):
            yield from self._basis[d]

    def __contains__(self, s) -> bool:
        try:
            return Simplex(s) in self._members
        except ValueError:
            return False

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self) -> str:
        sizes = ", ".join(f"{len(self.basis(d))}" for d in range(self.max_dim + 1))
        return f"SimplicialComplex(dim {self.max_dim}; basis sizes [{sizes}])"


def build_complex(maximal_simplices: Iterable) -> SimplicialComplex:
    """Build the face closure of the given simplices."""
    return SimplicialComplex(maximal_simplices)


def parse_complex_text(text: str) -> SimplicialComplex:
    """One simplex per non-empty line: whitespace-separated ascending vertex
    indices.  '#' starts a comment.  Faces are added automatically."""
    simplices = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            vs = [int(tok) for tok in line.split()]
            simplices.append(Simplex(vs))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not simplices:
        raise ValueError("no simplices found")
    return build_complex(simplices)


def read_complex_file(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex_text(fh.read())
