"""Weighted polygon complexes.

The n-gon is the cycle graph on vertices 0..n-1.  One scalar per vertex
drives all the weights: both edges meeting vertex v weight their face [v]
by alpha_v.  Degree-0 integer homology of this family has a closed form
(``ngon_homology_closed_form``) built from gcds of products of the alphas.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, Simplex, build_complex
from .gaussian import GaussianRational
from .weights import WeightFunction


def make_ngon(alphas) -> tuple[SimplicialComplex, WeightFunction]:
    """Cycle on len(alphas) vertices with phi(edge, [v]) = alphas[v]."""
    vals = [GaussianRational.coerce(a) for a in alphas]
    n = len(vals)
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    complex = build_complex(edges)
    table = {}
    for u, v in edges:
        e = Simplex((u, v))
        table[(e, 0)] = vals[v]  # face [v]
        table[(e, 1)] = vals[u]  # face [u]
    phi = WeightFunction(complex, table)
    bad = phi.validate()
    assert not bad  # no simplex of dimension 2, nothing to violate
    return complex, phi
