import random
import time
from itertools import combinations
from math import gcd, prod

import pytest

from wsimplex import (
    HomologyGroup,
    boundary_matrix,
    build_complex,
    gcd_minors_oracle,
    identity_weight,
    integer_det,
    make_ngon,
    ngon_homology_closed_form,
    smith_normal_form,
    weighted_homology,
    zero_weight,
)


def random_int_matrix(rng, max_side=5, lo=-9, hi=9):
    r = rng.randint(1, max_side)
    c = rng.randint(1, max_side)
    return [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]


def check_snf_contract(m, res):
    rows, cols = len(m), len(m[0]) if m else 0
    # diagonal shape and divisibility chain
    assert len(res.diagonal) == min(rows, cols)
    assert all(d >= 0 for d in res.diagonal)
    for a, b in zip(res.diagonal, res.diagonal[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    assert res.rank == sum(1 for d in res.diagonal if d)
    # transforms reproduce the diagonal and are unimodular
    assert abs(integer_det(res.U)) == 1
    assert abs(integer_det(res.V)) == 1
    prod_rows = [[sum(res.U[i][k] * m[k][j] for k in range(rows))
                  for j in range(cols)] for i in range(rows)]
    smith = [[sum(prod_rows[i][k] * res.V[k][j] for k in range(cols))
              for j in range(cols)] for i in range(rows)]
    for i in range(rows):
        for j in range(cols):
            expected = res.diagonal[i] if i == j else 0
            assert smith[i][j] == expected


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == [0, 0]
    assert smith_normal_form([[1]]).diagonal == [1]
    assert smith_normal_form([[4]]).diagonal == [4]
    assert smith_normal_form([[-4]]).diagonal == [4]
    # gcd of entries 2, gcd of 2x2 minors 4, |det| = 624 = 4 * 156
    res = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert res.diagonal == [2, 2, 156]


def test_snf_zero_sized():
    assert smith_normal_form([]).diagonal == []
    res = smith_normal_form([[], []])
    assert res.diagonal == []
    assert res.rank == 0


def test_snf_transforms_random():
    rng = random.Random(404)
    for _ in range(150):
        m = random_int_matrix(rng)
        res = smith_normal_form(m, transforms=True)
        check_snf_contract(m, res)


def test_gcd_minors_examples():
    m = [[2, 0], [0, 3]]
    assert gcd_minors_oracle(m, 1) == 1
    assert gcd_minors_oracle(m, 2) == 6
    assert gcd_minors_oracle([[0, 0], [0, 0]], 1) == 0
    with pytest.raises(ValueError):
        gcd_minors_oracle(m, 0)


def test_integer_det():
    assert integer_det([[1, 2], [3, 4]]) == -2
    assert integer_det([[2]]) == 2
    assert integer_det([]) == 1
    assert integer_det([[0, 1], [1, 0]]) == -1
    assert integer_det([[1, 2], [2, 4]]) == 0
    with pytest.raises(ValueError):
        integer_det([[1, 2, 3], [4, 5, 6]])


def test_snf_agrees_with_minor_gcds():
    # d1 * ... * dk == gcd of k x k minors, the independent characterisation
    rng = random.Random(77)
    for _ in range(120):
        m = random_int_matrix(rng, max_side=4, lo=-6, hi=6)
        res = smith_normal_form(m)
        partial = 1
        for k, d in enumerate(res.diagonal, start=1):
            partial = partial * d if partial else 0
            assert partial == gcd_minors_oracle(m, k)


# -- homology ------------------------------------------------------------------


def test_pentagon_homology():
    k, phi = make_ngon([1, 2, 2, 2, 2])
    assert weighted_homology(k, phi, 0) == HomologyGroup([2, 2, 2], 1)
    assert str(weighted_homology(k, phi, 0)) == "Z/2 + Z/2 + Z/2 + Z"
    assert smith_normal_form(boundary_matrix(k, phi, 1)).diagonal == [1, 2, 2, 2, 0]


def test_unit_pentagon_homology():
    k, phi = make_ngon([1, 1, 1, 1, 1])
    assert weighted_homology(k, phi, 0) == HomologyGroup([], 1)
    assert weighted_homology(k, phi, 1) == HomologyGroup([], 1)


def test_square_homology():
    k, phi = make_ngon([2, 2, 2, 2])
    assert weighted_homology(k, phi, 0) == HomologyGroup([2, 2, 2], 1)


def test_homology_of_classical_complexes():
    k = build_complex([(0, 1, 2)])
    one = identity_weight(k)
    assert weighted_homology(k, one, 0) == HomologyGroup([], 1)
    assert weighted_homology(k, one, 1) == HomologyGroup([], 0)
    assert weighted_homology(k, one, 2) == HomologyGroup([], 0)

    hollow = build_complex([(0, 1), (0, 2), (1, 2)])
    one = identity_weight(hollow)
    assert weighted_homology(hollow, one, 1) == HomologyGroup([], 1)

    assert weighted_homology(hollow, zero_weight(hollow), 0) == HomologyGroup([], 3)
    assert weighted_homology(hollow, zero_weight(hollow), 1) == HomologyGroup([], 3)


def test_homology_out_of_range():
    k = build_complex([(0, 1)])
    one = identity_weight(k)
    assert weighted_homology(k, one, -1) == HomologyGroup([], 0)
    assert weighted_homology(k, one, 5) == HomologyGroup([], 0)


def test_homology_rejects_fractional_weights():
    from wsimplex import WeightFunction

    k = build_complex([(0, 1)])
    from fractions import Fraction
    phi = WeightFunction(k, {((0, 1), 0): Fraction(1, 2), ((0, 1), 1): 1})
    phi.validate()
    with pytest.raises(ValueError, match="integer"):
        weighted_homology(k, phi, 0)


# -- polygon closed form ---------------------------------------------------------


def brute_force_ngon_group(alphas):
    """Independent route: k-th partial product of invariant factors equals
    the gcd of k-fold products of distinct alphas."""
    n = len(alphas)
    partials = []
    for k in range(1, n):
        g = 0
        for combo in combinations(alphas, k):
            g = gcd(g, abs(prod(combo)))
        partials.append(g)
    ds = []
    prev = 1
    for g in partials:
        ds.append(0 if prev == 0 else g // prev)
        prev = g
    ds.append(0)
    return HomologyGroup([d for d in ds if d > 1], sum(1 for d in ds if d == 0))


def test_ngon_closed_form_examples():
    assert ngon_homology_closed_form([1, 2, 2, 2, 2]) == HomologyGroup([2, 2, 2], 1)
    assert ngon_homology_closed_form([1, 1, 1]) == HomologyGroup([], 1)
    assert ngon_homology_closed_form([2, 2, 2, 2]) == HomologyGroup([2, 2, 2], 1)
    assert ngon_homology_closed_form([0, 0, 0]) == HomologyGroup([], 3)
    assert ngon_homology_closed_form([6, 10, 15]) == HomologyGroup([30], 1)
    with pytest.raises(ValueError):
        ngon_homology_closed_form([1, 2])


def test_ngon_closed_form_matches_pipeline():
    rng = random.Random(31337)
    elapsed = time.perf_counter()
    for trial in range(220):
        n = rng.randint(3, 8)
        alphas = [rng.randint(-3, 3) for _ in range(n)]
        closed = ngon_homology_closed_form(alphas)
        assert closed == brute_force_ngon_group(alphas), alphas
        k, phi = make_ngon(alphas)
        assert closed == weighted_homology(k, phi, 0), alphas
    assert time.perf_counter() - elapsed < 30.0


def test_make_ngon_weight_layout():
    k, phi = make_ngon([3, 5, 7])
    assert phi((0, 1), (0,)) == 3
    assert phi((0, 1), (1,)) == 5
    assert phi((1, 2), (1,)) == 5
    assert phi((1, 2), (2,)) == 7
    assert phi((0, 2), (0,)) == 3
    assert phi((0, 2), (2,)) == 7
    with pytest.raises(ValueError):
        make_ngon([1, 2])
