from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nrtperfect.core import (
    NrtMatrix,
    Params,
    RowPermutation,
    apply_row_permutation,
    canonical_row,
    distance,
    row_weight,
    translate,
    weight,
)
from nrtperfect.enumeration import iter_space

from oracles import brute_row_weight, mat


def test_params_derived_quantities():
    p = Params(2, 4, 2, 2)
    assert p.t == 1
    assert p.delta == 0
    assert p.delta == p.r * (p.R + 1 - p.s) + p.R


@pytest.mark.parametrize("bad", [(1, 2, 2, 1), (2, 0, 2, 1), (2, 2, 0, 1), (2, 2, 2, -1)])
def test_params_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Params(*bad)


@given(st.integers(1, 30), st.integers(1, 30), st.integers(0, 60))
def test_delta_identity(s, r, R):
    p = Params(2, s, r, R)
    assert p.delta == p.r * (p.R + 1 - p.s) + p.R
    assert p.t == s - R - 1


@pytest.mark.parametrize("row,expected", [((0, 0, 0), 0), ((1, 0, 0), 1), ((1, 0, 2), 3), ((0, 2, 0), 2)])
def test_row_weight(row, expected):
    assert row_weight(row) == expected


def test_weight_examples():
    assert weight(NrtMatrix.zeros(2, 3, 2)) == 0
    assert weight(mat(2, [[0, 1]] * 3)) == 6
    assert weight(mat(2, [[1, 0], [0, 1]])) == 3


def test_distance_examples():
    x = mat(2, [[1, 0], [0, 1]])
    assert distance(x, x) == 0
    assert distance(mat(2, [[1, 0]]), mat(2, [[0, 1]])) == 2
    assert distance(mat(3, [[1]]), mat(3, [[2]])) == 1


def test_distance_shape_mismatch():
    with pytest.raises(ValueError):
        distance(mat(2, [[1, 0]]), mat(2, [[1, 0, 0]]))
    with pytest.raises(ValueError):
        distance(mat(2, [[1, 0]]), mat(3, [[1, 0]]))


def test_translate_examples():
    x = mat(2, [[1, 0], [1, 1]])
    assert translate(x, NrtMatrix.zeros(2, 2, 2)) == x
    assert translate(x, x).is_zero()
    assert translate(mat(3, [[1, 2]]), mat(3, [[2, 2]])) == mat(3, [[0, 1]])


def test_entries_are_least_residues():
    assert mat(3, [[-1, 4]]).rows == ((2, 1),)
    with pytest.raises(ValueError):
        NrtMatrix(3, ((3, 0),))


def test_canonical_rows():
    assert canonical_row(0, 3) == (0, 0, 0)
    assert canonical_row(1, 2) == (1, 0)
    assert canonical_row(2, 2) == (0, 1)
    assert row_weight(canonical_row(2, 2)) == 2
    with pytest.raises(ValueError):
        canonical_row(3, 2)


def test_row_permutation_examples():
    x = mat(2, [[1, 0], [0, 1]])
    assert apply_row_permutation(x, RowPermutation.identity(2)) == x
    swapped = apply_row_permutation(x, RowPermutation((1, 0)))
    assert swapped == mat(2, [[0, 1], [1, 0]])
    assert weight(swapped) == weight(x)
    m = mat(2, [[1, 0], [1, 0], [1, 0], [0, 0]])
    assert apply_row_permutation(m, RowPermutation.cyclic_shift(4)) == mat(2, [[0, 0], [1, 0], [1, 0], [1, 0]])


def test_row_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        RowPermutation((0, 0, 1))


@pytest.mark.parametrize("q,r", [(q, r) for q in (2, 3) for r in range(1, 5)])
def test_ultrametric_rows_exhaustive(q, r):
    rows = list(product(range(q), repeat=r))
    for x in rows:
        wx = brute_row_weight(x)
        assert row_weight(x) == wx
        for y in rows:
            wy = brute_row_weight(y)
            wxy = row_weight(tuple((a + b) % q for a, b in zip(x, y)))
            assert wxy <= max(wx, wy)
            if wx != wy:
                assert wxy == max(wx, wy)


@pytest.mark.parametrize("q,s,r", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3), (2, 4, 3)])
def test_metric_axioms_exhaustive(q, s, r):
    # q^{sr} <= 4096; triangle inequality on all triples would be too slow for the
    # largest space, so triples use a fixed stride sample there.
    pts = list(iter_space(Params(q, s, r, 0)))
    for x in pts[:: max(1, len(pts) // 64)]:
        for y in pts:
            d = distance(x, y)
            assert (d == 0) == (x == y)
            assert d == distance(y, x)
    sample = pts[:: max(1, len(pts) // 24)]
    for x in sample:
        for y in sample:
            for z in sample:
                assert distance(x, z) <= distance(x, y) + distance(y, z)


matrices_2x3 = st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=2, max_size=2)


@settings(max_examples=200)
@given(matrices_2x3, matrices_2x3, matrices_2x3)
def test_translation_invariance(a, b, c):
    x, y, z = mat(3, a), mat(3, b), mat(3, c)
    assert distance(x + z, y + z) == distance(x, y)


@settings(max_examples=200)
@given(st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3), min_size=4, max_size=4),
       st.permutations(range(4)))
def test_row_permutation_isometry(rows, perm):
    x = mat(4, rows)
    theta = RowPermutation(tuple(perm))
    y = apply_row_permutation(x, theta)
    assert weight(y) == weight(x)
    assert apply_row_permutation(y, theta.inverse()) == x
    for i in range(4):
        assert y.rows[theta.mapping[i]] == x.rows[i]


def test_split_hstack_roundtrip():
    x = mat(2, [[1, 0, 1], [0, 1, 1]])
    head, tail = x.split(2)
    assert head.hstack(tail) == x
    assert head.r == 2 and tail.r == 1
