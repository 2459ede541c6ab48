import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gallai_ramsey import build_k3_lower, generate_random_gallai
from gallai_ramsey.coloring import DoubleStarSpec, EdgeColoring
from gallai_ramsey.detectors import (
    DoubleStarWitness,
    find_mono_double_star,
    find_rainbow_triangle,
    max_mono_degree,
)
from test_coloring import colorings


def test_k3_rainbow_witness():
    c = EdgeColoring([[0, 0, 1], [0, 0, 2], [1, 2, 0]], 3)
    wit = find_rainbow_triangle(c)
    assert wit.vertices == (0, 1, 2)
    assert sorted(wit.colors) == [0, 1, 2]


@settings(max_examples=50, deadline=None)
@given(colorings(max_colors=2))
def test_two_colorings_have_no_rainbow(c):
    assert find_rainbow_triangle(c) is None


@pytest.mark.parametrize("n", range(1, 16))
def test_k3_lower_is_gallai(n):
    assert find_rainbow_triangle(build_k3_lower(n)) is None


def test_single_edge_is_s00():
    c = EdgeColoring.complete(2, 1, 0)
    wit = find_mono_double_star(c, DoubleStarSpec(0, 0))
    assert wit.centers == (0, 1) and wit.leaves_u == () and wit.leaves_v == ()


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (3, 2), (4, 0)])
def test_embedded_complete_bipartite(n, m):
    # red K_{m+1, n+1} inside a randomly 3-coloured K_{n+m+5}
    order = n + m + 5
    rng = np.random.default_rng(n * 10 + m)
    mat = rng.integers(1, 3, size=(order, order)).astype(np.int16)
    mat = np.triu(mat, 1)
    mat = mat + mat.T
    small = list(range(1, m + 2))
    big = list(range(m + 2, m + n + 3))
    for a in small:
        for b in big:
            mat[a, b] = mat[b, a] = 0
    c = EdgeColoring(mat, 3)
    spec = DoubleStarSpec(n, m)
    wit = find_mono_double_star(c, spec)
    assert wit is not None and wit.check(c, spec)
    planted = DoubleStarWitness(0, (small[0], big[0]), tuple(big[1:]), tuple(small[1:]))
    assert planted.check(c, spec)


def test_orientation_rule():
    # all-red K4, S(1,0): both orientations of (0,1) embed, lower vertex carries n
    c = EdgeColoring.complete(4, 1, 0)
    wit = find_mono_double_star(c, DoubleStarSpec(1, 0))
    assert wit.centers == (0, 1)
    assert wit.leaves_u == (2,)


def test_orientation_prefers_n_side_first():
    # star K_{1,3} at vertex 1 plus edge (0,1): S(2,0) only with 1 as n-side
    mat = np.ones((4, 4), dtype=np.int16)
    for x in (0, 2, 3):
        mat[1, x] = mat[x, 1] = 0
    c = EdgeColoring(mat, 2)
    wit = find_mono_double_star(c, DoubleStarSpec(2, 0))
    assert wit.centers == (1, 0)
    assert wit.leaves_u == (2, 3)


def test_tight_union_leaf_split():
    # edge (0,1) red, both centres see {2,3,4} in red: S(2,1) must split the shared set
    mat = np.ones((5, 5), dtype=np.int16)
    for a in (0, 1):
        for b in (1, 2, 3, 4):
            if a != b:
                mat[a, b] = mat[b, a] = 0
    c = EdgeColoring(mat, 2)
    wit = find_mono_double_star(c, DoubleStarSpec(2, 1))
    assert wit.centers == (0, 1)
    assert wit.leaves_u == (2, 3) and wit.leaves_v == (4,)


@pytest.mark.parametrize("order,n,m", [(4, 1, 1), (5, 1, 1), (5, 2, 1), (6, 2, 2), (6, 3, 1), (6, 4, 0)])
def test_matches_oracle_all_two_colorings(order, n, m):
    rows = oracles.all_colorings(order, 2)
    expect = oracles.has_double_star(rows, order, n, m)
    spec = DoubleStarSpec(n, m)
    for row, exp in zip(rows, expect):
        c = EdgeColoring(oracles.row_to_matrix(row, order), 2)
        wit = find_mono_double_star(c, spec)
        assert (wit is not None) == exp
        if wit is not None:
            assert wit.check(c, spec)


def test_rainbow_matches_oracle():
    rows = oracles.all_colorings(4, 3)
    expect = oracles.has_rainbow(rows, 4)
    for row, exp in zip(rows, expect):
        c = EdgeColoring(oracles.row_to_matrix(row, 4), 3)
        assert (find_rainbow_triangle(c) is not None) == exp


@settings(max_examples=80, deadline=None)
@given(colorings(max_order=8, max_colors=3), st.integers(0, 4), st.integers(0, 4))
def test_backends_agree(c, a, b):
    n, m = max(a, b), min(a, b)
    spec = DoubleStarSpec(n, m)
    assert find_mono_double_star(c, spec, "numba") == find_mono_double_star(c, spec, "numpy")
    assert find_rainbow_triangle(c, "numba") == find_rainbow_triangle(c, "numpy")


@settings(max_examples=80, deadline=None)
@given(colorings(max_order=8, max_colors=3), st.integers(0, 4), st.integers(0, 4))
def test_monotone_in_spec(c, a, b):
    n, m = max(a, b), min(a, b)
    if find_mono_double_star(c, DoubleStarSpec(n, m)) is None:
        return
    for n2 in range(n + 1):
        for m2 in range(min(m, n2) + 1):
            wit = find_mono_double_star(c, DoubleStarSpec(n2, m2))
            assert wit is not None and wit.check(c, DoubleStarSpec(n2, m2))


def test_max_mono_degree():
    assert max_mono_degree(EdgeColoring.complete(5, 2, 1)) == (0, 1, 4)
    with pytest.raises(ValueError):
        max_mono_degree(EdgeColoring.complete(1, 2))


def test_two_five_cycles_tight():
    mat = np.zeros((5, 5), dtype=np.int16)
    for i in range(5):
        for j in range(5):
            if (j - i) % 5 in (2, 3):
                mat[i, j] = 1
    c = EdgeColoring(mat, 2)
    assert (c.degrees() == 2).all()
    assert max_mono_degree(c)[2] == 2 == math.ceil(2 * 5 / 5)


@pytest.mark.parametrize("seed", range(40))
def test_star_degree_on_gallai(seed):
    order = 2 + seed % 30
    c, _ = generate_random_gallai(order, 2 + seed % 4, seed)
    assert find_rainbow_triangle(c) is None
    assert max_mono_degree(c)[2] >= math.ceil(2 * order / 5)


def test_exhaustive_k5_three_colors_small_spec():
    # all 3-colourings of K4 for S(1,1); the K5 sweep runs in the acceptance suite
    rows = oracles.all_colorings(4, 3)
    expect = oracles.has_double_star(rows, 4, 1, 1)
    got = [find_mono_double_star(EdgeColoring(oracles.row_to_matrix(r, 4), 3),
                                 DoubleStarSpec(1, 1)) is not None for r in rows]
    assert list(expect) == got
