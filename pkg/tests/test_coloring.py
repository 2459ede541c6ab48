import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gallai_ramsey import build_k3_lower
from gallai_ramsey.coloring import (
    MAGIC,
    ColoringFormatError,
    DoubleStarSpec,
    EdgeColoring,
    edge_order,
)


@st.composite
def colorings(draw, max_order=9, max_colors=4):
    order = draw(st.integers(1, max_order))
    k = draw(st.integers(1, max_colors))
    mat = np.zeros((order, order), dtype=np.int16)
    for u in range(1, order):
        for v in range(u):
            mat[u, v] = mat[v, u] = draw(st.integers(0, k - 1))
    return EdgeColoring(mat, k)


def test_complete_k1():
    c = EdgeColoring.complete(1, 3, 0)
    assert c.order == 1
    assert all(c.neighbors(0, col).size == 0 for col in range(3))
    assert c.colors_used() == set()


def test_complete_triangle():
    c = EdgeColoring.complete(3, 2, 1)
    assert all(c.degree(v, 1) == 2 for v in range(3))
    assert c.color(2, 0) == 1


def test_complete_k5():
    c = EdgeColoring.complete(5, 3, 2)
    for v in range(5):
        assert (c.degree(v, 0), c.degree(v, 1), c.degree(v, 2)) == (0, 0, 4)


def test_complete_rejects_default_color():
    with pytest.raises(ValueError):
        EdgeColoring.complete(4, 2, 2)
    with pytest.raises(ValueError):
        EdgeColoring.complete(0, 2, 0)


def test_set_color_symmetric_and_conserving():
    c = EdgeColoring.complete(3, 2, 0)
    c.set_color(0, 1, 1)
    assert c.color(1, 0) == 1
    assert c.degree(0, 1) == 1 and c.degree(0, 0) == 1
    before = c.copy()
    c.set_color(0, 1, 1)
    assert c == before


@pytest.mark.parametrize("u,v,col", [(0, 0, 1), (0, 3, 1), (-1, 0, 0), (0, 1, 2)])
def test_set_color_errors(u, v, col):
    c = EdgeColoring.complete(3, 2, 0)
    with pytest.raises((ValueError, IndexError)):
        c.set_color(u, v, col)


def test_k3_lower_degrees_n4():
    c = build_k3_lower(4, 1)
    assert c.order == 10
    for v in range(10):
        assert c.degree(v, 0) == 1
        assert c.degree(v, 1) == 4
        assert c.degree(v, 2) == 4


def test_constructor_validates():
    with pytest.raises(ValueError):
        EdgeColoring([[0, 1], [0, 0]], 2)
    with pytest.raises(ValueError):
        EdgeColoring([[0, 2], [2, 0]], 2)


def test_edge_order_prefix():
    assert list(edge_order(4)) == [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]
    assert list(edge_order(1)) == []


def test_spec_invariants():
    assert DoubleStarSpec(3, 1).vertices == 6
    with pytest.raises(ValueError):
        DoubleStarSpec(1, 2)
    with pytest.raises(ValueError):
        DoubleStarSpec(1, -1)


@settings(max_examples=60, deadline=None)
@given(colorings())
def test_invariants(c):
    mat = c.matrix
    assert np.array_equal(mat, mat.T)
    assert (np.diag(mat) == -1).all()
    assert (c.degrees().sum(axis=1) == c.order - 1).all()
    for v in range(c.order):
        for col in range(c.num_colors):
            nb = c.neighbors(v, col)
            assert len(nb) == c.degree(v, col)
            assert all(c.color(v, int(w)) == col for w in nb)


@settings(max_examples=60, deadline=None)
@given(colorings(), st.data())
def test_set_color_keeps_degree_table(c, data):
    if c.order < 2:
        return
    u = data.draw(st.integers(0, c.order - 1))
    v = data.draw(st.integers(0, c.order - 1).filter(lambda x: x != u))
    col = data.draw(st.integers(0, c.num_colors - 1))
    c.set_color(u, v, col)
    fresh = EdgeColoring(c.matrix, c.num_colors)
    assert np.array_equal(fresh.degrees(), c.degrees())


# file format -----------------------------------------------------------------


def test_dumps_layout():
    c = EdgeColoring([[0, 1, 0], [1, 0, 2], [0, 2, 0]], 3)
    assert c.dumps() == f"{MAGIC}\n3 3\n1\n0 2\n"
    assert EdgeColoring.complete(1, 2).dumps() == f"{MAGIC}\n1 2\n"


@settings(max_examples=80, deadline=None)
@given(colorings())
def test_round_trip_byte_identical(c):
    text = c.dumps()
    again = EdgeColoring.loads(text)
    assert again == c
    assert again.dumps() == text


@pytest.mark.parametrize("text", [
    "gallai-coloring v2\n2 2\n0\n",
    "\n2 2\n0\n",
    "gallai-coloring v1\n2 2\n2\n",
    "gallai-coloring v1\n3 2\n0\n0\n",
    "gallai-coloring v1\n3 2\n0\n0 1 1\n",
    "gallai-coloring v1\n2 2\n0\n0\n",
    "gallai-coloring v1\n2 2\n0\n\n",
    "gallai-coloring v1\n2 2\n0 \n",
    "gallai-coloring v1\n3 2\n0\n0  1\n",
    "gallai-coloring v1\r\n2 2\r\n0\r\n",
    "gallai-coloring v1\n2 2 1\n0\n",
    "gallai-coloring v1\n2 x\n0\n",
    "gallai-coloring v1\n0 2\n",
    "gallai-coloring v1\n2 2\n-1\n",
    "",
])
def test_parser_rejects(text):
    with pytest.raises(ColoringFormatError):
        EdgeColoring.loads(text)


def test_save_load(tmp_path):
    c = build_k3_lower(5)
    path = tmp_path / "c.txt"
    c.save(path)
    assert path.read_bytes() == c.dumps().encode()
    assert EdgeColoring.load(path) == c
