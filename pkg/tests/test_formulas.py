import pytest
from hypothesis import given
from hypothesis import strategies as st

from gallai_ramsey.formulas import (
    BoundStatus,
    evaluate,
    exact_gate,
    gr_bounds,
    gr_exact,
    gr_proven_lower,
    gr_stated_lower,
    gr_upper,
    gr_upper_linear,
    ramsey_double_star,
)


@pytest.mark.parametrize("n,m,v", [(3, 1, 7), (4, 1, 10), (2, 2, 8), (1, 1, 5), (1, 0, 3), (0, 0, 2)])
def test_ramsey_examples(n, m, v):
    r = ramsey_double_star(n, m)
    assert r.status is BoundStatus.EXACT and r.value == v


def test_ramsey_gaps():
    # n=6, m=3: even, 36 > 18, 6 < 9, 6000 <= 6796
    r = ramsey_double_star(6, 3)
    assert r.status is BoundStatus.INTERVAL and r.lower == r.upper == 14
    # n=10, m=4: 10000 > 8495
    assert ramsey_double_star(10, 4).status is BoundStatus.NOT_COVERED


def test_sqrt2_boundary_exact():
    r = ramsey_double_star(10, 8)
    assert r.status is BoundStatus.EXACT  # 100 <= 128
    r = ramsey_double_star(12, 9)  # 144 <= 162
    assert r.status is BoundStatus.EXACT and r.value == 12 + 18 + 2


def test_rational_boundary_exact():
    # 1.699*(m+1) exactly: m=999 gives 1699, n=1699 qualifies, 1700 does not
    assert ramsey_double_star(1698, 999).status in (BoundStatus.INTERVAL, BoundStatus.EXACT)
    assert ramsey_double_star(1700, 999).status is BoundStatus.NOT_COVERED


@pytest.mark.parametrize("n,m,k,v", [(13, 1, 3, 32), (14, 1, 4, 37), (14, 1, 5, 38), (19, 2, 6, 53)])
def test_gr_exact_examples(n, m, k, v):
    r = gr_exact(n, m, k)
    assert r.status is BoundStatus.EXACT and r.value == v
    assert r.to_text().splitlines()[0].endswith(f"Exact {v}")


def test_gr_exact_gate():
    r = gr_exact(20, 3, 5)
    assert r.status is BoundStatus.INTERVAL and r.value is None
    assert (r.lower, r.upper) == (57, 72)
    assert gr_exact(11, 1, 3).status is BoundStatus.INTERVAL
    assert gr_exact(11, 1, 3, relaxed=True).status is BoundStatus.EXACT
    assert exact_gate(1) == 13 and exact_gate(1, True) == 11


def test_gr_bounds_examples():
    r = gr_bounds(2, 1, 3)
    assert (r.lower, r.upper) == (7, 18)
    assert r.extra["proven_lower"] == 6
    r = gr_bounds(1, 1, 3)
    assert (r.lower, r.upper) == (7, 17)
    assert r.extra["proven_lower"] == 6
    for k in range(3, 21):
        assert gr_upper_linear(1, 1, k) == gr_upper(1, 1, k) == k + 14


def test_gr_bounds_beyond_upper_range():
    r = gr_bounds(13, 1, 3)
    assert r.status is BoundStatus.LOWER_ONLY and r.upper is None


def test_argument_errors():
    with pytest.raises(ValueError):
        gr_exact(5, 1, 2)
    with pytest.raises(ValueError):
        gr_bounds(5, 0, 3)
    with pytest.raises(ValueError):
        gr_bounds(1, 2, 3)
    with pytest.raises(ValueError):
        ramsey_double_star(1, 2)
    with pytest.raises(ValueError):
        evaluate("nope", 1, 1)


def test_upper_forms_agree_exhaustively():
    for m in range(1, 40):
        for n in range(m, 6 * m + 7):
            for k in range(3, 21):
                assert gr_upper(n, m, k) == gr_upper_linear(n, m, k)


@given(st.integers(1, 30), st.integers(0, 200), st.integers(3, 20))
def test_exact_inside_bounds(m, extra, k):
    n = 6 * m + 7 + extra
    v = gr_exact(n, m, k).value
    assert gr_proven_lower(n, m, k) <= v
    assert gr_stated_lower(n, m, k) <= v
    assert v == gr_stated_lower(n, m, k) == gr_proven_lower(n, m, k)
    # the upper form is only established up to 6m+6; it still dominates just past the gate
    if extra == 0:
        assert v <= gr_upper(n, m, k)


@given(st.integers(0, 300), st.integers(0, 300))
def test_ramsey_floor(a, b):
    n, m = max(a, b), min(a, b)
    r = ramsey_double_star(n, m)
    assert r.lower >= n + 2 * m + 2
    if r.status is BoundStatus.EXACT:
        assert r.value >= n + 2 * m + 2


@given(st.integers(1, 50), st.integers(0, 300), st.integers(3, 20))
def test_bounds_ordering(m, extra, k):
    n = m + extra
    r = gr_bounds(n, m, k)
    assert r.extra["proven_lower"] <= r.lower
    if r.upper is not None:
        assert r.lower <= r.upper


def test_json_shape():
    data = gr_bounds(1, 1, 3).to_json()
    assert data["status"] == "interval"
    assert data["value"] is None
    assert data["extra"]["stated_lower"] == 7
