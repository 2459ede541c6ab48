"""Edge colourings of complete graphs and their text file format."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

DTYPE = np.int16
UNCOLORED = -1
MAGIC = "gallai-coloring v1"


class ColoringFormatError(ValueError):
    """Raised when a coloring file does not follow the v1 format."""


@dataclass(frozen=True)
class DoubleStarSpec:
    """The double star S(n, m): adjacent centres with n and m pendant leaves."""

    n: int
    m: int

    def __post_init__(self):
        if self.m < 0 or self.n < self.m:
            raise ValueError(f"need n >= m >= 0, got S({self.n},{self.m})")

    @property
    def vertices(self) -> int:
        return self.n + self.m + 2


def edge_order(order: int) -> Iterator[tuple[int, int]]:
    """Edges of K_order vertex by vertex: (1,0), (2,0), (2,1), (3,0), ..."""
    for u in range(1, order):
        for v in range(u):
            yield u, v


def edge_arrays(order: int) -> tuple[np.ndarray, np.ndarray]:
    edges = list(edge_order(order))
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    return eu, ev


class EdgeColoring:
    """A k-edge-colouring of K_N.

    Stored as a symmetric ``N x N`` matrix of colour indices (diagonal -1)
    plus an ``N x k`` table of per-colour degrees, kept in step by
    :meth:`set_color`.  Mutation is single-owner; use :meth:`copy` to share.
    """

    __slots__ = ("_mat", "_deg", "num_colors")

    def __init__(self, matrix, num_colors: int):
        mat = np.array(matrix, dtype=DTYPE)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
            raise ValueError("coloring matrix must be square with order >= 1")
        if not 1 <= num_colors <= np.iinfo(DTYPE).max:
            raise ValueError("num_colors must be in [1, 32767]")
        order = mat.shape[0]
        np.fill_diagonal(mat, UNCOLORED)
        if not np.array_equal(mat, mat.T):
            raise ValueError("coloring matrix is not symmetric")
        off = mat[~np.eye(order, dtype=bool)]
        if off.size and (off.min() < 0 or off.max() >= num_colors):
            raise ValueError(f"colors must lie in [0, {num_colors})")
        self._mat = mat
        self.num_colors = int(num_colors)
        self._deg = _degree_table(mat, self.num_colors)

    @classmethod
    def complete(cls, order: int, num_colors: int, default_color: int = 0) -> EdgeColoring:
        if order < 1:
            raise ValueError("order must be >= 1")
        if not 0 <= default_color < num_colors:
            raise ValueError(f"default color {default_color} not in [0, {num_colors})")
        return cls(np.full((order, order), default_color, dtype=DTYPE), num_colors)

    @property
    def order(self) -> int:
        return self._mat.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        """Read-only view of the colour matrix."""
        view = self._mat.view()
        view.flags.writeable = False
        return view

    def _check_vertex(self, v: int):
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} out of range for K{self.order}")

    def _check_color(self, c: int):
        if not 0 <= c < self.num_colors:
            raise ValueError(f"color {c} not in [0, {self.num_colors})")

    def color(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("no self-loops")
        return int(self._mat[u, v])

    def set_color(self, u: int, v: int, c: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("no self-loops")
        self._check_color(c)
        old = self._mat[u, v]
        if old == c:
            return
        self._deg[u, old] -= 1
        self._deg[v, old] -= 1
        self._deg[u, c] += 1
        self._deg[v, c] += 1
        self._mat[u, v] = self._mat[v, u] = c

    def degree(self, v: int, c: int) -> int:
        """|N_c(v)|."""
        self._check_vertex(v)
        self._check_color(c)
        return int(self._deg[v, c])

    def degrees(self) -> np.ndarray:
        out = self._deg.copy()
        out.flags.writeable = False
        return out

    def neighbors(self, v: int, c: int) -> np.ndarray:
        """Sorted vertices joined to v in colour c."""
        self._check_vertex(v)
        self._check_color(c)
        return np.flatnonzero(self._mat[v] == c)

    def colors_used(self) -> set[int]:
        return {int(c) for c in np.flatnonzero(self._deg.sum(axis=0))}

    def copy(self) -> EdgeColoring:
        new = object.__new__(EdgeColoring)
        new._mat = self._mat.copy()
        new._deg = self._deg.copy()
        new.num_colors = self.num_colors
        return new

    def induced(self, vertices) -> EdgeColoring:
        idx = np.asarray(list(vertices), dtype=np.int64)
        return EdgeColoring(self._mat[np.ix_(idx, idx)], self.num_colors)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.num_colors == other.num_colors and np.array_equal(self._mat, other._mat)

    def __hash__(self):
        return hash((self.num_colors, self._mat.tobytes()))

    def __repr__(self):
        return f"EdgeColoring(order={self.order}, num_colors={self.num_colors})"

    # file format ------------------------------------------------------

    def dumps(self) -> str:
        lines = [MAGIC, f"{self.order} {self.num_colors}"]
        for v in range(1, self.order):
            lines.append(" ".join(str(int(c)) for c in self._mat[v, :v]))
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> EdgeColoring:
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines or lines[0] != MAGIC:
            raise ColoringFormatError("bad magic line")
        if len(lines) < 2:
            raise ColoringFormatError("missing header line")
        header = _ints(lines[1], 2, "header")
        order, ncolors = header
        if order < 1 or ncolors < 1:
            raise ColoringFormatError("order and color count must be >= 1")
        if len(lines) != order + 1:
            raise ColoringFormatError(f"expected {order + 1} lines, found {len(lines)}")
        mat = np.full((order, order), UNCOLORED, dtype=DTYPE)
        for v in range(1, order):
            row = _ints(lines[v + 1], v, f"row {v}")
            for u, c in enumerate(row):
                if c >= ncolors:
                    raise ColoringFormatError(f"row {v}: color {c} >= {ncolors}")
                mat[v, u] = mat[u, v] = c
        return cls(mat, ncolors)

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.dumps())

    @classmethod
    def load(cls, path) -> EdgeColoring:
        with open(path, encoding="ascii", newline="") as fh:
            return cls.loads(fh.read())


def _ints(line: str, count: int, what: str) -> list[int]:
    tokens = line.split(" ")
    if len(tokens) != count:
        raise ColoringFormatError(f"{what}: expected {count} tokens, found {len(tokens)}")
    if not all(t.isascii() and t.isdigit() for t in tokens):
        raise ColoringFormatError(f"{what}: non-decimal token")
    return [int(t) for t in tokens]


def _degree_table(mat: np.ndarray, ncolors: int) -> np.ndarray:
    deg = np.zeros((mat.shape[0], ncolors), dtype=np.int64)
    for c in range(ncolors):
        deg[:, c] = (mat == c).sum(axis=1)
    return deg
