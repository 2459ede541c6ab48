"""Rainbow triangles, monochromatic double stars, and maximum colour degree.

A c-coloured edge uv is the centre edge of a c-coloured S(n, m) (u carrying
the n leaves) exactly when, with A = N_c(u) - {v} and B = N_c(v) - {u},

    |A| >= n,  |B| >= m  and  |A | B| >= n + m.

Necessity is clear; for sufficiency give u the vertices of A - B first, v
those of B - A, and split A & B between them.  The scan kernels use this
test; ``tests/oracles.py`` checks it against placement enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .coloring import DoubleStarSpec, EdgeColoring


@dataclass(frozen=True)
class RainbowTriangleWitness:
    vertices: tuple[int, int, int]
    colors: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"kind": "rainbow-triangle", "vertices": list(self.vertices),
                "colors": list(self.colors)}


@dataclass(frozen=True)
class DoubleStarWitness:
    color: int
    centers: tuple[int, int]
    leaves_u: tuple[int, ...]
    leaves_v: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": "double-star", "color": self.color, "centers": list(self.centers),
                "leavesU": list(self.leaves_u), "leavesV": list(self.leaves_v)}

    def edges(self) -> list[tuple[int, int]]:
        u, v = self.centers
        return [(u, v)] + [(u, x) for x in self.leaves_u] + [(v, y) for y in self.leaves_v]

    def check(self, coloring: EdgeColoring, spec: DoubleStarSpec | None = None) -> bool:
        """Re-validate the witness against ``coloring``."""
        verts = [*self.centers, *self.leaves_u, *self.leaves_v]
        if len(set(verts)) != len(verts):
            return False
        if spec is not None and (len(self.leaves_u), len(self.leaves_v)) != (spec.n, spec.m):
            return False
        return all(coloring.color(a, b) == self.color for a, b in self.edges())


def find_rainbow_triangle(coloring: EdgeColoring, backend=None) -> RainbowTriangleWitness | None:
    k = kernels.get_backend(backend)
    a, b, c = k.rainbow_triangle(coloring.matrix)
    if a < 0:
        return None
    a, b, c = int(a), int(b), int(c)
    mat = coloring.matrix
    return RainbowTriangleWitness((a, b, c), (int(mat[a, b]), int(mat[a, c]), int(mat[b, c])))


def is_gallai(coloring: EdgeColoring) -> bool:
    return find_rainbow_triangle(coloring) is None


def find_mono_double_star(coloring: EdgeColoring, spec: DoubleStarSpec,
                          backend=None) -> DoubleStarWitness | None:
    """Return an explicit monochromatic S(n, m) in ``coloring`` or None.

    Centre pairs are scanned in lexicographic order; when both orientations of
    a pair embed, the lower vertex carries the n leaves.
    """
    k = kernels.get_backend(backend)
    u, v = k.double_star(coloring.matrix, coloring.num_colors, spec.n, spec.m)
    if u < 0:
        return None
    return _leaves(coloring, int(u), int(v), spec)


def _leaves(coloring: EdgeColoring, u: int, v: int, spec: DoubleStarSpec) -> DoubleStarWitness:
    c = coloring.color(u, v)
    a = set(coloring.neighbors(u, c).tolist()) - {v}
    b = set(coloring.neighbors(v, c).tolist()) - {u}
    shared = sorted(a & b)
    only_a = sorted(a - b)
    only_b = sorted(b - a)
    leaves_u = only_a[:spec.n]
    take = spec.n - len(leaves_u)
    leaves_u += shared[:take]
    shared = shared[take:]
    leaves_v = only_b[:spec.m]
    leaves_v += shared[:spec.m - len(leaves_v)]
    wit = DoubleStarWitness(c, (u, v), tuple(leaves_u), tuple(leaves_v))
    assert wit.check(coloring, spec), "leaf assignment failed; criterion bug"
    return wit


def max_mono_degree(coloring: EdgeColoring) -> tuple[int, int, int]:
    """(vertex, colour, degree) maximising the colour degree; first in row-major order."""
    if coloring.order < 2:
        raise ValueError("max_mono_degree needs order >= 2")
    deg = coloring.degrees()
    v, c = np.unravel_index(int(np.argmax(deg)), deg.shape)
    return int(v), int(c), int(deg[v, c])


def violations(coloring: EdgeColoring, spec: DoubleStarSpec, forbid_rainbow: bool = True):
    """First forbidden pattern found (rainbow triangle checked first) or None."""
    if forbid_rainbow:
        wit = find_rainbow_triangle(coloring)
        if wit is not None:
            return wit
    return find_mono_double_star(coloring, spec)
