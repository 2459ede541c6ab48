"""Explicit lower-bound colourings, each certified by the detectors before return."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .coloring import DTYPE, DoubleStarSpec, EdgeColoring
from .detectors import find_mono_double_star, find_rainbow_triangle, max_mono_degree

KINDS = ("k3-lower", "k-lower", "ramsey-lower")
RAMSEY_STRATEGIES = ("circulant-small", "circulant-large", "split-clique", "search")


class NotFoundError(RuntimeError):
    """Every strategy failed to produce a valid colouring."""


class CertificationError(RuntimeError):
    """A constructor produced a colouring that fails validation (a bug)."""


@dataclass(frozen=True)
class ConstructionRecipe:
    kind: str
    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown construction kind {self.kind!r}")

    @property
    def palette(self) -> int:
        return {"k3-lower": 3, "ramsey-lower": 2}.get(self.kind, self.k)

    @property
    def expected_order(self) -> int:
        return expected_order(self.kind, self.n, self.m, self.k)

    def to_json(self):
        return {"kind": self.kind, "n": self.n, "m": self.m, "k": self.k,
                "expectedOrder": self.expected_order, "palette": self.palette}


def k3_order(n: int) -> int:
    return 5 * (n // 2) + n % 2


def expected_order(kind: str, n: int, m: int, k: int = 3) -> int:
    if kind == "k3-lower":
        return k3_order(n)
    if kind == "ramsey-lower":
        return n + 2 * m + 1
    return max(k3_order(n) + m * (k - 3), n + 2 * m + 1 + m * (k - 2))


@dataclass
class Certificate:
    recipe: ConstructionRecipe
    order: int
    colors: int
    strategy: str
    rainbow: object = None
    double_star: object = None
    max_degree: tuple[int, int, int] | None = None
    extra: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return (self.rainbow is None and self.double_star is None
                and self.order == self.recipe.expected_order)

    def to_json(self) -> dict:
        md = None
        if self.max_degree is not None:
            v, c, d = self.max_degree
            md = {"vertex": v, "color": c, "degree": d}
        return {
            "recipe": self.recipe.to_json(),
            "order": self.order,
            "colors": self.colors,
            "strategy": self.strategy,
            "valid": self.valid,
            "checks": {
                "rainbowTriangle": self.rainbow.to_json() if self.rainbow else None,
                "doubleStar": self.double_star.to_json() if self.double_star else None,
                "maxMonoDegree": md,
            },
        }


def certify(coloring: EdgeColoring, recipe: ConstructionRecipe, strategy: str) -> Certificate:
    spec = DoubleStarSpec(recipe.n, recipe.m)
    return Certificate(
        recipe, coloring.order, coloring.num_colors, strategy,
        rainbow=find_rainbow_triangle(coloring),
        double_star=find_mono_double_star(coloring, spec),
        max_degree=max_mono_degree(coloring) if coloring.order >= 2 else None,
    )


def _checked(coloring, recipe, strategy):
    cert = certify(coloring, recipe, strategy)
    if not cert.valid:
        raise CertificationError(f"{recipe.kind} n={recipe.n} m={recipe.m} k={recipe.k}: "
                                 f"construction failed validation ({cert.to_json()['checks']})")
    return coloring, cert


# blow-up of the two-coloured K5 --------------------------------------------


def _k3_lower(n: int) -> EdgeColoring:
    if n < 1 or (n % 2 == 0 and n < 2):
        raise ValueError(f"k3-lower needs n >= 1 (n >= 2 when even), got {n}")
    if n % 2:
        sizes = [(n + 1) // 2] + [(n - 1) // 2] * 4
    else:
        sizes = [n // 2] * 5
    part = np.repeat(np.arange(5), sizes)
    gap = (part[None, :] - part[:, None]) % 5
    # colour 0 inside the parts; 1 along the 5-cycle i ~ i+1, 2 along i ~ i+2
    mat = np.where(gap == 0, 0, np.where((gap == 1) | (gap == 4), 1, 2)).astype(DTYPE)
    return EdgeColoring(mat, 3)


def build_k3_lower(n: int, m: int = 0) -> EdgeColoring:
    """Three-colouring of K_l, l = 5*floor(n/2) (+1 for odd n), free of rainbow
    triangles and of monochromatic S(n, m) for every m <= n.

    Five colour-0 cliques (the first one larger by one vertex when n is odd)
    joined along two complementary 5-cycles in colours 1 and 2.
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    return _checked(_k3_lower(n), ConstructionRecipe("k3-lower", n, m, 3), "c5-blow-up")[0]


def extend_with_clique(base: EdgeColoring, m: int, new_color: int, clique_color: int = 0,
                       spec: DoubleStarSpec | None = None) -> EdgeColoring:
    """Append a clique on ``m`` new vertices in ``clique_color``, joined to the
    base in ``new_color``.  With ``spec`` the result is checked to be free of
    rainbow triangles and monochromatic ``spec``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if new_color < 0 or new_color in base.colors_used():
        raise ValueError(f"new color {new_color} already used in the base")
    if not 0 <= clique_color < base.num_colors:
        raise ValueError(f"clique color {clique_color} not in the base palette")
    old = base.order
    size = old + m
    mat = np.full((size, size), new_color, dtype=DTYPE)
    mat[:old, :old] = base.matrix
    mat[old:, old:] = clique_color
    out = EdgeColoring(mat, max(base.num_colors, new_color + 1))
    if spec is not None:
        if find_rainbow_triangle(out) is not None:
            raise CertificationError("extension created a rainbow triangle")
        if find_mono_double_star(out, spec) is not None:
            raise CertificationError(f"extension contains a monochromatic S({spec.n},{spec.m})")
    return out


# two-colourings of K_{n+2m+1} ----------------------------------------------


def _circulant(size: int, offsets) -> EdgeColoring:
    idx = np.arange(size)
    dist = (idx[None, :] - idx[:, None]) % size
    in_zero = np.isin(dist, [d % size for d in offsets] + [(-d) % size for d in offsets])
    mat = np.where(in_zero, 0, 1).astype(DTYPE)
    return EdgeColoring(mat, 2)


def _ramsey_candidate(strategy: str, n: int, m: int, node_budget: int | None):
    size = n + 2 * m + 1
    if strategy == "circulant-small":
        if 2 * m >= n:
            return None
        return _circulant(size, range(1, m + 1))
    if strategy == "circulant-large":
        if n < 2 * m:
            return None
        offsets = list(range(1, n // 2 + 1))
        if n % 2:
            offsets.append(size // 2)
        return _circulant(size, offsets)
    if strategy == "split-clique":
        # colour 0: K_m + K_{n+m+1}; colour 1: the complete bipartite graph between them
        side = np.arange(size) < m
        mat = np.where(side[:, None] == side[None, :], 0, 1).astype(DTYPE)
        return EdgeColoring(mat, 2)
    if strategy == "search":
        found = _search_two_coloring(n, m, node_budget)
        if found is None:
            return None
        return EdgeColoring(np.frombuffer(found, dtype=DTYPE).reshape(size, size), 2)
    raise ValueError(f"unknown strategy {strategy!r}")


@lru_cache(maxsize=None)
def _search_two_coloring(n: int, m: int, node_budget: int | None):
    from .search import Budget, SearchProblem, Status, search_valid_coloring

    problem = SearchProblem(n + 2 * m + 1, 2, DoubleStarSpec(n, m))
    out = search_valid_coloring(problem, Budget(nodes=node_budget))
    if out.status is not Status.WITNESS:
        return None
    return out.witness.matrix.tobytes()


def _ramsey_lower(n, m, strategies, node_budget):
    if not 1 <= m <= n:
        raise ValueError("ramsey-lower needs n >= m >= 1")
    recipe = ConstructionRecipe("ramsey-lower", n, m, 2)
    tried = []
    for strategy in strategies or RAMSEY_STRATEGIES:
        coloring = _ramsey_candidate(strategy, n, m, node_budget)
        if coloring is None:
            tried.append(f"{strategy}: not applicable")
            continue
        cert = certify(coloring, recipe, strategy)
        if cert.valid:
            return coloring, cert
        tried.append(f"{strategy}: failed validation")
    raise NotFoundError(f"no 2-coloring of K{n + 2 * m + 1} without S({n},{m}) found ({'; '.join(tried)})")


def build_ramsey_lower(n: int, m: int, strategies=None, node_budget: int | None = 10**8) -> EdgeColoring:
    """Two-colouring of K_{n+2m+1} with no monochromatic S(n, m).

    Strategies are tried in order and each candidate must pass the detector;
    raises NotFoundError when none does.
    """
    return _ramsey_lower(n, m, strategies, node_budget)[0]


def _gallai_lower_full(n, m, k, strategies=None, node_budget=10**8):
    if k < 3:
        raise ValueError("k must be >= 3")
    if not 1 <= m <= n:
        raise ValueError("need n >= m >= 1")
    spec = DoubleStarSpec(n, m)
    if k3_order(n) + m * (k - 3) >= n + 2 * m + 1 + m * (k - 2):
        coloring, first_color, strategy = _k3_lower(n), 3, "c5-blow-up"
    else:
        coloring, cert = _ramsey_lower(n, m, strategies, node_budget)
        first_color, strategy = 2, cert.strategy
    for color in range(first_color, k):
        coloring = extend_with_clique(coloring, m, color, 0)
    out = EdgeColoring(coloring.matrix, k)
    return _checked(out, ConstructionRecipe("k-lower", n, m, k),
                    f"{strategy}+{k - first_color}x-clique")


def build_gallai_lower_full(n: int, m: int, k: int, strategies=None,
                            node_budget: int | None = 10**8) -> EdgeColoring:
    """The larger of the two composed k-colour constructions.

    Either the K5 blow-up extended by colours 3..k-1, or a two-colouring of
    K_{n+2m+1} extended by colours 2..k-1; each extension adds a colour-0
    clique on m vertices.  Ties go to the blow-up.
    """
    return _gallai_lower_full(n, m, k, strategies, node_budget)[0]


def construct(kind: str, n: int, m: int, k: int = 3, strategies=None):
    """Build a recipe's colouring; returns ``(coloring, certificate)``."""
    if kind == "k3-lower":
        if not 0 <= m <= n:
            raise ValueError("need 0 <= m <= n")
        return _checked(_k3_lower(n), ConstructionRecipe(kind, n, m, 3), "c5-blow-up")
    if kind == "ramsey-lower":
        return _ramsey_lower(n, m, strategies, 10**8)
    if kind == "k-lower":
        return _gallai_lower_full(n, m, k, strategies)
    raise ValueError(f"unknown construction kind {kind!r}")
