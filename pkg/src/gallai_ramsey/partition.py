"""Gallai partitions: finding, checking, reduced graphs, random Gallai colourings."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import connected_components

from . import kernels
from .coloring import EdgeColoring
from .detectors import RainbowTriangleWitness, find_rainbow_triangle


class RainbowTriangleError(ValueError):
    def __init__(self, witness: RainbowTriangleWitness):
        super().__init__(f"coloring has a rainbow triangle on {witness.vertices}")
        self.witness = witness


class MalformedPartition(ValueError):
    pass


@dataclass(frozen=True)
class GallaiPartition:
    parts: tuple[tuple[int, ...], ...]
    pair_colors: dict[tuple[int, int], int] = field(default_factory=dict, compare=False)

    @property
    def used_colors(self) -> set[int]:
        return set(self.pair_colors.values())

    def __len__(self):
        return len(self.parts)

    def to_json(self) -> dict:
        return {"parts": [list(p) for p in self.parts],
                "pairColors": [[i, j, c] for (i, j), c in sorted(self.pair_colors.items())]}

    @classmethod
    def from_json(cls, data: dict) -> GallaiPartition:
        parts = tuple(tuple(int(x) for x in p) for p in data["parts"])
        pairs = {(int(i), int(j)): int(c) for i, j, c in data.get("pairColors", [])}
        return cls(parts, pairs)

    @classmethod
    def from_parts(cls, coloring: EdgeColoring, parts) -> GallaiPartition:
        """Build a partition, reading each pair colour off one representative edge."""
        parts = tuple(tuple(sorted(int(x) for x in p)) for p in parts)
        mat = coloring.matrix
        pairs = {(i, j): int(mat[parts[i][0], parts[j][0]])
                 for i in range(len(parts)) for j in range(i + 1, len(parts))
                 if parts[i] and parts[j]}
        return cls(parts, pairs)


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    reason: str | None = None
    edges: tuple[tuple[int, int], ...] = ()

    def __bool__(self):
        return self.ok


def _check_cover(order: int, partition: GallaiPartition):
    seen = np.zeros(order, dtype=bool)
    for i, part in enumerate(partition.parts):
        if not part:
            raise MalformedPartition(f"part {i} is empty")
        for x in part:
            if not 0 <= x < order:
                raise MalformedPartition(f"vertex {x} out of range")
            if seen[x]:
                raise MalformedPartition(f"vertex {x} in two parts")
            seen[x] = True
    if not seen.all():
        raise MalformedPartition(f"vertex {int(np.argmin(seen))} in no part")


def verify_partition(coloring: EdgeColoring, partition: GallaiPartition) -> PartitionCheck:
    """Check nontriviality, monochromatic part pairs, and at most two pair colours.

    Raises MalformedPartition when the parts do not partition the vertex set.
    """
    _check_cover(coloring.order, partition)
    parts = partition.parts
    if coloring.order >= 2 and len(parts) < 2:
        return PartitionCheck(False, "trivial partition")
    mat = coloring.matrix
    used = {}
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            block = mat[np.ix_(parts[i], parts[j])]
            c = int(block[0, 0])
            bad = np.argwhere(block != c)
            if bad.size:
                r, s = bad[0]
                return PartitionCheck(False, f"parts {i},{j} not monochromatic",
                                      ((parts[i][0], parts[j][0]), (parts[i][r], parts[j][s])))
            claimed = partition.pair_colors.get((i, j), c)
            if claimed != c:
                return PartitionCheck(False, f"parts {i},{j} claim color {claimed}, edges have {c}",
                                      ((parts[i][0], parts[j][0]),))
            used.setdefault(c, (parts[i][0], parts[j][0]))
    if len(used) > 2:
        return PartitionCheck(False, f"{len(used)} colors between parts", tuple(used.values()))
    return PartitionCheck(True)


def parts_are_modules(coloring: EdgeColoring, partition: GallaiPartition) -> bool:
    """Every outside vertex sees each part in a single colour."""
    mat = coloring.matrix
    for part in partition.parts:
        idx = list(part)
        block = mat[:, idx]
        outside = np.ones(coloring.order, dtype=bool)
        outside[idx] = False
        if (block[outside] != block[outside][:, :1]).any():
            return False
    return True


def reduced_graph(coloring: EdgeColoring, partition: GallaiPartition) -> EdgeColoring:
    check = verify_partition(coloring, partition)
    if not check:
        raise ValueError(f"invalid partition: {check.reason}")
    reps = [p[0] for p in partition.parts]
    return coloring.induced(reps)


def _degenerate_split(mat: np.ndarray, ncolors: int):
    # colour c with a disconnected complement: every cross edge has colour c
    for c in range(ncolors):
        other = (mat != c) & (mat >= 0)
        count, labels = connected_components(other, directed=False)
        if count >= 2:
            return c, labels
    return None, None


def find_gallai_partition(coloring: EdgeColoring, backend=None) -> GallaiPartition:
    """Coarsest Gallai partition of a rainbow-triangle-free colouring.

    If some colour c has a disconnected complement the top level is
    degenerate: the two parts are the complement component of vertex 0 and
    everything else.  Otherwise the parts are the maximal proper modules,
    which are unique and pairwise non-mergeable.
    """
    if coloring.order < 2:
        raise ValueError("a Gallai partition needs order >= 2")
    wit = find_rainbow_triangle(coloring, backend)
    if wit is not None:
        raise RainbowTriangleError(wit)
    mat = coloring.matrix
    size = coloring.order
    _, labels = _degenerate_split(mat, coloring.num_colors)
    if labels is not None:
        first = labels == labels[0]
        return GallaiPartition.from_parts(coloring, [np.flatnonzero(first), np.flatnonzero(~first)])

    closure = kernels.get_backend(backend).module_closure
    label = np.full(size, -1, dtype=np.int64)
    parts = []
    for x in range(size):
        if label[x] >= 0:
            continue
        member = np.zeros(size, dtype=bool)
        member[x] = True
        for y in range(size):
            if member[y] or label[y] >= 0:
                continue
            cl = closure(mat, x, y)
            if not cl.all():
                member |= cl
        label[member] = len(parts)
        parts.append(np.flatnonzero(member))
    return GallaiPartition.from_parts(coloring, parts)


# random Gallai colourings -------------------------------------------------


@dataclass
class SubstitutionNode:
    """One substitution step: ``base`` (a 2-coloured K_b) blown up into ``children``.

    Leaves have ``base is None``; a leaf with several vertices is a
    monochromatic clique in ``clique_color`` (depth cap reached).
    """

    vertices: tuple[int, ...]
    base: np.ndarray | None = None
    children: list[SubstitutionNode] = field(default_factory=list)
    clique_color: int | None = None

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class GeneratorConfig:
    base_orders: tuple[int, ...] = (2, 3, 4, 5)
    max_depth: int = 6
    triangle_free_k5: bool = True


def generate_random_gallai(order: int, num_colors: int, seed: int,
                           config: GeneratorConfig | None = None):
    """Random rainbow-triangle-free colouring built by recursive substitution.

    Returns ``(coloring, tree)``; deterministic in (order, num_colors, seed, config).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if num_colors < 1:
        raise ValueError("num_colors must be >= 1")
    cfg = config or GeneratorConfig()
    rng = np.random.default_rng(seed)
    mat = np.full((order, order), -1, dtype=np.int16)
    tree = _substitute(mat, tuple(range(order)), rng, num_colors, 0, cfg)
    return EdgeColoring(mat, num_colors), tree


def _two_colors(rng, num_colors):
    if num_colors == 1:
        return 0, 0
    a, b = rng.choice(num_colors, size=2, replace=False)
    return int(a), int(b)


def _base_coloring(rng, b, ca, cb, cfg):
    base = np.full((b, b), -1, dtype=np.int16)
    if b == 5 and cfg.triangle_free_k5:
        perm = rng.permutation(5)
        for i in range(5):
            for j in range(i + 1, 5):
                base[i, j] = base[j, i] = cb
        for i in range(5):
            x, y = perm[i], perm[(i + 1) % 5]
            base[x, y] = base[y, x] = ca
        return base
    for i in range(b):
        for j in range(i + 1, b):
            base[i, j] = base[j, i] = ca if rng.random() < 0.5 else cb
    return base


def _substitute(mat, verts, rng, num_colors, depth, cfg):
    size = len(verts)
    if size == 1:
        return SubstitutionNode(verts)
    if depth >= cfg.max_depth:
        c = int(rng.integers(num_colors))
        idx = np.asarray(verts)
        block = mat[np.ix_(idx, idx)]
        block[:] = c
        np.fill_diagonal(block, -1)
        mat[np.ix_(idx, idx)] = block
        return SubstitutionNode(verts, clique_color=c)
    choices = [b for b in cfg.base_orders if 2 <= b <= size] or [size]
    b = int(rng.choice(choices))
    ca, cb = _two_colors(rng, num_colors)
    base = _base_coloring(rng, b, ca, cb, cfg)
    cuts = np.sort(rng.choice(np.arange(1, size), size=b - 1, replace=False))
    bounds = [0, *cuts.tolist(), size]
    groups = [verts[bounds[i]:bounds[i + 1]] for i in range(b)]
    for i in range(b):
        for j in range(i + 1, b):
            gi = np.asarray(groups[i])
            gj = np.asarray(groups[j])
            mat[np.ix_(gi, gj)] = base[i, j]
            mat[np.ix_(gj, gi)] = base[i, j]
    children = [_substitute(mat, g, rng, num_colors, depth + 1, cfg) for g in groups]
    return SubstitutionNode(verts, base, children)
