"""Backtracking search for colourings of K_N avoiding forbidden patterns.

Edges are coloured in the order (1,0), (2,0), (2,1), (3,0), ...  After each
assignment only patterns through the new edge are checked: rainbow triangles
on it, and double stars whose centre edge has the new colour and touches one
of its endpoints.  Both patterns are monotone under extension, so a failing
node has no valid leaf below it.

Colours are restricted to canonical order (colour c may appear only after
0..c-1 have), which keeps one colouring per colour permutation class.
"""

from __future__ import annotations

import itertools
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np

from . import kernels
from .coloring import DTYPE, DoubleStarSpec, EdgeColoring, edge_arrays
from .detectors import violations


class Status(str, Enum):
    WITNESS = "witness"
    EXHAUSTED = "exhausted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchProblem:
    order: int
    num_colors: int
    spec: DoubleStarSpec
    forbid_rainbow: bool = False

    def __post_init__(self):
        if self.order < 1 or self.num_colors < 1:
            raise ValueError("order and num_colors must be >= 1")

    def to_json(self):
        return {"order": self.order, "colors": self.num_colors, "n": self.spec.n,
                "m": self.spec.m, "forbidRainbow": self.forbid_rainbow}


@dataclass(frozen=True)
class Budget:
    """Node limit per shard (deterministic) and an advisory wall-clock limit."""

    nodes: int | None = None
    seconds: float | None = None

    def __post_init__(self):
        if self.nodes is not None and self.nodes <= 0:
            raise ValueError("node budget must be positive")
        if self.seconds is not None and self.seconds <= 0:
            raise ValueError("time budget must be positive")


@dataclass(frozen=True)
class SearchOptions:
    canonical: bool = True
    prune: bool = True
    # vertex 0 carries the largest colour degree and its edges come in colour blocks
    vertex_symmetry: bool = False
    threads: int = 1
    prefix_edges: int = 0
    chunk: int = 1 << 20
    backend: str | None = None

    def __post_init__(self):
        if self.vertex_symmetry and not (self.canonical and self.prune):
            raise ValueError("vertex_symmetry requires canonical colours and pruning")
        if self.threads < 1 or self.prefix_edges < 0 or self.chunk < 1:
            raise ValueError("bad thread / prefix / chunk setting")


@dataclass
class SearchStats:
    nodes: int = 0
    prune_rainbow: int = 0
    prune_double_star: int = 0
    prune_symmetry: int = 0
    leaf_reject: int = 0
    wall_time: float = 0.0
    shards: int = 1

    def add(self, vec: np.ndarray):
        self.nodes += int(vec[kernels.STAT_NODES])
        self.prune_rainbow += int(vec[kernels.STAT_PRUNE_RAINBOW])
        self.prune_double_star += int(vec[kernels.STAT_PRUNE_DOUBLE_STAR])
        self.prune_symmetry += int(vec[kernels.STAT_PRUNE_SYMMETRY])
        self.leaf_reject += int(vec[kernels.STAT_LEAF_REJECT])

    def counts(self):
        """Everything except wall time; equal across runs in single-threaded mode."""
        d = asdict(self)
        d.pop("wall_time")
        return d


@dataclass
class SearchOutcome:
    status: Status
    problem: SearchProblem
    witness: EdgeColoring | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    prefix_edges: int = 0
    shard_status: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "problem": self.problem.to_json(),
            "stats": asdict(self.stats),
            "shardLayout": {"prefixEdges": self.prefix_edges, "shards": self.shard_status},
        }


class _Shard:
    """Search state for the subtree under a fixed colour prefix."""

    def __init__(self, problem: SearchProblem, prefix, opts: SearchOptions, kern):
        size = problem.order
        self.problem = problem
        self.opts = opts
        self.kern = kern
        self.eu, self.ev = edge_arrays(size)
        n_edges = self.eu.shape[0]
        self.mat = np.full((size, size), -1, dtype=DTYPE)
        self.deg = np.zeros((size, problem.num_colors), dtype=np.int64)
        self.choice = np.zeros(max(n_edges, 1), dtype=np.int64)
        self.nxt = np.zeros(max(n_edges, 1), dtype=np.int64)
        self.maxc = np.full(n_edges + 1, -1, dtype=np.int64)
        self.fixed = np.full(max(n_edges, 1), -1, dtype=np.int64)
        self.fixed[:len(prefix)] = prefix
        self.state = np.zeros(1, dtype=np.int64)
        self.stats = np.zeros(kernels.N_STATS, dtype=np.int64)

    def run(self, node_budget, deadline, cancel: threading.Event | None):
        p = self.problem
        while True:
            limit = int(self.stats[0]) + self.opts.chunk
            if node_budget is not None:
                limit = min(limit, node_budget)
            code = self.kern.search(
                self.mat, self.deg, self.eu, self.ev, self.choice, self.nxt, self.maxc,
                self.fixed, self.state, self.stats, p.num_colors, p.spec.n, p.spec.m,
                p.forbid_rainbow, self.opts.canonical, self.opts.prune,
                self.opts.vertex_symmetry, limit)
            if code != kernels.RUNNING:
                return code
            if node_budget is not None and self.stats[0] >= node_budget:
                return code
            if deadline is not None and time.monotonic() > deadline:
                return code
            if cancel is not None and cancel.is_set():
                return code


def shard_prefixes(num_colors: int, n_edges: int, prefix_edges: int, canonical: bool):
    """Colour prefixes for the first ``prefix_edges`` edges, in lexicographic order."""
    p = min(prefix_edges, n_edges)
    for combo in itertools.product(range(num_colors), repeat=p):
        if canonical:
            top = -1
            ok = True
            for c in combo:
                if c > top + 1:
                    ok = False
                    break
                top = max(top, c)
            if not ok:
                continue
        yield combo


def search_valid_coloring(problem: SearchProblem, budget: Budget | None = None,
                          options: SearchOptions | None = None) -> SearchOutcome:
    """Find a colouring of K_N with no forbidden pattern, or prove none exists.

    ``EXHAUSTED`` is a proof of nonexistence over the whole canonical tree;
    ``INCONCLUSIVE`` means a budget ran out first.  With one thread the
    witness is the lexicographically first valid colouring.
    """
    budget = budget or Budget()
    opts = options or SearchOptions()
    kern = kernels.get_backend(opts.backend)
    start = time.monotonic()
    deadline = start + budget.seconds if budget.seconds is not None else None
    n_edges = problem.order * (problem.order - 1) // 2
    prefixes = list(shard_prefixes(problem.num_colors, n_edges, opts.prefix_edges, opts.canonical))
    shards = [_Shard(problem, pre, opts, kern) for pre in prefixes]
    codes = [None] * len(shards)

    slot_lock = threading.Lock()
    found: list[int] = []
    cancel = threading.Event()

    def work(i):
        if cancel.is_set():
            return
        code = shards[i].run(budget.nodes, deadline, cancel)
        codes[i] = code
        if code == kernels.FOUND:
            with slot_lock:
                if not found:
                    found.append(i)
                    cancel.set()

    if opts.threads == 1:
        for i in range(len(shards)):
            work(i)
            if found:
                break
    else:
        with ThreadPoolExecutor(max_workers=opts.threads) as pool:
            list(pool.map(work, range(len(shards))))

    stats = SearchStats(shards=len(shards))
    for sh in shards:
        stats.add(sh.stats)
    stats.wall_time = time.monotonic() - start
    names = {kernels.FOUND: "witness", kernels.EXHAUSTED: "exhausted",
             kernels.RUNNING: "inconclusive", None: "skipped"}
    shard_status = [names[c] for c in codes]

    if found:
        sh = shards[found[0]]
        witness = EdgeColoring(sh.mat, problem.num_colors)
        bad = violations(witness, problem.spec, problem.forbid_rainbow)
        if bad is not None:
            raise RuntimeError(f"search produced an invalid witness: {bad}")
        status = Status.WITNESS
    elif all(c == kernels.EXHAUSTED for c in codes):
        witness, status = None, Status.EXHAUSTED
    else:
        witness, status = None, Status.INCONCLUSIVE
    return SearchOutcome(status, problem, witness, stats, min(opts.prefix_edges, n_edges), shard_status)


@dataclass
class NumberResult:
    """Outcome of scanning orders 1, 2, ... for the first unsatisfiable one."""

    status: Status
    value: int | None
    witness: EdgeColoring | None
    outcomes: list[SearchOutcome]
    kind: str = "ramsey"

    @property
    def lower_bound(self) -> int:
        return self.witness.order + 1 if self.witness is not None else 1

    def to_json(self) -> dict:
        last = self.outcomes[-1].problem if self.outcomes else None
        return {
            "kind": self.kind,
            "status": "exact" if self.value is not None else "inconclusive",
            "value": self.value,
            "lowerBound": self.lower_bound,
            "n": last.spec.n if last else None,
            "m": last.spec.m if last else None,
            "colors": last.num_colors if last else None,
            "forbidRainbow": last.forbid_rainbow if last else None,
            "orders": [{"order": o.problem.order, "status": o.status.value,
                        "nodes": o.stats.nodes} for o in self.outcomes],
        }


def compute_ramsey(spec: DoubleStarSpec, num_colors: int = 2, max_order: int = 12,
                   budget: Budget | None = None, options: SearchOptions | None = None,
                   forbid_rainbow: bool = False) -> NumberResult:
    """Least N <= max_order such that every colouring of K_N has a forbidden pattern."""
    outcomes = []
    witness = None
    for order in range(1, max_order + 1):
        out = search_valid_coloring(SearchProblem(order, num_colors, spec, forbid_rainbow),
                                    budget, options)
        outcomes.append(out)
        if out.status is Status.WITNESS:
            witness = out.witness
        elif out.status is Status.EXHAUSTED:
            return NumberResult(Status.EXHAUSTED, order, witness, outcomes,
                                "gallai-ramsey" if forbid_rainbow else "ramsey")
        else:
            break
    return NumberResult(Status.INCONCLUSIVE, None, witness, outcomes,
                        "gallai-ramsey" if forbid_rainbow else "ramsey")


def compute_gallai_ramsey(spec: DoubleStarSpec, num_colors: int, max_order: int = 12,
                          budget: Budget | None = None,
                          options: SearchOptions | None = None) -> NumberResult:
    return compute_ramsey(spec, num_colors, max_order, budget, options, forbid_rainbow=True)
