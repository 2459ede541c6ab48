"""Gallai colourings, double-star Ramsey numbers, and exhaustive colouring search."""

from .coloring import ColoringFormatError, DoubleStarSpec, EdgeColoring, edge_order
from .constructions import (
    CertificationError,
    NotFoundError,
    build_gallai_lower_full,
    build_k3_lower,
    build_ramsey_lower,
    construct,
    extend_with_clique,
)
from .detectors import (
    DoubleStarWitness,
    RainbowTriangleWitness,
    find_mono_double_star,
    find_rainbow_triangle,
    max_mono_degree,
)
from .formulas import BoundReport, BoundStatus, gr_bounds, gr_exact, ramsey_double_star
from .partition import (
    GallaiPartition,
    RainbowTriangleError,
    find_gallai_partition,
    generate_random_gallai,
    reduced_graph,
    verify_partition,
)
from .search import (
    Budget,
    SearchOptions,
    SearchProblem,
    Status,
    compute_gallai_ramsey,
    compute_ramsey,
    search_valid_coloring,
)

__version__ = "0.1.0"
