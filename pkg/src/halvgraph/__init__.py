"""Exact computation of halving lines, their underlying graphs, and the
constructions and invariants around them."""

from .geometry import Direction, GeneralPositionError, Point, PointConfig
from .halving import UnderlyingGeograph, degree_sequence, graph_stats, underlying_geograph
from .chains import decompose_chains, straddling_span, verify_charging
from .verification import verify_all
from .constructions import build, clique_construction, convex_polygon, cycle_construction, path_construction, star
from .pointsfile import read_points, write_points

__all__ = [
    "build",
    "clique_construction",
    "convex_polygon",
    "cycle_construction",
    "path_construction",
    "read_points",
    "star",
    "write_points",
    "Direction",
    "GeneralPositionError",
    "Point",
    "PointConfig",
    "UnderlyingGeograph",
    "decompose_chains",
    "degree_sequence",
    "graph_stats",
    "straddling_span",
    "underlying_geograph",
    "verify_all",
    "verify_charging",
]

__version__ = "0.1.0"
