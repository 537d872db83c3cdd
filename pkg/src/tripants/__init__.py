"""Exact exploration of the tri-pants graph of the twice-punctured torus.

Tri-arcs are triples of free-group words in ``a`` and ``b``; flips,
projections to the dual Farey tree and point-push maps are all exact word
and integer computations.
"""
from . import errors, explorer, farey, freegroup, pushmap, triarc
from .explorer import (
    EdgeFilter,
    ExplorationBall,
    PathReport,
    exact_distance,
    explore_ball,
    find_cycles,
    find_path,
    lower_bound_distance,
)
from .farey import FareyEdge, FareyTriangle, Slope, dual_distance, project
from .freegroup import FreeWord
from .pushmap import Automorphism, PushGen, apply_push, push_auto
from .triarc import (
    ArcClass,
    MoveKind,
    MoveLabel,
    TriArc,
    base_tri_arc,
    big_flip,
    canonical_arc,
    decompose,
    make_tri_arc,
    neighbors,
    parse_tri_arc,
    small_flips,
)

__version__ = "0.1.0"
