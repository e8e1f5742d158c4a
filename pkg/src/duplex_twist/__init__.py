"""Domino tilings of duplex regions and the identities relating their twist
to the polynomial invariant P_t(q)."""

from .charges import (
    HalfPoint,
    LaurentPoly,
    angle,
    charge_boundary,
    charge_interior,
    metric_weight,
    p_derivative_at_one,
    p_polynomial,
    topological_weight,
    verify_cycle_lemmas,
    winding_by_turning,
    winding_number,
)
from .errors import DuplexTwistError, InputError, PropertyViolation
from .lattice import Cell, Cube, Direction, Quarter, cube_color, det3, vertex_color
from .region import BaseShape, DuplexRegion, build_duplex, format_base, parse_base
from .sock import Cycle, Sock, base_graph, project_sock
from .tiling import (
    Domino,
    Flip,
    Tiling,
    apply_flip,
    enumerate_tilings,
    find_flips,
    flip_components,
    sign_vector,
    validate_tiling,
)
from .twist import in_shade, pretwist, tau, twist

__version__ = "0.1.0"

__all__ = [
    "BaseShape", "Cell", "Cube", "Cycle", "Direction", "Domino", "DuplexRegion",
    "DuplexTwistError", "Flip", "HalfPoint", "InputError", "LaurentPoly",
    "PropertyViolation", "Quarter", "Sock", "Tiling",
    "angle", "apply_flip", "base_graph", "build_duplex", "charge_boundary",
    "charge_interior", "cube_color", "det3", "enumerate_tilings", "find_flips",
    "flip_components", "format_base", "in_shade", "metric_weight",
    "p_derivative_at_one", "p_polynomial", "parse_base", "pretwist",
    "project_sock", "sign_vector", "tau", "topological_weight", "twist",
    "validate_tiling", "verify_cycle_lemmas", "vertex_color",
    "winding_by_turning", "winding_number",
]
