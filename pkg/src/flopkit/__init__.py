"""Affine Dynkin combinatorics of 3-fold flopping contractions."""

from .arrangement import (
    WallArrangement,
    Window,
    arrangement_2d,
    chambers_in_fundamental_domain,
    oracle_walls_1d,
    restricted_roots,
)
from .gv import deformation_equivalents, gv_row, realized_status
from .helix import SheafSymbol, base_helix, dual, ext1_dichotomy, heart, helix_entry
from .pi1 import GroupWord, monodromy, normal_form, presentation, words_equal
from .rootsys import (
    DynkinDiagram,
    ExtendedDiagram,
    build_diagram,
    dynkin_involution,
    extend_affine,
    highest_root_labels,
    positive_roots,
)
from .topology import PuncturedSphere, euler_characteristic, punctured_sphere
from .walk import ChamberState, chamber_graph, cross, initial_state, label_sequence_1d, period_1d

__version__ = "0.1.0"

__all__ = [
    "ChamberState", "DynkinDiagram", "ExtendedDiagram", "GroupWord", "PuncturedSphere",
    "SheafSymbol", "WallArrangement", "Window",
    "arrangement_2d", "base_helix", "build_diagram", "chamber_graph",
    "chambers_in_fundamental_domain", "cross", "deformation_equivalents", "dual",
    "dynkin_involution", "euler_characteristic", "ext1_dichotomy", "extend_affine",
    "gv_row", "heart", "helix_entry", "highest_root_labels", "initial_state",
    "label_sequence_1d", "monodromy", "normal_form", "oracle_walls_1d", "period_1d",
    "positive_roots", "presentation", "punctured_sphere", "realized_status",
    "restricted_roots", "words_equal",
]
