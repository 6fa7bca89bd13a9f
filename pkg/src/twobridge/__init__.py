"""Exact arithmetic for 2-bridge links, Heckoid groups and knot-group epimorphisms."""

from .contfrac import cf_eval, cf_even, cf_normal_rep, cf_positive, even_symmetry_class, pos_symmetry_class
from .epi import epi_consistency_check, epi_exists, hom_count, orbit_condition, riley_presentation
from .errors import TwoBridgeError
from .farey import FareyEdge, ProjMatrix, ReflectionWord, orbit_bfs, orbit_member, reduce
from .heckoid import hat_r, hecke_matrices, heckoid_classification, heckoid_descriptor
from .pairs import candidates, classify, extra_split, isometry_group
from .rational_core import INFINITY, Slope, inverse_slope, link_kind, make_slope, parse_slope

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "FareyEdge",
    "ProjMatrix",
    "ReflectionWord",
    "Slope",
    "TwoBridgeError",
    "candidates",
    "cf_eval",
    "cf_even",
    "cf_normal_rep",
    "cf_positive",
    "classify",
    "epi_consistency_check",
    "epi_exists",
    "even_symmetry_class",
    "extra_split",
    "hat_r",
    "hecke_matrices",
    "heckoid_classification",
    "heckoid_descriptor",
    "hom_count",
    "inverse_slope",
    "isometry_group",
    "link_kind",
    "make_slope",
    "orbit_bfs",
    "orbit_member",
    "orbit_condition",
    "parse_slope",
    "pos_symmetry_class",
    "reduce",
    "riley_presentation",
]
