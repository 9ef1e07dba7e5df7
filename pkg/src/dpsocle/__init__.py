"""Socles of degenerate principal series for U(m,n) and GL(n) over R, C, H."""

from .diagrams import (
    SignedYoungDiagram, YoungDiagram, canonicalize, enumerate_signed,
    orbit_dimension, young_from_composition,
)
from .errors import DpsError, HypothesisNotMet, InvalidInput, LimitExceeded, UnsupportedParameter
from .ranges import classify_range, range_predicates, range_report
from .socle import (
    Constituent, DPSParam, MergedData, SocleReport, check_h, complex_socle,
    decompose_top, delta_kappa, merged_data, quaternionic_socle, real_gl_socle,
    socle_umn, xi_weight,
)
from .theta import (
    DFMParam, SignedPair, associated_shape, enumerate_pairs, gk_dimension,
    is_normal, omega_set, phi_map, trapa_add,
)
from .weyl import (
    Composition, Permutation, assumption_a_typeA, compositions, longest_element,
    parabolic_longest,
)

__version__ = "0.1.0"

__all__ = [
    "SignedYoungDiagram",
    "YoungDiagram",
    "canonicalize",
    "enumerate_signed",
    "orbit_dimension",
    "young_from_composition",
    "DpsError",
    "HypothesisNotMet",
    "InvalidInput",
    "LimitExceeded",
    "UnsupportedParameter",
    "classify_range",
    "range_predicates",
    "range_report",
    "Constituent",
    "DPSParam",
    "MergedData",
    "SocleReport",
    "check_h",
    "complex_socle",
    "decompose_top",
    "delta_kappa",
    "merged_data",
    "quaternionic_socle",
    "real_gl_socle",
    "socle_umn",
    "xi_weight",
    "DFMParam",
    "SignedPair",
    "associated_shape",
    "enumerate_pairs",
    "gk_dimension",
    "is_normal",
    "omega_set",
    "phi_map",
    "trapa_add",
    "Composition",
    "Permutation",
    "assumption_a_typeA",
    "compositions",
    "longest_element",
    "parabolic_longest",
]
