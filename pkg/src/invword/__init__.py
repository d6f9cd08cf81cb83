"""Bounded conjugate-product words reaching involutions in classical groups."""

from .gf import FieldCtx, UnsupportedField, make_field, make_extension, pick_alpha
from .matrix import GroupSpec, Mat, classify, parse_mat
from .canonical import CanonicalForm, class_transversal, companion, factor_charpoly
from .perm import Perm, a5_witness, alt_partner, commutator_perm
from .constructor import (
    ConstructError,
    Unreachable,
    Witness,
    WitnessStep,
    brute_force_witness,
    construct_involution,
    find_partner,
    replay,
    sl2_witness,
    witness_from_json,
    witness_to_json,
)
from .oracle import (
    GroupTooLarge,
    build_group,
    class_product_count,
    conjugacy_classes,
    d_inv,
    d_proj_inv,
    dist_to_set,
    group_order,
    orbital_diameter_report,
)
from .bounds import scan, scan_matches_statement

__all__ = [
    "FieldCtx",
    "UnsupportedField",
    "make_field",
    "make_extension",
    "pick_alpha",
    "GroupSpec",
    "Mat",
    "classify",
    "parse_mat",
    "CanonicalForm",
    "class_transversal",
    "companion",
    "factor_charpoly",
    "Perm",
    "a5_witness",
    "alt_partner",
    "commutator_perm",
    "ConstructError",
    "Unreachable",
    "Witness",
    "WitnessStep",
    "brute_force_witness",
    "construct_involution",
    "find_partner",
    "replay",
    "sl2_witness",
    "witness_from_json",
    "witness_to_json",
    "GroupTooLarge",
    "build_group",
    "class_product_count",
    "conjugacy_classes",
    "d_inv",
    "d_proj_inv",
    "dist_to_set",
    "group_order",
    "orbital_diameter_report",
    "scan",
    "scan_matches_statement",
]
