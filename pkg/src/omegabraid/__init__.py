"""Finite and infinitary braid groups: words, towers, free-product actions and PL geometry."""

from __future__ import annotations

from .dagger import (
    AutomorphismTower,
    DaggerAutomorphism,
    check_dagger,
    check_diagram,
    induced_level_map,
    reconstruct_braid,
)
from .equivalence import equivalent, generalized_equivalent, is_trivial
from .freegroup import FreeWord, artin_action
from .garside import NormalForm, garside_normal_form
from .geometry import CPoint, PLBraid, certify_disjoint, dogleg_connect, pl_to_word, word_to_pl
from .handle import handle_reduce
from .tower import (
    OmegaBraidTower,
    abelianization_push,
    explicit_tower,
    finitely_supported,
    torsion_check,
    towers_equivalent,
    validate_coherence,
    winding_tower,
)
from .words import (
    BraidWord,
    GeneralizedBraid,
    Permutation,
    compose,
    delete_strand,
    exponent_sum,
    inverse,
    parse_word,
    underlying_permutation,
)

__all__ = [
    "AutomorphismTower", "BraidWord", "CPoint", "DaggerAutomorphism", "FreeWord",
    "GeneralizedBraid", "NormalForm", "OmegaBraidTower", "PLBraid", "Permutation",
    "abelianization_push", "artin_action", "certify_disjoint", "check_dagger",
    "check_diagram", "compose", "delete_strand", "dogleg_connect", "equivalent",
    "explicit_tower", "exponent_sum", "finitely_supported", "garside_normal_form",
    "generalized_equivalent", "handle_reduce", "induced_level_map", "inverse",
    "is_trivial", "parse_word", "pl_to_word", "reconstruct_braid", "torsion_check",
    "towers_equivalent", "underlying_permutation", "validate_coherence",
    "winding_tower", "word_to_pl",
]
