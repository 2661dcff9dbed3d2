"""Small-cancellation presentations with doubly exponential relators.

Exact syllable-compressed words, the relator families w_n, B(S), B'(S),
piece search and C'(lambda) verification, Dehn's algorithm, the quotients
G_k and k-relatedness of length spectra.
"""

from .dehn import dehn_reduce, find_major_subword, is_trivial, validate_trace
from .errors import (
    BudgetExceeded,
    DuplicateRelator,
    NotMajorityReduced,
    SchemaError,
    SCGError,
    StepLimitExceeded,
    WordSyntaxError,
)
from .families import (
    FamilySpec,
    Presentation,
    SetSpec,
    build_b_power,
    build_bowditch,
    build_wise_chong,
    load_presentation,
    quotient_presentation,
    save_presentation,
    wise_chong_presentation,
)
from .pieces import longest_common_factor, max_piece, verify_c_prime
from .quotients import QuotientSpec, bowditch_quotient_check, is_trivial_in_Gk, project, rf_witness
from .related import (
    NatSet,
    affine_transform_check,
    compose_witness,
    divergence_profile,
    format_profile,
    length_spectrum,
    min_witness_k,
    related_via_k,
    sym_diff,
)
from .words import (
    CompressedWord,
    CyclicWord,
    concat_reduce,
    cyclic_normalize,
    invert,
    length,
    parse_word,
    primitive_root,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "affine_transform_check",
    "bowditch_quotient_check",
    "BudgetExceeded",
    "build_b_power",
    "build_bowditch",
    "build_wise_chong",
    "compose_witness",
    "CompressedWord",
    "concat_reduce",
    "cyclic_normalize",
    "CyclicWord",
    "dehn_reduce",
    "divergence_profile",
    "DuplicateRelator",
    "FamilySpec",
    "find_major_subword",
    "format_profile",
    "invert",
    "is_trivial",
    "is_trivial_in_Gk",
    "length",
    "length_spectrum",
    "load_presentation",
    "longest_common_factor",
    "max_piece",
    "min_witness_k",
    "NatSet",
    "NotMajorityReduced",
    "parse_word",
    "Presentation",
    "primitive_root",
    "project",
    "quotient_presentation",
    "QuotientSpec",
    "related_via_k",
    "render",
    "rf_witness",
    "save_presentation",
    "SCGError",
    "SchemaError",
    "SetSpec",
    "StepLimitExceeded",
    "sym_diff",
    "validate_trace",
    "verify_c_prime",
    "wise_chong_presentation",
    "WordSyntaxError",
]
