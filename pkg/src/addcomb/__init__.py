"""Additive combinatorics over finite semigroups.

Carriers are validated Cayley tables over the carrier [0, n); subsets are
bit-vector sets.  The package computes sumsets, difference sets, the
order-based bound constants, the candidate-driven set transform with its
audit, localization via systems of distinct representatives, and ships a
vectorized harness that exhaustively verifies every catalogued bound on
small carriers.
"""

from .constants import (
    OmegaBreakdown,
    cd_constant,
    delta,
    omega,
    omega_gcd_crosscheck,
    omega_pair,
    pillai_delta,
)
from .core import (
    INFINITY,
    MAX_CARRIER,
    ElementSet,
    ExtendedNat,
    FiniteSemigroup,
    build_semigroup,
    centralizer,
    cyclic,
    dihedral,
    element_order,
    generated_subsemigroup,
    leftzero,
    maxchain,
    p_constant,
    parse_cayley_text,
    product,
    quaternion8,
    unitization,
)
from .errors import (
    AddcombError,
    BadZ,
    CandidateInvalid,
    CarrierTooLarge,
    EmptySet,
    EmptyTransform,
    IndexOutOfRange,
    NoWitness,
    NonAssociative,
    NotGroup,
    NotUnital,
    ParseError,
    PreconditionFailed,
    UnknownSpec,
    ValidationError,
)
from .localization import (
    LocalizationResult,
    SumMatrix,
    hall_check,
    localize,
    sum_matrix,
)
from .setops import (
    left_difference,
    n_fold,
    right_difference,
    span_check,
    span_is_commutative,
    sumset,
)
from .sweep import SweepSummary, TightPair, Violation, sweep
from .theorems import (
    STATEMENTS,
    BoundReport,
    builtin_groups,
    builtin_monoids,
    normalize_statement,
    run_statement,
    verify_cd,
    verify_hk,
    verify_kemperman_weak,
    verify_main,
    verify_mirror,
    verify_zmod,
)
from .transform import (
    TransformAudit,
    TransformResult,
    apply_transform,
    audit_transform,
    transform_candidates,
)

__version__ = "0.1.0"

__all__ = [
    "AddcombError",
    "BadZ",
    "BoundReport",
    "CandidateInvalid",
    "CarrierTooLarge",
    "ElementSet",
    "EmptySet",
    "EmptyTransform",
    "ExtendedNat",
    "FiniteSemigroup",
    "INFINITY",
    "IndexOutOfRange",
    "LocalizationResult",
    "MAX_CARRIER",
    "NoWitness",
    "NonAssociative",
    "NotGroup",
    "NotUnital",
    "OmegaBreakdown",
    "ParseError",
    "PreconditionFailed",
    "STATEMENTS",
    "SumMatrix",
    "SweepSummary",
    "TightPair",
    "TransformAudit",
    "TransformResult",
    "UnknownSpec",
    "ValidationError",
    "Violation",
    "apply_transform",
    "audit_transform",
    "build_semigroup",
    "builtin_groups",
    "builtin_monoids",
    "cd_constant",
    "centralizer",
    "cyclic",
    "delta",
    "dihedral",
    "element_order",
    "generated_subsemigroup",
    "hall_check",
    "left_difference",
    "leftzero",
    "localize",
    "maxchain",
    "n_fold",
    "normalize_statement",
    "omega",
    "omega_gcd_crosscheck",
    "omega_pair",
    "p_constant",
    "parse_cayley_text",
    "pillai_delta",
    "product",
    "quaternion8",
    "right_difference",
    "run_statement",
    "span_check",
    "span_is_commutative",
    "sum_matrix",
    "sumset",
    "sweep",
    "transform_candidates",
    "unitization",
    "verify_cd",
    "verify_hk",
    "verify_kemperman_weak",
    "verify_main",
    "verify_mirror",
    "verify_zmod",
]
