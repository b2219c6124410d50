"""
代換模組
提供代換的迭代、原始性、因子語言、關聯矩陣與週期性證據
"""

from schutz.substitutions.periodicity import periodicity_evidence
from schutz.substitutions.substitution_operations import (
    apply,
    compose,
    determinant,
    factor_complexity,
    first_letter_map,
    identity_substitution,
    in_language,
    incidence_matrix,
    is_primitive,
    is_proper,
    language_factors,
    last_letter_map,
    power,
    require_primitive,
)
from schutz.substitutions.substitution_types import (
    IntegerMatrix,
    PeriodicityEvidence,
    PeriodicityStatus,
    PrimitivityResult,
    ProperResult,
    Substitution,
)

__all__ = [
    "Substitution",
    "IntegerMatrix",
    "PeriodicityEvidence",
    "PeriodicityStatus",
    "PrimitivityResult",
    "ProperResult",
    "apply",
    "compose",
    "power",
    "identity_substitution",
    "is_primitive",
    "require_primitive",
    "language_factors",
    "in_language",
    "factor_complexity",
    "incidence_matrix",
    "determinant",
    "first_letter_map",
    "last_letter_map",
    "is_proper",
    "periodicity_evidence",
]
