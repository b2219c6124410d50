"""
範例目錄模組
"""

from schutz.fixtures.catalog import (
    ENDOMORPHISMS,
    SUBSTITUTIONS,
    AutomatonFigure,
    endomorphism,
    group_words,
    monoid_words,
    return_substitution,
    substitution,
)

__all__ = [
    "SUBSTITUTIONS",
    "ENDOMORPHISMS",
    "AutomatonFigure",
    "substitution",
    "endomorphism",
    "return_substitution",
    "group_words",
    "monoid_words",
]
