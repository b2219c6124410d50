"""
自同態模組
提供自由群自同態的作用、合成、單射性與自同構判定
"""

from schutz.endomorphisms.endomorphism_operations import (
    apply_endo,
    compose,
    invert_automorphism,
    is_automorphism,
    is_injective,
    kernel_witness_check,
    power_endo,
)
from schutz.endomorphisms.endomorphism_types import GroupEndomorphism, InjectivityResult

__all__ = [
    "GroupEndomorphism",
    "InjectivityResult",
    "apply_endo",
    "compose",
    "power_endo",
    "is_injective",
    "is_automorphism",
    "invert_automorphism",
    "kernel_witness_check",
]
