"""
ω-表示模組
提供限制、自由性判定、有限商見證與完整分析
"""

from schutz.presentations.analyzer import SubstitutionAnalyzer
from schutz.presentations.finite_groups import (
    CayleyTableGroup,
    ElementaryAbelianGroup,
    FiniteGroup,
    cyclic_group,
    direct_product,
    symmetric_group,
    trivial_group,
)
from schutz.presentations.freeness import (
    freeness_test,
    omega_presentation_from_substitution,
    pseudovariety_facts,
    verify_report,
)
from schutz.presentations.presentation_types import (
    AnalysisReport,
    CertificateFact,
    FreenessReport,
    OmegaPresentation,
    PseudovarietyFacts,
    QuotientWitness,
    RankStep,
    Restriction,
    Verdict,
)
from schutz.presentations.quotients import (
    abelian_quotient_mod_p,
    finite_quotient_witness,
    group_action,
    verify_witness,
)
from schutz.presentations.restriction import image_generators, restrict, stabilize_restrictions

__all__ = [
    "SubstitutionAnalyzer",
    "AnalysisReport",
    "CertificateFact",
    "FreenessReport",
    "OmegaPresentation",
    "PseudovarietyFacts",
    "QuotientWitness",
    "RankStep",
    "Restriction",
    "Verdict",
    "FiniteGroup",
    "CayleyTableGroup",
    "ElementaryAbelianGroup",
    "cyclic_group",
    "direct_product",
    "symmetric_group",
    "trivial_group",
    "omega_presentation_from_substitution",
    "freeness_test",
    "verify_report",
    "pseudovariety_facts",
    "abelian_quotient_mod_p",
    "finite_quotient_witness",
    "group_action",
    "verify_witness",
    "image_generators",
    "restrict",
    "stabilize_restrictions",
]
