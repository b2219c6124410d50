"""
ω-表示相關的 Type Classes 定義
提供表示、限制、自由性報告、有限商見證與分析報告的類型
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.presentations.finite_groups import FiniteGroup
from schutz.returns.return_types import Connection, ReturnStructure
from schutz.stallings.automaton_types import SpanningTree, StallingsAutomaton, SubgroupBasis
from schutz.substitutions.substitution_types import (
    PeriodicityEvidence,
    PrimitivityResult,
    ProperResult,
)
from schutz.words.word_types import Alphabet


@dataclass(frozen=True)
class OmegaPresentation:
    """
    由定義自同態 φ 決定的 ω-表示 ⟨A | φ̂^ω(a)a⁻¹⟩

    只儲存定義自同態，ω 次冪本身不計算
    """

    definer: GroupEndomorphism
    provenance: str
    evidence: Optional[PeriodicityEvidence] = None

    @property
    def alphabet(self) -> Alphabet:
        return self.definer.alphabet

    @property
    def generator_count(self) -> int:
        return self.definer.size


@dataclass(frozen=True)
class Restriction:
    """φ 限制在 Im(φⁿ) 上，以 basis 表示"""

    step: int
    basis: SubgroupBasis
    endomorphism: GroupEndomorphism
    automaton: StallingsAutomaton
    tree: Optional[SpanningTree] = None

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class RankStep:
    """限制鏈的一步：生成元個數與定義自同態的單射性"""

    step: int
    rank: int
    injective: bool


class Verdict(str, Enum):
    """自由性判定"""

    FREE = "Free"
    NOT_FREE = "NotFree"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CertificateFact:
    """證明鏈中的一項事實，value 為重算時比對的值"""

    step: int
    fact: str
    value: Union[int, bool, None] = None
    detail: str = ""


@dataclass
class FreenessReport:
    """自由性報告：判定、可重算的證明鏈與定義自同態鏈"""

    verdict: Verdict
    certificate: List[CertificateFact] = field(default_factory=list)
    chain: List[GroupEndomorphism] = field(default_factory=list)
    evidence: Optional[PeriodicityEvidence] = None
    notes: List[str] = field(default_factory=list)

    @property
    def conditional(self) -> bool:
        """非週期性僅驗證到上限時，判定以非週期性為前提"""
        return self.evidence is not None and self.evidence.is_conditional

    @property
    def decided(self) -> bool:
        return self.verdict != Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class QuotientWitness:
    """有限商見證：assignment（字母 → 元素）生成 H 且 φ̂ⁿ_H(t) = t"""

    group: FiniteGroup
    assignment: Tuple[int, ...]
    exponent: int


@dataclass(frozen=True)
class PseudovarietyFacts:
    """由行列式與可逆性得到的偽簇事實"""

    determinant: int
    unimodular: bool
    invertible: bool
    excluded_primes: Optional[Tuple[int, ...]]
    gp_contained_for: str
    gnil_contained: bool
    v_equals_g: bool
    relatively_free: Optional[bool] = None
    notes: Tuple[str, ...] = ()


@dataclass
class AnalysisReport:
    """單一代換的完整分析報告"""

    primitivity: PrimitivityResult
    evidence: Optional[PeriodicityEvidence] = None
    proper: Optional[ProperResult] = None
    connections: List[Connection] = field(default_factory=list)
    connection: Optional[Connection] = None
    return_structure: Optional[ReturnStructure] = None
    presentation: Optional[OmegaPresentation] = None
    rank_steps: List[RankStep] = field(default_factory=list)
    freeness: Optional[FreenessReport] = None
    facts: Optional[PseudovarietyFacts] = None
    abelian_witnesses: Dict[int, Optional[QuotientWitness]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
