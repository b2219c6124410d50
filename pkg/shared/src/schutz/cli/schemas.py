"""
JSON 輸出與命令列選項的 Pydantic 模型
以及由領域物件轉換為模型的輔助函數
"""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator

from schutz.presentations.presentation_types import (
    AnalysisReport,
    FreenessReport,
    PseudovarietyFacts,
    QuotientWitness,
    RankStep,
    Restriction,
)
from schutz.returns.return_types import Connection, ReturnStructure
from schutz.stallings.automaton_types import FoldResult, SpanningTree, StallingsAutomaton
from schutz.substitutions.substitution_types import PeriodicityEvidence
from schutz.words.word_text import letter_symbol, render_group_word, render_monoid_word
from schutz.words.word_types import Alphabet, GroupWord


# Pydantic 模型定義
class CommandOptions(BaseModel):
    """命令列選項模型"""

    max_complexity: Optional[int] = Field(None, description="週期性檢查的複雜度上限 N")
    max_restrict: Optional[int] = Field(None, description="最大限制次數")
    connection: Optional[str] = Field(None, description="連接，寫作 u,v")
    basis: Optional[str] = Field(None, description="基底檔案路徑")
    dot: Optional[str] = Field(None, description="DOT 輸出路徑")
    json_output: bool = Field(default=False, description="以 JSON 輸出")
    verbose: bool = Field(default=False, description="輸出除錯日誌")

    @field_validator("max_complexity", "max_restrict")
    @classmethod
    def validate_positive(cls, v):
        if v is not None and v < 1:
            raise ValueError("上限必須是正整數")
        return v

    @field_validator("connection")
    @classmethod
    def validate_connection(cls, v):
        if v is None:
            return v
        parts = [part.strip() for part in v.split(",")]
        if len(parts) != 2 or not all(parts):
            raise ValueError("連接必須寫作 u,v 且兩者非空")
        return v


class ConnectionModel(BaseModel):
    """連接模型"""

    u: str = Field(..., description="連接的左字")
    v: str = Field(..., description="連接的右字")
    k: int = Field(..., description="連接的階")


class ReturnStructureModel(BaseModel):
    """回返結構模型"""

    connection: ConnectionModel
    theta: List[str] = Field(..., description="依最左出現順序的回返字")
    return_substitution: Dict[str, str] = Field(..., description="回返代換")


class EvidenceModel(BaseModel):
    """週期性證據模型"""

    status: str
    period_word: Optional[str] = None
    witness: Optional[int] = None
    reason: Optional[str] = None
    bound: Optional[int] = None


class PrimitivityModel(BaseModel):
    primitive: bool
    exponent: Optional[int] = None


class ProperModel(BaseModel):
    proper: bool
    exponent: Optional[int] = None
    first: Optional[str] = None
    last: Optional[str] = None


class CertificateFactModel(BaseModel):
    """證明鏈事實模型"""

    step: int
    fact: str
    value: Optional[Union[bool, int]] = None
    detail: str = ""


class FreenessModel(BaseModel):
    """自由性報告模型"""

    verdict: str = Field(..., description="Free、NotFree 或 Inconclusive")
    conditional: bool = Field(..., description="是否以非週期性為前提")
    certificate: List[CertificateFactModel] = Field(default_factory=list)
    chain: List[Dict[str, str]] = Field(default_factory=list, description="定義自同態鏈")
    notes: List[str] = Field(default_factory=list)


class RankStepModel(BaseModel):
    step: int
    rank: int
    injective: bool


class FactsModel(BaseModel):
    """偽簇事實模型"""

    determinant: int
    unimodular: bool
    invertible: bool
    excluded_primes: Optional[List[int]] = None
    Gp_contained_for: str
    Gnil_contained: bool
    V_equals_G: bool
    relatively_free: Optional[bool] = Field(None, description="φ 可逆時 G(φ) 是否相對自由")
    notes: List[str] = Field(default_factory=list)


class QuotientWitnessModel(BaseModel):
    group: str
    assignment: List[int]
    exponent: int


class PresentationModel(BaseModel):
    provenance: str
    definer: Dict[str, str]


class AnalysisModel(BaseModel):
    """完整分析報告模型，欄位與 AnalysisReport 相同"""

    primitivity: PrimitivityModel
    evidence: Optional[EvidenceModel] = None
    proper: Optional[ProperModel] = None
    connections: List[ConnectionModel] = Field(default_factory=list)
    connection: Optional[ConnectionModel] = None
    return_structure: Optional[ReturnStructureModel] = None
    presentation: Optional[PresentationModel] = None
    rank_steps: List[RankStepModel] = Field(default_factory=list)
    freeness: Optional[FreenessModel] = None
    facts: Optional[FactsModel] = None
    abelian_witnesses: Dict[str, Optional[QuotientWitnessModel]] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)


class AutomatonModel(BaseModel):
    """自動機模型，edges 為 [起點, 字母, 終點]"""

    states: int
    basepoint: int
    edges: List[List[int]]


class RestrictionModel(BaseModel):
    step: int
    rank: int
    basis: List[str]
    endomorphism: Dict[str, str]
    automaton: AutomatonModel
    tree: Optional[List[int]] = None


class StallingsModel(BaseModel):
    automaton: AutomatonModel
    rank: int
    tree: List[int]
    basis: List[str]
    injective: bool
    relation: Optional[str] = None


class ExampleResultModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class ExamplesModel(BaseModel):
    results: List[ExampleResultModel]
    passed: int
    failed: int


def _symbol(alphabet: Alphabet, letter: int) -> str:
    return letter_symbol(letter, alphabet)


def images_dict(morphism) -> Dict[str, str]:
    """字母符號 → 像的文字"""
    alphabet = morphism.alphabet
    result = {}
    for letter, image in enumerate(morphism.images):
        if isinstance(image, GroupWord):
            result[_symbol(alphabet, letter)] = render_group_word(image, alphabet)
        else:
            result[_symbol(alphabet, letter)] = render_monoid_word(image, alphabet)
    return result


def connection_model(connection: Connection, alphabet: Alphabet) -> ConnectionModel:
    return ConnectionModel(
        u=render_monoid_word(connection.u, alphabet),
        v=render_monoid_word(connection.v, alphabet),
        k=connection.order,
    )


def return_structure_model(structure: ReturnStructure, alphabet: Alphabet) -> ReturnStructureModel:
    return ReturnStructureModel(
        connection=connection_model(structure.connection, alphabet),
        theta=[render_monoid_word(word, alphabet) for word in structure.theta],
        return_substitution=images_dict(structure.return_substitution),
    )


def evidence_model(evidence: PeriodicityEvidence, alphabet: Alphabet) -> EvidenceModel:
    return EvidenceModel(
        status=evidence.status.value,
        period_word=(
            render_monoid_word(evidence.period_word, alphabet)
            if evidence.period_word is not None
            else None
        ),
        witness=evidence.witness,
        reason=evidence.reason,
        bound=evidence.bound,
    )


def freeness_model(report: FreenessReport) -> FreenessModel:
    return FreenessModel(
        verdict=report.verdict.value,
        conditional=report.conditional,
        certificate=[
            CertificateFactModel(
                step=fact.step, fact=fact.fact, value=fact.value, detail=fact.detail
            )
            for fact in report.certificate
        ],
        chain=[images_dict(definer) for definer in report.chain],
        notes=list(report.notes),
    )


def rank_step_models(steps: List[RankStep]) -> List[RankStepModel]:
    return [RankStepModel(step=s.step, rank=s.rank, injective=s.injective) for s in steps]


def facts_model(facts: PseudovarietyFacts) -> FactsModel:
    return FactsModel(
        determinant=facts.determinant,
        unimodular=facts.unimodular,
        invertible=facts.invertible,
        excluded_primes=list(facts.excluded_primes) if facts.excluded_primes is not None else None,
        Gp_contained_for=facts.gp_contained_for,
        Gnil_contained=facts.gnil_contained,
        V_equals_G=facts.v_equals_g,
        relatively_free=facts.relatively_free,
        notes=list(facts.notes),
    )


def witness_model(witness: Optional[QuotientWitness]) -> Optional[QuotientWitnessModel]:
    if witness is None:
        return None
    return QuotientWitnessModel(
        group=witness.group.name, assignment=list(witness.assignment), exponent=witness.exponent
    )


def analysis_model(report: AnalysisReport, alphabet: Alphabet) -> AnalysisModel:
    """AnalysisReport → AnalysisModel，字詞以輸入的符號表輸出"""
    proper = None
    if report.proper is not None:
        proper = ProperModel(
            proper=report.proper.proper,
            exponent=report.proper.exponent,
            first=_symbol(alphabet, report.proper.first) if report.proper.proper else None,
            last=_symbol(alphabet, report.proper.last) if report.proper.proper else None,
        )
    presentation = None
    if report.presentation is not None:
        presentation = PresentationModel(
            provenance=report.presentation.provenance,
            definer=images_dict(report.presentation.definer),
        )
    return AnalysisModel(
        primitivity=PrimitivityModel(
            primitive=report.primitivity.primitive, exponent=report.primitivity.exponent
        ),
        evidence=evidence_model(report.evidence, alphabet) if report.evidence else None,
        proper=proper,
        connections=[connection_model(c, alphabet) for c in report.connections],
        connection=connection_model(report.connection, alphabet) if report.connection else None,
        return_structure=(
            return_structure_model(report.return_structure, alphabet)
            if report.return_structure
            else None
        ),
        presentation=presentation,
        rank_steps=rank_step_models(report.rank_steps),
        freeness=freeness_model(report.freeness) if report.freeness else None,
        facts=facts_model(report.facts) if report.facts else None,
        abelian_witnesses={
            str(p): witness_model(witness) for p, witness in report.abelian_witnesses.items()
        },
        notes=list(report.notes),
    )


def automaton_model(automaton: StallingsAutomaton) -> AutomatonModel:
    return AutomatonModel(
        states=automaton.state_count,
        basepoint=automaton.basepoint,
        edges=[list(transition) for transition in automaton.transitions],
    )


def restriction_model(restriction: Restriction, alphabet: Alphabet) -> RestrictionModel:
    return RestrictionModel(
        step=restriction.step,
        rank=restriction.rank,
        basis=[render_group_word(word, alphabet) for word in restriction.basis.elements],
        endomorphism=images_dict(restriction.endomorphism),
        automaton=automaton_model(restriction.automaton),
        tree=list(restriction.tree.edges) if restriction.tree is not None else None,
    )


def stallings_model(
    fold_result: FoldResult, tree: SpanningTree, basis: List[GroupWord], alphabet: Alphabet
) -> StallingsModel:
    relation = fold_result.shortest_relation()
    return StallingsModel(
        automaton=automaton_model(fold_result.automaton),
        rank=fold_result.rank,
        tree=list(tree.edges),
        basis=[render_group_word(word, alphabet) for word in basis],
        injective=fold_result.injective,
        relation=render_group_word(relation) if relation is not None else None,
    )
