"""
自由性判定模組
ω-表示的建立、行列式/自同構判定、證明鏈重算與偽簇事實
"""

import logging
from typing import List, Optional

import sympy

from schutz.endomorphisms.endomorphism_operations import is_automorphism, is_injective
from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.errors import PeriodicWitnessError
from schutz.presentations.presentation_types import (
    CertificateFact,
    FreenessReport,
    OmegaPresentation,
    PseudovarietyFacts,
    Verdict,
)
from schutz.presentations.restriction import restrict
from schutz.returns.durand import durand, find_connection
from schutz.returns.return_types import Connection
from schutz.stallings.folding import fold_generators
from schutz.substitutions.periodicity import periodicity_evidence
from schutz.substitutions.substitution_operations import determinant, incidence_matrix, is_proper
from schutz.substitutions.substitution_types import PeriodicityEvidence, Substitution

# 設定 logger
logger = logging.getLogger(__name__)

RANK_ONE_NOTE = "代換為週期性，Schützenberger 群為秩 1 的自由 profinite 群"
DETERMINANT_CRITERION = "行列式判準：|det M(φ)| > 1 時 M(φ) 在整數上不可逆，G(φ) 不是自由 profinite 群"
AUTOMORPHISM_FREE = "自同構判準：det ≠ 0 且 φ 是自同構，G(φ) 是自由 profinite 群"
AUTOMORPHISM_NOT_FREE = "自同構判準：det ≠ 0 且 φ 不是自同構，G(φ) 不是自由 profinite 群"


def omega_presentation_from_substitution(
    s: Substitution,
    bound: int,
    connection: Optional[Connection] = None,
    evidence: Optional[PeriodicityEvidence] = None,
) -> OmegaPresentation:
    """
    由原始非週期代換建立 ω-表示

    真代換以自身為定義自同態，否則使用連接上的回返代換

    Args:
        s: 原始代換
        bound: 週期性檢查的複雜度上限
        connection: 指定連接，未提供時以 find_connection 搜尋
        evidence: 已計算的週期性證據

    Raises:
        PeriodicWitnessError: 代換為週期性
    """
    evidence = evidence or periodicity_evidence(s, bound)
    if evidence.is_periodic:
        raise PeriodicWitnessError(RANK_ONE_NOTE, return_word=evidence.period_word)

    if connection is None and is_proper(s):
        return OmegaPresentation(
            GroupEndomorphism.from_substitution(s), "真代換本身定義的 ω-表示", evidence
        )

    connection = connection or find_connection(s)
    structure = durand(s, connection)
    return OmegaPresentation(
        GroupEndomorphism.from_substitution(structure.return_substitution),
        f"連接 {connection} 上的回返代換",
        evidence,
    )


def _determinant_detail(d: int) -> str:
    if d == 0:
        return "det = 0，自同構判準不適用，改為限制到像上"
    if abs(d) > 1:
        return f"det = {d}；{DETERMINANT_CRITERION}"
    return f"det = {d}，M(φ) 在整數上可逆，由是否為自同構決定"


def freeness_test(presentation: OmegaPresentation, max_steps: int) -> FreenessReport:
    """
    自由性判定

    d = det M(φ) ≠ 0 時：φ 為自同構則 Free，否則 NotFree；
    d = 0 時反覆限制到 Im(φ)，最多 max_steps 次，全為 0 則 Inconclusive

    Args:
        presentation: ω-表示
        max_steps: 最大限制次數

    Returns:
        FreenessReport
    """
    report = FreenessReport(Verdict.INCONCLUSIVE, evidence=presentation.evidence)
    current = presentation.definer
    for step in range(max_steps + 1):
        report.chain.append(current)
        d = determinant(incidence_matrix(current))
        report.certificate.append(CertificateFact(step, "determinant", d, _determinant_detail(d)))
        if d != 0:
            automorphism = is_automorphism(current)
            report.certificate.append(
                CertificateFact(
                    step,
                    "automorphism",
                    automorphism,
                    AUTOMORPHISM_FREE if automorphism else AUTOMORPHISM_NOT_FREE,
                )
            )
            report.verdict = Verdict.FREE if automorphism else Verdict.NOT_FREE
            if not automorphism and abs(d) > 1:
                report.notes.append(f"|det| = {abs(d)} > 1，矩陣在整數上不可逆")
            logger.info(f"第 {step} 步判定: {report.verdict.value} (det = {d})")
            break

        if step == max_steps:
            report.notes.append(f"限制 {max_steps} 次後行列式仍為 0")
            break
        if is_injective(current).injective:
            report.certificate.append(CertificateFact(step, "injective", True, "定義自同態為單射"))
            report.notes.append("定義自同態為單射且 det = 0，其限制與自身共軛，行列式不會改變")
            break
        if fold_generators(current.images).rank == 0:
            report.notes.append("Im(φ) 為平凡群")
            break
        current = restrict(current, 1).endomorphism
        report.certificate.append(
            CertificateFact(step + 1, "restriction_rank", current.size, f"限制後有 {current.size} 個生成元")
        )

    if report.conditional:
        report.notes.append(f"以非週期性為前提（僅檢查到 N = {report.evidence.bound}）")
    return report


def verify_report(presentation: OmegaPresentation, report: FreenessReport) -> bool:
    """重算證明鏈：行列式、自同構、單射性與限制秩必須與報告一致"""
    current = presentation.definer
    step = 0
    for fact in report.certificate:
        while fact.step > step:
            current = restrict(current, 1).endomorphism
            step += 1
        if fact.fact == "determinant":
            recomputed = determinant(incidence_matrix(current))
        elif fact.fact == "automorphism":
            recomputed = is_automorphism(current)
        elif fact.fact == "injective":
            recomputed = is_injective(current).injective
        elif fact.fact == "restriction_rank":
            recomputed = current.size
        else:
            return False
        if recomputed != fact.value:
            logger.warning(f"證明鏈第 {fact.step} 步 {fact.fact} 重算不一致")
            return False
    return True


def _describe_primes(determinant_value: int) -> str:
    if determinant_value == 0:
        return "none"
    excluded = sympy.primefactors(abs(determinant_value))
    if not excluded:
        return "all primes"
    return "all primes except " + ", ".join(str(p) for p in excluded)


def pseudovariety_facts(
    s: Substitution, verdict: Optional[Verdict] = None
) -> PseudovarietyFacts:
    """
    偽簇事實

    p ∤ det M(φ) 時 Gₚ ⊆ V(φ)；單模時 Gₙᵢₗ ⊆ V(φ)；φ 可逆時 V(φ) = G，
    此時 G(φ) 相對自由若且唯若絕對自由，relatively_free 由自由性判定決定

    Args:
        s: 代換
        verdict: 自由性判定，未提供或不確定時 relatively_free 為 None
    """
    d = determinant(incidence_matrix(s))
    endomorphism = GroupEndomorphism.from_substitution(s)
    invertible = is_automorphism(endomorphism)
    unimodular = abs(d) == 1
    notes: List[str] = []
    relatively_free: Optional[bool] = None
    if invertible:
        notes.append("φ 可逆：相對自由若且唯若絕對自由")
        if verdict in (Verdict.FREE, Verdict.NOT_FREE):
            relatively_free = verdict == Verdict.FREE
            conclusion = "是" if relatively_free else "不是"
            notes.append(f"判定為 {verdict.value}，G(φ) {conclusion}相對自由 profinite 群")
    return PseudovarietyFacts(
        determinant=d,
        unimodular=unimodular,
        invertible=invertible,
        excluded_primes=tuple(sympy.primefactors(abs(d))) if d != 0 else None,
        gp_contained_for=_describe_primes(d),
        gnil_contained=unimodular,
        v_equals_g=invertible,
        relatively_free=relatively_free,
        notes=tuple(notes),
    )
