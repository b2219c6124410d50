"""
代換分析器模組
串接原始性、週期性、回返代換、限制鏈與自由性判定，產生完整報告
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from schutz.config import get_int_setting, get_prime_list
from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.errors import NotPrimitiveError
from schutz.presentations.freeness import (
    RANK_ONE_NOTE,
    freeness_test,
    omega_presentation_from_substitution,
    pseudovariety_facts,
)
from schutz.presentations.presentation_types import (
    AnalysisReport,
    FreenessReport,
    OmegaPresentation,
)
from schutz.presentations.quotients import abelian_quotient_mod_p
from schutz.presentations.restriction import stabilize_restrictions
from schutz.returns.durand import durand, find_connections
from schutz.returns.return_types import Connection, ReturnStructure
from schutz.substitutions.periodicity import periodicity_evidence
from schutz.substitutions.substitution_operations import is_primitive, is_proper
from schutz.substitutions.substitution_types import PeriodicityEvidence, Substitution

# 設定 logger
logger = logging.getLogger(__name__)


def _bound(value: Optional[int], setting: str) -> int:
    """明確提供的上限必須為正整數，未提供時讀取配置"""
    if value is None:
        return get_int_setting(setting)
    if value < 1:
        raise ValueError(f"{setting} 必須為正整數: {value}")
    return value


@dataclass(frozen=True)
class _ConnectionOutcome:
    connection: Connection
    structure: ReturnStructure
    presentation: OmegaPresentation
    freeness: FreenessReport


class SubstitutionAnalyzer:
    """
    代換分析器
    負責執行完整的分析流程並組裝 AnalysisReport
    """

    def __init__(
        self,
        max_complexity: Optional[int] = None,
        max_restrict: Optional[int] = None,
        primes: Optional[List[int]] = None,
        max_workers: int = 4,
    ):
        """
        初始化分析器

        Args:
            max_complexity: 週期性檢查上限 N，預設讀取 SCHUTZ_MAX_COMPLEXITY
            max_restrict: 最大限制次數，預設讀取 SCHUTZ_MAX_RESTRICT
            primes: 交換商見證的質數，預設讀取 SCHUTZ_PRIMES
            max_workers: 並行評估連接的執行緒數
        """
        self.max_complexity = _bound(max_complexity, "MAX_COMPLEXITY")
        self.max_restrict = _bound(max_restrict, "MAX_RESTRICT")
        self.primes = primes if primes is not None else get_prime_list()
        self.max_workers = max_workers

    def _evaluate_connection(
        self, s: Substitution, connection: Connection, evidence: PeriodicityEvidence
    ) -> _ConnectionOutcome:
        structure = durand(s, connection)
        presentation = omega_presentation_from_substitution(
            s, self.max_complexity, connection=connection, evidence=evidence
        )
        return _ConnectionOutcome(
            connection, structure, presentation, freeness_test(presentation, self.max_restrict)
        )

    def _evaluate_connections(
        self, s: Substitution, connections: List[Connection], evidence: PeriodicityEvidence
    ) -> List[_ConnectionOutcome]:
        """各連接互不相依，輸入皆不可變，以執行緒並行評估後依原順序彙整"""
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            return list(
                executor.map(
                    lambda connection: self._evaluate_connection(s, connection, evidence),
                    connections,
                )
            )

    def analyze(self, s: Substitution, connection: Optional[Connection] = None) -> AnalysisReport:
        """
        完整分析代換

        Args:
            s: 代換
            connection: 指定連接，未提供時評估所有最小階單字母連接

        Returns:
            AnalysisReport: 分析報告

        Raises:
            NotPrimitiveError: 代換不是原始代換
        """
        try:
            logger.info(f"開始分析代換: {s.size} 個字母")

            primitivity = is_primitive(s)
            report = AnalysisReport(primitivity)
            if not primitivity:
                raise NotPrimitiveError("代換不是原始代換，無法分析")

            report.evidence = periodicity_evidence(s, self.max_complexity)
            report.facts = pseudovariety_facts(s)
            for p in self.primes:
                report.abelian_witnesses[p] = abelian_quotient_mod_p(
                    GroupEndomorphism.from_substitution(s), p
                )

            if report.evidence.is_periodic:
                report.notes.append(f"{RANK_ONE_NOTE}，週期字為 {report.evidence.period_word}")
                report.notes.append(f"Gₚ-可逆的質數: {report.facts.gp_contained_for}")
                logger.info("代換為週期性，分析結束")
                return report

            report.proper = is_proper(s)
            connections = [connection] if connection else find_connections(s)
            report.connections = connections

            if report.proper and connection is None:
                # 真代換本身即定義 ω-表示，回返結構僅供報告
                report.connection = connections[0]
                report.return_structure = durand(s, connections[0])
                report.presentation = omega_presentation_from_substitution(
                    s, self.max_complexity, evidence=report.evidence
                )
                report.freeness = freeness_test(report.presentation, self.max_restrict)
            else:
                outcomes = self._evaluate_connections(s, connections, report.evidence)
                chosen = next(
                    (outcome for outcome in outcomes if outcome.freeness.decided), outcomes[0]
                )
                report.connection = chosen.connection
                report.return_structure = chosen.structure
                report.presentation = chosen.presentation
                report.freeness = chosen.freeness

            report.facts = pseudovariety_facts(s, report.freeness.verdict)
            report.rank_steps = stabilize_restrictions(
                report.presentation.definer, self.max_restrict
            )
            logger.info(f"分析完成: {report.freeness.verdict.value}")
            return report

        except Exception as e:
            logger.error(f"分析代換失敗: {str(e)}", exc_info=True)
            raise
