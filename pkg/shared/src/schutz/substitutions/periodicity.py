"""
週期性證據模組
以因子複雜度（Morse–Hedlund 準則）與單模性產生三態證據
"""

import logging
from typing import Dict, Tuple

from schutz.substitutions.substitution_operations import (
    _factor_tuples,
    determinant,
    factor_complexity,
    incidence_matrix,
    require_primitive,
)
from schutz.substitutions.substitution_types import (
    PeriodicityEvidence,
    PeriodicityStatus,
    Substitution,
)
from schutz.words.word_types import MonoidWord

# 設定 logger
logger = logging.getLogger(__name__)

UNIMODULAR_REASON = "unimodular"


def _period_word(s: Substitution, length: int, period: int) -> MonoidWord:
    """
    在長度 length 的 Rauzy 圖中沿唯一右延伸走訪，取回長度 period 的週期字

    呼叫前需確認 p(length) = p(length + 1)
    """
    extensions: Dict[Tuple[int, ...], int] = {}
    for factor in _factor_tuples(s, length + 1):
        if len(factor) == length + 1:
            extensions[factor[:-1]] = factor[-1]
    start = min(extensions)
    walked = list(start)
    current = start
    while len(walked) < period + length:
        letter = extensions[current]
        walked.append(letter)
        current = (current + (letter,))[1:]
    return MonoidWord(tuple(walked[:period]))


def periodicity_evidence(s: Substitution, bound: int) -> PeriodicityEvidence:
    """
    週期性證據

    Args:
        s: 原始代換
        bound: 複雜度檢查長度上限 N

    Returns:
        PeriodicProven（附週期字與見證 n）、AperiodicProven("unimodular")
        或 AperiodicUpTo(N)

    Raises:
        NotPrimitiveError: 代換不是原始代換
    """
    require_primitive(s)
    if abs(determinant(incidence_matrix(s))) == 1:
        logger.debug("關聯矩陣為單模，代換為非週期")
        return PeriodicityEvidence(PeriodicityStatus.APERIODIC_PROVEN, reason=UNIMODULAR_REASON)

    counts = factor_complexity(s, bound + 1)
    for n in range(1, bound + 1):
        if counts[n] <= n:
            # p 單調不減且 p(0) = 1，p(n) ≤ n 表示某 m < n 有 p(m) = p(m+1)
            m = next(m for m in range(n) if counts[m] == counts[m + 1])
            word = _period_word(s, m, counts[m])
            logger.info(f"因子複雜度 p({n}) = {counts[n]} ≤ {n}，週期字為 {word}")
            return PeriodicityEvidence(
                PeriodicityStatus.PERIODIC_PROVEN, period_word=word, witness=n
            )
    return PeriodicityEvidence(PeriodicityStatus.APERIODIC_UP_TO, bound=bound)
