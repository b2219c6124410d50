"""
periodicity.py 的基本測試
測試週期性證據的三種狀態
"""

import pytest
from schutz.errors import NotPrimitiveError
from schutz.fixtures.catalog import substitution
from schutz.substitutions import (
    PeriodicityStatus,
    Substitution,
    factor_complexity,
    periodicity_evidence,
)
from schutz.substitutions.periodicity import UNIMODULAR_REASON
from schutz.words import render_monoid_word


def test_periodic_substitution_is_proven_periodic():
    """測試 0↦02, 1↦21, 2↦10 的週期字為 021，見證 n = 3"""
    evidence = periodicity_evidence(substitution("periodic"), 10)
    assert evidence.status == PeriodicityStatus.PERIODIC_PROVEN
    assert evidence.is_periodic
    assert render_monoid_word(evidence.period_word) == "021"
    assert evidence.witness == 3


def test_periodic_complexity_is_constant():
    """測試週期代換的複雜度 p(1) = p(2) = p(3) = 3"""
    assert factor_complexity(substitution("periodic"), 3) == [1, 3, 3, 3]


@pytest.mark.parametrize("name", ["xi", "fibonacci"])
def test_unimodular_is_proven_aperiodic(name):
    """測試單模關聯矩陣直接證明非週期"""
    evidence = periodicity_evidence(substitution(name), 10)
    assert evidence.status == PeriodicityStatus.APERIODIC_PROVEN
    assert evidence.reason == UNIMODULAR_REASON
    assert not evidence.is_conditional


def test_period_doubling_is_aperiodic_up_to_bound():
    """測試 ϱ 在 N = 30 內未發現週期"""
    evidence = periodicity_evidence(substitution("period_doubling"), 30)
    assert evidence.status == PeriodicityStatus.APERIODIC_UP_TO
    assert evidence.bound == 30
    assert evidence.is_conditional
    assert not evidence.is_periodic


def test_thue_morse_complexity():
    """測試 Thue–Morse 前幾項複雜度"""
    assert factor_complexity(substitution("thue_morse"), 4) == [1, 2, 4, 6, 10]


def test_periodicity_requires_primitive():
    """測試非原始代換"""
    with pytest.raises(NotPrimitiveError):
        periodicity_evidence(Substitution.from_texts(["0", "01"]), 5)
