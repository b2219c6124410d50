"""
freeness.py 的基本測試
測試 ω-表示的建立、自由性判定、證明鏈重算與偽簇事實
"""

from dataclasses import replace

import pytest
from schutz.endomorphisms import GroupEndomorphism
from schutz.errors import PeriodicWitnessError
from schutz.fixtures.catalog import endomorphism, substitution
from schutz.presentations.freeness import (
    AUTOMORPHISM_FREE,
    AUTOMORPHISM_NOT_FREE,
    DETERMINANT_CRITERION,
)
from schutz.presentations import (
    OmegaPresentation,
    Verdict,
    freeness_test,
    omega_presentation_from_substitution,
    pseudovariety_facts,
    verify_report,
)
from schutz.words import render_group_word


def presentation(name: str) -> OmegaPresentation:
    return OmegaPresentation(endomorphism(name), name)


def facts_of(report):
    return [(fact.step, fact.fact, fact.value) for fact in report.certificate]


def test_thue_morse_is_inconclusive():
    """測試 τ'_{0,1}：限制後為單射且行列式仍為 0"""
    p = presentation("thue_morse_return_0_1")
    report = freeness_test(p, 4)
    assert report.verdict == Verdict.INCONCLUSIVE
    assert not report.decided
    assert facts_of(report) == [
        (0, "determinant", 0),
        (1, "restriction_rank", 3),
        (1, "determinant", 0),
        (1, "injective", True),
    ]
    assert len(report.chain) == 2
    assert verify_report(p, report)


def test_max_steps_zero():
    """測試不允許限制時直接停止"""
    report = freeness_test(presentation("thue_morse_return_0_1"), 0)
    assert report.verdict == Verdict.INCONCLUSIVE
    assert any("0 次" in note for note in report.notes)


def test_xi_return_is_not_free():
    """測試 ξ'_{1,0}|₁ 的行列式為 1 但不是自同構"""
    p = presentation("xi_return_1_0")
    report = freeness_test(p, 4)
    assert report.verdict == Verdict.NOT_FREE
    assert facts_of(report) == [
        (0, "determinant", 0),
        (1, "restriction_rank", 5),
        (1, "determinant", 1),
        (1, "automorphism", False),
    ]
    assert verify_report(p, report)
    assert report.certificate[-1].detail == AUTOMORPHISM_NOT_FREE


def test_tampered_report_fails_verification():
    """測試竄改的證明鏈無法通過重算"""
    p = presentation("xi_return_1_0")
    report = freeness_test(p, 4)
    report.certificate[2] = replace(report.certificate[2], value=-1)
    assert not verify_report(p, report)


@pytest.mark.parametrize("name", ["xi", "nielsen", "fibonacci"])
def test_automorphisms_are_free(name):
    """測試非零行列式的自同構"""
    report = freeness_test(presentation(name), 4)
    assert report.verdict == Verdict.FREE
    assert report.certificate[-1].fact == "automorphism"
    assert report.certificate[-1].detail == AUTOMORPHISM_FREE


def test_zero_determinant_free_after_restriction():
    """測試 0↦0, 1↦ε 限制一次後為自同構"""
    report = freeness_test(presentation("zero_det"), 4)
    assert report.verdict == Verdict.FREE
    assert report.chain[-1].size == 1


def test_trivial_image_is_inconclusive():
    """測試像為平凡群"""
    report = freeness_test(OmegaPresentation(GroupEndomorphism.from_texts(["e"]), "trivial"), 4)
    assert report.verdict == Verdict.INCONCLUSIVE
    assert any("平凡群" in note for note in report.notes)


def test_presentation_of_proper_substitution():
    """測試真代換 α 以自身為定義自同態，判定 NotFree"""
    p = omega_presentation_from_substitution(substitution("alpha"), 20)
    assert tuple(render_group_word(image) for image in p.definer.images) == ("01", "0001")
    report = freeness_test(p, 4)
    assert report.verdict == Verdict.NOT_FREE
    assert report.conditional
    assert any("> 1" in note for note in report.notes)
    assert report.certificate[0].detail == f"det = -2；{DETERMINANT_CRITERION}"


def test_presentation_of_xi_uses_return_substitution():
    """測試 ξ 不是真代換，使用連接 (1, 0) 上的回返代換"""
    p = omega_presentation_from_substitution(substitution("xi"), 20)
    assert p.generator_count == 7
    assert p.definer == endomorphism("xi_return_1_0")
    report = freeness_test(p, 4)
    assert report.verdict == Verdict.NOT_FREE
    assert not report.conditional


def test_presentation_of_fibonacci_is_free():
    """測試 Fibonacci 代換的回返代換為自同構"""
    p = omega_presentation_from_substitution(substitution("fibonacci"), 20)
    assert freeness_test(p, 4).verdict == Verdict.FREE


def test_presentation_of_periodic_substitution():
    """測試週期代換不建立 ω-表示"""
    with pytest.raises(PeriodicWitnessError, match="秩 1"):
        omega_presentation_from_substitution(substitution("periodic"), 20)


def test_pseudovariety_facts_xi():
    """測試 ξ：單模且可逆"""
    facts = pseudovariety_facts(substitution("xi"))
    assert facts.determinant == -1
    assert facts.unimodular and facts.invertible
    assert facts.excluded_primes == ()
    assert facts.gp_contained_for == "all primes"
    assert facts.gnil_contained
    assert facts.v_equals_g
    assert facts.notes
    assert facts.relatively_free is None


def test_pseudovariety_facts_with_verdict():
    """測試可逆時由判定得到相對自由的結論"""
    xi = pseudovariety_facts(substitution("xi"), Verdict.NOT_FREE)
    assert xi.relatively_free is False
    assert "G(φ) 不是相對自由 profinite 群" in xi.notes[-1]
    assert pseudovariety_facts(substitution("xi"), Verdict.INCONCLUSIVE).relatively_free is None
    alpha = pseudovariety_facts(substitution("alpha"), Verdict.NOT_FREE)
    assert alpha.relatively_free is None


def test_pseudovariety_facts_alpha():
    """測試 α：行列式 -2"""
    facts = pseudovariety_facts(substitution("alpha"))
    assert facts.determinant == -2
    assert facts.excluded_primes == (2,)
    assert facts.gp_contained_for == "all primes except 2"
    assert not facts.gnil_contained
    assert not facts.v_equals_g


def test_pseudovariety_facts_zero_determinant():
    """測試 τ：行列式為 0"""
    facts = pseudovariety_facts(substitution("thue_morse"))
    assert facts.determinant == 0
    assert facts.excluded_primes is None
    assert facts.gp_contained_for == "none"
