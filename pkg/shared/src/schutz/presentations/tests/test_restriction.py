"""
restriction.py 的基本測試
測試限制到像上的自同態、基底驗證與限制鏈的秩
"""

import pytest
from schutz.endomorphisms import GroupEndomorphism, apply_endo
from schutz.errors import BasisError
from schutz.fixtures.catalog import (
    ENDOMORPHISMS,
    SUBSTITUTIONS,
    THUE_MORSE_FIXED_ELEMENT,
    THUE_MORSE_IMAGE_BASIS,
    THUE_MORSE_IMAGE_BASIS_MISPRINT,
    THUE_MORSE_RESTRICTION_BASIS,
    THUE_MORSE_RESTRICTION_BASIS_MISPRINT,
    XI_BASIS,
    XI_BASIS_PREIMAGES,
    XI_IMAGE_RELATIONS,
    XI_RESTRICTION_MATRIX,
    endomorphism,
    group_words,
)
from schutz.presentations import restrict, stabilize_restrictions
from schutz.substitutions import determinant, incidence_matrix
from schutz.words import parse_group_word, render_group_word


def rendered(e: GroupEndomorphism):
    return tuple(render_group_word(image) for image in e.images)


@pytest.fixture
def xi_return():
    """ξ'_{1,0}"""
    return endomorphism("xi_return_1_0")


def test_restrict_thue_morse_in_given_basis():
    """測試 τ'_{0,1}|₁ 在已知基底上為 0↦02110, 1↦10021, 2↦2"""
    restriction = restrict(
        endomorphism("thue_morse_return_0_1"), basis=group_words(THUE_MORSE_RESTRICTION_BASIS)
    )
    assert rendered(restriction.endomorphism) == ENDOMORPHISMS["thue_morse_restriction"]
    assert restriction.rank == 3
    assert restriction.tree is None


def test_thue_morse_fixed_element():
    """測試 02'12'3 為 τ'_{0,1} 的固定元素"""
    word = parse_group_word(THUE_MORSE_FIXED_ELEMENT)
    assert apply_endo(endomorphism("thue_morse_return_0_1"), word) == word


@pytest.mark.parametrize(
    "name, basis",
    [
        ("thue_morse_return_0_1", THUE_MORSE_RESTRICTION_BASIS_MISPRINT),
        ("thue_morse_return_0_10", THUE_MORSE_IMAGE_BASIS_MISPRINT),
    ],
)
def test_restrict_rejects_misprinted_basis(name, basis):
    """測試不屬於像的基底被拒絕"""
    with pytest.raises(BasisError):
        restrict(endomorphism(name), basis=group_words(basis))


def test_restrict_rejects_short_basis():
    """測試元素個數與像的秩不符"""
    with pytest.raises(BasisError, match="秩"):
        restrict(
            endomorphism("thue_morse_return_0_10"), basis=group_words(THUE_MORSE_IMAGE_BASIS[:3])
        )


def test_restrict_accepts_image_basis():
    """測試 Im(τ'_{0,10}) 的圖形基底"""
    restriction = restrict(
        endomorphism("thue_morse_return_0_10"), basis=group_words(THUE_MORSE_IMAGE_BASIS)
    )
    assert restriction.rank == 4


def test_xi_basis_preimages(xi_return):
    """測試 X = ξ'_{1,0}(Y)"""
    for preimage, element in zip(XI_BASIS_PREIMAGES, XI_BASIS):
        assert render_group_word(apply_endo(xi_return, parse_group_word(preimage))) == element


def test_xi_image_relations(xi_return):
    """測試 ξ'_{1,0} 不是單射的兩個關係"""
    for left, right in XI_IMAGE_RELATIONS:
        assert apply_endo(xi_return, parse_group_word(left)) == apply_endo(
            xi_return, parse_group_word(right)
        )


def test_restrict_xi_in_basis_x(xi_return):
    """測試 ξ'_{1,0}|₁ 在基底 X 上的表示與關聯矩陣"""
    restriction = restrict(xi_return, basis=group_words(XI_BASIS))
    psi = restriction.endomorphism
    assert rendered(psi) == ENDOMORPHISMS["xi_restriction"]
    assert incidence_matrix(psi).rows == XI_RESTRICTION_MATRIX
    assert determinant(incidence_matrix(psi)) == 1


def test_restrict_default_basis(xi_return):
    """測試預設生成樹基底：秩 5，行列式與基底 X 相同"""
    restriction = restrict(xi_return)
    assert restriction.rank == 5
    assert restriction.tree is not None
    assert determinant(incidence_matrix(restriction.endomorphism)) == 1


def test_restrict_requires_positive_step():
    """測試 n 必須為正整數"""
    with pytest.raises(ValueError, match="正整數"):
        restrict(endomorphism("nielsen"), 0)


def test_restrict_trivial_image():
    """測試像為平凡群"""
    with pytest.raises(BasisError, match="平凡群"):
        restrict(GroupEndomorphism.from_texts(["e"]))


def test_restrict_second_power():
    """測試 n = 2 的限制"""
    restriction = restrict(endomorphism("thue_morse_return_0_1"), 2)
    assert restriction.step == 2
    assert restriction.rank == 3


@pytest.mark.parametrize(
    "name, ranks",
    [
        ("thue_morse_return_0_1", [4, 3, 3]),
        ("xi_return_1_0", [7, 5, 5]),
        ("zero_det", [2, 1, 1]),
    ],
)
def test_stabilize_restrictions(name, ranks):
    """測試限制鏈的秩"""
    steps = stabilize_restrictions(endomorphism(name), 4)
    assert [step.rank for step in steps] == ranks
    assert steps[-1].injective


def test_stabilize_respects_max_steps():
    """測試最大步數"""
    steps = stabilize_restrictions(endomorphism("xi_return_1_0"), 1)
    assert [step.rank for step in steps] == [7, 5]


@pytest.mark.parametrize("name", [*SUBSTITUTIONS, *ENDOMORPHISMS])
def test_rank_stabilizes_exactly_at_injectivity(name):
    """測試限制鏈中秩不變若且唯若前一步的自同態為單射"""
    steps = stabilize_restrictions(endomorphism(name), 6)
    for before, after in zip(steps, steps[1:]):
        assert after.rank <= before.rank
        assert (after.rank == before.rank) == before.injective
    if len(steps) <= 6:
        assert steps[-1].injective
