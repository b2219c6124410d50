"""
substitution_operations.py 的基本測試
測試代換的作用、冪次、原始性、因子語言、關聯矩陣與行列式
"""

import random

import pytest
from schutz.errors import AlphabetError, NotPrimitiveError
from schutz.fixtures.catalog import (
    XI_RESTRICTION_MATRIX,
    endomorphism,
    return_substitution,
    substitution,
)
from schutz.substitutions import (
    IntegerMatrix,
    Substitution,
    apply,
    determinant,
    in_language,
    incidence_matrix,
    is_primitive,
    is_proper,
    language_factors,
    power,
)
from schutz.words import EMPTY_WORD, parse_monoid_word, render_monoid_word


def m(text: str):
    return parse_monoid_word(text)


def cofactor_determinant(rows):
    """以餘因子展開計算行列式（測試用的對照實作）"""
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for column, entry in enumerate(rows[0]):
        if entry == 0:
            continue
        minor = [row[:column] + row[column + 1 :] for row in rows[1:]]
        total += (-1) ** column * entry * cofactor_determinant(minor)
    return total


@pytest.fixture
def thue_morse():
    """Thue–Morse 代換 τ"""
    return substitution("thue_morse")


def test_substitution_rejects_empty_image():
    """測試代換必須非抹除"""
    with pytest.raises(AlphabetError, match="空字"):
        Substitution.from_texts(["01", "e"])


def test_substitution_rejects_out_of_range_letter():
    """測試像中的字母必須在字母表內"""
    with pytest.raises(AlphabetError):
        Substitution(substitution("thue_morse").alphabet, (m("01"), m("2")))


def test_apply_thue_morse(thue_morse):
    """測試 τ(0) = 01"""
    assert apply(thue_morse, m("0")) == m("01")


def test_apply_xi_square_with_prefix():
    """測試 1·ξ²(0) = 100100102"""
    xi = substitution("xi")
    assert render_monoid_word(m("1") + apply(power(xi, 2), m("0"))) == "100100102"


def test_apply_empty_word(thue_morse):
    """測試作用於空字"""
    assert apply(thue_morse, EMPTY_WORD) == EMPTY_WORD


def test_apply_is_multiplicative(thue_morse):
    """測試 φ(uv) = φ(u)φ(v)"""
    u, v = m("0110"), m("100")
    assert apply(thue_morse, u + v) == apply(thue_morse, u) + apply(thue_morse, v)


def test_power_zero_is_identity(thue_morse):
    """測試 φ⁰ 為恆等代換"""
    identity = power(thue_morse, 0)
    assert identity.images == (m("0"), m("1"))


def test_power_examples(thue_morse):
    """測試 τ²(0) = 0110 與 ϱ²(1) = 0101"""
    assert apply(power(thue_morse, 2), m("0")) == m("0110")
    assert apply(power(substitution("period_doubling"), 2), m("1")) == m("0101")


def test_is_primitive_thue_morse(thue_morse):
    """測試 τ 為原始代換，見證指數為 1"""
    result = is_primitive(thue_morse)
    assert result.primitive
    assert result.exponent == 1


def test_is_primitive_xi():
    """測試 ξ 為原始代換"""
    result = is_primitive(substitution("xi"))
    assert result
    assert result.exponent > 1


def test_is_primitive_one_letter_identity():
    """測試單字母恆等代換不是原始代換"""
    assert not is_primitive(Substitution.from_texts(["0"]))
    assert is_primitive(Substitution.from_texts(["00"])).exponent == 1


def test_is_primitive_reducible():
    """測試 0 ↦ 0, 1 ↦ 01 不是原始代換"""
    assert not is_primitive(Substitution.from_texts(["0", "01"]))


def test_language_factors_thue_morse(thue_morse):
    """測試 τ 長度至多 2 的因子"""
    factors = {render_monoid_word(word) for word in language_factors(thue_morse, 2)}
    assert factors == {"e", "0", "1", "00", "01", "10", "11"}


def test_language_factors_periodic():
    """測試週期代換長度 3 的因子恰為 021 的旋轉"""
    factors = language_factors(substitution("periodic"), 3)
    length_three = {render_monoid_word(word) for word in factors if len(word) == 3}
    assert length_three == {"021", "210", "102"}


def test_language_factors_length_zero(thue_morse):
    """測試長度 0 只有空字"""
    assert language_factors(thue_morse, 0) == frozenset({EMPTY_WORD})


def test_language_factors_requires_primitive():
    """測試非原始代換不支援因子語言"""
    with pytest.raises(NotPrimitiveError, match="原始代換"):
        language_factors(Substitution.from_texts(["0", "01"]), 2)


@pytest.mark.parametrize("name", ["thue_morse", "xi", "period_doubling", "alpha"])
def test_language_factors_closed_and_extendable(name):
    """測試因子集合封閉於取因子且可向右延伸"""
    s = substitution(name)
    length = 6
    factors = {word.letters for word in language_factors(s, length)}
    for word in factors:
        for start in range(len(word)):
            for stop in range(start, len(word) + 1):
                assert word[start:stop] in factors
        if len(word) < length:
            assert any(word + (letter,) in factors for letter in s.alphabet.letters)


def test_in_language(thue_morse):
    """測試 000 不屬於 Thue–Morse 語言"""
    assert in_language(thue_morse, m("0110"))
    assert not in_language(thue_morse, m("000"))


def test_incidence_matrix_alpha():
    """測試 M(α)"""
    assert incidence_matrix(substitution("alpha")).rows == ((1, 1), (3, 1))


def test_incidence_matrix_xi_restriction():
    """測試 ξ'_{1,0}|₁ 的關聯矩陣"""
    assert incidence_matrix(endomorphism("xi_restriction")).rows == XI_RESTRICTION_MATRIX


def test_incidence_matrix_signed_counts():
    """測試群自同態使用帶號計數"""
    matrix = incidence_matrix(endomorphism("xi_inverse"))
    # 1'02'3：0 出現一次，1 與 2 各抵銷為 -1，3 出現一次
    assert matrix.rows[0] == (1, -1, -1, 1)


def test_incidence_matrix_identity(thue_morse):
    """測試恆等代換的關聯矩陣"""
    assert incidence_matrix(power(thue_morse, 0)) == IntegerMatrix.identity(2)


@pytest.mark.parametrize("name", ["thue_morse", "xi", "alpha", "period_doubling", "fibonacci"])
def test_incidence_matrix_of_power(name):
    """測試 M(φⁿ) = M(φ)ⁿ"""
    s = substitution(name)
    for n in range(1, 6):
        assert incidence_matrix(power(s, n)) == incidence_matrix(s).power(n)


def test_determinant_fixtures():
    """測試行列式範例值"""
    assert determinant(incidence_matrix(substitution("alpha"))) == -2
    assert determinant(incidence_matrix(return_substitution("period_doubling_return_1_0"))) == 4
    assert determinant(incidence_matrix(endomorphism("xi_restriction"))) == 1
    assert determinant(incidence_matrix(substitution("xi"))) == -1


def test_determinant_against_cofactor_expansion():
    """測試 Bareiss 行列式與餘因子展開一致"""
    rng = random.Random(20240602)
    for _ in range(100):
        rows = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        assert determinant(IntegerMatrix.from_lists(rows)) == cofactor_determinant(rows)


def test_integer_matrix_must_be_square():
    """測試非方陣"""
    with pytest.raises(ValueError, match="方陣"):
        IntegerMatrix(((1, 2),))


def test_is_proper_alpha():
    """測試 α 為真代換"""
    result = is_proper(substitution("alpha"))
    assert result.proper
    assert (result.exponent, result.first, result.last) == (1, 0, 1)


def test_is_proper_thue_morse(thue_morse):
    """測試 τ 不是真代換"""
    assert not is_proper(thue_morse)


@pytest.mark.parametrize(
    "name", ["thue_morse_return_0_1", "thue_morse_return_0_10", "xi_return_1_0"]
)
def test_return_substitutions_are_proper(name):
    """測試回返代換皆為真代換"""
    assert is_proper(return_substitution(name))
