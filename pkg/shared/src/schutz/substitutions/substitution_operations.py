"""
代換運算模組
迭代、原始性、因子語言、真代換判定、關聯矩陣與精確行列式
"""

import logging
from collections import deque
from functools import lru_cache
from itertools import chain
from typing import FrozenSet, List, Set, Tuple, Union

import numpy as np
import sympy

from schutz.errors import NotPrimitiveError
from schutz.substitutions.substitution_types import (
    IntegerMatrix,
    PrimitivityResult,
    ProperResult,
    Substitution,
)
from schutz.words.word_operations import signed_count
from schutz.words.word_types import Alphabet, GroupWord, MonoidWord

# 設定 logger
logger = logging.getLogger(__name__)


def apply(s: Substitution, word: MonoidWord) -> MonoidWord:
    """將代換作用於字詞：各字母像的串接"""
    return MonoidWord(tuple(chain.from_iterable(s.images[letter].letters for letter in word.letters)))


def identity_substitution(alphabet: Alphabet) -> Substitution:
    return Substitution(alphabet, tuple(MonoidWord((letter,)) for letter in alphabet.letters))


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """outer ∘ inner：先作用 inner 再作用 outer"""
    return Substitution(inner.alphabet, tuple(apply(outer, image) for image in inner.images))


def power(s: Substitution, n: int) -> Substitution:
    """
    代換的 n 次合成

    Args:
        s: 代換
        n: 非負整數，n = 0 時回傳恆等代換
    """
    if n < 0:
        raise ValueError(f"次方必須為非負整數: {n}")
    result = identity_substitution(s.alphabet)
    for _ in range(n):
        result = compose(s, result)
    return result


def incidence_matrix(morphism) -> IntegerMatrix:
    """
    關聯矩陣 M_{a,b} = |像(a)|_b

    同時接受代換（單純計數）與群自同態（帶號計數），列以來源字母為索引
    """
    letters = morphism.alphabet.letters
    rows = []
    for image in morphism.images:
        if isinstance(image, GroupWord):
            rows.append(tuple(signed_count(image, b) for b in letters))
        else:
            rows.append(tuple(image.letters.count(b) for b in letters))
    return IntegerMatrix(tuple(rows))


def determinant(matrix: IntegerMatrix) -> int:
    """以 Bareiss 無分數消去法計算精確行列式"""
    if matrix.dimension == 0:
        return 1
    return int(sympy.Matrix(matrix.to_lists()).det(method="bareiss"))


def _boolean_incidence(s: Substitution) -> np.ndarray:
    return (np.array(incidence_matrix(s).to_lists(), dtype=np.int64) > 0).astype(np.int64)


def is_primitive(s: Substitution) -> PrimitivityResult:
    """
    判斷代換是否為原始代換

    搜尋布林關聯矩陣的正冪次，指數上限為 Wielandt 界 (|A|-1)²+1；
    單字母情形要求 φ(a) = aⁿ 且 n > 1

    Returns:
        PrimitivityResult，primitive 為真時 exponent 為最小見證指數
    """
    if s.size == 1:
        if len(s.images[0]) > 1:
            return PrimitivityResult(True, 1)
        return PrimitivityResult(False)

    base = _boolean_incidence(s)
    current = base
    bound = (s.size - 1) ** 2 + 1
    for exponent in range(1, bound + 1):
        if np.all(current > 0):
            return PrimitivityResult(True, exponent)
        current = ((current @ base) > 0).astype(np.int64)
    return PrimitivityResult(False)


def require_primitive(s: Substitution) -> int:
    """檢查原始性並回傳見證指數"""
    result = is_primitive(s)
    if not result.primitive:
        raise NotPrimitiveError("此運算僅支援原始代換")
    return result.exponent


@lru_cache(maxsize=128)
def _stored_words(s: Substitution, length: int) -> FrozenSet[Tuple[int, ...]]:
    """
    長度至多 length 的語言字詞集合，L(φ) 中每個長度至多 length 的因子皆為其中某字的因子

    從字母出發，對每個已收錄的字 h 加入 φ(h) 的所有長度 length 視窗
    """
    images = [image.letters for image in s.images]
    stored: Set[Tuple[int, ...]] = {(letter,) for letter in s.alphabet.letters}
    queue = deque(stored)
    while queue:
        word = queue.popleft()
        expanded = tuple(chain.from_iterable(images[letter] for letter in word))
        if len(expanded) <= length:
            windows = [expanded]
        else:
            windows = [
                expanded[start : start + length]
                for start in range(len(expanded) - length + 1)
            ]
        for window in windows:
            if window not in stored:
                stored.add(window)
                queue.append(window)
    return frozenset(stored)


@lru_cache(maxsize=128)
def _factor_tuples(s: Substitution, length: int) -> FrozenSet[Tuple[int, ...]]:
    factors: Set[Tuple[int, ...]] = {()}
    if length == 0:
        return frozenset(factors)
    for word in _stored_words(s, length):
        for start in range(len(word)):
            for stop in range(start + 1, min(len(word), start + length) + 1):
                factors.add(word[start:stop])
    return frozenset(factors)


def language_factors(s: Substitution, length: int) -> FrozenSet[MonoidWord]:
    """
    L(φ) 中長度至多 length 的所有因子（含空字）

    Raises:
        NotPrimitiveError: 代換不是原始代換
    """
    if length < 0:
        raise ValueError(f"長度必須為非負整數: {length}")
    require_primitive(s)
    factors = _factor_tuples(s, length)
    logger.debug(f"長度至多 {length} 的因子共 {len(factors)} 個")
    return frozenset(MonoidWord(factor) for factor in factors)


def in_language(s: Substitution, word: Union[MonoidWord, Tuple[int, ...]]) -> bool:
    """判斷字詞是否屬於 L(φ)"""
    letters = word.letters if isinstance(word, MonoidWord) else tuple(word)
    require_primitive(s)
    return letters in _factor_tuples(s, len(letters))


def factor_complexity(s: Substitution, length: int) -> List[int]:
    """因子複雜度 p(0), ..., p(length)"""
    require_primitive(s)
    counts = [0] * (length + 1)
    for factor in _factor_tuples(s, length):
        counts[len(factor)] += 1
    return counts


def first_letter_map(s: Substitution) -> Tuple[int, ...]:
    return tuple(image.letters[0] for image in s.images)


def last_letter_map(s: Substitution) -> Tuple[int, ...]:
    return tuple(image.letters[-1] for image in s.images)


def _compose_maps(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(outer[letter] for letter in inner)


def is_proper(s: Substitution) -> ProperResult:
    """
    判斷代換是否為真代換：存在 n 使 φⁿ 的所有像皆以 a₁ 開頭且以 a₂ 結尾

    首字母與末字母映射在 |A| 次迭代內達到最終像集，因此只需檢查 n ≤ |A|
    """
    require_primitive(s)
    first, last = first_letter_map(s), last_letter_map(s)
    first_n, last_n = first, last
    for exponent in range(1, s.size + 1):
        if len(set(first_n)) == 1 and len(set(last_n)) == 1:
            return ProperResult(True, exponent, first_n[0], last_n[0])
        first_n = _compose_maps(first, first_n)
        last_n = _compose_maps(last, last_n)
    return ProperResult(False)
