"""
自同態運算模組
作用、合成、冪次、單射性、自同構判定與反自同構
"""

import logging
from typing import List

from schutz.endomorphisms.endomorphism_types import GroupEndomorphism, InjectivityResult
from schutz.errors import AlphabetError, EndomorphismDomainError
from schutz.stallings.folding import fold_generators
from schutz.words.word_operations import evaluate
from schutz.words.word_types import GroupWord

# 設定 logger
logger = logging.getLogger(__name__)


def apply_endo(e: GroupEndomorphism, word: GroupWord) -> GroupWord:
    """自同態作用於群字詞，回傳約化結果"""
    for letter, _ in word.syllables:
        e.alphabet.check_letter(letter)
    return evaluate(word, e.images)


def compose(f: GroupEndomorphism, g: GroupEndomorphism) -> GroupEndomorphism:
    """
    合成 f∘g：(f∘g)(a) = f(g(a))

    Raises:
        AlphabetError: 字母表不一致
    """
    if f.alphabet != g.alphabet:
        raise AlphabetError(f"字母表不一致: {f.size} 與 {g.size}")
    return GroupEndomorphism(g.alphabet, tuple(apply_endo(f, image) for image in g.images))


def power_endo(e: GroupEndomorphism, n: int) -> GroupEndomorphism:
    """n 次合成，n = 0 時為恆等自同態"""
    if n < 0:
        raise ValueError(f"次方必須為非負整數: {n}")
    result = GroupEndomorphism.identity(e.alphabet)
    for _ in range(n):
        result = compose(e, result)
    return result


def is_injective(e: GroupEndomorphism) -> InjectivityResult:
    """
    判斷自同態是否為單射

    單射若且唯若像的秩等於 |A|；非單射時由摺疊來源追蹤取得核元素

    Returns:
        InjectivityResult
    """
    result = fold_generators(e.images)
    injective = result.rank == e.size
    witness = None if injective else result.shortest_relation()
    if witness is not None:
        logger.debug(f"核元素見證: {witness}")
    return InjectivityResult(injective, result.rank, witness)


def is_automorphism(e: GroupEndomorphism) -> bool:
    """像所生成子群的 Stallings 自動機為 |A| 個迴圈的玫瑰時即為自同構"""
    automaton = fold_generators(e.images).automaton
    return automaton.state_count == 1 and automaton.edge_count == e.size


def invert_automorphism(e: GroupEndomorphism) -> GroupEndomorphism:
    """
    反自同構：玫瑰上字母 a 的迴圈所帶的來源標籤即為 e⁻¹(a)

    Raises:
        EndomorphismDomainError: e 不是自同構
    """
    result = fold_generators(e.images)
    automaton = result.automaton
    if automaton.state_count != 1 or automaton.edge_count != e.size:
        raise EndomorphismDomainError("只有自同構才能求反")
    images: List[GroupWord] = [GroupWord()] * e.size
    for (_, letter, _), tag in zip(automaton.transitions, result.tags):
        images[letter] = tag
    return GroupEndomorphism(e.alphabet, tuple(images))


def kernel_witness_check(e: GroupEndomorphism, word: GroupWord) -> bool:
    """
    檢查非平凡字詞是否屬於核

    Raises:
        EndomorphismDomainError: word 為 ε
    """
    if word.is_identity():
        raise EndomorphismDomainError("ε 必然屬於核，請提供非平凡字詞")
    return apply_endo(e, word).is_identity()
