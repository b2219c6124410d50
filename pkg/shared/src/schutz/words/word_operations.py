"""
字詞運算模組
自由群約化、反元素、乘積、帶號計數與出現位置搜尋
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from schutz.errors import AlphabetError
from schutz.words.word_types import Alphabet, GroupWord, MonoidWord, Syllable


def reduce_syllables(raw: Iterable[Syllable]) -> Tuple[Syllable, ...]:
    """以堆疊進行自由約化，回傳約化後的音節序列"""
    stack: List[Syllable] = []
    for letter, sign in raw:
        if stack and stack[-1][0] == letter and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((letter, sign))
    return tuple(stack)


def reduce(raw: Iterable[Syllable], alphabet: Optional[Alphabet] = None) -> GroupWord:
    """
    將帶號字母序列約化為 GroupWord

    Args:
        raw: (字母, ±1) 序列
        alphabet: 若提供則檢查字母範圍

    Returns:
        表示同一群元素的唯一約化字詞

    Raises:
        AlphabetError: 字母超出範圍或符號無效
    """
    raw = list(raw)
    for letter, sign in raw:
        if sign not in (1, -1):
            raise AlphabetError(f"符號必須為 +1 或 -1: {sign}")
        if alphabet is not None:
            alphabet.check_letter(letter)
        elif letter < 0:
            raise AlphabetError(f"字母必須為非負整數: {letter}")
    return GroupWord(reduce_syllables(raw))


def invert_syllables(syllables: Sequence[Syllable]) -> Tuple[Syllable, ...]:
    return tuple((letter, -sign) for letter, sign in reversed(syllables))


def invert(word: GroupWord) -> GroupWord:
    """反元素：反轉並翻轉符號"""
    return GroupWord(invert_syllables(word.syllables))


def concat_reduce(
    u: GroupWord, v: GroupWord, alphabet: Optional[Alphabet] = None
) -> GroupWord:
    """
    約化乘積 uv

    Raises:
        AlphabetError: 提供 alphabet 時，字母不在其中
    """
    if alphabet is not None:
        for letter, _ in u.syllables + v.syllables:
            alphabet.check_letter(letter)
    return GroupWord(reduce_syllables(u.syllables + v.syllables))


def product(words: Iterable[GroupWord]) -> GroupWord:
    """多個群字詞的約化乘積"""
    syllables: List[Syllable] = []
    for word in words:
        syllables.extend(word.syllables)
    return GroupWord(reduce_syllables(syllables))


def signed_count(word: GroupWord, letter: int) -> int:
    """|w|_b：正出現次數減去負出現次數"""
    return sum(sign for current, sign in word.syllables if current == letter)


def occurrences(word: MonoidWord, pattern: MonoidWord) -> List[int]:
    """
    pattern 在 word 中所有出現的起始位置（允許重疊）

    空 pattern 出現在 0..|word| 的每個位置
    """
    text, needle = word.letters, pattern.letters
    size = len(needle)
    return [
        position
        for position in range(len(text) - size + 1)
        if text[position : position + size] == needle
    ]


def evaluate(word: GroupWord, images: Sequence[GroupWord]) -> GroupWord:
    """
    將字母 i 代入 images[i] 求值

    Args:
        word: 基底字母上的字詞
        images: 每個基底字母的像

    Returns:
        約化後的乘積
    """
    syllables: List[Syllable] = []
    for letter, sign in word.syllables:
        if not 0 <= letter < len(images):
            raise AlphabetError(f"字母 {letter} 沒有對應的像")
        image = images[letter].syllables
        syllables.extend(image if sign == 1 else invert_syllables(image))
    return GroupWord(reduce_syllables(syllables))
