"""
字詞文字格式模組
單字元符號相鄰書寫；反字母為符號後接撇號，例如 02'02'31'20'；空字寫作 e，e 本身是字母時寫作 ε
超出符號表的字母寫作 [編號]，例如 [63]
"""

import re
from typing import Dict, List, Optional

from schutz.errors import WordParseError
from schutz.words.word_types import SYMBOLS, Alphabet, GroupWord, MonoidWord, Syllable

EMPTY_TEXT = "e"
EMPTY_SYMBOL = "ε"
INVERSE_MARK = "'"

INDEXED_LETTER = re.compile(r"\[(\d+)\]")


def _symbol_table(alphabet: Optional[Alphabet]) -> Dict[str, int]:
    if alphabet is not None and alphabet.symbols is None:
        return {}
    symbols = alphabet.symbols if alphabet is not None else SYMBOLS
    return {symbol: index for index, symbol in enumerate(symbols)}


def letter_symbol(letter: int, alphabet: Optional[Alphabet] = None) -> str:
    """字母的顯示符號；沒有單字元符號時寫作 [編號]"""
    if alphabet is not None and alphabet.symbols is not None:
        return alphabet.symbols[letter]
    if alphabet is None and letter < len(SYMBOLS):
        return SYMBOLS[letter]
    return f"[{letter}]"


def empty_text(alphabet: Optional[Alphabet] = None) -> str:
    """空字的文字；e 是字母表的符號時改用 ε"""
    if alphabet is not None and EMPTY_TEXT in _symbol_table(alphabet):
        return EMPTY_SYMBOL
    return EMPTY_TEXT


def _is_empty_text(text: str, alphabet: Optional[Alphabet]) -> bool:
    # 未提供字母表時單獨的 e 一律為空字
    if text in (EMPTY_SYMBOL, ""):
        return True
    return text == EMPTY_TEXT and empty_text(alphabet) == EMPTY_TEXT


def parse_group_syllables(
    text: str, alphabet: Optional[Alphabet] = None, line: Optional[int] = None
) -> List[Syllable]:
    """
    解析帶撇號的文字為未約化的音節列表

    Raises:
        WordParseError: 未知符號或撇號位置錯誤
    """
    table = _symbol_table(alphabet)
    text = text.strip()
    if _is_empty_text(text, alphabet):
        return []

    syllables: List[Syllable] = []
    index = 0
    while index < len(text):
        symbol = text[index]
        if symbol == INVERSE_MARK:
            raise WordParseError(f"撇號前缺少字母: {text!r}", line)
        indexed = INDEXED_LETTER.match(text, index)
        if indexed is not None:
            letter = int(indexed.group(1))
            if alphabet is not None and letter >= alphabet.size:
                raise WordParseError(f"字母 {letter} 超出字母表範圍 0..{alphabet.size - 1}", line)
            index = indexed.end() - 1
        elif symbol in table:
            letter = table[symbol]
        else:
            raise WordParseError(f"未知符號 {symbol!r}", line)
        sign = 1
        if index + 1 < len(text) and text[index + 1] == INVERSE_MARK:
            sign = -1
            index += 1
        syllables.append((letter, sign))
        index += 1
    return syllables


def parse_group_word(
    text: str, alphabet: Optional[Alphabet] = None, line: Optional[int] = None
) -> GroupWord:
    """解析文字並約化為 GroupWord"""
    from schutz.words.word_operations import reduce

    return reduce(parse_group_syllables(text, alphabet, line))


def parse_monoid_word(
    text: str, alphabet: Optional[Alphabet] = None, line: Optional[int] = None
) -> MonoidWord:
    """
    解析不含反字母的文字為 MonoidWord

    Raises:
        WordParseError: 出現撇號或未知符號
    """
    syllables = parse_group_syllables(text, alphabet, line)
    if any(sign == -1 for _, sign in syllables):
        raise WordParseError(f"幺半群字詞不可含反字母: {text!r}", line)
    return MonoidWord(tuple(letter for letter, _ in syllables))


def _join(parts: List[str], alphabet: Optional[Alphabet]) -> str:
    text = "".join(parts)
    # 未提供字母表時單獨的 e 會讀回空字，改寫作 [14]
    if alphabet is None and text == EMPTY_TEXT:
        return f"[{SYMBOLS.index(EMPTY_TEXT)}]"
    return text


def render_monoid_word(word: MonoidWord, alphabet: Optional[Alphabet] = None) -> str:
    if not word.letters:
        return empty_text(alphabet)
    return _join([letter_symbol(letter, alphabet) for letter in word.letters], alphabet)


def render_group_word(word: GroupWord, alphabet: Optional[Alphabet] = None) -> str:
    if not word.syllables:
        return empty_text(alphabet)
    return _join(
        [
            letter_symbol(letter, alphabet) + ("" if sign == 1 else INVERSE_MARK)
            for letter, sign in word.syllables
        ],
        alphabet,
    )
