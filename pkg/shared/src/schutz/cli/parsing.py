"""
輸入格式解析模組
規則檔每行一條 `<符號>-><字詞>`，# 之後為註解，空白行忽略；
任一右側含撇號或明確寫出空字時視為自由群自同態
"""

import logging
from typing import Dict, List, Tuple, Union

from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.errors import WordParseError
from schutz.substitutions.substitution_types import Substitution
from schutz.words.word_text import (
    EMPTY_TEXT,
    INVERSE_MARK,
    letter_symbol,
    parse_group_word,
    parse_monoid_word,
    render_group_word,
    render_monoid_word,
)
from schutz.words.word_types import SYMBOLS, Alphabet, GroupWord, MonoidWord

# 設定 logger
logger = logging.getLogger(__name__)

RULE_ARROW = "->"
COMMENT_MARK = "#"

Morphism = Union[Substitution, GroupEndomorphism]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """去除註解與空白行，保留原始行號"""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split(COMMENT_MARK, 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def _symbol_order(symbol: str) -> Tuple[int, str]:
    position = SYMBOLS.find(symbol)
    return (position if position >= 0 else len(SYMBOLS), symbol)


def parse_substitution_file(text: str) -> Morphism:
    """
    解析規則檔

    字母表為左側符號的集合，依 0-9、a-z、A-Z 的順序編號

    Args:
        text: 規則檔內容（也接受以 ; 分隔的單行寫法）

    Returns:
        Substitution，或含撇號/空字時的 GroupEndomorphism

    Raises:
        WordParseError: 格式錯誤、未知符號、重複規則或代換的像為空白，訊息含行號
    """
    rules: Dict[str, Tuple[int, str]] = {}
    for number, content in _content_lines(text.replace(";", "\n")):
        if RULE_ARROW not in content:
            raise WordParseError(f"缺少 {RULE_ARROW}: {content!r}", number)
        left, right = (part.strip() for part in content.split(RULE_ARROW, 1))
        if len(left) != 1 or left == INVERSE_MARK:
            raise WordParseError(f"左側必須為單一符號: {left!r}", number)
        if left in rules:
            raise WordParseError(
                f"符號 {left!r} 的規則重複（第 {rules[left][0]} 行已定義）", number
            )
        rules[left] = (number, right)

    if not rules:
        raise WordParseError("沒有任何規則")

    symbols = tuple(sorted(rules, key=_symbol_order))
    alphabet = Alphabet(len(symbols), symbols)
    is_group = any(
        INVERSE_MARK in right
        or right == "ε"
        or (right == EMPTY_TEXT and EMPTY_TEXT not in rules)
        for _, right in rules.values()
    )

    if is_group:
        images = [
            parse_group_word(rules[symbol][1], alphabet, rules[symbol][0]) for symbol in symbols
        ]
        logger.debug(f"解析為 {alphabet.size} 個字母的自同態")
        return GroupEndomorphism(alphabet, tuple(images))

    monoid_images: List[MonoidWord] = []
    for symbol in symbols:
        number, right = rules[symbol]
        if not right:
            raise WordParseError(f"代換的像不可為空白（空字請寫作 {EMPTY_TEXT}）", number)
        monoid_images.append(parse_monoid_word(right, alphabet, number))
    logger.debug(f"解析為 {alphabet.size} 個字母的代換")
    return Substitution(alphabet, tuple(monoid_images))


def render_substitution_file(morphism: Morphism) -> str:
    """輸出規則檔，parse_substitution_file 可讀回相同的物件"""
    alphabet = morphism.alphabet
    lines = []
    for letter, image in enumerate(morphism.images):
        if isinstance(image, GroupWord):
            rendered = render_group_word(image, alphabet)
        else:
            rendered = render_monoid_word(image, alphabet)
        lines.append(f"{letter_symbol(letter, alphabet)}{RULE_ARROW}{rendered}")
    return "\n".join(lines) + "\n"


def parse_word_list(text: str, alphabet: Alphabet) -> List[GroupWord]:
    """
    解析每行一個群字詞的清單（例如 --basis 檔案）

    Raises:
        WordParseError: 未知符號，訊息含行號
    """
    return [
        parse_group_word(content, alphabet, number)
        for number, content in _content_lines(text)
    ]


def parse_connection(text: str, alphabet: Alphabet) -> Tuple[MonoidWord, MonoidWord]:
    """
    解析 `u,v` 形式的連接

    Raises:
        WordParseError: 格式錯誤或 u、v 為空
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise WordParseError(f"連接必須寫作 u,v 且兩者非空: {text!r}")
    u, v = (parse_monoid_word(part, alphabet) for part in parts)
    if not u.letters or not v.letters:
        raise WordParseError(f"連接的 u 與 v 必須為非空字: {text!r}")
    return u, v
