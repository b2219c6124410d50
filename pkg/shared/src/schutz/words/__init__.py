"""
字詞模組
提供字母表、自由幺半群與自由群字詞，以及約化、計數與文字格式
"""

from .word_operations import (
    concat_reduce,
    evaluate,
    invert,
    occurrences,
    product,
    reduce,
    signed_count,
)
from .word_text import (
    empty_text,
    letter_symbol,
    parse_group_word,
    parse_monoid_word,
    render_group_word,
    render_monoid_word,
)
from .word_types import EMPTY_WORD, IDENTITY, SYMBOLS, Alphabet, GroupWord, MonoidWord

__all__ = [
    "Alphabet",
    "MonoidWord",
    "GroupWord",
    "IDENTITY",
    "EMPTY_WORD",
    "SYMBOLS",
    "reduce",
    "invert",
    "concat_reduce",
    "product",
    "signed_count",
    "occurrences",
    "evaluate",
    "letter_symbol",
    "empty_text",
    "parse_group_word",
    "parse_monoid_word",
    "render_group_word",
    "render_monoid_word",
]
