"""
字詞相關的 Type Classes 定義
提供字母表、自由幺半群字詞與自由群約化字詞
"""

from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple, Union

from schutz.errors import AlphabetError

# 文字格式的符號表：數字、小寫、大寫字母，共 62 個
SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"

# (字母, 正負號)
Syllable = Tuple[int, int]


@dataclass(frozen=True)
class Alphabet:
    """字母表 A_n = {0, ..., n-1}，symbols 為顯示用的符號表"""

    size: int
    symbols: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.size < 1:
            raise AlphabetError(f"字母表大小必須為正整數: {self.size}")
        if self.symbols is None:
            if self.size <= len(SYMBOLS):
                object.__setattr__(self, "symbols", tuple(SYMBOLS[: self.size]))
        elif len(self.symbols) != self.size or len(set(self.symbols)) != self.size:
            raise AlphabetError(f"符號表必須恰好包含 {self.size} 個不同符號")

    @property
    def letters(self) -> range:
        return range(self.size)

    def check_letter(self, letter: int) -> None:
        """檢查字母是否在範圍內"""
        if not 0 <= letter < self.size:
            raise AlphabetError(f"字母 {letter} 超出字母表範圍 0..{self.size - 1}")


@dataclass(frozen=True)
class MonoidWord:
    """自由幺半群 A* 的字詞（可為空字）"""

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter < 0:
                raise AlphabetError(f"字母必須為非負整數: {letter}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, key: Union[int, slice]):
        if isinstance(key, slice):
            return MonoidWord(self.letters[key])
        return self.letters[key]

    def __add__(self, other: "MonoidWord") -> "MonoidWord":
        return MonoidWord(self.letters + other.letters)

    def startswith(self, prefix: "MonoidWord") -> bool:
        return self.letters[: len(prefix)] == prefix.letters

    def endswith(self, suffix: "MonoidWord") -> bool:
        return len(suffix) <= len(self) and self.letters[len(self) - len(suffix) :] == suffix.letters

    def __str__(self) -> str:
        from schutz.words.word_text import render_monoid_word

        return render_monoid_word(self)


@dataclass(frozen=True)
class GroupWord:
    """
    自由群 F(A) 的約化字詞
    syllables 為 (字母, ±1) 序列，建構時即檢查約化
    """

    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        if not isinstance(self.syllables, tuple):
            object.__setattr__(self, "syllables", tuple(tuple(s) for s in self.syllables))
        previous = None
        for letter, sign in self.syllables:
            if sign not in (1, -1):
                raise AlphabetError(f"符號必須為 +1 或 -1: {sign}")
            if letter < 0:
                raise AlphabetError(f"字母必須為非負整數: {letter}")
            if previous is not None and previous == (letter, -sign):
                raise AlphabetError("GroupWord 必須為約化字詞，請使用 reduce() 建構")
            previous = (letter, sign)

    @classmethod
    def from_monoid(cls, word: MonoidWord) -> "GroupWord":
        """將幺半群字詞視為正字母的群字詞"""
        return cls(tuple((letter, 1) for letter in word.letters))

    @classmethod
    def letter(cls, letter: int, sign: int = 1) -> "GroupWord":
        return cls(((letter, sign),))

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def is_positive(self) -> bool:
        return all(sign == 1 for _, sign in self.syllables)

    def __str__(self) -> str:
        from schutz.words.word_text import render_group_word

        return render_group_word(self)


# 單位元 ε
IDENTITY = GroupWord()
EMPTY_WORD = MonoidWord()
