"""
代換相關的 Type Classes 定義
提供代換、整數矩陣與週期性證據的類型
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

from schutz.errors import AlphabetError
from schutz.words.word_text import parse_monoid_word
from schutz.words.word_types import Alphabet, MonoidWord


@dataclass(frozen=True)
class Substitution:
    """代換：自由幺半群 A* 的非抹除自同態，images[a] 為字母 a 的像"""

    alphabet: Alphabet
    images: Tuple[MonoidWord, ...]

    def __post_init__(self):
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.alphabet.size:
            raise AlphabetError(
                f"代換需要 {self.alphabet.size} 個像，實際提供 {len(self.images)} 個"
            )
        for letter, image in enumerate(self.images):
            if not image.letters:
                raise AlphabetError(f"字母 {letter} 的像為空字，代換必須非抹除")
            for target in image.letters:
                self.alphabet.check_letter(target)

    @classmethod
    def from_texts(
        cls, texts: Sequence[str], alphabet: Optional[Alphabet] = None
    ) -> "Substitution":
        """由每個字母的像文字建構，例如 ["01", "10"]"""
        alphabet = alphabet or Alphabet(len(texts))
        return cls(alphabet, tuple(parse_monoid_word(text, alphabet) for text in texts))

    def image(self, letter: int) -> MonoidWord:
        return self.images[letter]

    @property
    def size(self) -> int:
        return self.alphabet.size


@dataclass(frozen=True)
class IntegerMatrix:
    """以字母為索引的方陣，元素為任意精度整數"""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(entry) for entry in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError(f"矩陣必須為方陣，列長度 {len(row)} 與維度 {len(rows)} 不符")

    @classmethod
    def identity(cls, dimension: int) -> "IntegerMatrix":
        return cls(
            tuple(
                tuple(1 if i == j else 0 for j in range(dimension))
                for i in range(dimension)
            )
        )

    @classmethod
    def from_lists(cls, rows: Iterable[Iterable[int]]) -> "IntegerMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def to_lists(self):
        return [list(row) for row in self.rows]

    def __getitem__(self, key: Tuple[int, int]) -> int:
        row, column = key
        return self.rows[row][column]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.dimension != other.dimension:
            raise ValueError("矩陣維度不一致")
        size = self.dimension
        return IntegerMatrix(
            tuple(
                tuple(
                    sum(self.rows[i][k] * other.rows[k][j] for k in range(size))
                    for j in range(size)
                )
                for i in range(size)
            )
        )

    def power(self, exponent: int) -> "IntegerMatrix":
        if exponent < 0:
            raise ValueError("指數必須為非負整數")
        result = IntegerMatrix.identity(self.dimension)
        for _ in range(exponent):
            result = result @ self
        return result


class PeriodicityStatus(str, Enum):
    """週期性證據狀態"""

    PERIODIC_PROVEN = "PeriodicProven"
    APERIODIC_PROVEN = "AperiodicProven"
    APERIODIC_UP_TO = "AperiodicUpTo"


@dataclass(frozen=True)
class PeriodicityEvidence:
    """週期性證據"""

    status: PeriodicityStatus
    period_word: Optional[MonoidWord] = None
    witness: Optional[int] = None
    reason: Optional[str] = None
    bound: Optional[int] = None

    @property
    def is_periodic(self) -> bool:
        return self.status == PeriodicityStatus.PERIODIC_PROVEN

    @property
    def is_conditional(self) -> bool:
        """非週期性僅驗證到上限 N"""
        return self.status == PeriodicityStatus.APERIODIC_UP_TO


@dataclass(frozen=True)
class PrimitivityResult:
    """原始性檢查結果與最小見證指數"""

    primitive: bool
    exponent: Optional[int] = None

    def __bool__(self) -> bool:
        return self.primitive


@dataclass(frozen=True)
class ProperResult:
    """真代換檢查結果：φⁿ 的像皆以 first 開頭並以 last 結尾"""

    proper: bool
    exponent: Optional[int] = None
    first: Optional[int] = None
    last: Optional[int] = None

    def __bool__(self) -> bool:
        return self.proper
