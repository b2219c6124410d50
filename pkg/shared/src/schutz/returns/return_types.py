"""
回返字相關的 Type Classes 定義
"""

from dataclasses import dataclass
from typing import Tuple

from schutz.errors import ConnectionNotValidError
from schutz.substitutions.substitution_types import Substitution
from schutz.words.word_types import MonoidWord


@dataclass(frozen=True)
class Connection:
    """連接 (u, v)，order 為使 φᵏ(u) 以 u 結尾且 φᵏ(v) 以 v 開頭的最小正整數 k"""

    u: MonoidWord
    v: MonoidWord
    order: int

    def __post_init__(self):
        if not self.u.letters or not self.v.letters:
            raise ConnectionNotValidError("連接的 u 與 v 必須為非空字")
        if self.order < 1:
            raise ConnectionNotValidError(f"連接的階必須為正整數: {self.order}")

    @property
    def uv(self) -> MonoidWord:
        return self.u + self.v

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"


@dataclass(frozen=True)
class ReturnStructure:
    """
    Durand 演算法的結果

    theta[i] 為第 i 個回返字（依最左出現順序），
    return_substitution 為 A_{u,v} 上滿足 Θ∘φ' = φᵏ∘Θ 的回返代換
    """

    connection: Connection
    theta: Tuple[MonoidWord, ...]
    return_substitution: Substitution

    @property
    def size(self) -> int:
        return len(self.theta)

    def index_of(self, word: MonoidWord) -> int:
        return self.theta.index(word)

    def decode(self, word: MonoidWord) -> MonoidWord:
        """Θ 延伸為幺半群同態：串接各索引對應的回返字"""
        result = MonoidWord()
        for index in word.letters:
            result = result + self.theta[index]
        return result
