"""
自由群自同態相關的 Type Classes 定義
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from schutz.errors import AlphabetError
from schutz.substitutions.substitution_types import Substitution
from schutz.words.word_text import parse_group_word
from schutz.words.word_types import Alphabet, GroupWord


@dataclass(frozen=True)
class GroupEndomorphism:
    """自由群 F(A) 的自同態，images[a] 為字母 a 的約化像（可為 ε）"""

    alphabet: Alphabet
    images: Tuple[GroupWord, ...]

    def __post_init__(self):
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.alphabet.size:
            raise AlphabetError(
                f"自同態需要 {self.alphabet.size} 個像，實際提供 {len(self.images)} 個"
            )
        for image in self.images:
            for letter, _ in image.syllables:
                self.alphabet.check_letter(letter)

    @classmethod
    def from_substitution(cls, s: Substitution) -> "GroupEndomorphism":
        """代換以正字母像嵌入 End(F(A))"""
        return cls(s.alphabet, tuple(GroupWord.from_monoid(image) for image in s.images))

    @classmethod
    def from_texts(
        cls, texts: Sequence[str], alphabet: Optional[Alphabet] = None
    ) -> "GroupEndomorphism":
        """由每個字母的像文字建構，例如 ["1'02'3", ...]"""
        alphabet = alphabet or Alphabet(len(texts))
        return cls(alphabet, tuple(parse_group_word(text, alphabet) for text in texts))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "GroupEndomorphism":
        return cls(alphabet, tuple(GroupWord.letter(letter) for letter in alphabet.letters))

    @property
    def size(self) -> int:
        return self.alphabet.size

    def is_positive(self) -> bool:
        """所有像皆為非空正字詞，即可視為代換"""
        return all(image.syllables and image.is_positive() for image in self.images)


@dataclass(frozen=True)
class InjectivityResult:
    """單射性檢查結果，非單射時 witness 為核中的非平凡元素"""

    injective: bool
    image_rank: int
    witness: Optional[GroupWord] = None

    def __bool__(self) -> bool:
        return self.injective
