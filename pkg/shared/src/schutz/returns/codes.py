"""
碼判定模組
以 Sardinas–Patterson 演算法判斷字集是否為碼（唯一可解碼）
"""

from typing import FrozenSet, Iterable, Set, Tuple

from schutz.words.word_types import MonoidWord

Letters = Tuple[int, ...]


def _residuals(left: Iterable[Letters], right: Iterable[Letters]) -> Set[Letters]:
    """left⁻¹right = { w | xw ∈ right, x ∈ left }"""
    right = list(right)
    return {
        word[len(prefix) :]
        for prefix in left
        for word in right
        if len(word) >= len(prefix) and word[: len(prefix)] == prefix
    }


def is_code(words: Iterable[MonoidWord]) -> bool:
    """
    判斷字集是否為碼

    Args:
        words: 非空字的集合

    Returns:
        每個串接是否只有唯一分解

    Raises:
        ValueError: 含有空字
    """
    code: Set[Letters] = set()
    for word in words:
        if not word.letters:
            raise ValueError("碼不可包含空字")
        code.add(word.letters)

    dangling = frozenset(_residuals(code, code) - {()})
    seen: Set[FrozenSet[Letters]] = set()
    while dangling and dangling not in seen:
        if () in dangling:
            return False
        seen.add(dangling)
        dangling = frozenset(_residuals(code, dangling) | _residuals(dangling, code))
    return () not in dangling
