"""
Durand 演算法模組
尋找連接、驗證連接、計算回返字與回返代換
"""

import logging
import math
from typing import List, Optional, Tuple

from schutz.config import get_int_setting
from schutz.errors import ConnectionNotValidError, PeriodicWitnessError, ReturnWordError
from schutz.returns.return_types import Connection, ReturnStructure
from schutz.substitutions.substitution_operations import (
    apply,
    first_letter_map,
    in_language,
    language_factors,
    last_letter_map,
    power,
    require_primitive,
)
from schutz.substitutions.substitution_types import Substitution
from schutz.words.word_operations import occurrences
from schutz.words.word_types import Alphabet, MonoidWord

# 設定 logger
logger = logging.getLogger(__name__)


def _suffix_step(s: Substitution, word: Tuple[int, ...]) -> Tuple[int, ...]:
    # φ(w) 的末 |w| 個字母只依賴 w 本身，且非抹除保證長度足夠
    return apply(s, MonoidWord(word)).letters[-len(word) :]


def _prefix_step(s: Substitution, word: Tuple[int, ...]) -> Tuple[int, ...]:
    return apply(s, MonoidWord(word)).letters[: len(word)]


def connection_order(s: Substitution, u: MonoidWord, v: MonoidWord) -> Optional[int]:
    """
    最小的 k ≥ 1 使 φᵏ(u) 以 u 結尾且 φᵏ(v) 以 v 開頭

    (φᵏ(u) 的後綴, φᵏ(v) 的前綴) 序列最終週期，遇到重複狀態即停止

    Returns:
        最小的 k，不存在時回傳 None
    """
    if not u.letters or not v.letters:
        return None
    suffix, prefix = u.letters, v.letters
    seen = set()
    k = 0
    while (suffix, prefix) not in seen:
        seen.add((suffix, prefix))
        suffix, prefix = _suffix_step(s, suffix), _prefix_step(s, prefix)
        k += 1
        if suffix == u.letters and prefix == v.letters:
            return k
    return None


def verify_connection(s: Substitution, u: MonoidWord, v: MonoidWord, k: int) -> bool:
    """
    檢查 uv ∈ L(φ)、φᵏ(u) 以 u 結尾、φᵏ(v) 以 v 開頭

    Args:
        s: 原始代換
        u, v: 非空字
        k: 正整數
    """
    if k < 1 or not u.letters or not v.letters:
        return False
    phi_k = power(s, k)
    if not apply(phi_k, u).endswith(u) or not apply(phi_k, v).startswith(v):
        return False
    return in_language(s, u + v)


def _letter_cycle_order(letter_map: Tuple[int, ...], letter: int) -> Optional[int]:
    """字母在映射下回到自身的最小步數"""
    current = letter
    for step in range(1, len(letter_map) + 1):
        current = letter_map[current]
        if current == letter:
            return step
    return None


def find_connections(s: Substitution) -> List[Connection]:
    """
    所有最小階的單字母連接

    對 L(φ) 中每個二字母因子 ab，最小的 k 使 lastᵏ(a) = a 且 firstᵏ(b) = b；
    同階時優先選擇相異字母，其次依 (a, b) 字典序

    Raises:
        NotPrimitiveError: 代換不是原始代換
    """
    require_primitive(s)
    first, last = first_letter_map(s), last_letter_map(s)
    candidates = []
    for factor in language_factors(s, 2):
        if len(factor) != 2:
            continue
        a, b = factor.letters
        order_a = _letter_cycle_order(last, a)
        order_b = _letter_cycle_order(first, b)
        if order_a is None or order_b is None:
            continue
        k = math.lcm(order_a, order_b)
        candidates.append((k, a == b, a, b))
    if not candidates:
        raise ConnectionNotValidError("找不到單字母連接")
    candidates.sort()
    least = candidates[0][0]
    return [
        Connection(MonoidWord((a,)), MonoidWord((b,)), k)
        for k, _, a, b in candidates
        if k == least
    ]


def find_connection(s: Substitution) -> Connection:
    """最小階的單字母連接，依 find_connections 的順序取第一個"""
    connection = find_connections(s)[0]
    logger.info(f"找到連接 {connection}，階為 {connection.order}")
    return connection


def make_connection(s: Substitution, u: MonoidWord, v: MonoidWord) -> Connection:
    """
    由 (u, v) 建立連接並計算其階

    Raises:
        ConnectionNotValidError: (u, v) 不是連接
    """
    k = connection_order(s, u, v)
    if k is None or not verify_connection(s, u, v, k):
        raise ConnectionNotValidError(f"({u}, {v}) 不是此代換的連接")
    return Connection(u, v, k)


def split_return_words(text: MonoidWord, u: MonoidWord, v: MonoidWord) -> List[MonoidWord]:
    """
    將以 uv 開頭並以 uv 結尾的字，在相鄰 uv 出現之間切成回返字

    Raises:
        ReturnWordError: text 不以 uv 開頭或結尾
    """
    uv = u + v
    positions = occurrences(text, uv)
    if not positions or positions[0] != 0 or positions[-1] != len(text) - len(uv):
        raise ReturnWordError(f"字詞 {text} 無法分解為 ({u}, {v}) 的回返字")
    return [
        text[start + len(u) : stop + len(u)]
        for start, stop in zip(positions, positions[1:])
    ]


def _seed_return_word(s: Substitution, connection: Connection) -> MonoidWord:
    """重複 w ← φᵏ(w) 直到 uv 在 uw 中出現兩次，回傳最左的回返字"""
    u, v, uv = connection.u, connection.v, connection.uv
    phi_k = power(s, connection.order)
    cap = get_int_setting("SEEDING_CAP")
    word = v
    for _ in range(cap):
        word = apply(phi_k, word)
        text = u + word
        positions = occurrences(text, uv)
        if len(positions) >= 2:
            start, stop = positions[0], positions[1]
            return text[start + len(u) : stop + len(u)]
    raise ReturnWordError(f"播種迴圈超過 {cap} 次仍未找到兩個 {uv} 出現位置")


def durand(s: Substitution, connection: Connection) -> ReturnStructure:
    """
    Durand 演算法：同時計算回返字的雙射 Θ 與回返代換 φ'

    Args:
        s: 原始代換
        connection: 已驗證的連接

    Returns:
        ReturnStructure

    Raises:
        ConnectionNotValidError: 連接無效
        PeriodicWitnessError: 回返集合為單元素集
        ReturnWordError: 播種或分解失敗
    """
    require_primitive(s)
    u, v = connection.u, connection.v
    if not verify_connection(s, u, v, connection.order):
        raise ConnectionNotValidError(f"{connection} 不是階為 {connection.order} 的連接")

    phi_k = power(s, connection.order)
    theta = [_seed_return_word(s, connection)]
    index = {theta[0]: 0}
    images = []
    j = 0
    while j < len(theta):
        factors = split_return_words(u + apply(phi_k, theta[j]) + v, u, v)
        image = []
        for word in factors:
            if word not in index:
                index[word] = len(theta)
                theta.append(word)
            image.append(index[word])
        logger.debug(f"Θ({j}) = {theta[j]} 的像分解為 {image}")
        images.append(MonoidWord(tuple(image)))
        j += 1

    if len(theta) == 1:
        raise PeriodicWitnessError(
            f"連接 {connection} 的回返集合只有 {theta[0]}，代換為週期性", return_word=theta[0]
        )

    logger.info(f"連接 {connection} 的回返集合共有 {len(theta)} 個回返字")
    alphabet = Alphabet(len(theta))
    return ReturnStructure(connection, tuple(theta), Substitution(alphabet, tuple(images)))


def factorize_over_returns(s: Substitution, connection: Connection, j: int) -> List[int]:
    """
    u·φᵏ(Θ(j))·v 分解為回返字後的索引序列

    Raises:
        ReturnWordError: j 超出回返集合範圍
    """
    structure = durand(s, connection)
    if not 0 <= j < structure.size:
        raise ReturnWordError(f"回返字索引 {j} 超出範圍 0..{structure.size - 1}")
    return list(structure.return_substitution.images[j].letters)
