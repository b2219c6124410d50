"""
範例目錄
經典代換、回返代換、限制、基底與 Stallings 自動機圖形的資料，
以及建構對應物件的輔助函數
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.stallings.automaton_types import SpanningTree, StallingsAutomaton, Transition
from schutz.substitutions.substitution_types import Substitution
from schutz.words.word_text import parse_group_word, parse_monoid_word
from schutz.words.word_types import GroupWord, MonoidWord

# 代換：名稱 → 各字母的像
SUBSTITUTIONS: Dict[str, Tuple[str, ...]] = {
    "thue_morse": ("01", "10"),
    "alpha": ("01", "0001"),
    "period_doubling": ("01", "00"),
    "xi": ("001", "02", "301", "320"),
    "periodic": ("02", "21", "10"),
    "fibonacci": ("01", "0"),
}

# 自由群自同態：名稱 → 各字母的像（e 為 ε）
ENDOMORPHISMS: Dict[str, Tuple[str, ...]] = {
    "xi_inverse": ("1'02'3", "3'20'13'20'10", "3'20'11", "20'1'02'3"),
    "zero_det": ("0", "e"),
    "nielsen": ("01", "1"),
    "thue_morse_return_0_1": ("0123", "013", "02123", "0213"),
    "thue_morse_return_0_10": ("01", "023132", "0232", "0131"),
    "period_doubling_return_1_0": ("010", "01110"),
    "xi_return_1_0": (
        "00102",
        "00310102",
        "003101040002",
        "003561010102",
        "00310104000461050002",
        "003561050002",
        "0010461010102",
    ),
    "thue_morse_restriction": ("02110", "10021", "2"),
    "xi_restriction": ("00100102", "0014301", "342000102", "3420301001", "4"),
}

# ξ 在連接 (1, 0) 上的回返字，依最左出現順序
XI_THETA: Tuple[str, ...] = (
    "001",
    "02001",
    "02001301",
    "02320001",
    "02001301320301",
    "02320301",
    "001320001",
)

# 1·ξ²(r)·0 的回返字分解，點號分隔
XI_RETURN_FACTORIZATIONS: Tuple[str, ...] = (
    "1.001.001.02001.001.02001301.0",
    "1.001.001.02320001.02001.001.02001.001.02001301.0",
    "1.001.001.02320001.02001.001.02001.001.02001301320301.001.001.001.02001301.0",
    "1.001.001.02320001.02320301.001320001.02001.001.02001.001.02001.001.02001301.0",
    "1.001.001.02320001.02001.001.02001.001.02001301320301.001.001.001.02001301320301"
    ".001320001.02001.001.02320301.001.001.001.02001301.0",
    "1.001.001.02320001.02320301.001320001.02001.001.02320301.001.001.001.02001301.0",
    "1.001.001.02001.001.02001301320301.001320001.02001.001.02001.001.02001.001.02001301.0",
)

# τ'_{0,1} 核中的元素
KERNEL_ELEMENT = "02'02'31'20'"

# Im(τ'_{0,10}) 由圖形生成樹得到的基底
THUE_MORSE_IMAGE_BASIS: Tuple[str, ...] = ("03'", "31", "3232", "2'12'3'")
# 印刷版本中的 31' 並不屬於 Im(τ'_{0,10})
THUE_MORSE_IMAGE_BASIS_MISPRINT: Tuple[str, ...] = ("03'", "31'", "3232", "2'12'3'")

# Im(τ'_{0,1}) 的基底，τ'_{0,1} 在其上的限制為 0↦02110, 1↦10021, 2↦2
THUE_MORSE_RESTRICTION_BASIS: Tuple[str, ...] = ("3'2'3", "02'0'", "3'21'20'")
# 不包含於 Im(τ'_{0,1}) 的印刷基底
THUE_MORSE_RESTRICTION_BASIS_MISPRINT: Tuple[str, ...] = ("3'2", "20'", "2'302'1")
# τ'_{0,1} 在上述基底上的固定元素
THUE_MORSE_FIXED_ELEMENT = "02'12'3"

# Im(ξ'_{1,0}) 的基底 X = ξ'_{1,0}(Y)
XI_BASIS: Tuple[str, ...] = ("00102", "00310'", "2'40002", "2'461010'", "01'54'2")
XI_BASIS_PREIMAGES: Tuple[str, ...] = ("0", "10'", "1'2", "1'25'31'30'", "03'52'1")
# ξ'_{1,0}(左) = ξ'_{1,0}(右)
XI_IMAGE_RELATIONS: Tuple[Tuple[str, str], ...] = (("6", "02'45'3"), ("4", "21'25'31'5"))

XI_RESTRICTION_MATRIX: Tuple[Tuple[int, ...], ...] = (
    (5, 2, 1, 0, 0),
    (3, 2, 0, 1, 1),
    (4, 1, 2, 1, 1),
    (4, 2, 1, 2, 1),
    (0, 0, 0, 0, 1),
)


@dataclass(frozen=True)
class AutomatonFigure:
    """以狀態數、邊列表與生成樹邊索引描述的自動機圖形"""

    state_count: int
    transitions: Tuple[Transition, ...]
    tree: Tuple[int, ...] = ()

    def automaton(self) -> StallingsAutomaton:
        return StallingsAutomaton(self.state_count, self.transitions, folded=True)

    def spanning_tree(self) -> SpanningTree:
        return SpanningTree(self.tree)


# Im(τ'_{0,10}) 的 Stallings 自動機
THUE_MORSE_IMAGE_FIGURE = AutomatonFigure(
    4,
    ((0, 0, 1), (0, 3, 1), (1, 1, 0), (2, 2, 0), (1, 2, 3), (2, 1, 3), (3, 3, 2)),
    tree=(1, 3, 4),
)

# Im(ξ'_{1,0}) 的 Stallings 自動機
XI_IMAGE_FIGURE = AutomatonFigure(
    10,
    (
        (0, 0, 1),
        (2, 2, 0),
        (1, 0, 3),
        (4, 1, 1),
        (2, 4, 5),
        (6, 0, 2),
        (3, 3, 4),
        (3, 1, 6),
        (4, 5, 5),
        (7, 0, 4),
        (5, 0, 8),
        (5, 6, 9),
        (8, 0, 6),
        (9, 1, 7),
    ),
    tree=(0, 1, 2, 3, 4, 5, 9, 10, 11),
)

# 包含 Im(ξ'_{1,0}|₁) 的真子群
XI_RESTRICTION_FIGURE = AutomatonFigure(
    17,
    (
        (0, 4, 0),
        (0, 0, 1),
        (0, 3, 2),
        (3, 1, 0),
        (4, 2, 0),
        (1, 0, 5),
        (2, 4, 6),
        (7, 0, 3),
        (8, 0, 4),
        (5, 1, 9),
        (6, 2, 10),
        (11, 0, 7),
        (12, 3, 7),
        (13, 1, 8),
        (10, 0, 9),
        (9, 4, 12),
        (9, 0, 14),
        (9, 3, 15),
        (16, 1, 11),
        (14, 0, 13),
        (15, 0, 16),
    ),
)


def substitution(name: str) -> Substitution:
    """依名稱建構代換"""
    return Substitution.from_texts(SUBSTITUTIONS[name])


def endomorphism(name: str) -> GroupEndomorphism:
    """依名稱建構自同態；代換名稱以正字母嵌入"""
    if name in SUBSTITUTIONS:
        return GroupEndomorphism.from_substitution(substitution(name))
    return GroupEndomorphism.from_texts(ENDOMORPHISMS[name])


def return_substitution(name: str) -> Substitution:
    """回返代換的像皆為正字詞，可直接作為代換"""
    return Substitution.from_texts(ENDOMORPHISMS[name])


def group_words(texts: Tuple[str, ...]) -> List[GroupWord]:
    return [parse_group_word(text) for text in texts]


def monoid_words(texts: Tuple[str, ...]) -> List[MonoidWord]:
    return [parse_monoid_word(text) for text in texts]
