"""
Stallings 自動機相關的 Type Classes 定義
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple

import networkx as nx

from schutz.words.word_types import GroupWord

# (起點, 字母, 終點)
Transition = Tuple[int, int, int]


@dataclass(frozen=True)
class StallingsAutomaton:
    """
    帶基點的字母標記有向圖，表示自由群的有限生成子群

    狀態為 0..state_count-1，邊只以正方向儲存，反字母沿邊逆向讀取
    """

    state_count: int
    transitions: Tuple[Transition, ...]
    basepoint: int = 0
    folded: bool = False

    def __post_init__(self):
        transitions = tuple(tuple(t) for t in self.transitions)
        object.__setattr__(self, "transitions", transitions)
        if not 0 <= self.basepoint < self.state_count:
            raise ValueError(f"基點 {self.basepoint} 不在狀態範圍內")
        for origin, letter, terminus in transitions:
            if not (0 <= origin < self.state_count and 0 <= terminus < self.state_count):
                raise ValueError(f"邊 ({origin}, {letter}, {terminus}) 的端點不在狀態範圍內")
            if letter < 0:
                raise ValueError(f"邊的字母必須為非負整數: {letter}")
        if not nx.is_weakly_connected(self.graph()):
            raise ValueError("Stallings 自動機必須弱連通")
        if self.folded and not self.is_folded():
            raise ValueError("自動機標記為已摺疊，但存在可摺疊的邊")

    def graph(self) -> nx.MultiDiGraph:
        """以邊索引為 key 的 networkx 多重有向圖"""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.state_count))
        for index, (origin, letter, terminus) in enumerate(self.transitions):
            graph.add_edge(origin, terminus, key=index, letter=letter)
        return graph

    def is_folded(self) -> bool:
        """沒有兩條邊共享字母與起點，或共享字母與終點"""
        outgoing = {(origin, letter) for origin, letter, _ in self.transitions}
        incoming = {(terminus, letter) for _, letter, terminus in self.transitions}
        return len(outgoing) == len(incoming) == len(self.transitions)

    @cached_property
    def outgoing(self) -> Dict[Tuple[int, int], int]:
        """(狀態, 字母) → 離開的邊索引，僅對已摺疊自動機有意義"""
        return {(origin, letter): index for index, (origin, letter, _) in enumerate(self.transitions)}

    @cached_property
    def incoming(self) -> Dict[Tuple[int, int], int]:
        """(狀態, 字母) → 進入的邊索引"""
        return {(terminus, letter): index for index, (_, letter, terminus) in enumerate(self.transitions)}

    @property
    def edge_count(self) -> int:
        return len(self.transitions)


@dataclass(frozen=True)
class SpanningTree:
    """生成樹，以邊索引表示"""

    edges: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges))))

    def __contains__(self, index: int) -> bool:
        return index in self.edges


@dataclass(frozen=True)
class SubgroupBasis:
    """
    子群基底 X_T

    edges[i] 為產生 elements[i] 的非樹邊；由外部提供的基底沒有對應邊
    """

    elements: Tuple[GroupWord, ...]
    edges: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FoldResult:
    """
    附來源標籤的摺疊結果

    tags[i] 為第 i 條邊上生成元字母 x_j 的字詞；
    沿基點閉路徑讀取標籤之積，其像即為路徑標記。
    relations 為摺疊平行邊時得到的核元素
    """

    automaton: StallingsAutomaton
    tags: Tuple[GroupWord, ...]
    relations: Tuple[GroupWord, ...]
    generator_count: int

    @property
    def rank(self) -> int:
        return self.automaton.edge_count - self.automaton.state_count + 1

    @property
    def injective(self) -> bool:
        return self.rank == self.generator_count

    def shortest_relation(self) -> Optional[GroupWord]:
        if not self.relations:
            return None
        return min(self.relations, key=len)
