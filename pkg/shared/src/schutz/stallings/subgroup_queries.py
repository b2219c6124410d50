"""
子群查詢模組
成員判定、生成樹、基底擷取、以基底表示字詞與秩
"""

import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from schutz.errors import BasisError, MembershipError
from schutz.stallings.automaton_types import (
    FoldResult,
    SpanningTree,
    StallingsAutomaton,
    SubgroupBasis,
)
from schutz.stallings.folding import fold
from schutz.words.word_operations import invert_syllables, reduce_syllables
from schutz.words.word_types import GroupWord, Syllable

# 設定 logger
logger = logging.getLogger(__name__)

# (邊索引, 讀取方向 ±1)
Step = Tuple[int, int]


def read_path(automaton: StallingsAutomaton, word: GroupWord) -> Optional[Tuple[int, List[Step]]]:
    """
    在已摺疊自動機上自基點讀取字詞

    Returns:
        (終點狀態, 經過的邊)，無法讀完時回傳 None
    """
    state = automaton.basepoint
    steps: List[Step] = []
    for letter, sign in word.syllables:
        if sign == 1:
            index = automaton.outgoing.get((state, letter))
            if index is None:
                return None
            state = automaton.transitions[index][2]
        else:
            index = automaton.incoming.get((state, letter))
            if index is None:
                return None
            state = automaton.transitions[index][0]
        steps.append((index, sign))
    return state, steps


def membership(automaton: StallingsAutomaton, word: GroupWord) -> bool:
    """
    判斷約化字詞是否屬於自動機表示的子群

    字詞須沿邊（反字母逆向）自基點回到基點；未摺疊的輸入會先摺疊
    """
    if not automaton.folded:
        automaton = fold(automaton)
    result = read_path(automaton, word)
    return result is not None and result[0] == automaton.basepoint


def rank(automaton: StallingsAutomaton) -> int:
    """連通核心圖的秩 = 邊數 - 狀態數 + 1"""
    return automaton.edge_count - automaton.state_count + 1


def spanning_tree(automaton: StallingsAutomaton) -> SpanningTree:
    """
    自基點廣度優先的生成樹

    鄰邊依 (字母, 正向先於逆向, 邊索引) 順序探索，結果具決定性
    """
    neighbours: Dict[int, List[Tuple[int, int, int, int]]] = {
        state: [] for state in range(automaton.state_count)
    }
    for index, (origin, letter, terminus) in enumerate(automaton.transitions):
        neighbours[origin].append((letter, 0, index, terminus))
        neighbours[terminus].append((letter, 1, index, origin))
    visited = {automaton.basepoint}
    tree_edges = []
    queue = deque([automaton.basepoint])
    while queue:
        state = queue.popleft()
        for _, _, index, other in sorted(neighbours[state]):
            if other not in visited:
                visited.add(other)
                tree_edges.append(index)
                queue.append(other)
    return SpanningTree(tuple(tree_edges))


def is_spanning_tree(automaton: StallingsAutomaton, edges: Iterable[int]) -> bool:
    """檢查給定的邊索引是否構成底層無向圖的生成樹"""
    edges = list(edges)
    if len(set(edges)) != len(edges):
        return False
    if any(not 0 <= index < automaton.edge_count for index in edges):
        return False
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(automaton.state_count))
    for index in edges:
        origin, _, terminus = automaton.transitions[index]
        graph.add_edge(origin, terminus, key=index)
    return nx.is_tree(graph)


def tree_from_edges(automaton: StallingsAutomaton, edges: Iterable[int]) -> SpanningTree:
    """
    由外部提供的邊索引建立生成樹

    Raises:
        BasisError: 邊集合不是生成樹
    """
    edges = tuple(edges)
    if not is_spanning_tree(automaton, edges):
        raise BasisError(f"邊索引 {list(edges)} 不構成生成樹")
    return SpanningTree(edges)


def _tree_paths(automaton: StallingsAutomaton, tree: SpanningTree) -> Dict[int, Tuple[Syllable, ...]]:
    """自基點沿樹到每個狀態的路徑標記 [s₀, x]_T"""
    adjacency: Dict[int, List[Tuple[int, Syllable]]] = {
        state: [] for state in range(automaton.state_count)
    }
    for index in tree.edges:
        origin, letter, terminus = automaton.transitions[index]
        adjacency[origin].append((terminus, (letter, 1)))
        adjacency[terminus].append((origin, (letter, -1)))
    paths = {automaton.basepoint: ()}
    queue = deque([automaton.basepoint])
    while queue:
        state = queue.popleft()
        for other, syllable in adjacency[state]:
            if other not in paths:
                paths[other] = paths[state] + (syllable,)
                queue.append(other)
    return paths


def basis_from_tree(automaton: StallingsAutomaton, tree: SpanningTree) -> SubgroupBasis:
    """
    基底 X_T：每條非樹邊 e = (x, a, y) 對應 [s₀, x]_T · a · [y, s₀]_T

    Raises:
        BasisError: tree 不是生成樹
    """
    if not is_spanning_tree(automaton, tree.edges):
        raise BasisError("提供的樹不是此自動機的生成樹")
    paths = _tree_paths(automaton, tree)
    elements, edges = [], []
    for index, (origin, letter, terminus) in enumerate(automaton.transitions):
        if index in tree:
            continue
        syllables = paths[origin] + ((letter, 1),) + invert_syllables(paths[terminus])
        elements.append(GroupWord(reduce_syllables(syllables)))
        edges.append(index)
    return SubgroupBasis(tuple(elements), tuple(edges))


def express_in_basis(
    automaton: StallingsAutomaton, tree: SpanningTree, word: GroupWord
) -> GroupWord:
    """
    以基底 X_T 表示子群中的字詞

    依序記錄經過的非樹邊：正向讀取為基底字母，逆向讀取為其反元素

    Raises:
        MembershipError: 字詞不屬於子群
    """
    result = read_path(automaton, word)
    if result is None or result[0] != automaton.basepoint:
        raise MembershipError(f"字詞 {word} 不屬於此子群")
    letters = {
        edge: position
        for position, edge in enumerate(
            index for index in range(automaton.edge_count) if index not in tree
        )
    }
    syllables = [(letters[index], sign) for index, sign in result[1] if index not in tree]
    return GroupWord(reduce_syllables(syllables))


def express_with_tags(fold_result: FoldResult, word: GroupWord) -> GroupWord:
    """
    以生成元表示子群中的字詞：沿路徑讀取來源標籤之積

    生成元自由時表示唯一

    Raises:
        MembershipError: 字詞不屬於子群
    """
    automaton = fold_result.automaton
    result = read_path(automaton, word)
    if result is None or result[0] != automaton.basepoint:
        raise MembershipError(f"字詞 {word} 不屬於生成的子群")
    syllables: List[Syllable] = []
    for index, sign in result[1]:
        tag = fold_result.tags[index].syllables
        syllables.extend(tag if sign == 1 else invert_syllables(tag))
    return GroupWord(reduce_syllables(syllables))
