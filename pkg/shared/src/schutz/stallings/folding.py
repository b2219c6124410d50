"""
Stallings 摺疊模組
花束自動機、附來源標籤的摺疊、核心修剪與正規編號
"""

import logging
import random
from collections import defaultdict, deque
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from schutz.stallings.automaton_types import FoldResult, StallingsAutomaton, Transition
from schutz.words.word_operations import invert_syllables, reduce_syllables
from schutz.words.word_types import GroupWord, Syllable

# 設定 logger
logger = logging.getLogger(__name__)

Tag = Tuple[Syllable, ...]


def flower(words: Sequence[GroupWord]) -> StallingsAutomaton:
    """
    花束自動機：每個非空字詞在基點上形成一個迴圈

    Args:
        words: 約化字詞列表

    Returns:
        未摺疊的自動機，flower([]) 為單一狀態
    """
    automaton, _ = _flower_with_tags(words)
    return automaton


def _flower_with_tags(words: Sequence[GroupWord]) -> Tuple[StallingsAutomaton, List[Tag]]:
    transitions: List[Transition] = []
    tags: List[Tag] = []
    state_count = 1
    for generator, word in enumerate(words):
        length = len(word)
        for position, (letter, sign) in enumerate(word.syllables):
            current = 0 if position == 0 else state_count + position - 1
            following = 0 if position == length - 1 else state_count + position
            if sign == 1:
                transitions.append((current, letter, following))
            else:
                transitions.append((following, letter, current))
            # 迴圈的第一條邊帶有生成元，逆向讀取時取反
            tags.append(((generator, sign),) if position == 0 else ())
        state_count += max(length - 1, 0)
    return StallingsAutomaton(state_count, tuple(transitions)), tags


class _FoldingGraph:
    """摺疊過程中可變的工作圖，邊以 id 索引"""

    def __init__(self, automaton: StallingsAutomaton, tags: Sequence[Tag]):
        self.basepoint = automaton.basepoint
        self.states: Set[int] = set(range(automaton.state_count))
        self.edges: Dict[int, List] = {}
        self.incident: Dict[int, Set[int]] = defaultdict(set)
        self.relations: List[Tag] = []
        for edge_id, ((origin, letter, terminus), tag) in enumerate(zip(automaton.transitions, tags)):
            self.edges[edge_id] = [origin, letter, terminus, tuple(tag)]
            self.incident[origin].add(edge_id)
            self.incident[terminus].add(edge_id)
        self.pending = deque(sorted(self.states))

    def _groups(self, state: int) -> List[List[int]]:
        outgoing: Dict[int, List[int]] = defaultdict(list)
        incoming: Dict[int, List[int]] = defaultdict(list)
        for edge_id in sorted(self.incident[state]):
            origin, letter, terminus, _ = self.edges[edge_id]
            if origin == state:
                outgoing[letter].append(edge_id)
            if terminus == state:
                incoming[letter].append(edge_id)
        groups = [("out", ids) for ids in outgoing.values() if len(ids) > 1]
        groups += [("in", ids) for ids in incoming.values() if len(ids) > 1]
        return groups

    def _remove_edge(self, edge_id: int) -> None:
        origin, _, terminus, _ = self.edges.pop(edge_id)
        self.incident[origin].discard(edge_id)
        self.incident[terminus].discard(edge_id)

    def _gauge(self, state: int, shift: Tag) -> None:
        """以 shift 對狀態做規範變換：進入的邊右乘，離開的邊左乘其反元素"""
        inverse = invert_syllables(shift)
        for edge_id in self.incident[state]:
            edge = self.edges[edge_id]
            tag = edge[3]
            if edge[0] == state:
                tag = inverse + tag
            if edge[2] == state:
                tag = tag + shift
            edge[3] = reduce_syllables(tag)

    def _merge(self, drop: int, keep: int) -> None:
        for edge_id in list(self.incident[drop]):
            edge = self.edges[edge_id]
            if edge[0] == drop:
                edge[0] = keep
            if edge[2] == drop:
                edge[2] = keep
            self.incident[keep].add(edge_id)
        del self.incident[drop]
        self.states.discard(drop)
        self.pending.append(keep)

    def _fold_pair(self, direction: str, keep_id: int, drop_id: int) -> None:
        keep_edge, drop_edge = self.edges[keep_id], self.edges[drop_id]
        # 另一端：離開群組看終點，進入群組看起點
        end = 2 if direction == "out" else 0
        if keep_edge[end] == drop_edge[end]:
            relation = reduce_syllables(keep_edge[3] + invert_syllables(drop_edge[3]))
            if relation:
                self.relations.append(relation)
            self._remove_edge(drop_id)
            self.pending.append(keep_edge[end])
            return

        if drop_edge[end] == self.basepoint:
            keep_id, drop_id = drop_id, keep_id
            keep_edge, drop_edge = drop_edge, keep_edge
        keep_tag, drop_tag = keep_edge[3], drop_edge[3]
        if direction == "out":
            shift = reduce_syllables(invert_syllables(drop_tag) + keep_tag)
        else:
            shift = reduce_syllables(drop_tag + invert_syllables(keep_tag))
        drop_state, keep_state = drop_edge[end], keep_edge[end]
        self._gauge(drop_state, shift)
        self._remove_edge(drop_id)
        self._merge(drop_state, keep_state)

    def run(self, rng: Optional[random.Random] = None) -> None:
        while self.pending:
            if rng is not None:
                position = rng.randrange(len(self.pending))
                self.pending.rotate(-position)
            state = self.pending.popleft()
            if state not in self.states:
                continue
            groups = self._groups(state)
            if not groups:
                continue
            direction, ids = rng.choice(groups) if rng is not None else groups[0]
            pair = rng.sample(ids, 2) if rng is not None else ids[:2]
            self._fold_pair(direction, pair[0], pair[1])
            self.pending.append(state)


def canonical_order(
    state_count: int, transitions: Sequence[Transition], basepoint: int
) -> Tuple[Dict[int, int], List[int]]:
    """
    正規編號：自基點廣度優先，鄰邊依 (字母, 正向先於逆向, 邊索引) 排序

    Returns:
        (舊狀態 → 新狀態, 依 (起點, 字母, 終點) 排序後的舊邊索引)
    """
    neighbours: Dict[int, List[Tuple[int, int, int, int]]] = defaultdict(list)
    for index, (origin, letter, terminus) in enumerate(transitions):
        neighbours[origin].append((letter, 0, index, terminus))
        neighbours[terminus].append((letter, 1, index, origin))
    numbering = {basepoint: 0}
    queue = deque([basepoint])
    while queue:
        state = queue.popleft()
        for _, _, _, other in sorted(neighbours[state]):
            if other not in numbering:
                numbering[other] = len(numbering)
                queue.append(other)
    order = sorted(
        range(len(transitions)),
        key=lambda i: (
            numbering[transitions[i][0]],
            transitions[i][1],
            numbering[transitions[i][2]],
            i,
        ),
    )
    return numbering, order


def _trim_to_core(
    state_count: int, transitions: List[Transition], basepoint: int
) -> Tuple[Set[int], List[int]]:
    """反覆移除基點以外的一度狀態，回傳剩餘狀態與剩餘邊索引"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(state_count))
    for index, (origin, _, terminus) in enumerate(transitions):
        graph.add_edge(origin, terminus, key=index)
    hanging = [node for node, degree in graph.degree() if degree <= 1 and node != basepoint]
    while hanging:
        node = hanging.pop()
        if node not in graph:
            continue
        neighbours = list(graph.neighbors(node))
        graph.remove_node(node)
        for other in neighbours:
            if other != basepoint and other in graph and graph.degree(other) <= 1:
                hanging.append(other)
    kept_edges = sorted(key for _, _, key in graph.edges(keys=True))
    return set(graph.nodes), kept_edges


def _rebuild(
    transitions: List[Transition],
    tags: List[Tag],
    states: Set[int],
    basepoint: int,
    folded: bool,
) -> Tuple[StallingsAutomaton, List[Tag]]:
    numbering, order = canonical_order(len(states), transitions, basepoint)
    automaton = StallingsAutomaton(
        len(states),
        tuple(
            (numbering[transitions[i][0]], transitions[i][1], numbering[transitions[i][2]])
            for i in order
        ),
        basepoint=0,
        folded=folded,
    )
    return automaton, [tags[i] for i in order]


def _fold_with_tags(
    automaton: StallingsAutomaton,
    tags: Sequence[Tag],
    rng: Optional[random.Random] = None,
    trim: bool = True,
) -> Tuple[StallingsAutomaton, List[Tag], List[Tag]]:
    graph = _FoldingGraph(automaton, tags)
    graph.run(rng)
    edge_ids = sorted(graph.edges)
    transitions = [tuple(graph.edges[i][:3]) for i in edge_ids]
    edge_tags = [graph.edges[i][3] for i in edge_ids]

    # 壓縮狀態編號
    relabel = {state: index for index, state in enumerate(sorted(graph.states))}
    basepoint = relabel[graph.basepoint]
    transitions = [(relabel[o], a, relabel[t]) for o, a, t in transitions]
    states = set(range(len(relabel)))

    if trim:
        states, kept = _trim_to_core(len(states), transitions, basepoint)
        relabel = {state: index for index, state in enumerate(sorted(states))}
        transitions = [
            (relabel[transitions[i][0]], transitions[i][1], relabel[transitions[i][2]])
            for i in kept
        ]
        edge_tags = [edge_tags[i] for i in kept]
        basepoint = relabel[basepoint]
        states = set(range(len(relabel)))

    folded_automaton, ordered_tags = _rebuild(transitions, edge_tags, states, basepoint, True)
    return folded_automaton, ordered_tags, graph.relations


def fold(automaton: StallingsAutomaton, rng: Optional[random.Random] = None) -> StallingsAutomaton:
    """
    摺疊自動機，結果以正規編號表示

    Args:
        automaton: 任意自動機
        rng: 提供時以隨機順序選擇摺疊，結果與順序無關

    Returns:
        接受同一子群的已摺疊自動機（不修剪懸掛樹）
    """
    empty_tags = [()] * automaton.edge_count
    folded, _, _ = _fold_with_tags(automaton, empty_tags, rng=rng, trim=False)
    logger.debug(f"摺疊完成: {folded.state_count} 個狀態, {folded.edge_count} 條邊")
    return folded


def core(automaton: StallingsAutomaton) -> StallingsAutomaton:
    """移除基點以外的懸掛樹，子群不變"""
    transitions = list(automaton.transitions)
    states, kept = _trim_to_core(automaton.state_count, transitions, automaton.basepoint)
    relabel = {state: index for index, state in enumerate(sorted(states))}
    trimmed = [
        (relabel[transitions[i][0]], transitions[i][1], relabel[transitions[i][2]]) for i in kept
    ]
    rebuilt, _ = _rebuild(
        trimmed,
        [()] * len(trimmed),
        set(range(len(relabel))),
        relabel[automaton.basepoint],
        automaton.folded,
    )
    return rebuilt


def fold_generators(
    words: Sequence[GroupWord], rng: Optional[random.Random] = None
) -> FoldResult:
    """
    摺疊 flower(words) 並追蹤每條邊在生成元 x_i ↦ words[i] 下的來源

    每次合併平行邊得到一個非平凡的核元素；空字生成元本身即為核元素

    Args:
        words: 生成元的像
        rng: 提供時以隨機順序摺疊

    Returns:
        FoldResult，自動機為已摺疊的核心並以正規編號表示
    """
    automaton, tags = _flower_with_tags(words)
    folded, edge_tags, relations = _fold_with_tags(automaton, tags, rng=rng, trim=True)
    empty = [((generator, 1),) for generator, word in enumerate(words) if word.is_identity()]
    all_relations = tuple(GroupWord(relation) for relation in empty + relations)
    logger.debug(
        f"摺疊 {len(words)} 個生成元: 秩 {folded.edge_count - folded.state_count + 1}, "
        f"關係 {len(all_relations)} 個"
    )
    return FoldResult(
        automaton=folded,
        tags=tuple(GroupWord(tag) for tag in edge_tags),
        relations=all_relations,
        generator_count=len(words),
    )


def subgroup_automaton(words: Sequence[GroupWord]) -> StallingsAutomaton:
    """由生成元得到的 Stallings 自動機（已摺疊的核心）"""
    return fold_generators(words).automaton
