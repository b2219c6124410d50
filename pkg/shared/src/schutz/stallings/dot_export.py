"""
DOT 匯出模組
基點以雙圓表示，生成樹的邊以虛線表示
"""

from typing import List, Optional

from schutz.stallings.automaton_types import SpanningTree, StallingsAutomaton
from schutz.words.word_types import SYMBOLS, Alphabet


def _label(letter: int, alphabet: Optional[Alphabet]) -> str:
    if alphabet is not None and alphabet.symbols is not None:
        return alphabet.symbols[letter]
    return SYMBOLS[letter] if letter < len(SYMBOLS) else str(letter)


def to_dot(
    automaton: StallingsAutomaton,
    tree: Optional[SpanningTree] = None,
    alphabet: Optional[Alphabet] = None,
) -> str:
    """
    將自動機輸出為 DOT 有向圖

    Args:
        automaton: Stallings 自動機
        tree: 生成樹，其邊以虛線繪製
        alphabet: 字母顯示用的符號表

    Returns:
        DOT 文字，狀態與邊的順序依自動機編號
    """
    result: List[str] = ["digraph G {", "    rankdir=LR;"]
    for state in range(automaton.state_count):
        shape = "doublecircle" if state == automaton.basepoint else "circle"
        result.append(f'    s{state} [label="s{state}",shape={shape}];')
    for index, (origin, letter, terminus) in enumerate(automaton.transitions):
        attributes = [f'label="{_label(letter, alphabet)}"']
        if tree is not None and index in tree:
            attributes.append("style=dashed")
        result.append(f"    s{origin} -> s{terminus} [{','.join(attributes)}];")
    result.append("}")
    return "\n".join(result)
