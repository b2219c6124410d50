"""
Stallings 自動機模組
提供花束構造、摺疊、核心、生成樹、基底、成員判定與 DOT 匯出
"""

from schutz.stallings.automaton_types import (
    FoldResult,
    SpanningTree,
    StallingsAutomaton,
    SubgroupBasis,
    Transition,
)
from schutz.stallings.dot_export import to_dot
from schutz.stallings.folding import core, flower, fold, fold_generators, subgroup_automaton
from schutz.stallings.subgroup_queries import (
    basis_from_tree,
    express_in_basis,
    express_with_tags,
    is_spanning_tree,
    membership,
    rank,
    read_path,
    spanning_tree,
    tree_from_edges,
)

__all__ = [
    "StallingsAutomaton",
    "SpanningTree",
    "SubgroupBasis",
    "FoldResult",
    "Transition",
    "flower",
    "fold",
    "core",
    "fold_generators",
    "subgroup_automaton",
    "membership",
    "rank",
    "read_path",
    "spanning_tree",
    "is_spanning_tree",
    "tree_from_edges",
    "basis_from_tree",
    "express_in_basis",
    "express_with_tags",
    "to_dot",
]
