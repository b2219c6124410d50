"""
限制模組
將自同態限制到 Im(φⁿ) 上並以基底表示，以及限制鏈的秩穩定化
"""

import logging
from typing import List, Optional, Sequence

from schutz.endomorphisms.endomorphism_operations import apply_endo, is_injective, power_endo
from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.errors import BasisError
from schutz.presentations.presentation_types import RankStep, Restriction
from schutz.stallings.automaton_types import SubgroupBasis
from schutz.stallings.folding import fold_generators
from schutz.stallings.subgroup_queries import (
    basis_from_tree,
    express_in_basis,
    express_with_tags,
    membership,
    spanning_tree,
)
from schutz.words.word_types import Alphabet, GroupWord

# 設定 logger
logger = logging.getLogger(__name__)


def image_generators(e: GroupEndomorphism, n: int = 1) -> List[GroupWord]:
    """Im(eⁿ) 的生成元 eⁿ(a)"""
    return list(power_endo(e, n).images)


def restrict(
    e: GroupEndomorphism, n: int = 1, basis: Optional[Sequence[GroupWord]] = None
) -> Restriction:
    """
    計算 e|ₙ：e 限制在 Im(eⁿ) 上，以基底表示

    Args:
        e: 自同態
        n: 正整數
        basis: 提供時須為 Im(eⁿ) 的基底，否則使用預設生成樹的基底 X_T

    Returns:
        Restriction

    Raises:
        BasisError: 基底無效，或 Im(eⁿ) 為平凡群
    """
    if n < 1:
        raise ValueError(f"限制次數必須為正整數: {n}")
    generators = image_generators(e, n)
    image = fold_generators(generators)
    automaton = image.automaton
    if image.rank == 0:
        raise BasisError("Im(φⁿ) 為平凡群，沒有可限制的基底")

    if basis is None:
        tree = spanning_tree(automaton)
        subgroup_basis = basis_from_tree(automaton, tree)

        def express(word: GroupWord) -> GroupWord:
            return express_in_basis(automaton, tree, word)

    else:
        tree = None
        subgroup_basis = SubgroupBasis(tuple(basis))
        basis_fold = _validate_basis(list(basis), generators, automaton, image.rank)

        def express(word: GroupWord) -> GroupWord:
            return express_with_tags(basis_fold, word)

    restricted = GroupEndomorphism(
        Alphabet(len(subgroup_basis)),
        tuple(express(apply_endo(e, element)) for element in subgroup_basis.elements),
    )
    logger.info(f"限制 φ|{n}: 秩 {len(subgroup_basis)}")
    return Restriction(n, subgroup_basis, restricted, automaton, tree)


def _validate_basis(basis, generators, automaton, image_rank):
    """檢查提供的基底屬於像、自由生成且生成整個像"""
    for element in basis:
        if not membership(automaton, element):
            raise BasisError(f"基底元素 {element} 不屬於 Im(φⁿ)")
    if len(basis) != image_rank:
        raise BasisError(f"基底有 {len(basis)} 個元素，但 Im(φⁿ) 的秩為 {image_rank}")
    basis_fold = fold_generators(basis)
    if not basis_fold.injective:
        raise BasisError("提供的元素不是自由基底")
    for generator in generators:
        if not membership(basis_fold.automaton, generator):
            raise BasisError(f"生成元 {generator} 不在基底生成的子群中")
    return basis_fold


def stabilize_restrictions(e: GroupEndomorphism, max_steps: int) -> List[RankStep]:
    """
    反覆取 restrict(·, 1)，記錄每一步定義自同態的生成元個數與單射性

    秩重複（即達到單射）或達到 max_steps 時停止
    """
    current = e
    steps = [RankStep(0, current.size, is_injective(current).injective)]
    for step in range(1, max_steps + 1):
        if fold_generators(current.images).rank == 0:
            steps.append(RankStep(step, 0, True))
            break
        current = restrict(current, 1).endomorphism
        steps.append(RankStep(step, current.size, is_injective(current).injective))
        if steps[-1].rank == steps[-2].rank:
            break
    logger.info(f"限制鏈的秩: {[step.rank for step in steps]}")
    return steps
