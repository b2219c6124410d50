"""
有限商見證模組
交換商 (Z/pZ)^A 的矩陣階見證，以及小型有限群上的窮舉搜尋
"""

import logging
from itertools import product
from typing import Dict, List, Optional, Tuple

import sympy

from schutz.config import get_int_setting
from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.errors import QuotientSearchError
from schutz.presentations.finite_groups import ElementaryAbelianGroup, FiniteGroup
from schutz.presentations.presentation_types import QuotientWitness
from schutz.substitutions.substitution_operations import determinant, incidence_matrix

# 設定 logger
logger = logging.getLogger(__name__)


def group_action(
    e: GroupEndomorphism, group: FiniteGroup, assignment: Tuple[int, ...]
) -> Tuple[int, ...]:
    """φ_H(t)(a) = t̂(φ(a))"""
    return tuple(group.evaluate(image, assignment) for image in e.images)


def verify_witness(e: GroupEndomorphism, witness: QuotientWitness) -> bool:
    """直接求值檢查見證：assignment 生成 H 且 φ̂ⁿ_H(t) = t"""
    if not witness.group.generates(witness.assignment) or witness.exponent < 1:
        return False
    current = witness.assignment
    for _ in range(witness.exponent):
        current = group_action(e, witness.group, current)
    return current == witness.assignment


def _matrix_order_mod_p(matrix: sympy.Matrix, p: int) -> int:
    """可逆矩陣在 GL(n, p) 中的乘法階"""
    size = matrix.shape[0]
    identity = sympy.eye(size)
    reduced = matrix.applyfunc(lambda entry: entry % p)
    current = reduced
    order = 1
    while current != identity:
        current = (current * reduced).applyfunc(lambda entry: entry % p)
        order += 1
    return order


def abelian_quotient_mod_p(e: GroupEndomorphism, p: int) -> Optional[QuotientWitness]:
    """
    交換商見證：p ∤ det M(φ) 時，H = (Z/pZ)^A、t 為標準基底、n 為 M_p(φ) 的階

    Args:
        e: 自同態
        p: 質數

    Returns:
        QuotientWitness，p 整除行列式時回傳 None

    Raises:
        QuotientSearchError: p 不是質數
    """
    if not sympy.isprime(p):
        raise QuotientSearchError(f"{p} 不是質數")
    matrix = incidence_matrix(e)
    d = determinant(matrix)
    if d % p == 0:
        logger.debug(f"{p} 整除 det = {d}，M_{p}(φ) 不可逆")
        return None
    group = ElementaryAbelianGroup(p, e.size)
    order = _matrix_order_mod_p(sympy.Matrix(matrix.to_lists()), p)
    assignment = tuple(group.basis_element(letter) for letter in e.alphabet.letters)
    logger.info(f"模 {p} 的交換商見證: n = {order}")
    return QuotientWitness(group, assignment, order)


def finite_quotient_witness(
    e: GroupEndomorphism, group: FiniteGroup, bound: Optional[int] = None
) -> Optional[QuotientWitness]:
    """
    窮舉 H^A，回傳字典序第一個位於 t ↦ φ_H(t) 週期上的生成組

    作用圖只建立一次，每個元組的後繼以整數編碼

    Args:
        e: 自同態
        group: 有限群 H
        bound: |H|^|A| 的上限，預設讀取 SCHUTZ_QUOTIENT_BOUND

    Raises:
        QuotientSearchError: 狀態空間超過上限
    """
    bound = bound if bound is not None else get_int_setting("QUOTIENT_BOUND")
    size = group.order**e.size
    if size > bound:
        raise QuotientSearchError(f"狀態空間 {size} 超過上限 {bound}")

    tuples: List[Tuple[int, ...]] = list(product(range(group.order), repeat=e.size))
    index: Dict[Tuple[int, ...], int] = {t: position for position, t in enumerate(tuples)}
    successor = [index[group_action(e, group, t)] for t in tuples]

    # 函數圖上位於週期的節點及其週期長度
    cycle_length: Dict[int, int] = {}
    state = [0] * len(tuples)  # 0 未訪問, 1 處理中, 2 完成
    for start in range(len(tuples)):
        if state[start]:
            continue
        path = []
        node = start
        while not state[node]:
            state[node] = 1
            path.append(node)
            node = successor[node]
        if state[node] == 1:
            cycle = path[path.index(node) :]
            for member in cycle:
                cycle_length[member] = len(cycle)
        for member in path:
            state[member] = 2

    for position, t in enumerate(tuples):
        if position in cycle_length and group.generates(t):
            logger.info(f"在 {group.name} 中找到見證 t = {t}, n = {cycle_length[position]}")
            return QuotientWitness(group, t, cycle_length[position])
    return None
