"""
範例檢查套件
在工作執行緒中並行重算所有經典範例，依原順序回傳通過/失敗結果
"""

import asyncio
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from schutz.cli.schemas import ExampleResultModel
from schutz.endomorphisms import (
    GroupEndomorphism,
    compose,
    invert_automorphism,
    is_automorphism,
    is_injective,
    kernel_witness_check,
)
from schutz.fixtures import catalog
from schutz.presentations import (
    ElementaryAbelianGroup,
    OmegaPresentation,
    Verdict,
    abelian_quotient_mod_p,
    finite_quotient_witness,
    freeness_test,
    restrict,
    stabilize_restrictions,
)
from schutz.returns import durand, find_connection, make_connection
from schutz.stallings import membership
from schutz.substitutions import determinant, incidence_matrix, periodicity_evidence
from schutz.words import (
    GroupWord,
    parse_group_word,
    parse_monoid_word,
    render_group_word,
    render_monoid_word,
)

# 設定 logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExampleCheck:
    """單一範例檢查：check 回傳是否與已知結果一致"""

    name: str
    check: Callable[[], bool]


def _rendered(morphism) -> tuple:
    return tuple(
        render_group_word(image) if isinstance(image, GroupWord) else render_monoid_word(image)
        for image in morphism.images
    )


def _det(morphism) -> int:
    return determinant(incidence_matrix(morphism))


def _verdict(name: str) -> Verdict:
    return freeness_test(OmegaPresentation(catalog.endomorphism(name), name), 4).verdict


def _thue_morse_returns() -> bool:
    tau = catalog.substitution("thue_morse")
    first = durand(tau, find_connection(tau)).return_substitution
    second = durand(
        tau, make_connection(tau, parse_monoid_word("0"), parse_monoid_word("10"))
    ).return_substitution
    return (
        _rendered(first) == catalog.ENDOMORPHISMS["thue_morse_return_0_1"]
        and _rendered(second) == catalog.ENDOMORPHISMS["thue_morse_return_0_10"]
    )


def _xi_returns() -> bool:
    xi = catalog.substitution("xi")
    structure = durand(xi, find_connection(xi))
    theta = tuple(render_monoid_word(word) for word in structure.theta)
    rows = all(
        [render_monoid_word(structure.theta[i]) for i in image.letters] == row.split(".")[1:-1]
        for image, row in zip(
            structure.return_substitution.images, catalog.XI_RETURN_FACTORIZATIONS
        )
    )
    return (
        theta == catalog.XI_THETA
        and _rendered(structure.return_substitution) == catalog.ENDOMORPHISMS["xi_return_1_0"]
        and rows
    )


def _xi_restriction() -> bool:
    restriction = restrict(
        catalog.endomorphism("xi_return_1_0"), basis=catalog.group_words(catalog.XI_BASIS)
    )
    psi = restriction.endomorphism
    return (
        _rendered(psi) == catalog.ENDOMORPHISMS["xi_restriction"]
        and incidence_matrix(psi).rows == catalog.XI_RESTRICTION_MATRIX
        and _det(psi) == 1
    )


def _xi_not_free() -> bool:
    psi = catalog.endomorphism("xi_restriction")
    automaton = catalog.XI_RESTRICTION_FIGURE.automaton()
    return (
        not is_automorphism(psi)
        and all(membership(automaton, image) for image in psi.images)
        and not membership(automaton, parse_group_word("1"))
        and _verdict("xi_return_1_0") == Verdict.NOT_FREE
    )


def _determinants() -> bool:
    return (
        _det(catalog.substitution("alpha")) == -2
        and _det(catalog.return_substitution("period_doubling_return_1_0")) == 4
        and _det(catalog.substitution("xi")) == -1
        and _verdict("alpha") == Verdict.NOT_FREE
        and _verdict("period_doubling_return_1_0") == Verdict.NOT_FREE
    )


def _xi_inverse() -> bool:
    xi = catalog.endomorphism("xi")
    printed = catalog.endomorphism("xi_inverse")
    identity = GroupEndomorphism.identity(xi.alphabet)
    return (
        is_automorphism(xi)
        and compose(xi, printed) == identity
        and compose(printed, xi) == identity
        and invert_automorphism(xi) == printed
    )


def _injectivity() -> bool:
    morse_0_1 = catalog.endomorphism("thue_morse_return_0_1")
    morse_0_10 = catalog.endomorphism("thue_morse_return_0_10")
    image_basis = restrict(morse_0_10, basis=catalog.group_words(catalog.THUE_MORSE_IMAGE_BASIS))
    return (
        kernel_witness_check(morse_0_1, parse_group_word(catalog.KERNEL_ELEMENT))
        and not is_injective(morse_0_1)
        and is_injective(morse_0_10).injective
        and image_basis.rank == 4
    )


def _thue_morse_restriction() -> bool:
    e = catalog.endomorphism("thue_morse_return_0_1")
    restriction = restrict(e, basis=catalog.group_words(catalog.THUE_MORSE_RESTRICTION_BASIS))
    ranks = [step.rank for step in stabilize_restrictions(e, 4)]
    return (
        _rendered(restriction.endomorphism) == catalog.ENDOMORPHISMS["thue_morse_restriction"]
        and ranks[:3] == [4, 3, 3]
    )


def _periodic() -> bool:
    evidence = periodicity_evidence(catalog.substitution("periodic"), 10)
    return evidence.is_periodic and render_monoid_word(evidence.period_word) == "021"


def _nielsen_inverse() -> bool:
    return _rendered(invert_automorphism(catalog.endomorphism("nielsen"))) == ("01'", "1")


def _zero_determinant() -> bool:
    return _det(catalog.endomorphism("zero_det")) == 0 and _verdict("zero_det") == Verdict.FREE


def _abelian_witness() -> bool:
    e = catalog.endomorphism("period_doubling_return_1_0")
    witness = abelian_quotient_mod_p(e, 3)
    exhaustive = finite_quotient_witness(e, ElementaryAbelianGroup(3, 2))
    return (
        witness is not None
        and exhaustive is not None
        and witness.exponent == exhaustive.exponent == 3
        and witness.assignment == exhaustive.assignment
    )


EXAMPLE_CHECKS: List[ExampleCheck] = [
    ExampleCheck("thue_morse_returns", _thue_morse_returns),
    ExampleCheck("xi_returns", _xi_returns),
    ExampleCheck("xi_restriction", _xi_restriction),
    ExampleCheck("xi_not_free", _xi_not_free),
    ExampleCheck("determinants", _determinants),
    ExampleCheck("xi_inverse", _xi_inverse),
    ExampleCheck("injectivity", _injectivity),
    ExampleCheck("thue_morse_restriction", _thue_morse_restriction),
    ExampleCheck("periodic", _periodic),
    ExampleCheck("nielsen_inverse", _nielsen_inverse),
    ExampleCheck("zero_determinant", _zero_determinant),
    ExampleCheck("abelian_witness", _abelian_witness),
]


def run_check(example: ExampleCheck) -> ExampleResultModel:
    """執行單一檢查，例外視為失敗"""
    try:
        passed = bool(example.check())
        return ExampleResultModel(name=example.name, passed=passed)
    except Exception as e:
        logger.error(f"範例 {example.name} 執行失敗: {str(e)}", exc_info=True)
        return ExampleResultModel(name=example.name, passed=False, detail=str(e))


async def run_examples_suite(
    checks: Optional[Sequence[ExampleCheck]] = None,
) -> List[ExampleResultModel]:
    """
    並行執行範例檢查

    Args:
        checks: 檢查列表，預設為 EXAMPLE_CHECKS

    Returns:
        與 checks 相同順序的結果
    """
    checks = list(checks) if checks is not None else EXAMPLE_CHECKS
    logger.info(f"開始執行 {len(checks)} 個範例檢查")
    results = await asyncio.gather(*(asyncio.to_thread(run_check, check) for check in checks))
    logger.info(f"範例檢查完成: {sum(r.passed for r in results)}/{len(results)} 通過")
    return list(results)
