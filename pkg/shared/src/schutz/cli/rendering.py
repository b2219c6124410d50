"""
文字輸出模組
將分析結果排版為人類可讀的文字
"""

from typing import List, Sequence

from schutz.cli.schemas import (
    AnalysisModel,
    ExampleResultModel,
    FreenessModel,
    RestrictionModel,
    ReturnStructureModel,
    StallingsModel,
)

MAPS_TO = "↦"


def _mapping_lines(images: dict, indent: str = "  ") -> List[str]:
    return [f"{indent}{letter} {MAPS_TO} {image}" for letter, image in images.items()]


def render_returns(model: ReturnStructureModel) -> str:
    """左欄為回返字 Θ，右欄為回返代換 φ'"""
    connection = model.connection
    result = [f"連接 ({connection.u}, {connection.v})，階 k = {connection.k}"]
    left = [f"{letter} {MAPS_TO} {word}" for letter, word in zip(model.return_substitution, model.theta)]
    width = max(len(line) for line in left)
    result.append(f"  {'Θ'.ljust(width)}    φ'")
    for line, (letter, image) in zip(left, model.return_substitution.items()):
        result.append(f"  {line.ljust(width)}    {letter} {MAPS_TO} {image}")
    return "\n".join(result)


def render_freeness(model: FreenessModel) -> str:
    result = [f"判定: {model.verdict}"]
    if model.conditional:
        result.append("（以非週期性為前提）")
    result.append("證明鏈:")
    for fact in model.certificate:
        result.append(f"  第 {fact.step} 步 {fact.fact} = {fact.value}  {fact.detail}".rstrip())
    for note in model.notes:
        result.append(f"註: {note}")
    return "\n".join(result)


def render_analysis(model: AnalysisModel) -> str:
    """完整分析報告"""
    result = [
        f"原始性: {model.primitivity.primitive}（見證指數 {model.primitivity.exponent}）"
    ]
    if model.evidence is not None:
        evidence = model.evidence
        detail = evidence.period_word or evidence.reason or evidence.bound
        result.append(f"週期性證據: {evidence.status} ({detail})")
    if model.proper is not None:
        result.append(f"真代換: {model.proper.proper}")
    if model.connections:
        listed = ", ".join(f"({c.u}, {c.v})" for c in model.connections)
        result.append(f"最小階連接: {listed}")
    if model.return_structure is not None:
        result.append(render_returns(model.return_structure))
    if model.presentation is not None:
        result.append(f"ω-表示: {model.presentation.provenance}")
    if model.rank_steps:
        ranks = ", ".join(str(step.rank) for step in model.rank_steps)
        result.append(f"限制鏈的秩: [{ranks}]")
    if model.freeness is not None:
        result.append(render_freeness(model.freeness))
    if model.facts is not None:
        facts = model.facts
        result.append(f"det M(φ) = {facts.determinant}")
        result.append(f"Gₚ ⊆ V(φ): {facts.Gp_contained_for}")
        result.append(f"Gₙᵢₗ ⊆ V(φ): {facts.Gnil_contained}")
        result.append(f"V(φ) = G: {facts.V_equals_G}")
        if facts.relatively_free is not None:
            conclusion = "是" if facts.relatively_free else "否"
            result.append(f"相對自由: {conclusion}")
        result.extend(f"註: {note}" for note in facts.notes)
    for prime, witness in model.abelian_witnesses.items():
        if witness is None:
            result.append(f"模 {prime}: {prime} 整除行列式，無交換商見證")
        else:
            result.append(f"模 {prime}: {witness.group} 上 n = {witness.exponent}")
    result.extend(f"註: {note}" for note in model.notes)
    return "\n".join(result)


def render_restriction(model: RestrictionModel) -> str:
    result = [f"φ|{model.step} 的秩: {model.rank}", "基底:"]
    result.extend(f"  {letter}: {word}" for letter, word in zip(model.endomorphism, model.basis))
    result.append("限制後的自同態:")
    result.extend(_mapping_lines(model.endomorphism))
    return "\n".join(result)


def render_stallings(model: StallingsModel) -> str:
    result = [
        f"狀態數: {model.automaton.states}，邊數: {len(model.automaton.edges)}，秩: {model.rank}",
        f"生成樹: {model.tree}",
        "基底:",
    ]
    result.extend(f"  {word}" for word in model.basis)
    if not model.injective:
        result.append(f"生成元不是自由基底，關係: {model.relation}")
    return "\n".join(result)


def render_examples(results: Sequence[ExampleResultModel]) -> str:
    """通過/失敗表"""
    width = max((len(r.name) for r in results), default=0)
    result = [f"{'範例'.ljust(width)}  結果"]
    for r in results:
        status = "PASS" if r.passed else f"FAIL {r.detail}".rstrip()
        result.append(f"{r.name.ljust(width)}  {status}")
    passed = sum(1 for r in results if r.passed)
    result.append(f"{passed}/{len(results)} 通過")
    return "\n".join(result)
