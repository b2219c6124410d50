"""
命令列入口
子命令 analyze、returns、restrict、freeness、stallings、examples

結束碼：0 成功或已判定，1 輸入錯誤，2 判定不確定
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from schutz import __version__
from schutz.cli.examples_suite import run_examples_suite
from schutz.cli.parsing import Morphism, parse_connection, parse_substitution_file, parse_word_list
from schutz.cli.rendering import (
    render_analysis,
    render_examples,
    render_freeness,
    render_restriction,
    render_returns,
    render_stallings,
)
from schutz.cli.schemas import (
    CommandOptions,
    ExamplesModel,
    analysis_model,
    freeness_model,
    restriction_model,
    return_structure_model,
    stallings_model,
)
from schutz.config import Config, get_int_setting
from schutz.endomorphisms.endomorphism_types import GroupEndomorphism
from schutz.errors import EndomorphismDomainError, PeriodicWitnessError, SchutzError
from schutz.presentations import (
    OmegaPresentation,
    SubstitutionAnalyzer,
    Verdict,
    freeness_test,
    omega_presentation_from_substitution,
    restrict,
)
from schutz.returns import Connection, durand, find_connection, make_connection
from schutz.stallings import basis_from_tree, fold_generators, spanning_tree, to_dot
from schutz.substitutions.substitution_types import Substitution
from schutz.words.word_text import render_monoid_word

# 設定 logger
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONCLUSIVE = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

CommandResult = Tuple[str, int]


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("source", help="規則檔路徑，或以 ; 分隔的單行規則，例如 '0->01;1->10'")
    parser.add_argument("--json", dest="json_output", action="store_true", help="以 JSON 輸出")
    parser.add_argument("--max-complexity", type=int, default=None, help="週期性檢查上限 N")
    parser.add_argument("--max-restrict", type=int, default=None, help="最大限制次數")
    parser.add_argument("--connection", default=None, help="連接 u,v，階自動計算")
    parser.add_argument("-v", "--verbose", action="store_true", help="輸出除錯日誌")


def build_parser() -> argparse.ArgumentParser:
    """建立命令列解析器"""
    parser = argparse.ArgumentParser(
        prog="schutz", description="原始代換的 Schützenberger 群自由性判定工具"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    descriptions = {
        "analyze": "完整分析代換",
        "returns": "計算回返字與回返代換",
        "restrict": "將自同態限制到其像上",
        "freeness": "自由性判定",
        "stallings": "像的 Stallings 自動機",
    }
    commands = {}
    for name, description in descriptions.items():
        commands[name] = subparsers.add_parser(name, help=description)
        _add_common_arguments(commands[name])
    commands["restrict"].add_argument("--basis", default=None, help="基底檔案，每行一個群字詞")
    for name in ("restrict", "stallings"):
        commands[name].add_argument("--dot", default=None, help="將 Stallings 自動機寫入 DOT 檔")

    examples = subparsers.add_parser("examples", help="重算所有經典範例")
    examples.add_argument("--json", dest="json_output", action="store_true", help="以 JSON 輸出")
    examples.add_argument("-v", "--verbose", action="store_true", help="輸出除錯日誌")
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


def _read_source(source: str) -> str:
    path = Path(source)
    if "->" not in source and path.is_file():
        return path.read_text(encoding="utf-8")
    return source


def _load(options_source: str) -> Morphism:
    return parse_substitution_file(_read_source(options_source))


def _require_substitution(morphism: Morphism) -> Substitution:
    if not isinstance(morphism, Substitution):
        raise EndomorphismDomainError("此命令需要代換：右側不可含反字母或空字")
    return morphism


def _as_endomorphism(morphism: Morphism) -> GroupEndomorphism:
    if isinstance(morphism, Substitution):
        return GroupEndomorphism.from_substitution(morphism)
    return morphism


def _resolve_connection(s: Substitution, options: CommandOptions) -> Optional[Connection]:
    if options.connection is None:
        return None
    u, v = parse_connection(options.connection, s.alphabet)
    return make_connection(s, u, v)


def _setting(value: Optional[int], name: str) -> int:
    return get_int_setting(name) if value is None else value


def _write_dot(path: Optional[str], text: str) -> None:
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
        logger.info(f"DOT 已寫入 {path}")


def command_analyze(args: argparse.Namespace, options: CommandOptions) -> CommandResult:
    s = _require_substitution(_load(args.source))
    analyzer = SubstitutionAnalyzer(
        max_complexity=options.max_complexity, max_restrict=options.max_restrict
    )
    report = analyzer.analyze(s, connection=_resolve_connection(s, options))
    model = analysis_model(report, s.alphabet)
    code = EXIT_OK
    if report.freeness is not None and report.freeness.verdict == Verdict.INCONCLUSIVE:
        code = EXIT_INCONCLUSIVE
    return _format(model, render_analysis, options), code


def command_returns(args: argparse.Namespace, options: CommandOptions) -> CommandResult:
    s = _require_substitution(_load(args.source))
    connection = _resolve_connection(s, options) or find_connection(s)
    try:
        structure = durand(s, connection)
    except PeriodicWitnessError as e:
        word = render_monoid_word(e.return_word, s.alphabet)
        return f"連接 {connection} 只有一個回返字 {word}，代換為週期性", EXIT_OK
    model = return_structure_model(structure, s.alphabet)
    return _format(model, render_returns, options), EXIT_OK


def command_restrict(args: argparse.Namespace, options: CommandOptions) -> CommandResult:
    e = _as_endomorphism(_load(args.source))
    basis = None
    if options.basis is not None:
        basis = parse_word_list(Path(options.basis).read_text(encoding="utf-8"), e.alphabet)
    restriction = restrict(e, 1, basis)
    _write_dot(options.dot, to_dot(restriction.automaton, restriction.tree, e.alphabet))
    model = restriction_model(restriction, e.alphabet)
    return _format(model, render_restriction, options), EXIT_OK


def command_freeness(args: argparse.Namespace, options: CommandOptions) -> CommandResult:
    morphism = _load(args.source)
    max_restrict = _setting(options.max_restrict, "MAX_RESTRICT")
    if isinstance(morphism, Substitution):
        presentation = omega_presentation_from_substitution(
            morphism,
            _setting(options.max_complexity, "MAX_COMPLEXITY"),
            connection=_resolve_connection(morphism, options),
        )
    else:
        presentation = OmegaPresentation(morphism, "輸入的自同態")
    report = freeness_test(presentation, max_restrict)
    code = EXIT_INCONCLUSIVE if report.verdict == Verdict.INCONCLUSIVE else EXIT_OK
    return _format(freeness_model(report), render_freeness, options), code


def command_stallings(args: argparse.Namespace, options: CommandOptions) -> CommandResult:
    e = _as_endomorphism(_load(args.source))
    result = fold_generators(e.images)
    tree = spanning_tree(result.automaton)
    basis = basis_from_tree(result.automaton, tree)
    _write_dot(options.dot, to_dot(result.automaton, tree, e.alphabet))
    model = stallings_model(result, tree, list(basis.elements), e.alphabet)
    return _format(model, render_stallings, options), EXIT_OK


def command_examples(args: argparse.Namespace, options: CommandOptions) -> CommandResult:
    results = asyncio.run(run_examples_suite())
    passed = sum(1 for r in results if r.passed)
    model = ExamplesModel(results=results, passed=passed, failed=len(results) - passed)
    code = EXIT_OK if model.failed == 0 else EXIT_INPUT_ERROR
    if options.json_output:
        return model.model_dump_json(indent=2), code
    return render_examples(results), code


def _format(model, renderer: Callable, options: CommandOptions) -> str:
    if options.json_output:
        return model.model_dump_json(indent=2)
    return renderer(model)


COMMANDS: Dict[str, Callable[[argparse.Namespace, CommandOptions], CommandResult]] = {
    "analyze": command_analyze,
    "returns": command_returns,
    "restrict": command_restrict,
    "freeness": command_freeness,
    "stallings": command_stallings,
    "examples": command_examples,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    執行命令列

    Args:
        argv: 參數列表，預設讀取 sys.argv

    Returns:
        結束碼
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT_ERROR

    _configure_logging(args.verbose)
    try:
        options = CommandOptions(
            max_complexity=getattr(args, "max_complexity", None),
            max_restrict=getattr(args, "max_restrict", None),
            connection=getattr(args, "connection", None),
            basis=getattr(args, "basis", None),
            dot=getattr(args, "dot", None),
            json_output=args.json_output,
            verbose=args.verbose,
        )
    except ValidationError as e:
        for error in e.errors():
            print(f"選項錯誤: {error['msg']}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        output, code = COMMANDS[args.command](args, options)
    except (SchutzError, OSError) as e:
        logger.error(f"{args.command} 執行失敗: {str(e)}", exc_info=args.verbose)
        print(f"錯誤: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    print(output)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
