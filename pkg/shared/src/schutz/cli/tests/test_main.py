"""
main.py 的基本測試
測試子命令的輸出與結束碼
"""

import json
from unittest.mock import patch

import pytest
from schutz.cli import examples_suite
from schutz.cli.examples_suite import ExampleCheck
from schutz.cli.main import EXIT_INCONCLUSIVE, EXIT_INPUT_ERROR, EXIT_OK, build_parser, run

THUE_MORSE_RETURN = "0->0123;1->013;2->02123;3->0213"
XI = "0->001;1->02;2->301;3->320"


def test_parser_subcommands():
    """測試解析器包含所有子命令"""
    parser = build_parser()
    for command in ("analyze", "returns", "restrict", "freeness", "stallings"):
        args = parser.parse_args([command, "0->01;1->10"])
        assert args.command == command
    assert parser.parse_args(["examples"]).command == "examples"


def test_freeness_alpha(capsys):
    """測試 α 判定 NotFree 並附帶非週期性前提"""
    code = run(["freeness", "0->01;1->0001", "--max-complexity", "20"])
    out = capsys.readouterr().out

    assert code == EXIT_OK
    assert "判定: NotFree" in out
    assert "以非週期性為前提" in out
    assert "det = -2" in out


def test_freeness_json(capsys):
    """測試 --json 輸出可解析"""
    code = run(["freeness", "0->01;1->0", "--json"])
    data = json.loads(capsys.readouterr().out)

    assert code == EXIT_OK
    assert data["verdict"] == "Free"
    assert data["certificate"][0]["fact"] == "determinant"


def test_freeness_endomorphism_input(capsys):
    """測試直接輸入自同態"""
    code = run(["freeness", "0->0;1->e"])
    assert code == EXIT_OK
    assert "判定: Free" in capsys.readouterr().out


def test_analyze_inconclusive_exit_code(capsys):
    """測試判定不確定時結束碼為 2"""
    code = run(
        ["analyze", "0->01;1->10", "--connection", "0,1", "--max-complexity", "20"]
    )
    out = capsys.readouterr().out

    assert code == EXIT_INCONCLUSIVE
    assert "判定: Inconclusive" in out
    assert "限制鏈的秩: [4, 3, 3" in out


def test_analyze_rejects_endomorphism(capsys):
    """測試 analyze 不接受含反字母的輸入"""
    code = run(["analyze", "0->01';1->1"])
    assert code == EXIT_INPUT_ERROR
    assert "錯誤" in capsys.readouterr().err


def test_returns_xi(capsys):
    """測試 ξ 的回返字與回返代換並排輸出"""
    code = run(["returns", XI, "--connection", "1,0"])
    out = capsys.readouterr().out

    assert code == EXIT_OK
    assert "連接 (1, 0)，階 k = 2" in out
    assert "0 ↦ 001" in out
    assert "6 ↦ 0010461010102" in out


def test_returns_periodic(capsys):
    """測試週期代換只輸出說明"""
    code = run(["returns", "0->02;1->21;2->10"])
    out = capsys.readouterr().out

    assert code == EXIT_OK
    assert "週期性" in out
    assert "021" in out


def test_restrict_with_basis_file(tmp_path, capsys):
    """測試以 --basis 指定基底並輸出 DOT"""
    basis = tmp_path / "basis.txt"
    basis.write_text("3'2'3\n02'0'\n3'21'20'\n", encoding="utf-8")
    dot = tmp_path / "image.dot"

    code = run(["restrict", THUE_MORSE_RETURN, "--basis", str(basis), "--dot", str(dot)])
    out = capsys.readouterr().out

    assert code == EXIT_OK
    assert "φ|1 的秩: 3" in out
    assert "0 ↦ 02110" in out
    assert dot.read_text(encoding="utf-8").startswith("digraph G {")


def test_restrict_rejects_foreign_basis(tmp_path, capsys):
    """測試不屬於像的基底"""
    basis = tmp_path / "basis.txt"
    basis.write_text("3'2\n20'\n2'302'1\n", encoding="utf-8")

    code = run(["restrict", THUE_MORSE_RETURN, "--basis", str(basis)])
    assert code == EXIT_INPUT_ERROR
    assert "錯誤" in capsys.readouterr().err


def test_stallings_reports_relation(capsys):
    """測試 τ'_{0,1} 的生成元不是自由基底"""
    code = run(["stallings", THUE_MORSE_RETURN, "--json"])
    data = json.loads(capsys.readouterr().out)

    assert code == EXIT_OK
    assert data["rank"] == 3
    assert not data["injective"]
    assert data["relation"] is not None


def test_source_from_file(tmp_path, capsys):
    """測試從檔案讀取規則"""
    source = tmp_path / "fibonacci.txt"
    source.write_text("# Fibonacci\n0->01\n1->0\n", encoding="utf-8")

    assert run(["freeness", str(source)]) == EXIT_OK
    assert "判定: Free" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["freeness", "0->0x;1->10"],
        ["freeness", "0->01;1->10", "--max-restrict", "0"],
        ["returns", "0->01;1->10", "--connection", "0"],
        ["unknown"],
        [],
    ],
)
def test_input_errors(argv, capsys):
    """測試輸入錯誤的結束碼為 1"""
    assert run(argv) == EXIT_INPUT_ERROR


def test_examples_failure_exit_code(capsys):
    """測試範例檢查失敗時結束碼為 1"""
    checks = [ExampleCheck("ok", lambda: True), ExampleCheck("broken", lambda: False)]
    with patch.object(examples_suite, "EXAMPLE_CHECKS", checks):
        code = run(["examples"])
    out = capsys.readouterr().out

    assert code == EXIT_INPUT_ERROR
    assert "broken  FAIL" in out
    assert "1/2 通過" in out


def test_analyze_xi_not_relatively_free(capsys):
    """測試 ξ 可逆且判定 NotFree，輸出不是相對自由"""
    code = run(["analyze", XI, "--max-complexity", "20"])
    out = capsys.readouterr().out

    assert code == EXIT_OK
    assert "判定: NotFree" in out
    assert "V(φ) = G: True" in out
    assert "相對自由: 否" in out


@pytest.mark.parametrize("command", ["analyze", "returns", "freeness"])
def test_dot_only_for_automaton_commands(command, tmp_path, capsys):
    """測試不產生自動機的命令不接受 --dot"""
    dot = tmp_path / "unused.dot"
    assert run([command, "0->01;1->0", "--dot", str(dot)]) == EXIT_INPUT_ERROR
    assert not dot.exists()


def test_stallings_writes_dot(tmp_path, capsys):
    """測試 stallings 的 DOT 輸出"""
    dot = tmp_path / "image.dot"
    assert run(["stallings", THUE_MORSE_RETURN, "--dot", str(dot)]) == EXIT_OK
    text = dot.read_text(encoding="utf-8")
    assert text.startswith("digraph G {")
    assert "style=dashed" in text
