"""
命令列模組
規則檔解析、輸出模型與子命令
"""

from schutz.cli.main import build_parser, main, run
from schutz.cli.parsing import (
    parse_connection,
    parse_substitution_file,
    parse_word_list,
    render_substitution_file,
)

__all__ = [
    "build_parser",
    "main",
    "run",
    "parse_connection",
    "parse_substitution_file",
    "parse_word_list",
    "render_substitution_file",
]
