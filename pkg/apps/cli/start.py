#!/usr/bin/env python3
"""
命令列啟動腳本
"""

import logging
import sys

from schutz.cli.main import run

# 設定 logger
logger = logging.getLogger(__name__)


def start_cli():
    """啟動命令列，參數轉交給 schutz.cli"""
    code = run(sys.argv[1:])
    logger.info(f"命令結束，結束碼 {code}")
    sys.exit(code)


if __name__ == "__main__":
    start_cli()
