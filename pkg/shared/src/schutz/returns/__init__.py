"""
回返字模組
提供連接搜尋、Durand 演算法與碼判定
"""

from schutz.returns.codes import is_code
from schutz.returns.durand import (
    connection_order,
    durand,
    factorize_over_returns,
    find_connection,
    find_connections,
    make_connection,
    split_return_words,
    verify_connection,
)
from schutz.returns.return_types import Connection, ReturnStructure

__all__ = [
    "Connection",
    "ReturnStructure",
    "connection_order",
    "durand",
    "factorize_over_returns",
    "find_connection",
    "find_connections",
    "make_connection",
    "split_return_words",
    "verify_connection",
    "is_code",
]
