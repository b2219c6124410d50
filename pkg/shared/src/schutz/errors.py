"""
錯誤類別模組
所有領域錯誤皆繼承自 SchutzError（ValueError 的子類別）
"""

from typing import Optional


class SchutzError(ValueError):
    """schutz 函式庫的基礎錯誤"""


class WordParseError(SchutzError):
    """文字格式解析錯誤，可附帶行號"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"第 {line} 行: {message}"
        super().__init__(message)


class AlphabetError(SchutzError):
    """字母超出範圍或字母表不一致"""


class NotPrimitiveError(SchutzError):
    """輸入代換不是原始代換"""


class PeriodicWitnessError(SchutzError):
    """回返集合為單元素集，代換為週期性"""

    def __init__(self, message: str, return_word=None):
        self.return_word = return_word
        super().__init__(message)


class ReturnWordError(SchutzError):
    """回返字分解失敗或播種迴圈超過上限"""


class ConnectionNotValidError(SchutzError):
    """(u, v, k) 不是代換的連接"""


class EndomorphismDomainError(SchutzError):
    """自同態不在運算的定義域內"""


class MembershipError(SchutzError):
    """字詞不屬於自動機表示的子群"""


class BasisError(SchutzError):
    """提供的基底無效"""


class QuotientSearchError(SchutzError):
    """有限商搜尋失敗：狀態空間超過上限、乘法表無效或 p 非質數"""
