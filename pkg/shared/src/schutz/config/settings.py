"""
配置模組
負責讀取和管理環境變量配置
"""

import logging
import os
from typing import List

# 設定日誌
logger = logging.getLogger(__name__)


class Config:
    """配置管理類"""

    # 週期性檢查的複雜度上限 N
    MAX_COMPLEXITY = os.getenv("SCHUTZ_MAX_COMPLEXITY", "50")

    # 限制鏈的最大步數
    MAX_RESTRICT = os.getenv("SCHUTZ_MAX_RESTRICT", "4")

    # Durand 演算法播種迴圈上限
    SEEDING_CAP = os.getenv("SCHUTZ_SEEDING_CAP", "64")

    # 有限商窮舉搜尋的狀態空間上限
    QUOTIENT_BOUND = os.getenv("SCHUTZ_QUOTIENT_BOUND", "100000")

    # 交換商見證嘗試的質數
    PRIMES = os.getenv("SCHUTZ_PRIMES", "2,3,5,7")

    # 日誌等級
    LOG_LEVEL = os.getenv("SCHUTZ_LOG_LEVEL", "WARNING")


def get_int_setting(name: str) -> int:
    """
    讀取正整數配置

    Args:
        name: Config 的屬性名稱，例如 "MAX_COMPLEXITY"

    Returns:
        解析後的正整數

    Raises:
        ValueError: 當值不是正整數時
    """
    raw = getattr(Config, name)
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ValueError(f"配置 {name} 必須是整數，目前為 {raw!r}")
    if value < 1:
        raise ValueError(f"配置 {name} 必須是正整數，目前為 {value}")
    return value


def get_prime_list() -> List[int]:
    """
    讀取交換商見證使用的質數列表

    Returns:
        質數列表（保持設定順序）

    Raises:
        ValueError: 當列表含有非整數項目時
    """
    primes = []
    for item in Config.PRIMES.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            primes.append(int(item))
        except ValueError:
            raise ValueError(f"SCHUTZ_PRIMES 含有非整數項目: {item!r}")
    return primes


def validate_required_config() -> bool:
    """
    驗證所有數值配置是否有效

    Returns:
        是否所有配置都有效
    """
    invalid_configs = []
    for name in ("MAX_COMPLEXITY", "MAX_RESTRICT", "SEEDING_CAP", "QUOTIENT_BOUND"):
        try:
            get_int_setting(name)
        except ValueError as e:
            invalid_configs.append(str(e))

    try:
        if not get_prime_list():
            invalid_configs.append("SCHUTZ_PRIMES 不能為空")
    except ValueError as e:
        invalid_configs.append(str(e))

    if logging.getLevelName(Config.LOG_LEVEL.upper()) == f"Level {Config.LOG_LEVEL.upper()}":
        invalid_configs.append(f"未知的日誌等級: {Config.LOG_LEVEL}")

    if invalid_configs:
        for message in invalid_configs:
            logger.error(f"配置錯誤: {message}")
        logger.error("請檢查 SCHUTZ_* 環境變量設定")
        return False

    return True


def print_config_summary():
    """打印配置摘要"""
    print("\n" + "=" * 50)
    print("配置摘要")
    print("=" * 50)
    print(f"週期性複雜度上限: {Config.MAX_COMPLEXITY}")
    print(f"限制鏈最大步數: {Config.MAX_RESTRICT}")
    print(f"播種迴圈上限: {Config.SEEDING_CAP}")
    print(f"有限商搜尋上限: {Config.QUOTIENT_BOUND}")
    print(f"交換商質數: {Config.PRIMES}")
    print(f"日誌等級: {Config.LOG_LEVEL}")
    print("=" * 50)


# 使用範例
if __name__ == "__main__":
    print_config_summary()

    if validate_required_config():
        print("\n✅ 所有配置都已正確設定")
    else:
        print("\n❌ 配置驗證失敗，請檢查環境變量設定")
