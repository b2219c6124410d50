"""
settings.py 的基本測試
測試配置讀取與驗證
"""

from unittest.mock import patch

import pytest
from schutz.config.settings import (
    Config,
    get_int_setting,
    get_prime_list,
    validate_required_config,
)


def test_default_values():
    """測試預設配置值"""
    with patch.object(Config, "MAX_COMPLEXITY", "50"), patch.object(
        Config, "MAX_RESTRICT", "4"
    ):
        assert get_int_setting("MAX_COMPLEXITY") == 50
        assert get_int_setting("MAX_RESTRICT") == 4


def test_non_integer_setting():
    """測試非整數配置"""
    with patch.object(Config, "MAX_RESTRICT", "four"):
        with pytest.raises(ValueError, match="必須是整數"):
            get_int_setting("MAX_RESTRICT")


def test_non_positive_setting():
    """測試非正整數配置"""
    with patch.object(Config, "SEEDING_CAP", "0"):
        with pytest.raises(ValueError, match="必須是正整數"):
            get_int_setting("SEEDING_CAP")


def test_prime_list_parsing():
    """測試質數列表解析"""
    with patch.object(Config, "PRIMES", " 3, 5 ,,7"):
        assert get_prime_list() == [3, 5, 7]


def test_validate_required_config_reports_errors():
    """測試無效配置會被回報"""
    with patch.object(Config, "QUOTIENT_BOUND", "-1"):
        assert validate_required_config() is False


def test_validate_required_config_success():
    """測試有效配置"""
    with patch.multiple(
        Config,
        MAX_COMPLEXITY="50",
        MAX_RESTRICT="4",
        SEEDING_CAP="64",
        QUOTIENT_BOUND="100000",
        PRIMES="2,3",
        LOG_LEVEL="INFO",
    ):
        assert validate_required_config() is True
