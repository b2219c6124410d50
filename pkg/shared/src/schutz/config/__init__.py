"""
配置模組
負責讀取和管理環境變量配置
"""

from .settings import (
    Config,
    get_int_setting,
    get_prime_list,
    print_config_summary,
    validate_required_config,
)

__all__ = [
    "Config",
    "get_int_setting",
    "get_prime_list",
    "print_config_summary",
    "validate_required_config",
]
