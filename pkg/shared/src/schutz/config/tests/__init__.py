"""
Config 測試模組
"""
