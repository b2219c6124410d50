"""
Words 測試模組
"""
