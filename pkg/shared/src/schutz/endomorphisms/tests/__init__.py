"""
自同態模組測試
"""
