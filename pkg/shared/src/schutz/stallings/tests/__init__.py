"""
Stallings 自動機模組測試
"""
