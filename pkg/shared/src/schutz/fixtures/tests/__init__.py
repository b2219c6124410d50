"""
範例目錄測試
"""
