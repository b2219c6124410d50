"""
回返字模組測試
"""
