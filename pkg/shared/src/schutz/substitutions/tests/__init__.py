"""
代換模組測試
"""
