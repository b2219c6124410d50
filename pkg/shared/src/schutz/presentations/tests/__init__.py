"""
ω-表示與自由性判定模組測試
"""
