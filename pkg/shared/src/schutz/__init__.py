"""
schutz 共享函式庫
原始代換的 Schützenberger 群自由性判定：回返代換、ω-表示、Stallings 自動機與行列式判準
"""

__version__ = "0.1.0"
