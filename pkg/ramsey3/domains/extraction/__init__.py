"""
蓝团提取领域模块
"""
