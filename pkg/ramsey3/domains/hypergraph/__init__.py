"""
超图核心领域模块
"""
