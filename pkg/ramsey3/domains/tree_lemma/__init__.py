"""
树引理领域模块
"""
