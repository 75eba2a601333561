"""
着色构造领域模块
"""
