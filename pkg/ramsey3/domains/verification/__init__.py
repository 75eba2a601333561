"""
实例校验领域模块
"""
