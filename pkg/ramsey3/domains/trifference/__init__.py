"""
三异码领域模块
"""
