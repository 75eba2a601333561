"""
蓝团提取 Pydantic 数据模型
"""
from typing import List

from pydantic import BaseModel, Field


class HalvingStep(BaseModel):
    """减半递归的一层"""
    depth: int
    v: int
    candidates: int = Field(..., description="除 v 外剩余的顶点数")
    kept: int = Field(..., description="选出的二部类大小 |V'|")


class IteratedStep(BaseModel):
    """迭代三部递归的一层"""
    depth: int
    vertices: int
    part_sizes: List[int]
    chosen: List[int] = Field(..., description="递归进入的两个部分的下标")
    padded: bool = Field(..., description="是否为叶子补出的均衡划分")


class ExtractionResult(BaseModel):
    method: str
    n: int
    clique: List[int]
    size: int
    lower_bound: int
    verified: bool
    halving_trace: List[HalvingStep] = Field(default_factory=list)
    iterated_trace: List[IteratedStep] = Field(default_factory=list)
