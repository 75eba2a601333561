"""
树引理 Pydantic 数据模型
"""
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

Number = Union[Fraction, float]
Path = Tuple[int, ...]


class NodeSummary(BaseModel):
    """内部节点的统计量"""
    path: Path
    n: int
    weight: int
    m: int
    bit: Optional[int] = None
    label: Optional[str] = Field(default=None, description="good / bad / neutral")


class RotationStep(BaseModel):
    """一次旋转"""
    path: Path
    n_x: int
    n_w: int
    d_total_before: int
    d_total_after: int


class RotationTrace(BaseModel):
    """旋转到无不平衡为止的全过程"""
    steps: List[RotationStep] = Field(default_factory=list)
    d_total_initial: int
    d_total_final: int
    tree: str = Field(..., description="最终树的括号表示")


class ScoreResult(BaseModel):
    """ν*_T(W) 的最优值与最优解"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    weight_budget: Number
    score: Number
    used_weight: Number
    assignment: Dict[str, Number] = Field(default_factory=dict, description="路径（如 '0.1'，根为 ''）-> f 值")
    exact: bool = Field(..., description="是否为精确有理数计算")


class GoodNodeReport(BaseModel):
    """分裂树好/坏节点分类"""
    nodes: List[NodeSummary]
    good_lca_triples: int
    total_triples: int
    bad_weight: int
