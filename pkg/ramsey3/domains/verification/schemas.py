"""
校验报告 Pydantic 数据模型
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ramsey3.domains.hypergraph.schemas import CertificateNode

Triple = Tuple[int, int, int]
Pair = Tuple[int, int]


class ComponentReport(BaseModel):
    """一个红紧分支"""
    index: int
    num_edges: int
    vertices: List[int]
    tripartition: Optional[List[List[int]]] = Field(default=None, description="按最小顶点排序的三部分；无则为 None")
    colors: Optional[Tuple[int, int, int]] = Field(default=None, description="(c^(1), c^(2), c^(3))，与 tripartition 的部分对应")
    phi_constant: Optional[bool] = None


class RedStructureReport(BaseModel):
    """红紧分支结构"""
    num_red_edges: int
    components: List[ComponentReport] = Field(default_factory=list)
    violations: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class PhiConstancyReport(BaseModel):
    """Φ 在每个红紧分支上恒定，以及跨部分颜色律"""
    components_checked: int
    cross_part_law: bool = Field(..., description="是否检查了跨部分颜色律")
    components: List[ComponentReport] = Field(default_factory=list)
    violations: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class PairwiseUnionRow(BaseModel):
    """两个红紧分支之并"""
    first: int
    second: int
    iterated: Optional[bool] = Field(..., description="None 表示超出规模上限未判定")
    method: str = Field(..., description="compatible / nested / nested-reverse / exact / not-tripartite / undecided")
    certificate: Optional[CertificateNode] = None
    num_vertices: Optional[int] = Field(default=None, description="未判定时并集被边覆盖的顶点数")


class PairwiseUnionReport(BaseModel):
    num_components: int
    pairs_checked: int
    methods: Dict[str, int] = Field(default_factory=dict)
    matrix: List[List[Optional[bool]]] = Field(default_factory=list, description="分支两两之并是否迭代三部")
    failures: List[PairwiseUnionRow] = Field(default_factory=list)
    undecided: List[PairwiseUnionRow] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        # 未判定的并不能算作通过
        return not self.failures and not self.undecided


class CliqueResult(BaseModel):
    """蓝团搜索结果"""
    size: int
    witness: List[int]
    exact: bool
    capped: bool = Field(default=False, description="是否因 size_limit 提前停止")
    restarts: List[int] = Field(default_factory=list, description="贪心各次重启得到的团大小")
    nodes: int = Field(default=0, description="分支定界访问的节点数")


class BicliqueReport(BaseModel):
    """每个颜色类是否为顶点不交的完全二部图之并"""
    classes_checked: int
    components_checked: int
    violations: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class RainbowSample(BaseModel):
    index: int
    seed: int
    count: int
    threshold: float
    passed: bool
    packing: Optional[int] = None


class RainbowStatistics(BaseModel):
    """随机子集上的彩虹三角形计数"""
    samples: List[RainbowSample] = Field(default_factory=list)
    subset_size: int
    threshold: float
    pass_fraction: float
    required_fraction: float

    @property
    def passed(self) -> bool:
        return self.pass_fraction >= self.required_fraction


class MonteCarloEstimate(BaseModel):
    """重抽 φ 的蒙特卡洛估计"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    exact: Union[Fraction, float]
    estimate: float
    standard_error: float
    trials: int
    z_score: Optional[float] = None
    within_tolerance: bool


class RedExpectation(BaseModel):
    """两紧分支着色的红三元组期望与泊松区间"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    rainbow_triangles: int
    probability: Fraction
    mean: Fraction
    interval: Tuple[int, int]
    level: float
    observed: Optional[int] = None
    within_interval: Optional[bool] = None


class RedFractionReport(BaseModel):
    """简化构造中 φ 单色三角形变红的比例"""
    monochromatic: int
    red: int
    fraction: Optional[float]
    expected: float
    z_score: Optional[float]
    within_tolerance: bool


class RedDensityRow(BaseModel):
    """s 个顶点上的最大红边数，与 t(s) 对照"""
    s: int
    max_red_edges: int
    witness: List[int]
    t_s: int
    at_most_t: bool


class CheckReport(BaseModel):
    """命令行校验报告"""
    instance_hash: str
    check: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    violations: List[Any] = Field(default_factory=list)
    result: Dict[str, Any] = Field(default_factory=dict)
    timing: float = Field(0.0, description="秒；不参与输出摘要")
