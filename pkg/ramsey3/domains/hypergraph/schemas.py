"""
超图核心 Pydantic 数据模型
紧分支分解、三部划分与迭代三部图证书
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

Triple = Tuple[int, int, int]


class TightComponentDecomposition(BaseModel):
    """紧分支分解"""
    components: List[List[Triple]] = Field(default_factory=list, description="各紧分支的边（升序）")
    vertex_supports: List[List[int]] = Field(default_factory=list, description="各紧分支覆盖的顶点")

    model_config = {"frozen": True}

    @property
    def count(self) -> int:
        return len(self.components)


class Tripartition(BaseModel):
    """三部划分：顶点 -> 标签 1/2/3"""
    part_of: Dict[int, int] = Field(..., description="顶点所属部分")

    model_config = {"frozen": True}

    def parts(self) -> List[List[int]]:
        grouped: List[List[int]] = [[], [], []]
        for vertex in sorted(self.part_of):
            grouped[self.part_of[vertex] - 1].append(vertex)
        return grouped

    def canonical(self) -> List[List[int]]:
        """与标签无关的形式：按各部分最小顶点排序"""
        return sorted((p for p in self.parts() if p), key=lambda p: p[0])

    def is_rainbow(self, edge: Triple) -> bool:
        labels = {self.part_of.get(v) for v in edge}
        return labels == {1, 2, 3}


class CertificateNode(BaseModel):
    """迭代三部图证书节点：叶子（无 parts）或带三路划分的内部节点"""
    vertices: List[int] = Field(..., description="本节点覆盖的顶点")
    parts: List[List[int]] = Field(default_factory=list, description="三路划分（叶子为空）")
    children: List["CertificateNode"] = Field(default_factory=list, description="各部分的子证书")

    @property
    def is_leaf(self) -> bool:
        return not self.parts

    def depth(self) -> int:
        return 0 if self.is_leaf else 1 + max(child.depth() for child in self.children)

    def internal_nodes(self) -> List["CertificateNode"]:
        if self.is_leaf:
            return []
        nodes = [self]
        for child in self.children:
            nodes.extend(child.internal_nodes())
        return nodes


class RecognitionResult(BaseModel):
    """识别结果"""
    num_vertices: int
    num_edges: int
    iterated_tripartite: bool
    certificate: Optional[CertificateNode] = None


class ExtremalRow(BaseModel):
    """t(s) 表的一行"""
    s: int
    t: int
    best_split: Optional[Tuple[int, int, int]] = None
