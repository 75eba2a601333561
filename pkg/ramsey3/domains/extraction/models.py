"""
链接图
G_v 是 V∖{v} 上的红/蓝完全图，边 wx 的颜色即三元组 vwx 的颜色；只存红边。
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional

import networkx as nx

from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.verification.services import red_row


@dataclass(frozen=True, eq=False)
class LinkGraph:
    v: int
    red: nx.Graph

    @classmethod
    def from_coloring(cls, chi: TripleColoring, v: int, vertices: Optional[Iterable[int]] = None) -> "LinkGraph":
        if not 0 <= v < chi.n:
            raise InvalidParameterError(f"顶点 {v} 超出 [0, {chi.n})")
        others: List[int] = sorted(
            set(range(chi.n) if vertices is None else (int(x) for x in vertices)) - {v}
        )
        graph = nx.Graph()
        graph.add_nodes_from(others)
        for index, w in enumerate(others):
            row = red_row(chi, v, w)
            graph.add_edges_from((w, x) for x in others[index + 1:] if row[x])
        return cls(v=v, red=graph)

    @property
    def vertices(self) -> List[int]:
        return sorted(self.red.nodes)

    def is_red(self, w: int, x: int) -> bool:
        return self.red.has_edge(w, x)

    def color(self, w: int, x: int) -> str:
        if w == x or w not in self.red or x not in self.red:
            raise InvalidParameterError(f"不是链接图中的边: {(w, x)}")
        return "red" if self.red.has_edge(w, x) else "blue"
