"""
超图核心领域模型
顶点为 [0, num_vertices) 上的稠密整数，边以升序三元组规范存储
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from ramsey3.common.exceptions import InvalidParameterError

Triple = Tuple[int, int, int]
Pair = Tuple[int, int]


def canonical_triple(u: int, v: int, w: int) -> Triple:
    a, b, c = sorted((int(u), int(v), int(w)))
    return a, b, c


def triple_pairs(edge: Triple) -> Tuple[Pair, Pair, Pair]:
    a, b, c = edge
    return (a, b), (a, c), (b, c)


@dataclass(frozen=True)
class ThreeGraph:
    """3-一致超图（不可变）"""
    num_vertices: int
    edges: FrozenSet[Triple] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise InvalidParameterError(f"顶点数必须非负: {self.num_vertices}")
        canonical = set()
        for edge in self.edges:
            if len(edge) != 3:
                raise InvalidParameterError(f"边必须恰有 3 个顶点: {edge}")
            triple = canonical_triple(*edge)
            if len(set(triple)) != 3:
                raise InvalidParameterError(f"边的顶点必须互不相同: {edge}")
            if triple[0] < 0 or triple[2] >= self.num_vertices:
                raise InvalidParameterError(f"边越界: {edge}")
            canonical.add(triple)
        object.__setattr__(self, "edges", frozenset(canonical))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Sequence[int]]) -> "ThreeGraph":
        return cls(num_vertices=num_vertices, edges=frozenset(tuple(e) for e in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Triple]:
        return sorted(self.edges)

    def vertex_support(self) -> List[int]:
        """被至少一条边覆盖的顶点"""
        return sorted({v for edge in self.edges for v in edge})

    def degrees(self) -> Dict[int, int]:
        degree: Dict[int, int] = defaultdict(int)
        for edge in self.edges:
            for v in edge:
                degree[v] += 1
        return dict(degree)

    def pair_index(self) -> Dict[Pair, Set[int]]:
        """对 -> 与之构成边的第三个顶点"""
        index: Dict[Pair, Set[int]] = defaultdict(set)
        for edge in self.edges:
            a, b, c = edge
            index[(a, b)].add(c)
            index[(a, c)].add(b)
            index[(b, c)].add(a)
        return dict(index)

    def shadow_pairs(self) -> Set[Pair]:
        """2-影子"""
        return {pair for edge in self.edges for pair in triple_pairs(edge)}

    def restrict(self, vertices: Iterable[int]) -> "ThreeGraph":
        """诱导子图（保留原编号）"""
        keep = set(vertices)
        return ThreeGraph(
            num_vertices=self.num_vertices,
            edges=frozenset(e for e in self.edges if e[0] in keep and e[1] in keep and e[2] in keep),
        )

    def union(self, other: "ThreeGraph") -> "ThreeGraph":
        return ThreeGraph(
            num_vertices=max(self.num_vertices, other.num_vertices),
            edges=self.edges | other.edges,
        )

    def compact(self) -> Tuple["ThreeGraph", List[int]]:
        """只保留被覆盖的顶点并重新编号；返回 (新图, 新编号 -> 原编号)"""
        support = self.vertex_support()
        position = {v: i for i, v in enumerate(support)}
        graph = ThreeGraph(
            num_vertices=len(support),
            edges=frozenset(tuple(position[v] for v in edge) for edge in self.edges),
        )
        return graph, support

    def is_linear(self) -> bool:
        """任意两条边至多共享一个顶点"""
        seen: Set[Pair] = set()
        for edge in self.edges:
            for pair in triple_pairs(edge):
                if pair in seen:
                    return False
                seen.add(pair)
        return True
