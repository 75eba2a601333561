"""
常用 3-图目录
"""
from itertools import combinations
from typing import List

from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.domains.hypergraph.models import ThreeGraph, Triple

FANO_LINES: List[Triple] = [
    (0, 1, 2), (0, 3, 4), (0, 5, 6),
    (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
]


class CatalogService:
    """命名 3-图的构造器"""

    def complete_3graph(self, n: int) -> ThreeGraph:
        return ThreeGraph.from_edges(n, combinations(range(n), 3))

    def k4_minus_edge(self) -> ThreeGraph:
        return ThreeGraph.from_edges(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])

    def fano_plane(self) -> ThreeGraph:
        return ThreeGraph.from_edges(7, FANO_LINES)

    def tight_cycle(self, length: int) -> ThreeGraph:
        if length < 4:
            raise InvalidParameterError(f"紧圈长度至少为 4: {length}")
        return ThreeGraph.from_edges(
            length, [(i, (i + 1) % length, (i + 2) % length) for i in range(length)]
        )

    def tight_cycle_minus_edge(self, length: int) -> ThreeGraph:
        cycle = self.tight_cycle(length)
        dropped = tuple(sorted((0, 1, 2)))
        return ThreeGraph(num_vertices=length, edges=cycle.edges - {dropped})

    def complete_tripartite(self, a: int, b: int, c: int) -> ThreeGraph:
        first = range(0, a)
        second = range(a, a + b)
        third = range(a + b, a + b + c)
        return ThreeGraph.from_edges(
            a + b + c, [(x, y, z) for x in first for y in second for z in third]
        )

    def iterated_blowup(self, depth: int) -> ThreeGraph:
        """3^depth 个顶点上的平衡迭代爆破"""
        if depth < 0:
            raise InvalidParameterError(f"深度必须非负: {depth}")
        size = 3 ** depth
        edges: List[Triple] = []

        def build(offset: int, width: int) -> None:
            if width < 3:
                return
            third = width // 3
            for x in range(offset, offset + third):
                for y in range(offset + third, offset + 2 * third):
                    for z in range(offset + 2 * third, offset + width):
                        edges.append((x, y, z))
            for k in range(3):
                build(offset + k * third, third)

        build(0, size)
        return ThreeGraph.from_edges(size, edges)
