from typing import Dict, List

from networkx.utils import UnionFind

from ramsey3.domains.hypergraph.models import Pair, ThreeGraph, triple_pairs
from ramsey3.domains.hypergraph.schemas import TightComponentDecomposition


class TightComponentService:
    """紧分支：共享两个顶点的边并查集合并"""

    def tight_components(self, graph: ThreeGraph) -> TightComponentDecomposition:
        edges = graph.sorted_edges()
        if not edges:
            return TightComponentDecomposition()

        forest = UnionFind(range(len(edges)))
        owner: Dict[Pair, int] = {}
        for index, edge in enumerate(edges):
            for pair in triple_pairs(edge):
                first = owner.setdefault(pair, index)
                if first != index:
                    forest.union(first, index)

        groups: List[List[int]] = sorted(sorted(group) for group in forest.to_sets())
        components = [[edges[i] for i in group] for group in groups]
        supports = [sorted({v for edge in component for v in edge}) for component in components]
        return TightComponentDecomposition(components=components, vertex_supports=supports)

    def is_tightly_connected(self, graph: ThreeGraph) -> bool:
        # 无边图按约定不是紧连通的
        return self.tight_components(graph).count == 1

    def component_graphs(self, graph: ThreeGraph) -> List[ThreeGraph]:
        decomposition = self.tight_components(graph)
        return [
            ThreeGraph(num_vertices=graph.num_vertices, edges=frozenset(component))
            for component in decomposition.components
        ]
