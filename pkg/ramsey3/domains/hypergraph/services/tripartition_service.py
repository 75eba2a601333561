from collections import deque
from typing import Dict, Optional

from ramsey3.common.exceptions import NotTightlyConnectedError
from ramsey3.domains.hypergraph.models import ThreeGraph, canonical_triple, triple_pairs
from ramsey3.domains.hypergraph.schemas import Tripartition
from ramsey3.domains.hypergraph.services.components_service import TightComponentService


class TripartitionService:
    """紧连通分支的强制三部划分"""

    def __init__(self):
        self.components = TightComponentService()

    def forced_tripartition(self, component: ThreeGraph) -> Optional[Tripartition]:
        """
        从一条边出发标记 1,2,3，沿共享两个顶点的边传播：
        新顶点继承被替换顶点的标签。出现矛盾或校验失败时返回 None。
        紧连通时结果在标签置换意义下唯一。
        """
        decomposition = self.components.tight_components(component)
        if decomposition.count != 1:
            raise NotTightlyConnectedError(components=decomposition.count)

        pair_index = component.pair_index()
        seed = component.sorted_edges()[0]
        labels: Dict[int, int] = {seed[0]: 1, seed[1]: 2, seed[2]: 3}
        seen = {seed}
        queue = deque([seed])

        while queue:
            edge = queue.popleft()
            for x, y in triple_pairs(edge):
                forced = 6 - labels[x] - labels[y]
                for third in pair_index[(x, y)]:
                    current = labels.setdefault(third, forced)
                    if current != forced:
                        return None
                    neighbour = canonical_triple(x, y, third)
                    if neighbour not in seen:
                        seen.add(neighbour)
                        queue.append(neighbour)

        partition = Tripartition(part_of=labels)
        if not all(partition.is_rainbow(edge) for edge in component.edges):
            return None
        return partition
