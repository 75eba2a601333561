from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
from loguru import logger

from ramsey3.domains.colorings.models import PairColoring
from ramsey3.domains.verification.schemas import BicliqueReport
from ramsey3.domains.verification.services.red_structure_service import parallel_map


def _check_class(item: Tuple[int, Tuple[Any, Any]]) -> Tuple[int, Optional[Dict[str, Any]]]:
    """一个颜色类：(连通分支数, 第一个违例)"""
    color, (a, b) = item
    graph = nx.Graph()
    graph.add_edges_from(zip(a.tolist(), b.tolist()))
    components = sorted(sorted(c) for c in nx.connected_components(graph))
    for vertices in components:
        sub = graph.subgraph(vertices)
        if not nx.is_bipartite(sub):
            cycle = _odd_cycle(sub)
            return len(components), {"color": color, "reason": "odd-cycle", "component": vertices, "witness": cycle}
        left, right = nx.bipartite.sets(sub)
        if sub.number_of_edges() != len(left) * len(right):
            missing = next(
                (sorted((x, y)) for x in sorted(left) for y in sorted(right) if not sub.has_edge(x, y)),
                None,
            )
            return len(components), {"color": color, "reason": "missing-edge", "component": vertices, "witness": missing}
    return len(components), None


def _odd_cycle(graph: nx.Graph) -> List[int]:
    """BFS 分层后同层相邻的一条边，连同两端到公共祖先的路径构成奇圈"""
    root = min(graph.nodes)
    parent = {root: None}
    depth = {root: 0}
    for u, v in nx.bfs_edges(graph, root, sort_neighbors=sorted):
        parent[v] = u
        depth[v] = depth[u] + 1
    for u, v in sorted(graph.edges):
        if depth[u] == depth[v]:
            left, right = [u], [v]
            while left[-1] != right[-1]:
                left.append(parent[left[-1]])
                right.append(parent[right[-1]])
            return left + right[-2::-1]
    return []


class BicliqueService:
    """颜色类的完全二部图结构"""

    def check_biclique_structure(self, pc: PairColoring, threads: Optional[int] = None) -> BicliqueReport:
        classes = sorted(pc.color_classes().items())
        results = parallel_map(_check_class, classes, threads)
        violations = [violation for _, violation in results if violation is not None]
        components = sum(count for count, _ in results)
        logger.info(f"二部团结构: {len(classes)} 个颜色类, {components} 个分支, 违例 {len(violations)} 个")
        return BicliqueReport(
            classes_checked=len(classes),
            components_checked=components,
            violations=violations,
        )
