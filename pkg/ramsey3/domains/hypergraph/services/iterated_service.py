from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from ramsey3.common.config import settings
from ramsey3.common.exceptions import ResourceGuardError
from ramsey3.domains.hypergraph.models import ThreeGraph, Triple
from ramsey3.domains.hypergraph.schemas import CertificateNode

Parts = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


class _Recognizer:
    """
    回溯搜索三路划分：每条边要么三个顶点分属三部分，要么整体落在同一部分。
    首个未分配顶点固定在第 1 部分（受限增长串），消去标签置换的对称性。
    """

    def __init__(self, edges: Sequence[Triple], prefer_balanced: bool):
        self.edges = list(edges)
        self.prefer_balanced = prefer_balanced
        self.cache: Dict[FrozenSet[int], Optional[CertificateNode]] = {}

    def certify(self, vertices: Tuple[int, ...]) -> Optional[CertificateNode]:
        key = frozenset(vertices)
        if key in self.cache:
            return self.cache[key]

        inner = [e for e in self.edges if e[0] in key and e[1] in key and e[2] in key]
        if len(vertices) <= 2 or not inner:
            node: Optional[CertificateNode] = CertificateNode(vertices=list(vertices))
        else:
            node = self._search(vertices, inner)
        self.cache[key] = node
        return node

    def _search(self, vertices: Tuple[int, ...], inner: List[Triple]) -> Optional[CertificateNode]:
        best: Optional[CertificateNode] = None
        best_key: Optional[Tuple[int, int]] = None
        for parts in self._partitions(vertices, inner):
            children = []
            for part in parts:
                child = self.certify(part)
                if child is None:
                    break
                children.append(child)
            else:
                node = CertificateNode(
                    vertices=list(vertices),
                    parts=[list(p) for p in parts],
                    children=children,
                )
                if not self.prefer_balanced:
                    return node
                balance = (max(len(p) for p in parts), -min(len(p) for p in parts))
                if best_key is None or balance < best_key:
                    best, best_key = node, balance
        return best

    def _partitions(self, vertices: Tuple[int, ...], inner: List[Triple]) -> Iterator[Parts]:
        # 顶点按升序分配，边在其最大顶点分配时检查
        closing: Dict[int, List[Triple]] = {v: [] for v in vertices}
        for edge in inner:
            closing[edge[2]].append(edge)
        label: Dict[int, int] = {}
        count = len(vertices)

        def assign(position: int, used: int) -> Iterator[Parts]:
            if position == count:
                if used == 3:
                    grouped: List[List[int]] = [[], [], []]
                    for v in vertices:
                        grouped[label[v]].append(v)
                    yield tuple(tuple(g) for g in grouped)  # type: ignore[misc]
                return
            # 剩余顶点不足以填满三部分
            if used + (count - position) < 3:
                return
            vertex = vertices[position]
            for part in range(min(used + 1, 3)):
                label[vertex] = part
                if all(_consistent(label[a], label[b], part) for a, b, _ in closing[vertex]):
                    yield from assign(position + 1, max(used, part + 1))
            del label[vertex]

        yield from assign(0, 0)


def _consistent(x: int, y: int, z: int) -> bool:
    return (x == y == z) or len({x, y, z}) == 3


def _absorb(node: CertificateNode, vertex: int) -> CertificateNode:
    """把孤立顶点并入证书：叶子直接加入，内部节点加入最小的部分"""
    vertices = sorted(node.vertices + [vertex])
    if node.is_leaf:
        return CertificateNode(vertices=vertices)
    target = min(range(3), key=lambda i: (len(node.parts[i]), i))
    parts = [list(p) for p in node.parts]
    children = list(node.children)
    parts[target] = sorted(parts[target] + [vertex])
    children[target] = _absorb(children[target], vertex)
    order = sorted(range(3), key=lambda i: parts[i][0])
    return CertificateNode(
        vertices=vertices,
        parts=[parts[i] for i in order],
        children=[children[i] for i in order],
    )


class IteratedTripartiteService:
    """迭代三部图识别与极值函数"""

    def is_iterated_tripartite(
        self,
        graph: ThreeGraph,
        vertex_limit: Optional[int] = None,
        prefer_balanced: bool = False,
        include_isolated: bool = True,
    ) -> Optional[CertificateNode]:
        """
        判定 graph 是否包含于某个边的迭代爆破中；是则返回证书。
        指数级算法，被边覆盖的顶点数受 vertex_limit 限制。
        """
        limit = vertex_limit if vertex_limit is not None else settings.recognition_vertex_limit
        support = graph.vertex_support()
        if len(support) > limit:
            raise ResourceGuardError("迭代三部图识别的顶点数过多", size=len(support), limit=limit)

        recognizer = _Recognizer(graph.sorted_edges(), prefer_balanced)
        certificate = recognizer.certify(tuple(support))
        logger.debug(f"迭代三部图识别: {len(support)} 个顶点, 缓存 {len(recognizer.cache)} 个子集")
        if certificate is None or not include_isolated:
            return certificate

        covered = set(support)
        for vertex in range(graph.num_vertices):
            if vertex not in covered:
                certificate = _absorb(certificate, vertex)
        return certificate

    def validate_certificate(self, graph: ThreeGraph, certificate: CertificateNode) -> bool:
        """独立校验证书：每个内部节点上的边要么跨三部分要么在同一部分内"""
        if not set(graph.vertex_support()) <= set(certificate.vertices):
            return False
        return self._validate_node(graph.sorted_edges(), certificate)

    def _validate_node(self, edges: List[Triple], node: CertificateNode) -> bool:
        inside = set(node.vertices)
        inner = [e for e in edges if set(e) <= inside]
        if node.is_leaf:
            return len(node.vertices) <= 2 or not inner
        if len(node.parts) != 3 or any(not p for p in node.parts):
            return False
        if sorted(v for p in node.parts for v in p) != sorted(node.vertices):
            return False
        part_of = {v: i for i, p in enumerate(node.parts) for v in p}
        for edge in inner:
            if not _consistent(part_of[edge[0]], part_of[edge[1]], part_of[edge[2]]):
                return False
        return all(self._validate_node(inner, child) for child in node.children)
