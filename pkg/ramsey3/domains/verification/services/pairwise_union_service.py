"""
两两红紧分支之并是否迭代三部
先走由两个强制三部划分直接构造证书的快速路径：
- compatible：存在标签双射使两个划分在公共顶点上一致，之并本身三部
- nested：公共顶点都落在 C 的某一部分 P 中，顶层取 C 的划分且 P 并入 C' 的全部顶点，
  该部分再按 C' 的划分拆开
- nested-reverse：C 与 C' 角色互换
其余情况交给精确识别（受顶点数上限约束，超限记为 undecided）。
每张证书都经 validate_certificate 独立校验。
"""
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from loguru import logger

from ramsey3.common.config import settings
from ramsey3.common.exceptions import ResourceGuardError
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.hypergraph.schemas import CertificateNode, Tripartition
from ramsey3.domains.hypergraph.services import IteratedTripartiteService
from ramsey3.domains.verification.schemas import PairwiseUnionReport, PairwiseUnionRow
from ramsey3.domains.verification.services.red_structure_service import RedComponent, RedStructureService


def _leaf(vertices: Sequence[int]) -> CertificateNode:
    return CertificateNode(vertices=sorted(vertices))


def _flat_node(parts: Sequence[Set[int]]) -> CertificateNode:
    """三个部分内部都没有边的单层证书"""
    ordered = sorted((sorted(p) for p in parts), key=lambda p: p[0])
    return CertificateNode(
        vertices=sorted(v for p in ordered for v in p),
        parts=ordered,
        children=[_leaf(p) for p in ordered],
    )


def _compatible_parts(first: Tripartition, second: Tripartition) -> Optional[List[Set[int]]]:
    """second 的标签能否经双射与 first 在公共顶点上一致；能则返回合并后的三部分"""
    mapping: Dict[int, int] = {}
    for vertex in set(first.part_of) & set(second.part_of):
        source, target = second.part_of[vertex], first.part_of[vertex]
        if mapping.setdefault(source, target) != target:
            return None
    if len(set(mapping.values())) != len(mapping):
        return None
    free = [label for label in (1, 2, 3) if label not in mapping.values()]
    for label in (1, 2, 3):
        if label not in mapping:
            mapping[label] = free.pop(0)
    parts: List[Set[int]] = [set(), set(), set()]
    for vertex, label in first.part_of.items():
        parts[label - 1].add(vertex)
    for vertex, label in second.part_of.items():
        parts[mapping[label] - 1].add(vertex)
    return parts


def _nested(outer: Tripartition, inner: Tripartition) -> Optional[CertificateNode]:
    """inner 的公共顶点全在 outer 的同一部分时，把 inner 整体放进该部分"""
    shared = set(outer.part_of) & set(inner.part_of)
    labels = {outer.part_of[v] for v in shared}
    if len(labels) > 1:
        return None
    host_label = labels.pop() if labels else min(
        (1, 2, 3), key=lambda k: (sum(1 for x in outer.part_of.values() if x == k), k)
    )
    parts: List[Set[int]] = [set(), set(), set()]
    for vertex, label in outer.part_of.items():
        parts[label - 1].add(vertex)
    host = parts[host_label - 1] | set(inner.part_of)

    inner_parts: List[Set[int]] = [set(), set(), set()]
    for vertex, label in inner.part_of.items():
        inner_parts[label - 1].add(vertex)
    extras = host - set(inner.part_of)
    smallest = min(range(3), key=lambda i: (len(inner_parts[i]), min(inner_parts[i])))
    inner_parts[smallest] |= extras
    host_node = _flat_node(inner_parts)

    top = [set(p) for p in parts]
    top[host_label - 1] = host
    order = sorted(range(3), key=lambda i: min(top[i]))
    children = [host_node if i == host_label - 1 else _leaf(top[i]) for i in order]
    return CertificateNode(
        vertices=sorted(v for p in top for v in p),
        parts=[sorted(top[i]) for i in order],
        children=children,
    )


class PairwiseUnionService:

    def __init__(self):
        self.red = RedStructureService()
        self.iterated = IteratedTripartiteService()

    def union_certificate(
        self,
        first: RedComponent,
        second: RedComponent,
        vertex_limit: Optional[int] = None,
    ) -> Tuple[Optional[bool], str, Optional[CertificateNode]]:
        """(是否迭代三部, 判定方法, 证书)；超限时第一项为 None"""
        (graph_a, part_a), (graph_b, part_b) = first, second
        union = graph_a.union(graph_b)
        if part_a is None or part_b is None:
            # 紧连通的迭代三部图必然三部
            return False, "not-tripartite", None

        candidates: List[Tuple[str, Optional[CertificateNode]]] = []
        merged = _compatible_parts(part_a, part_b)
        candidates.append(("compatible", _flat_node(merged) if merged else None))
        candidates.append(("nested", _nested(part_a, part_b)))
        candidates.append(("nested-reverse", _nested(part_b, part_a)))
        for method, certificate in candidates:
            if certificate is not None and self.iterated.validate_certificate(union, certificate):
                return True, method, certificate

        try:
            certificate = self.iterated.is_iterated_tripartite(union, vertex_limit, include_isolated=False)
        except ResourceGuardError:
            return None, "undecided", None
        return certificate is not None, "exact", certificate

    def check_pairwise_unions_iterated(
        self,
        chi: TripleColoring,
        component_limit: Optional[int] = None,
        vertex_limit: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> PairwiseUnionReport:
        limit = settings.pairwise_component_limit if component_limit is None else component_limit
        components = self.red.red_components(chi, threads)
        if len(components) > limit:
            raise ResourceGuardError("红紧分支过多，无法两两检查", size=len(components), limit=limit)

        count = len(components)
        matrix: List[List[Optional[bool]]] = [[True] * count for _ in range(count)]
        methods: Dict[str, int] = {}
        failures: List[PairwiseUnionRow] = []
        undecided: List[PairwiseUnionRow] = []
        for i, graph_i in enumerate(components):
            if graph_i[1] is None:
                matrix[i][i] = False
        for i, j in combinations(range(count), 2):
            verdict, method, certificate = self.union_certificate(components[i], components[j], vertex_limit)
            methods[method] = methods.get(method, 0) + 1
            matrix[i][j] = matrix[j][i] = verdict
            if verdict is False:
                failures.append(PairwiseUnionRow(first=i, second=j, iterated=False, method=method, certificate=None))
            elif verdict is None:
                support = components[i][0].union(components[j][0]).vertex_support()
                undecided.append(PairwiseUnionRow(
                    first=i, second=j, iterated=None, method=method, num_vertices=len(support),
                ))
        logger.info(f"两两之并: {count} 个分支, 失败 {len(failures)}, 未判定 {len(undecided)}")
        return PairwiseUnionReport(
            num_components=count,
            pairs_checked=count * (count - 1) // 2,
            methods=methods,
            matrix=matrix,
            failures=failures,
            undecided=undecided,
        )
