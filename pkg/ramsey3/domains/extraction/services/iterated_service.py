"""
迭代三部图上的蓝团提取
顶层划分 V = V1∪V2∪V3 中，两点在一部分、一点在另一部分的三元组都是蓝的，
所以两个最大部分中各自递归得到的蓝团之并仍是蓝团：b(N) ≥ 2·b(N/3)。
"""
from typing import List, Optional

from loguru import logger

from ramsey3.common.exceptions import NotIteratedTripartiteError, Ramsey3Exception
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.extraction.schemas import ExtractionResult, IteratedStep
from ramsey3.domains.hypergraph.schemas import CertificateNode
from ramsey3.domains.hypergraph.services import IteratedTripartiteService


def iterated_bound(n: int) -> int:
    """2^⌊log3 N⌋"""
    if n <= 0:
        return 0
    power, j = 1, 0
    while power * 3 <= n:
        power *= 3
        j += 1
    return 1 << j


def balanced_split(vertices: List[int]) -> List[List[int]]:
    """升序连续切成三段，大小相差至多 1，较大的段在前"""
    base, extra = divmod(len(vertices), 3)
    parts, start = [], 0
    for i in range(3):
        size = base + (1 if i < extra else 0)
        parts.append(vertices[start:start + size])
        start += size
    return parts


def two_largest(sizes: List[int]) -> List[int]:
    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    return sorted(order[:2])


class IteratedExtractionService:

    def __init__(self):
        self.recognizer = IteratedTripartiteService()

    def extract_blue_clique_iterated(
        self, chi: TripleColoring, vertex_limit: Optional[int] = None
    ) -> ExtractionResult:
        certificate = self.recognizer.is_iterated_tripartite(
            chi.red_graph(), vertex_limit=vertex_limit, prefer_balanced=True
        )
        if certificate is None:
            raise NotIteratedTripartiteError(witness={"num_red_edges": chi.red_count})

        trace: List[IteratedStep] = []
        clique = sorted(self._extract(certificate, 0, trace))
        if not chi.is_blue_clique(clique):
            raise Ramsey3Exception(f"内部错误：迭代三部递归结果不是蓝团 {clique}")
        logger.info(f"迭代三部递归: N={chi.n}, 蓝团大小 {len(clique)}")
        return ExtractionResult(
            method="iterated",
            n=chi.n,
            clique=clique,
            size=len(clique),
            lower_bound=iterated_bound(chi.n),
            verified=True,
            iterated_trace=trace,
        )

    def _extract(self, node: CertificateNode, depth: int, trace: List[IteratedStep]) -> List[int]:
        vertices = sorted(node.vertices)
        if len(vertices) <= 2:
            return vertices

        if node.is_leaf:
            # 叶子内部没有红边，补成均衡划分
            parts = balanced_split(vertices)
            children: List[Optional[CertificateNode]] = [None, None, None]
            padded = True
        else:
            parts = [sorted(p) for p in node.parts]
            children = list(node.children)
            padded = False

        chosen = two_largest([len(p) for p in parts])
        trace.append(IteratedStep(
            depth=depth,
            vertices=len(vertices),
            part_sizes=[len(p) for p in parts],
            chosen=chosen,
            padded=padded,
        ))

        result: List[int] = []
        for i in chosen:
            child = children[i] if children[i] is not None else CertificateNode(vertices=parts[i])
            result.extend(self._extract(child, depth + 1, trace))
        return result
