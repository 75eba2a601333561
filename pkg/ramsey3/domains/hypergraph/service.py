"""
超图核心服务层（门面）
紧分支、强制三部划分、迭代三部图识别、t(s) 与红色嵌入分别由 services/ 子模块实现
"""
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple

from ramsey3.domains.hypergraph.models import ThreeGraph
from ramsey3.domains.hypergraph.schemas import (
    CertificateNode,
    ExtremalRow,
    RecognitionResult,
    TightComponentDecomposition,
    Tripartition,
)
from ramsey3.domains.hypergraph.services import (
    CatalogService,
    EmbeddingService,
    ExtremalService,
    IteratedTripartiteService,
    TightComponentService,
    TripartitionService,
)

if TYPE_CHECKING:
    from ramsey3.domains.colorings.models import TripleColoring


class HypergraphService:
    """超图核心服务类"""

    def __init__(self):
        self.components = TightComponentService()
        self.tripartitions = TripartitionService()
        self.iterated = IteratedTripartiteService()
        self.extremal = ExtremalService()
        self.embedding = EmbeddingService()
        self.catalog = CatalogService()

    def tight_components(self, graph: ThreeGraph) -> TightComponentDecomposition:
        return self.components.tight_components(graph)

    def is_tightly_connected(self, graph: ThreeGraph) -> bool:
        return self.components.is_tightly_connected(graph)

    def forced_tripartition(self, component: ThreeGraph) -> Optional[Tripartition]:
        return self.tripartitions.forced_tripartition(component)

    def is_iterated_tripartite(
        self,
        graph: ThreeGraph,
        vertex_limit: Optional[int] = None,
        prefer_balanced: bool = False,
    ) -> Optional[CertificateNode]:
        return self.iterated.is_iterated_tripartite(graph, vertex_limit, prefer_balanced)

    def recognize(self, graph: ThreeGraph, vertex_limit: Optional[int] = None) -> RecognitionResult:
        certificate = self.iterated.is_iterated_tripartite(graph, vertex_limit)
        return RecognitionResult(
            num_vertices=graph.num_vertices,
            num_edges=graph.num_edges,
            iterated_tripartite=certificate is not None,
            certificate=certificate,
        )

    def max_iterated_tripartite_edges(self, s: int) -> int:
        return self.extremal.max_iterated_tripartite_edges(s)

    def t_table(self, max_s: int) -> List[ExtremalRow]:
        return self.extremal.table(max_s)

    def contains_red_copy(
        self,
        chi: "TripleColoring",
        pattern: ThreeGraph,
        vertex_limit: Optional[int] = None,
    ) -> Optional[Dict[int, int]]:
        return self.embedding.contains_red_copy(chi, pattern, vertex_limit)

    def component_tripartitions(
        self, graph: ThreeGraph
    ) -> List[Tuple[ThreeGraph, Optional[Tripartition]]]:
        return [(c, self.tripartitions.forced_tripartition(c)) for c in self.components.component_graphs(graph)]
