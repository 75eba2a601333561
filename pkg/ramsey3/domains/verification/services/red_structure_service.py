from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from loguru import logger

from ramsey3.common.config import settings
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.hypergraph.models import ThreeGraph
from ramsey3.domains.hypergraph.schemas import Tripartition
from ramsey3.domains.hypergraph.services import TightComponentService, TripartitionService
from ramsey3.domains.verification.schemas import ComponentReport, RedStructureReport

RedComponent = Tuple[ThreeGraph, Optional[Tripartition]]


def parallel_map(function, items: List, threads: Optional[int] = None) -> List:
    """按提交顺序返回结果；threads <= 1 时串行"""
    workers = settings.threads if threads is None else threads
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(function, items))


class RedStructureService:
    """红紧分支是否三部"""

    def __init__(self):
        self.components = TightComponentService()
        self.tripartitions = TripartitionService()

    def red_components(self, chi: TripleColoring, threads: Optional[int] = None) -> List[RedComponent]:
        """红子图的紧分支（按最小边排序）及各自的强制三部划分"""
        graphs = self.components.component_graphs(chi.red_graph())
        partitions = parallel_map(self.tripartitions.forced_tripartition, graphs, threads)
        return list(zip(graphs, partitions))

    def check_red_components_tripartite(self, chi: TripleColoring, threads: Optional[int] = None) -> RedStructureReport:
        components = self.red_components(chi, threads)
        reports: List[ComponentReport] = []
        violations = []
        for index, (graph, partition) in enumerate(components):
            reports.append(ComponentReport(
                index=index,
                num_edges=graph.num_edges,
                vertices=graph.vertex_support(),
                tripartition=partition.canonical() if partition else None,
            ))
            if partition is None:
                violations.append({
                    "component": index,
                    "reason": "not-tripartite",
                    "edges": graph.sorted_edges(),
                })
        logger.info(f"红紧分支 {len(components)} 个，非三部 {len(violations)} 个")
        return RedStructureReport(num_red_edges=chi.red_count, components=reports, violations=violations)
