"""
Φ 恒定性
Φ(e) = {φ(xy), φ(yz), φ(xz)}。每个红紧分支上 Φ 必须恒定；
彩虹 φ 上还要求跨部分颜色律：u ∈ V^(i), v ∈ V^(j) 时 φ(uv) = c^(k)，{i,j,k} = {1,2,3}。
"""
from itertools import product
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from loguru import logger

from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.domains.colorings.models import PairColoring, TripleColoring
from ramsey3.domains.hypergraph.models import ThreeGraph, Triple, canonical_triple, triple_pairs
from ramsey3.domains.hypergraph.schemas import Tripartition
from ramsey3.domains.verification.schemas import ComponentReport, PhiConstancyReport
from ramsey3.domains.verification.services.red_structure_service import RedStructureService


def edge_palette(phi: PairColoring, edge: Triple) -> FrozenSet[int]:
    return frozenset(phi.color(x, y) for x, y in triple_pairs(edge))


class PhiConstancyService:

    def __init__(self):
        self.red = RedStructureService()

    def check_phi_constancy(
        self,
        chi: TripleColoring,
        phi: PairColoring,
        cross_part_law: Optional[bool] = None,
        threads: Optional[int] = None,
    ) -> PhiConstancyReport:
        if chi.n != phi.n:
            raise InvalidParameterError(f"χ 与 φ 的顶点数不一致: {chi.n} != {phi.n}")
        if cross_part_law is None:
            cross_part_law = "A" in phi.params
        components = self.red.red_components(chi, threads)

        reports: List[ComponentReport] = []
        violations: List[Dict[str, Any]] = []
        for index, (graph, partition) in enumerate(components):
            witness = self._constancy_witness(graph, phi)
            report = ComponentReport(
                index=index,
                num_edges=graph.num_edges,
                vertices=graph.vertex_support(),
                tripartition=partition.canonical() if partition else None,
                phi_constant=witness is None,
            )
            if witness is not None:
                first, second = witness
                violations.append({
                    "component": index,
                    "reason": "phi-not-constant",
                    "edges": [first, second],
                    "palettes": [sorted(edge_palette(phi, first)), sorted(edge_palette(phi, second))],
                })
            elif partition is not None:
                colors = self._part_colors(graph, phi, partition)
                report = report.model_copy(update={
                    "colors": tuple(colors[partition.part_of[part[0]]] for part in partition.canonical())
                })
                if cross_part_law:
                    broken = self._cross_part_witness(phi, partition, colors)
                    if broken is not None:
                        violations.append({"component": index, "reason": "cross-part-law", **broken})
            reports.append(report)

        logger.info(f"Φ 恒定性: {len(components)} 个分支, 违例 {len(violations)} 个")
        return PhiConstancyReport(
            components_checked=len(components),
            cross_part_law=cross_part_law,
            components=reports,
            violations=violations,
        )

    def _constancy_witness(self, graph: ThreeGraph, phi: PairColoring) -> Optional[Tuple[Triple, Triple]]:
        """共享两个顶点而 Φ 不同的第一对边"""
        for pair, thirds in sorted(graph.pair_index().items()):
            edges = sorted(canonical_triple(pair[0], pair[1], z) for z in thirds)
            base = edge_palette(phi, edges[0])
            for edge in edges[1:]:
                if edge_palette(phi, edge) != base:
                    return edges[0], edge
        return None

    def _part_colors(self, graph: ThreeGraph, phi: PairColoring, partition: Tripartition) -> Dict[int, int]:
        """标签 k -> c^(k)，由分支的第一条边读出"""
        colors: Dict[int, int] = {}
        for x, y in triple_pairs(graph.sorted_edges()[0]):
            colors[6 - partition.part_of[x] - partition.part_of[y]] = phi.color(x, y)
        return colors

    def _cross_part_witness(
        self, phi: PairColoring, partition: Tripartition, colors: Dict[int, int]
    ) -> Optional[Dict[str, Any]]:
        parts = partition.parts()
        for i, j in ((1, 2), (1, 3), (2, 3)):
            expected = colors[6 - i - j]
            for u, v in product(parts[i - 1], parts[j - 1]):
                actual = phi.color(u, v)
                if actual != expected:
                    return {"pair": sorted((u, v)), "color": actual, "expected": expected}
        return None
