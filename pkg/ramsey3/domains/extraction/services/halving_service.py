"""
减半递归：n(N) ≥ 1 + n(⌈(N-1)/2⌉)
取最小顶点 v，G_v 的红边构成二部图；每个红连通分支取较大的一侧
（平局取含该分支最小顶点的一侧），这些顶点两两与 v 构成蓝三元组，在其上递归。
"""
from typing import List, Tuple

import networkx as nx
from loguru import logger

from ramsey3.common.exceptions import PreconditionViolatedError, Ramsey3Exception
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.extraction.models import LinkGraph
from ramsey3.domains.extraction.schemas import ExtractionResult, HalvingStep
from ramsey3.domains.verification.services import RedStructureService


def halving_bound(n: int) -> int:
    """⌊log2(N+1)⌋"""
    return (n + 1).bit_length() - 1


def larger_sides(red: nx.Graph, v: int) -> List[int]:
    """每个红连通分支中较大的二部类之并"""
    kept: List[int] = []
    for component in sorted((sorted(c) for c in nx.connected_components(red)), key=lambda c: c[0]):
        sub = red.subgraph(component)
        if not nx.is_bipartite(sub):
            raise PreconditionViolatedError(
                f"G_{v} 的红边不是二部图",
                witness={"v": v, "component": component},
            )
        colors = nx.bipartite.color(sub)
        anchor = colors[component[0]]
        same = [w for w in component if colors[w] == anchor]
        other = [w for w in component if colors[w] != anchor]
        kept.extend(same if len(same) >= len(other) else other)
    return sorted(kept)


class HalvingExtractionService:

    def __init__(self):
        self.red_structure = RedStructureService()

    def extract_blue_clique_halving(self, chi: TripleColoring, check_precondition: bool = True) -> ExtractionResult:
        if check_precondition:
            report = self.red_structure.check_red_components_tripartite(chi)
            if not report.passed:
                raise PreconditionViolatedError("存在非三部的红紧分支", witness=report.violations[0])

        clique, trace = self._recurse(chi)
        if not chi.is_blue_clique(clique):
            raise Ramsey3Exception(f"内部错误：减半递归结果不是蓝团 {clique}")
        logger.info(f"减半递归: N={chi.n}, 蓝团大小 {len(clique)}, 深度 {len(trace)}")
        return ExtractionResult(
            method="halving",
            n=chi.n,
            clique=clique,
            size=len(clique),
            lower_bound=halving_bound(chi.n),
            verified=True,
            halving_trace=trace,
        )

    def _recurse(self, chi: TripleColoring) -> Tuple[List[int], List[HalvingStep]]:
        current = list(range(chi.n))
        clique: List[int] = []
        trace: List[HalvingStep] = []
        while current:
            v, rest = current[0], current[1:]
            clique.append(v)
            if not rest:
                break
            link = LinkGraph.from_coloring(chi, v, rest)
            kept = larger_sides(link.red, v)
            trace.append(HalvingStep(depth=len(trace), v=v, candidates=len(rest), kept=len(kept)))
            current = kept
        return sorted(clique), trace
