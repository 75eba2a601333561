"""
蓝团提取服务层（门面）
"""
from typing import Optional

from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.extraction.models import LinkGraph
from ramsey3.domains.extraction.schemas import ExtractionResult
from ramsey3.domains.extraction.services import HalvingExtractionService, IteratedExtractionService


class ExtractionService:
    """蓝团提取服务类"""

    def __init__(self):
        self.halving = HalvingExtractionService()
        self.iterated = IteratedExtractionService()

    def link_graph(self, chi: TripleColoring, v: int) -> LinkGraph:
        return LinkGraph.from_coloring(chi, v)

    def extract_blue_clique_halving(self, chi: TripleColoring) -> ExtractionResult:
        return self.halving.extract_blue_clique_halving(chi)

    def extract_blue_clique_iterated(
        self, chi: TripleColoring, vertex_limit: Optional[int] = None
    ) -> ExtractionResult:
        return self.iterated.extract_blue_clique_iterated(chi, vertex_limit)
