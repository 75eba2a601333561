"""
实例校验服务层（门面）
"""
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from ramsey3.domains.colorings.models import ColoringBundle, PairColoring, TripleColoring
from ramsey3.domains.trifference.models import TrifferenceCode
from ramsey3.domains.verification.schemas import (
    BicliqueReport,
    CliqueResult,
    MonteCarloEstimate,
    PairwiseUnionReport,
    PhiConstancyReport,
    RainbowStatistics,
    RedDensityRow,
    RedExpectation,
    RedFractionReport,
    RedStructureReport,
)
from ramsey3.domains.verification.services import (
    BicliqueService,
    BlueCliqueService,
    PairwiseUnionService,
    PhiConstancyService,
    ProbabilityService,
    RainbowService,
    RedDensityService,
    RedStructureService,
)


class VerificationService:
    """实例校验服务类"""

    def __init__(self):
        self.red_structure = RedStructureService()
        self.phi_constancy = PhiConstancyService()
        self.pairwise = PairwiseUnionService()
        self.cliques = BlueCliqueService()
        self.bicliques = BicliqueService()
        self.rainbow = RainbowService()
        self.probability = ProbabilityService()
        self.density = RedDensityService()

    def check_red_components_tripartite(self, chi: TripleColoring) -> RedStructureReport:
        return self.red_structure.check_red_components_tripartite(chi)

    def check_phi_constancy(
        self, chi: TripleColoring, phi: PairColoring, cross_part_law: Optional[bool] = None
    ) -> PhiConstancyReport:
        return self.phi_constancy.check_phi_constancy(chi, phi, cross_part_law)

    def check_pairwise_unions_iterated(
        self, chi: TripleColoring, component_limit: Optional[int] = None, vertex_limit: Optional[int] = None
    ) -> PairwiseUnionReport:
        return self.pairwise.check_pairwise_unions_iterated(chi, component_limit, vertex_limit)

    def max_blue_clique_exact(
        self, chi: TripleColoring, size_limit: Optional[int] = None, vertex_limit: Optional[int] = None
    ) -> CliqueResult:
        return self.cliques.max_blue_clique_exact(chi, size_limit, vertex_limit)

    def greedy_blue_clique(self, chi: TripleColoring, restarts: Optional[int] = None, seed: int = 0) -> CliqueResult:
        return self.cliques.greedy_blue_clique(chi, restarts, seed)

    def is_blue_clique(self, chi: TripleColoring, vertices: Iterable[int]) -> bool:
        return chi.is_blue_clique(vertices)

    def check_biclique_structure(self, pc: PairColoring) -> BicliqueReport:
        return self.bicliques.check_biclique_structure(pc)

    def count_rainbow_triangles(self, pc: PairColoring, vertices: Optional[Iterable[int]] = None) -> int:
        return self.rainbow.count_rainbow_triangles(pc, vertices)

    def edge_disjoint_rainbow_packing(
        self, pc: PairColoring, vertices: Optional[Iterable[int]] = None
    ) -> List[Tuple[int, int, int]]:
        return self.rainbow.edge_disjoint_rainbow_packing(pc, vertices)

    def rainbow_count_statistics(
        self,
        pc: PairColoring,
        samples: Optional[int] = None,
        subset_size: Optional[int] = None,
        seed: int = 0,
        with_packing: bool = False,
    ) -> RainbowStatistics:
        return self.rainbow.rainbow_count_statistics(pc, samples, subset_size, seed, with_packing=with_packing)

    def mono_triangle_probability(self, code: TrifferenceCode, u: int, v: int, w: int) -> Fraction:
        return self.probability.mono_triangle_probability(code, u, v, w)

    def expected_mono_triangles(self, code: TrifferenceCode, vertices: Optional[Iterable[int]] = None) -> Fraction:
        return self.probability.expected_mono_triangles(code, vertices)

    def simulate_mono_probability(
        self,
        code: TrifferenceCode,
        vertices: Optional[Iterable[int]] = None,
        trials: Optional[int] = None,
        seed: int = 0,
    ) -> MonteCarloEstimate:
        return self.probability.simulate_mono_probability(code, vertices, trials, seed)

    def two_component_red_expectation(
        self, phi: PairColoring, chi: Optional[TripleColoring] = None
    ) -> RedExpectation:
        return self.probability.two_component_red_expectation(phi, chi)

    def alt_red_fraction(self, bundle: ColoringBundle) -> RedFractionReport:
        return self.probability.alt_red_fraction(bundle)

    def max_red_edges_on_s_vertices(
        self, chi: TripleColoring, s: int, vertex_limit: Optional[int] = None
    ) -> RedDensityRow:
        return self.density.max_red_edges_on_s_vertices(chi, s, vertex_limit)
