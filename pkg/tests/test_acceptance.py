"""
桌面规模验收：构造的结构性质、树引理、精确预言机对照、提取下界与概率诊断
耗时较长，默认可用 -m "not slow" 跳过
"""
from itertools import combinations
from math import comb

import pytest

from ramsey3.common.random_streams import make_generator
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.colorings.service import ColoringService
from ramsey3.domains.extraction.services import HalvingExtractionService, IteratedExtractionService
from ramsey3.domains.hypergraph.models import ThreeGraph
from ramsey3.domains.hypergraph.services import ExtremalService, IteratedTripartiteService
from ramsey3.domains.tree_lemma.services import RotationService, ScoreService, ShapeService
from ramsey3.domains.trifference.services import CodeGenerateService
from ramsey3.domains.verification.services import (
    BicliqueService,
    BlueCliqueService,
    PairwiseUnionService,
    PhiConstancyService,
    ProbabilityService,
    RainbowService,
    RedStructureService,
)

pytestmark = pytest.mark.slow


def tight_instance(size: int, seed: int, ell: int = 120, r: int = 5):
    code, _ = CodeGenerateService().generate_code(size, ell=ell, r=r, seed=seed)
    return code, ColoringService().build_tight_coloring(code, seed=seed)


class TestConstructions:

    @pytest.mark.parametrize("seed", range(20))
    def test_tight_red_components_tripartite(self, seed):
        _, bundle = tight_instance(256, seed)
        report = RedStructureService().check_red_components_tripartite(bundle.chi)
        assert report.passed, report.violations

    @pytest.mark.parametrize("seed", range(10))
    def test_two_component_structure(self, seed):
        service = ColoringService()
        phi = service.build_rainbow_coloring(8, 20, seed=seed).phi
        bundle = service.build_two_component_coloring(phi, seed=seed)
        assert PhiConstancyService().check_phi_constancy(bundle.chi, phi).passed
        assert PairwiseUnionService().check_pairwise_unions_iterated(bundle.chi).passed

        triangles = RainbowService().edge_disjoint_rainbow_packing(phi, range(24))[:12]
        planted, used = service.build_planted_two_component(phi, triangles, seed=seed)
        assert all(planted.chi.is_red(*t) for t in used)
        report = PhiConstancyService().check_phi_constancy(planted.chi, phi)
        assert report.cross_part_law
        assert report.passed, report.violations
        assert PairwiseUnionService().check_pairwise_unions_iterated(planted.chi).passed

    @pytest.mark.parametrize("seed", range(10))
    def test_rainbow_bicliques(self, seed):
        phi = ColoringService().build_rainbow_coloring(10, 20, seed=seed).phi
        report = BicliqueService().check_biclique_structure(phi)
        assert report.classes_checked == 200
        assert report.passed, report.violations[:3]

    def test_rainbow_counts(self):
        phi = ColoringService().build_rainbow_coloring(10, 20, seed=0).phi
        stats = RainbowService().rainbow_count_statistics(phi, samples=100, subset_size=32, seed=0)
        assert stats.threshold == pytest.approx(32 ** 2.5 / 4)
        assert stats.passed, [row.seed for row in stats.samples if not row.passed]


class TestTreeLemma:

    def test_rotation_never_increases_score(self):
        scores, rotations = ScoreService(), RotationService()
        for k in range(3, 11):
            for tree in ShapeService().enumerate_shapes(k):
                for imbalance in rotations.iter_imbalances(tree):
                    rotated = rotations.rotate(tree, imbalance)
                    assert tree.d_total() - rotated.d_total() == imbalance.n_x - imbalance.n_w
                    points = set(scores.score_breakpoints(tree)) | set(scores.score_breakpoints(rotated))
                    for budget in sorted(points):
                        before = scores.min_score_given_weight(tree, budget).score
                        after = scores.min_score_given_weight(rotated, budget).score
                        assert after <= before

    def test_lca_triple_counts(self):
        rng = make_generator(0, "tests.acceptance-trees")
        for seed in range(1000):
            k = int(rng.integers(1, 201))
            tree = ShapeService().random_tree(k, seed)
            assert sum(node.m for _, node in tree.internal_nodes()) == comb(k, 3)


class TestOracles:

    def test_blue_clique_against_subsets(self):
        rng = make_generator(0, "tests.acceptance-cliques")
        for _ in range(50):
            chi = TripleColoring(12, rng.random(comb(12, 3)) < 0.5)
            best = max(
                (size for size in range(3, 13) for subset in combinations(range(12), size) if chi.is_blue_clique(subset)),
                default=2,
            )
            assert BlueCliqueService().max_blue_clique_exact(chi).size == best

    def test_t_against_all_graphs(self):
        recognizer = IteratedTripartiteService()
        for s in range(1, 6):
            triples = list(combinations(range(s), 3))
            best = 0
            for mask in range(1 << len(triples)):
                edges = [t for i, t in enumerate(triples) if mask >> i & 1]
                if len(edges) > best and recognizer.is_iterated_tripartite(ThreeGraph.from_edges(s, edges)):
                    best = len(edges)
            assert ExtremalService().max_iterated_tripartite_edges(s) == best

    def test_t9_recursion(self):
        def t(s: int) -> int:
            if s < 3:
                return 0
            return max(
                a * b * (s - a - b) + t(a) + t(b) + t(s - a - b)
                for a in range(1, s - 1) for b in range(1, s - a)
            )

        assert ExtremalService().max_iterated_tripartite_edges(9) == t(9) == 30


class TestExtraction:

    def test_halving_on_tight_instances(self):
        count = 0
        for k in range(2, 9):
            for seed in range(15):
                _, bundle = tight_instance(2 ** k - 1, seed)
                result = HalvingExtractionService().extract_blue_clique_halving(bundle.chi)
                assert bundle.chi.is_blue_clique(result.clique)
                assert result.size >= k
                count += 1
        assert count >= 100

    @pytest.mark.parametrize("j", range(6))
    def test_iterated_on_all_blue(self, j):
        result = IteratedExtractionService().extract_blue_clique_iterated(TripleColoring.all_blue(3 ** j))
        assert result.size >= 2 ** j


class TestProbabilities:

    def test_mono_probability_matches_simulation(self):
        code, _ = CodeGenerateService().generate_code(30, ell=10, r=0, seed=1)
        rng = make_generator(1, "tests.acceptance-triples")
        service = ProbabilityService()
        misses = 0
        for index in range(50):
            triple = sorted(rng.choice(30, size=3, replace=False).tolist())
            estimate = service.simulate_mono_probability(code, triple, trials=100_000, seed=index, tolerance=3)
            assert estimate.exact == service.mono_triangle_probability(code, *triple)
            misses += not estimate.within_tolerance
        # 3 倍标准误下单次失败概率约 0.3%
        assert misses <= 2

    def test_two_component_poisson(self):
        phi = ColoringService().build_rainbow_coloring(8, 20, seed=5).phi
        bundle = ColoringService().build_two_component_coloring(phi, seed=5)
        result = ProbabilityService().two_component_red_expectation(phi, bundle.chi, level=0.999)
        assert result.within_interval
