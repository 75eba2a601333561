"""
校验测试：红紧分支结构、Φ 恒定性、两两之并、蓝团、二部团结构、彩虹计数与概率诊断
"""
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from ramsey3.common.exceptions import InvalidParameterError, ResourceGuardError
from ramsey3.domains.colorings.models import PairColoring, TripleColoring
from ramsey3.domains.colorings.service import ColoringService
from ramsey3.domains.hypergraph.services import CatalogService, IteratedTripartiteService
from ramsey3.domains.trifference.models import TrifferenceCode
from ramsey3.domains.trifference.services import CodeGenerateService, WordService
from ramsey3.domains.verification.service import VerificationService
from ramsey3.domains.verification.services import (
    BicliqueService,
    BlueCliqueService,
    PairwiseUnionService,
    PhiConstancyService,
    ProbabilityService,
    RainbowService,
    RedDensityService,
    RedStructureService,
    compatibility_masks,
    poisson_interval,
    red_row,
)


@pytest.fixture(scope="module")
def tight_bundle():
    code, _ = CodeGenerateService().generate_code(14, ell=30, r=2, seed=8)
    return code, ColoringService().build_tight_coloring(code, seed=2)


@pytest.fixture(scope="module")
def rainbow_phi():
    return ColoringService().build_rainbow_coloring(5, 20, seed=1).phi


def blowup_chi(depth: int) -> TripleColoring:
    graph = CatalogService().iterated_blowup(depth)
    return TripleColoring.from_red_triples(graph.num_vertices, graph.sorted_edges())


def brute_force_clique(chi: TripleColoring) -> int:
    for size in range(chi.n, 2, -1):
        if any(chi.is_blue_clique(s) for s in combinations(range(chi.n), size)):
            return size
    return min(chi.n, 2)


class TestRedStructure:

    def test_tight_coloring_is_red_tripartite(self, tight_bundle):
        _, bundle = tight_bundle
        report = RedStructureService().check_red_components_tripartite(bundle.chi)
        assert report.passed
        assert report.num_red_edges == bundle.chi.red_count
        assert sum(c.num_edges for c in report.components) == bundle.chi.red_count

    def test_non_tripartite_component(self):
        chi = TripleColoring.from_red_triples(7, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (4, 5, 6)])
        report = VerificationService().check_red_components_tripartite(chi)
        assert not report.passed
        assert report.violations == [
            {"component": 0, "reason": "not-tripartite", "edges": [(0, 1, 2), (0, 1, 3), (0, 2, 3)]}
        ]
        assert report.components[1].tripartition == [[4], [5], [6]]

    def test_threads_keep_order(self, tight_bundle):
        _, bundle = tight_bundle
        serial = RedStructureService().check_red_components_tripartite(bundle.chi, threads=1)
        parallel = RedStructureService().check_red_components_tripartite(bundle.chi, threads=3)
        assert serial == parallel


class TestPhiConstancy:

    def test_tight_coloring_passes(self, tight_bundle):
        _, bundle = tight_bundle
        report = PhiConstancyService().check_phi_constancy(bundle.chi, bundle.phi)
        assert report.passed
        assert not report.cross_part_law

    def test_phi_not_constant(self):
        chi = TripleColoring.from_red_triples(4, [(0, 1, 2), (0, 1, 3)])
        phi = PairColoring(4, np.array([0, 1, 2, 0, 1, 5]), palette=6)
        report = PhiConstancyService().check_phi_constancy(chi, phi)
        assert [v["reason"] for v in report.violations] == ["phi-not-constant"]
        assert report.violations[0]["edges"] == [(0, 1, 2), (0, 1, 3)]
        assert report.components[0].phi_constant is False

    def test_cross_part_law(self):
        chi = TripleColoring.from_red_triples(4, [(0, 1, 2), (0, 1, 3)])
        # Φ 在两条边上都是 {0,1,2}，但 φ(03) 应等于 φ(02)
        phi = PairColoring(4, np.array([0, 1, 2, 2, 1, 0]), palette=3, params={"A": 3, "ell": 1})
        report = PhiConstancyService().check_phi_constancy(chi, phi)
        assert report.cross_part_law
        assert report.violations == [
            {"component": 0, "reason": "cross-part-law", "pair": [0, 3], "color": 2, "expected": 1}
        ]
        assert report.components[0].colors == (2, 1, 0)
        relaxed = PhiConstancyService().check_phi_constancy(chi, phi, cross_part_law=False)
        assert relaxed.passed

    def test_vertex_count_mismatch(self):
        with pytest.raises(InvalidParameterError):
            PhiConstancyService().check_phi_constancy(TripleColoring.all_blue(4), PairColoring(5, np.zeros(10), palette=1))


class TestPairwiseUnions:

    def components(self, chi):
        return RedStructureService().red_components(chi)

    def test_compatible(self):
        first, second = self.components(TripleColoring.from_red_triples(5, [(0, 1, 2), (0, 3, 4)]))
        verdict, method, certificate = PairwiseUnionService().union_certificate(first, second)
        assert (verdict, method) == (True, "compatible")
        assert certificate.parts == [[0], [1, 3], [2, 4]]

    def test_nested_reverse(self, nested_reverse_chi):
        first, second = self.components(nested_reverse_chi)
        verdict, method, certificate = PairwiseUnionService().union_certificate(first, second)
        assert (verdict, method) == (True, "nested-reverse")
        union = first[0].union(second[0])
        assert IteratedTripartiteService().validate_certificate(union, certificate)
        assert certificate.parts == [[0, 1, 2], [3], [4]]

    def test_exact_negative_and_undecided(self):
        chi = TripleColoring.from_red_triples(6, [(0, 1, 2), (0, 3, 4), (1, 3, 4), (3, 4, 5), (2, 4, 5)])
        first, second = self.components(chi)
        assert PairwiseUnionService().union_certificate(first, second) == (False, "exact", None)
        assert PairwiseUnionService().union_certificate(first, second, vertex_limit=3) == (None, "undecided", None)

    def test_report(self):
        chi = TripleColoring.from_red_triples(7, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (4, 5, 6)])
        report = PairwiseUnionService().check_pairwise_unions_iterated(chi)
        assert report.num_components == 2
        assert report.pairs_checked == 1
        assert report.methods == {"not-tripartite": 1}
        assert report.matrix == [[False, False], [False, True]]
        assert not report.passed

    def test_facade_report(self, nested_reverse_chi):
        report = VerificationService().check_pairwise_unions_iterated(nested_reverse_chi)
        assert report.passed
        assert report.methods == {"nested-reverse": 1}

    def test_oversized_union_is_not_a_pass(self, blown_up_pair_chi):
        first, second = self.components(blown_up_pair_chi)
        assert first[1] is not None and second[1] is not None
        union = first[0].union(second[0])
        assert IteratedTripartiteService().is_iterated_tripartite(union.restrict(range(0, 21, 3))) is None
        report = PairwiseUnionService().check_pairwise_unions_iterated(blown_up_pair_chi)
        assert report.methods == {"undecided": 1}
        assert report.failures == []
        assert [(row.first, row.second, row.num_vertices) for row in report.undecided] == [(0, 1, 21)]
        assert not report.passed

    def test_component_guard(self):
        chi = TripleColoring.from_red_triples(9, [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
        with pytest.raises(ResourceGuardError):
            PairwiseUnionService().check_pairwise_unions_iterated(chi, component_limit=2)


class TestBlueClique:

    def test_red_row(self):
        chi = TripleColoring.from_red_triples(5, [(0, 1, 3)])
        assert red_row(chi, 1, 0).tolist() == [True, True, False, True, False]

    def test_trivial_cases(self):
        service = BlueCliqueService()
        assert service.max_blue_clique_exact(TripleColoring.all_blue(6)).size == 6
        assert service.max_blue_clique_exact(TripleColoring.all_red(6)).size == 2
        assert service.max_blue_clique_exact(TripleColoring.all_red(2)).witness == [0, 1]

    def test_iterated_blowup(self):
        result = BlueCliqueService().max_blue_clique_exact(blowup_chi(2))
        assert result.size == 4
        assert blowup_chi(2).is_blue_clique(result.witness)
        assert not result.capped

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(st.sets(st.sampled_from(list(combinations(range(7), 3))), max_size=20))
    def test_matches_brute_force(self, triples):
        chi = TripleColoring.from_red_triples(7, triples)
        result = BlueCliqueService().max_blue_clique_exact(chi)
        assert result.size == brute_force_clique(chi)
        assert chi.is_blue_clique(result.witness)

    def test_compatibility_masks(self):
        sizes = np.array([[0, 2, 0], [2, 0, 1], [0, 1, 0]])
        assert compatibility_masks(sizes, 1) == [0b010, 0b101, 0b010]
        assert compatibility_masks(sizes, 2) == [0b010, 0b001, 0]

    def test_incompatible_pair_never_shares_a_clique(self):
        # 0 与 1 没有任何公共扩展点
        chi = TripleColoring.from_red_triples(8, [(0, 1, w) for w in range(2, 8)])
        result = BlueCliqueService().max_blue_clique_exact(chi)
        assert result.size == 7 == brute_force_clique(chi)
        assert not {0, 1} <= set(result.witness)

    def test_resource_guard_and_cap(self):
        chi = TripleColoring.all_blue(70)
        with pytest.raises(ResourceGuardError):
            BlueCliqueService().max_blue_clique_exact(chi)
        capped = BlueCliqueService().max_blue_clique_exact(chi, size_limit=5)
        assert capped.size == 5
        assert capped.capped

    def test_greedy(self):
        chi = blowup_chi(2)
        result = VerificationService().greedy_blue_clique(chi, restarts=7, seed=3)
        assert len(result.restarts) == 7
        assert max(result.restarts) == result.size
        assert 2 <= result.size <= 4
        assert chi.is_blue_clique(result.witness)
        again = VerificationService().greedy_blue_clique(chi, restarts=7, seed=3)
        assert again == result


class TestBiclique:

    def test_rainbow_passes(self, rainbow_phi):
        report = BicliqueService().check_biclique_structure(rainbow_phi)
        assert report.passed
        assert report.classes_checked == len(rainbow_phi.color_classes())

    def test_missing_edge(self):
        pc = PairColoring(4, np.array([0, 1, 0, 2, 3, 0]), palette=4)
        report = BicliqueService().check_biclique_structure(pc)
        assert report.violations == [
            {"color": 0, "reason": "missing-edge", "component": [0, 1, 2, 3], "witness": [0, 3]}
        ]

    def test_odd_cycle(self):
        pc = PairColoring(3, np.zeros(3, dtype=np.int64), palette=1)
        report = BicliqueService().check_biclique_structure(pc)
        violation = report.violations[0]
        assert violation["reason"] == "odd-cycle"
        assert sorted(violation["witness"]) == [0, 1, 2]


class TestRainbowCounts:

    def test_count_matches_brute_force(self, rainbow_phi):
        subset = [0, 1, 2, 3, 5, 8, 13, 21, 30, 31]
        expected = sum(
            1 for u, v, w in combinations(subset, 3)
            if len({rainbow_phi.color(u, v), rainbow_phi.color(v, w), rainbow_phi.color(u, w)}) == 3
        )
        assert RainbowService().count_rainbow_triangles(rainbow_phi, subset) == expected

    def test_packing_is_edge_disjoint(self, rainbow_phi):
        packing = RainbowService().edge_disjoint_rainbow_packing(rainbow_phi)
        edges = [pair for a, b, c in packing for pair in ((a, b), (a, c), (b, c))]
        assert len(edges) == len(set(edges))
        for a, b, c in packing:
            assert len({rainbow_phi.color(a, b), rainbow_phi.color(b, c), rainbow_phi.color(a, c)}) == 3

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_count_bounded_and_renaming_invariant(self, data):
        n = data.draw(st.integers(min_value=3, max_value=9))
        palette = data.draw(st.integers(min_value=1, max_value=4))
        colors = data.draw(st.lists(st.integers(0, palette - 1), min_size=comb(n, 2), max_size=comb(n, 2)))
        subset = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=1)))
        renaming = np.array(data.draw(st.permutations(range(palette))))
        pc = PairColoring(n, np.array(colors), palette=palette)
        count = RainbowService().count_rainbow_triangles(pc, subset)
        assert 0 <= count <= comb(len(subset), 3)
        assert RainbowService().count_rainbow_triangles(pc.recolored(renaming[pc.colors]), subset) == count

    @pytest.mark.parametrize("subset", [None, list(range(0, 32, 2)), [1, 2, 4, 7, 11, 16, 22, 29]])
    def test_packing_is_maximal(self, rainbow_phi, subset):
        service = RainbowService()
        vertices = list(range(rainbow_phi.n)) if subset is None else subset
        packing = service.edge_disjoint_rainbow_packing(rainbow_phi, subset)
        used = {pair for a, b, c in packing for pair in ((a, b), (a, c), (b, c))}
        rainbow = [
            t for t in combinations(vertices, 3)
            if len({rainbow_phi.color(t[0], t[1]), rainbow_phi.color(t[1], t[2]), rainbow_phi.color(t[0], t[2])}) == 3
        ]
        assert len(rainbow) == service.count_rainbow_triangles(rainbow_phi, subset)
        for a, b, c in rainbow:
            assert {(a, b), (a, c), (b, c)} & used
        # 每个选中的三角形至多挡住 3(k-2) 个其他三角形
        k = len(vertices)
        assert len(packing) * (3 * (k - 2) + 1) >= len(rainbow)

    def test_statistics(self, rainbow_phi):
        service = RainbowService()
        stats = service.rainbow_count_statistics(rainbow_phi, samples=4, subset_size=12, seed=5, with_packing=True)
        assert stats.threshold == pytest.approx(12 ** 2.5 / 4)
        assert len(stats.samples) == 4
        for row in stats.samples:
            subset = service.sample_subset(rainbow_phi.n, 12, row.seed)
            assert len(subset) == 12
            assert row.count == service.count_rainbow_triangles(rainbow_phi, subset)
            assert row.passed == (row.count >= stats.threshold)
            assert row.packing is not None
        assert stats.pass_fraction == sum(r.passed for r in stats.samples) / 4

    def test_invalid_sampling(self, rainbow_phi):
        with pytest.raises(InvalidParameterError):
            RainbowService().rainbow_count_statistics(rainbow_phi, samples=1, subset_size=2)
        with pytest.raises(InvalidParameterError):
            RainbowService().count_rainbow_triangles(rainbow_phi, [0, 99])


class TestProbability:

    def test_single_triangle(self):
        service = ProbabilityService()
        cyclic = TrifferenceCode.from_strings(["12", "23", "31"], r=0)
        assert service.mono_triangle_probability(cyclic, 0, 1, 2) == Fraction(1, 4)
        disjoint = TrifferenceCode.from_strings(["111", "121", "123"], r=0)
        assert service.mono_triangle_probability(disjoint, 0, 1, 2) == 0
        with pytest.raises(InvalidParameterError):
            service.mono_triangle_probability(cyclic, 0, 0, 1)

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=5).flatmap(
        lambda ell: st.lists(st.text(alphabet="123", min_size=ell, max_size=ell), min_size=3, max_size=3, unique=True)
    ))
    def test_certain_only_for_equal_singleton_differences(self, strings):
        code = TrifferenceCode.from_strings(strings, r=0)
        probability = ProbabilityService().mono_triangle_probability(code, 0, 1, 2)
        words = WordService()
        sets = [words.difference_set(strings[a], strings[b]) for a, b in ((0, 1), (1, 2), (0, 2))]
        assert 0 <= probability <= 1
        assert (probability == 1) == (len(sets[0]) == 1 and sets[0] == sets[1] == sets[2])

    def test_certain_example(self):
        code = TrifferenceCode.from_strings(["2131", "2231", "2331"], r=0)
        assert ProbabilityService().mono_triangle_probability(code, 0, 1, 2) == 1

    def test_expected_is_sum_over_triangles(self, tight_bundle):
        code, _ = tight_bundle
        service = ProbabilityService()
        subset = [0, 2, 3, 5, 7, 11, 13]
        expected = sum(service.mono_triangle_probability(code, *t) for t in combinations(subset, 3))
        assert service.expected_mono_triangles(code, subset) == expected
        assert service.expected_mono_triangles(code, [0, 1]) == 0

    def test_simulation_close_to_exact(self):
        cyclic = TrifferenceCode.from_strings(["12", "23", "31"], r=0)
        estimate = ProbabilityService().simulate_mono_probability(cyclic, trials=4000, seed=1, tolerance=5)
        assert estimate.exact == Fraction(1, 4)
        assert estimate.within_tolerance
        assert abs(estimate.estimate - 0.25) < 0.05

    def test_simulation_with_zero_probability(self):
        disjoint = TrifferenceCode.from_strings(["111", "121", "123"], r=0)
        estimate = ProbabilityService().simulate_mono_probability(disjoint, trials=50, seed=0)
        assert estimate.estimate == 0
        assert estimate.z_score is None
        assert estimate.within_tolerance

    def test_simulation_needs_three_words(self):
        cyclic = TrifferenceCode.from_strings(["12", "23", "31"], r=0)
        with pytest.raises(InvalidParameterError):
            ProbabilityService().simulate_mono_probability(cyclic, vertices=[0, 1], trials=10)

    def test_poisson_interval(self):
        assert poisson_interval(0) == (0, 0)
        assert poisson_interval(1.0, 0.9) == (0, 3)
        low, high = poisson_interval(100.0, 0.999)
        assert low < 100 < high
        with pytest.raises(InvalidParameterError):
            poisson_interval(-1.0)

    def test_two_component_expectation(self, rainbow_phi):
        bundle = ColoringService().build_two_component_coloring(rainbow_phi, seed=3)
        result = ProbabilityService().two_component_red_expectation(rainbow_phi, bundle.chi)
        assert result.rainbow_triangles == RainbowService().count_rainbow_triangles(rainbow_phi)
        assert result.probability == Fraction(1, 27 * rainbow_phi.palette ** 6)
        assert result.mean == result.rainbow_triangles * result.probability
        assert result.observed == bundle.chi.red_count

    def test_alt_red_fraction(self):
        bundle = ColoringService().build_alt_tight_coloring(60, 2, seed=6)
        report = ProbabilityService().alt_red_fraction(bundle)
        assert report.monochromatic > 0
        assert report.red == bundle.chi.red_count
        assert report.fraction == pytest.approx(report.red / report.monochromatic)
        assert 0.12 < report.fraction < 0.32
        assert report.expected == pytest.approx(2 / 9)


class TestRedDensity:

    def test_blowup_attains_t(self):
        chi = blowup_chi(2)
        service = RedDensityService()
        row = service.max_red_edges_on_s_vertices(chi, 9)
        assert (row.max_red_edges, row.t_s, row.at_most_t) == (30, 30, True)
        assert service.max_red_edges_on_s_vertices(chi, 3).max_red_edges == 1

    def test_complete_exceeds_t(self):
        row = VerificationService().max_red_edges_on_s_vertices(TripleColoring.all_red(6), 4)
        assert row.max_red_edges == 4
        assert row.t_s == 2
        assert not row.at_most_t
        assert row.witness == [0, 1, 2, 3]

    def test_matches_brute_force(self):
        chi = TripleColoring.from_red_triples(7, [(0, 1, 2), (0, 1, 5), (2, 4, 6), (1, 2, 6), (3, 5, 6)])
        for s in range(1, 8):
            expected = max(
                sum(1 for t in combinations(subset, 3) if chi.is_red(*t))
                for subset in combinations(range(7), s)
            )
            assert RedDensityService().max_red_edges_on_s_vertices(chi, s).max_red_edges == expected

    def test_guards(self):
        with pytest.raises(ResourceGuardError):
            RedDensityService().max_red_edges_on_s_vertices(TripleColoring.all_red(20), 3)
        with pytest.raises(InvalidParameterError):
            RedDensityService().max_red_edges_on_s_vertices(TripleColoring.all_red(5), 6)
