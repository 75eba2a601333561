"""
蓝团提取测试：链接图、减半递归、迭代三部递归
"""
import networkx as nx
import pytest

from ramsey3.common.exceptions import InvalidParameterError, NotIteratedTripartiteError, PreconditionViolatedError
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.colorings.service import ColoringService
from ramsey3.domains.extraction.models import LinkGraph
from ramsey3.domains.extraction.service import ExtractionService
from ramsey3.domains.extraction.services import (
    HalvingExtractionService,
    IteratedExtractionService,
    balanced_split,
    halving_bound,
    iterated_bound,
    larger_sides,
    two_largest,
)
from ramsey3.domains.hypergraph.services import CatalogService
from ramsey3.domains.trifference.services import CodeGenerateService

K4_MINUS = [(0, 1, 2), (0, 1, 3), (0, 2, 3)]


def blowup_chi(depth: int) -> TripleColoring:
    graph = CatalogService().iterated_blowup(depth)
    return TripleColoring.from_red_triples(graph.num_vertices, graph.sorted_edges())


class TestBounds:

    @pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (2, 1), (3, 2), (7, 3), (8, 3), (1023, 10)])
    def test_halving_bound(self, n, expected):
        assert halving_bound(n) == expected

    @pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (2, 1), (3, 2), (8, 2), (9, 4), (26, 4), (27, 8)])
    def test_iterated_bound(self, n, expected):
        assert iterated_bound(n) == expected

    def test_balanced_split(self):
        assert balanced_split(list(range(7))) == [[0, 1, 2], [3, 4], [5, 6]]
        assert balanced_split([4, 8, 9]) == [[4], [8], [9]]

    def test_two_largest(self):
        assert two_largest([3, 3, 3]) == [0, 1]
        assert two_largest([2, 3, 3]) == [1, 2]
        assert two_largest([1, 5, 2]) == [1, 2]


class TestLinkGraph:

    def test_colors(self):
        chi = TripleColoring.from_red_triples(4, [(0, 1, 2)])
        link = ExtractionService().link_graph(chi, 0)
        assert link.vertices == [1, 2, 3]
        assert link.color(1, 2) == "red"
        assert link.color(2, 1) == "red"
        assert link.color(1, 3) == "blue"
        assert LinkGraph.from_coloring(chi, 3).red.number_of_edges() == 0

    def test_invalid(self):
        chi = TripleColoring.all_blue(4)
        with pytest.raises(InvalidParameterError):
            LinkGraph.from_coloring(chi, 4)
        link = LinkGraph.from_coloring(chi, 0)
        with pytest.raises(InvalidParameterError):
            link.color(1, 1)
        with pytest.raises(InvalidParameterError):
            link.color(0, 1)


class TestHalving:

    def test_larger_sides(self):
        assert larger_sides(nx.path_graph([1, 2, 3]), 0) == [1, 3]
        # 平局取含分支最小顶点的一侧
        tie = nx.Graph([(4, 7), (5, 6)])
        tie.add_node(9)
        assert larger_sides(tie, 0) == [4, 5, 9]

    def test_odd_link_rejected(self):
        with pytest.raises(PreconditionViolatedError) as info:
            larger_sides(nx.cycle_graph(3), 5)
        assert info.value.witness == {"v": 5, "component": [0, 1, 2]}

    def test_all_blue(self):
        result = HalvingExtractionService().extract_blue_clique_halving(TripleColoring.all_blue(5))
        assert result.clique == [0, 1, 2, 3, 4]
        assert [step.kept for step in result.halving_trace] == [4, 3, 2, 1]
        assert result.lower_bound == 2

    def test_blowup(self):
        chi = blowup_chi(3)
        result = ExtractionService().extract_blue_clique_halving(chi)
        assert result.verified
        assert chi.is_blue_clique(result.clique)
        assert result.size >= halving_bound(27)

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_each_level_keeps_half(self, seed):
        code, _ = CodeGenerateService().generate_code(15, ell=30, r=2, seed=seed)
        for chi in (ColoringService().build_tight_coloring(code, seed=seed).chi, blowup_chi(2), TripleColoring.all_blue(6)):
            trace = HalvingExtractionService().extract_blue_clique_halving(chi).halving_trace
            assert trace[0].candidates == chi.n - 1
            for step, following in zip(trace, trace[1:]):
                assert following.candidates == step.kept - 1
            for step in trace:
                assert 2 * step.kept >= step.candidates
            assert len(trace) + 1 >= halving_bound(chi.n)

    def test_precondition(self):
        chi = TripleColoring.from_red_triples(5, K4_MINUS)
        with pytest.raises(PreconditionViolatedError) as info:
            HalvingExtractionService().extract_blue_clique_halving(chi)
        assert info.value.code == 1
        assert info.value.witness["reason"] == "not-tripartite"
        # 跳过预检时由链接图的奇圈报错
        with pytest.raises(PreconditionViolatedError):
            HalvingExtractionService().extract_blue_clique_halving(chi, check_precondition=False)


class TestIterated:

    def test_blowup(self):
        result = IteratedExtractionService().extract_blue_clique_iterated(blowup_chi(2))
        assert result.clique == [0, 1, 3, 4]
        assert result.size == result.lower_bound == 4
        assert result.iterated_trace[0].part_sizes == [3, 3, 3]
        assert not result.iterated_trace[0].padded

    def test_all_blue_padding(self):
        result = ExtractionService().extract_blue_clique_iterated(TripleColoring.all_blue(9))
        assert result.size == 4
        assert all(step.padded for step in result.iterated_trace)

    @pytest.mark.parametrize("n", [1, 2, 4, 10])
    def test_meets_bound(self, n):
        result = ExtractionService().extract_blue_clique_iterated(TripleColoring.all_blue(n))
        assert result.size >= iterated_bound(n)

    def test_not_iterated(self):
        chi = TripleColoring.from_red_triples(5, K4_MINUS)
        with pytest.raises(NotIteratedTripartiteError) as info:
            IteratedExtractionService().extract_blue_clique_iterated(chi)
        assert info.value.witness == {"num_red_edges": 3}
