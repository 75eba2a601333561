"""
树引理测试：分裂树、旋转、加权得分与好/坏节点
"""
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from ramsey3.common.exceptions import (
    FormatParseError,
    InvalidParameterError,
    MissingColorError,
    NotAnImbalanceError,
    ResourceGuardError,
)
from ramsey3.common.combinatorics import comb3
from ramsey3.domains.colorings.service import ColoringService
from ramsey3.domains.tree_lemma.models import Imbalance, TreeNode
from ramsey3.domains.tree_lemma.router import parse_vertex_set
from ramsey3.domains.tree_lemma.service import TreeLemmaService
from ramsey3.domains.tree_lemma.services import (
    BAD,
    GOOD,
    NEUTRAL,
    GoodnessService,
    RotationService,
    ScoreService,
    ShapeService,
    SplitTreeService,
)

leaf = TreeNode.leaf


def caterpillar() -> TreeNode:
    return TreeNode.join(leaf(0), TreeNode.join(leaf(1), TreeNode.join(leaf(2), leaf(3))))


def balanced_four() -> TreeNode:
    return TreeNode.join(TreeNode.join(leaf(0), leaf(1)), TreeNode.join(leaf(2), leaf(3)))


def lp_oracle(tree, budget):
    """分数背包的顶点解至多一个分量非整：枚举被装满的集合与一个部分装入的节点"""
    paid = [(node.weight, node.m) for _, node in tree.internal_nodes() if node.weight > 0]
    best = None
    for mask in range(1 << len(paid)):
        used = sum(w for i, (w, _) in enumerate(paid) if mask >> i & 1)
        if used > budget:
            continue
        base = sum(m for i, (_, m) in enumerate(paid) if not mask >> i & 1)
        candidates = [Fraction(base)]
        for j, (w, m) in enumerate(paid):
            if not mask >> j & 1:
                fraction = min(Fraction(1), (Fraction(budget) - used) / w)
                candidates.append(base - fraction * m)
        value = min(candidates)
        best = value if best is None else min(best, value)
    return best


def set_oracle(tree, budget):
    paid = [(node.weight, node.m) for _, node in tree.internal_nodes() if node.weight > 0]
    total = sum(node.m for _, node in tree.internal_nodes())
    gain = 0
    for size in range(len(paid) + 1):
        for chosen in combinations(paid, size):
            if sum(w for w, _ in chosen) <= budget:
                gain = max(gain, sum(m for _, m in chosen))
    return total - gain


class TestTreeModel:

    def test_counts(self):
        tree = caterpillar()
        assert tree.n == 4
        assert tree.weight == 2
        assert tree.m == 3
        assert tree.leaves() == [0, 1, 2, 3]
        assert tree.d_total() == 9
        assert tree.at((1, 1)).n == 2
        assert caterpillar().shape_key() != balanced_four().shape_key()

    def test_shape_key_ignores_order(self):
        mirrored = TreeNode.join(TreeNode.join(TreeNode.join(leaf(3), leaf(2)), leaf(1)), leaf(0))
        assert mirrored.shape_key() == caterpillar().shape_key()

    def test_invalid_nodes(self):
        with pytest.raises(InvalidParameterError):
            TreeNode(children=(leaf(0),))
        with pytest.raises(InvalidParameterError):
            caterpillar().at((0, 1))


class TestShapes:

    def test_shape_counts(self):
        counts = [len(list(ShapeService().enumerate_shapes(k))) for k in range(1, 11)]
        assert counts == [1, 1, 1, 2, 3, 6, 11, 23, 46, 98]

    def test_shapes_are_distinct(self):
        keys = [tree.shape_key() for tree in ShapeService().enumerate_shapes(8)]
        assert len(keys) == len(set(keys))

    def test_random_tree(self):
        first = ShapeService().random_tree(25, seed=4)
        second = ShapeService().random_tree(25, seed=4)
        assert first.n == 25
        assert first.leaves() == list(range(25))
        assert ShapeService().dump(first) == ShapeService().dump(second)

    def test_dump_and_parse(self):
        service = ShapeService()
        assert service.dump(caterpillar()) == "(0 (1 (2 3)))"
        parsed = service.parse("(0 (1 (2 3){n=2 w=0}){n=3}) \n")
        assert service.dump(parsed) == "(0 (1 (2 3)))"
        annotated = TreeLemmaService().dump(caterpillar())
        assert service.dump(service.parse(annotated)) == "(0 (1 (2 3)))"

    @pytest.mark.parametrize("text", ["", "(0 1 2)", "(0 1", "(0 1) 2", ")", "(0 x)", "(0)"])
    def test_parse_errors(self, text):
        with pytest.raises(FormatParseError):
            ShapeService().parse(text)

    def test_invalid_sizes(self):
        with pytest.raises(InvalidParameterError):
            list(ShapeService().enumerate_shapes(0))
        with pytest.raises(InvalidParameterError):
            ShapeService().random_tree(0, seed=0)


class TestSplitTree:

    def test_small_example(self):
        tree = SplitTreeService().build_split_tree([2, 0, 1])
        assert ShapeService().dump(tree) == "((0 2) 1)"
        assert tree.bit == 0
        assert tree.left.bit == 1

    @pytest.mark.parametrize("order", ["low", "high"])
    def test_cross_pairs_split_at_node_bit(self, order):
        vertices = [0, 1, 3, 4, 6, 7, 9, 12, 13, 15, 21, 30]
        tree = SplitTreeService().build_split_tree(vertices, ell=5, order=order)
        assert sorted(tree.leaves()) == vertices
        for _, node in tree.internal_nodes():
            assert node.left.n >= node.right.n
            for u in node.left.leaves():
                for w in node.right.leaves():
                    differ = u ^ w
                    assert (differ >> node.bit) & 1
                    if order == "low":
                        assert differ & ((1 << node.bit) - 1) == 0
                    else:
                        assert differ >> (node.bit + 1) == 0

    def test_tie_goes_to_zero_side(self):
        tree = SplitTreeService().build_split_tree(range(8))
        assert tree.bit == 0
        assert sorted(tree.left.leaves()) == [0, 2, 4, 6]

    @pytest.mark.parametrize(
        "vertices, ell, order",
        [([], None, "low"), ([-1, 2], None, "low"), ([1, 8], 3, "low"), ([1, 2], None, "middle")],
    )
    def test_invalid(self, vertices, ell, order):
        with pytest.raises(InvalidParameterError):
            SplitTreeService().build_split_tree(vertices, ell=ell, order=order)

    def test_parse_vertex_set(self):
        assert parse_vertex_set("0,3,8..11") == [0, 3, 8, 9, 10, 11]
        with pytest.raises(InvalidParameterError):
            parse_vertex_set("1,a")
        with pytest.raises(InvalidParameterError):
            parse_vertex_set(" , ")


class TestRotation:

    def test_caterpillar_imbalance(self):
        service = RotationService()
        imbalance = service.find_imbalance(caterpillar())
        assert imbalance == Imbalance(path=(), v_side=1, x_side=1, n_x=2, n_w=1, n_y=1)
        rotated = service.rotate(caterpillar(), imbalance)
        assert rotated.d_total() == 8
        assert sorted(rotated.leaves()) == [0, 1, 2, 3]
        assert service.find_imbalance(rotated) is None

    def test_rotate_rejects_non_imbalance(self):
        bogus = Imbalance(path=(), v_side=0, x_side=0, n_x=1, n_w=3, n_y=1)
        with pytest.raises(NotAnImbalanceError):
            RotationService().rotate(caterpillar(), bogus)
        assert not RotationService().is_imbalance(caterpillar(), Imbalance((0, 0, 0), 0, 0, 1, 1, 1))

    def test_trace(self):
        trace = TreeLemmaService().rotate_to_balance(caterpillar())
        assert len(trace.steps) == 1
        assert (trace.d_total_initial, trace.d_total_final) == (9, 8)
        assert trace.steps[0].d_total_before - trace.steps[0].d_total_after == 1

    def test_max_steps(self):
        tree = ShapeService().parse("(0 (1 (2 (3 (4 (5 (6 7)))))))")
        _, steps = RotationService().rotate_to_balance(tree, max_steps=1)
        assert len(steps) == 1

    def test_exhaustive_monotone_and_balanced(self):
        """10 个叶子以内的全部树形：每次旋转 D_total 恰好减少 n_x - n_w，终态每个孩子不少于 n/3"""
        service = RotationService()
        for k in range(1, 11):
            for tree in ShapeService().enumerate_shapes(k):
                final, steps = service.rotate_to_balance(tree)
                assert service.find_imbalance(final) is None
                assert sorted(final.leaves()) == sorted(tree.leaves())
                previous = tree.d_total()
                for step in steps:
                    assert step.d_total_before == previous
                    assert step.d_total_after == previous - (step.n_x - step.n_w)
                    previous = step.d_total_after
                assert final.d_total() == previous
                for _, node in final.internal_nodes():
                    assert all(3 * child.n >= node.n for child in node.children)

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=1, max_value=60), st.integers(min_value=0, max_value=10_000))
    def test_random_trees_reach_balance(self, k, seed):
        service = RotationService()
        final, steps = service.rotate_to_balance(ShapeService().random_tree(k, seed))
        assert service.find_imbalance(final) is None
        assert all(step.d_total_after < step.d_total_before for step in steps)


class TestScores:

    @pytest.mark.parametrize("budget, expected", [(0, 4), (1, 2), (2, 0), (Fraction(1, 2), 3), (10, 0)])
    def test_balanced_four(self, budget, expected):
        result = ScoreService().min_score_given_weight(balanced_four(), budget)
        assert result.exact
        assert result.score == expected
        assert result.used_weight == min(budget, 2)
        assert result.assignment[""] == min(Fraction(1), Fraction(budget) / 2)
        assert result.assignment["0"] == 1

    def test_matches_vertex_enumeration(self):
        budgets = [0, Fraction(1, 2), 1, Fraction(3, 2), 2, 3, Fraction(7, 3), 4, 7, 100]
        for k in range(3, 8):
            for tree in ShapeService().enumerate_shapes(k):
                for budget in budgets:
                    result = ScoreService().min_score_given_weight(tree, budget)
                    assert result.score == lp_oracle(tree, budget)
                    assert result.used_weight <= budget

    def test_float_mode(self):
        tree = ShapeService().random_tree(12, seed=1)
        exact = ScoreService().min_score_given_weight(tree, Fraction(5, 2))
        approx = ScoreService().min_score_given_weight(tree, 2.5, exact=False)
        assert not approx.exact
        assert approx.score == pytest.approx(float(exact.score))

    def test_breakpoints(self):
        tree = ShapeService().random_tree(15, seed=2)
        points = ScoreService().score_breakpoints(tree)
        assert points[0] == 0
        assert points[-1] == sum(node.weight for _, node in tree.internal_nodes())
        assert ScoreService().min_score_given_weight(tree, points[-1]).score == 0
        values = [ScoreService().min_score_given_weight(tree, w).score for w in points]
        assert all(a >= b for a, b in zip(values, values[1:]))

    def test_rotation_never_increases_score(self):
        scores, rotations = ScoreService(), RotationService()
        for k in range(3, 9):
            for tree in ShapeService().enumerate_shapes(k):
                for imbalance in rotations.iter_imbalances(tree):
                    rotated = rotations.rotate(tree, imbalance)
                    points = set(scores.score_breakpoints(tree)) | set(scores.score_breakpoints(rotated))
                    budgets = points | {Fraction(2 * p + 1, 2) for p in points}
                    for budget in sorted(budgets):
                        before = scores.min_score_given_weight(tree, budget).score
                        after = scores.min_score_given_weight(rotated, budget).score
                        assert after <= before

    @pytest.mark.parametrize("seed", range(6))
    def test_set_version_against_subsets(self, seed):
        tree = ShapeService().random_tree(10, seed=seed)
        for budget in (0, 1, 3, 6, 11, 40):
            score, chosen = ScoreService().min_score_set(tree, budget)
            assert score == set_oracle(tree, budget)
            assert score >= ScoreService().min_score_given_weight(tree, budget).score
            used = sum(tree.at(tuple(int(i) for i in p.split(".") if p)).weight for p in chosen)
            assert used <= budget

    def test_guards(self):
        tree = ShapeService().random_tree(10, seed=0)
        with pytest.raises(InvalidParameterError):
            ScoreService().min_score_given_weight(tree, -1)
        with pytest.raises(InvalidParameterError):
            ScoreService().min_score_set(tree, -1)
        with pytest.raises(ResourceGuardError):
            ScoreService().min_score_set(tree, 3, node_limit=1)

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=200), st.integers(min_value=0, max_value=10_000))
    def test_lca_triples_partition(self, k, seed):
        tree = ShapeService().random_tree(k, seed)
        assert sum(node.m for _, node in tree.internal_nodes()) == comb(k, 3)
        depths = sum(len(path) for path, node in tree.preorder() if node.is_leaf)
        assert tree.d_total() == depths


class TestGoodness:

    def test_four_vertex_example(self):
        tree = SplitTreeService().build_split_tree(range(4))
        service = GoodnessService()
        bad = service.classify_good_nodes(tree, {(0, 0): 5, (0, 2): 5})
        good = service.classify_good_nodes(tree, {(0, 0): 5, (0, 2): 6})
        assert bad == {(): BAD, (0,): NEUTRAL, (1,): NEUTRAL}
        assert good[()] == GOOD
        assert service.good_lca_triple_count(tree, good) == 4
        assert service.good_lca_triple_count(tree, bad) == 0

    def test_missing_color(self):
        tree = SplitTreeService().build_split_tree(range(4))
        with pytest.raises(MissingColorError):
            GoodnessService().classify_good_nodes(tree, {(0, 0): 1})

    def test_parsed_tree_has_no_bits(self):
        with pytest.raises(InvalidParameterError):
            GoodnessService().classify_good_nodes(caterpillar(), {})

    def test_rainbow_report(self):
        bundle = ColoringService().build_rainbow_coloring(5, 20, seed=9)
        colors = bundle.aux.vertex_colors
        vertices = [0, 1, 2, 5, 7, 8, 11, 13, 16, 19, 22, 23, 26, 29, 31]
        tree = SplitTreeService().build_split_tree(vertices, ell=5)
        report = TreeLemmaService().good_node_report(tree, colors)
        assert report.total_triples == comb3(len(vertices))
        for summary in report.nodes:
            node = tree.at(summary.path)
            if node.n < 3:
                assert summary.label == NEUTRAL
                continue
            side = node.left.leaves()
            top = max(Counter(int(colors[node.bit, u]) for u in side).values())
            assert summary.label == (GOOD if 2 * top <= len(side) else BAD)
        assert report.good_lca_triples == sum(s.m for s in report.nodes if s.label == GOOD)
        assert report.bad_weight == sum(s.weight for s in report.nodes if s.label == BAD)

    def test_bad_probability_bound(self):
        assert GoodnessService().bad_probability_bound(1, 4) == pytest.approx(2.0)
        assert GoodnessService().bad_probability_bound(9, 400) < 1e-6
        with pytest.raises(InvalidParameterError):
            GoodnessService().bad_probability_bound(0, 4)
