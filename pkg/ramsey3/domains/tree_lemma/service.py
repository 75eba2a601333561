"""
树引理服务层（门面）
"""
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ramsey3.domains.tree_lemma.models import Imbalance, Path, TreeNode
from ramsey3.domains.tree_lemma.schemas import GoodNodeReport, RotationTrace, ScoreResult
from ramsey3.domains.tree_lemma.services import (
    GoodnessService,
    RotationService,
    ScoreService,
    ShapeService,
    SplitTreeService,
)
from ramsey3.domains.tree_lemma.services.goodness_service import VertexColors
from ramsey3.domains.tree_lemma.services.score_service import Number


class TreeLemmaService:
    """树引理服务类"""

    def __init__(self):
        self.splitter = SplitTreeService()
        self.rotations = RotationService()
        self.scores = ScoreService()
        self.goodness = GoodnessService()
        self.shapes = ShapeService()

    def build_split_tree(self, vertices: Iterable[int], ell: Optional[int] = None, order: str = "low") -> TreeNode:
        return self.splitter.build_split_tree(vertices, ell, order)

    def find_imbalance(self, tree: TreeNode) -> Optional[Imbalance]:
        return self.rotations.find_imbalance(tree)

    def rotate(self, tree: TreeNode, imbalance: Imbalance) -> TreeNode:
        return self.rotations.rotate(tree, imbalance)

    def rotate_to_balance(self, tree: TreeNode, max_steps: Optional[int] = None) -> RotationTrace:
        final, steps = self.rotations.rotate_to_balance(tree, max_steps)
        return RotationTrace(
            steps=steps,
            d_total_initial=tree.d_total(),
            d_total_final=final.d_total(),
            tree=self.shapes.dump(final),
        )

    def min_score_given_weight(self, tree: TreeNode, budget: Number, exact: Optional[bool] = None) -> ScoreResult:
        return self.scores.min_score_given_weight(tree, budget, exact)

    def min_score_set(self, tree: TreeNode, budget: Number, node_limit: Optional[int] = None) -> Tuple[int, List[str]]:
        return self.scores.min_score_set(tree, budget, node_limit)

    def score_breakpoints(self, tree: TreeNode) -> List[int]:
        return self.scores.score_breakpoints(tree)

    def classify_good_nodes(self, tree: TreeNode, vertex_colors: VertexColors) -> Dict[Path, str]:
        return self.goodness.classify_good_nodes(tree, vertex_colors)

    def good_lca_triple_count(self, tree: TreeNode, labels: Mapping[Path, str]) -> int:
        return self.goodness.good_lca_triple_count(tree, labels)

    def good_node_report(self, tree: TreeNode, vertex_colors: VertexColors) -> GoodNodeReport:
        return self.goodness.report(tree, vertex_colors)

    def bad_probability_bound(self, s0: int, palette_a: int) -> float:
        return self.goodness.bad_probability_bound(s0, palette_a)

    def dump(self, tree: TreeNode, labels: Optional[Mapping[Path, str]] = None) -> str:
        """带注释 {n w m bit 标签} 的括号表示"""

        def annotate(path: Path, node: TreeNode) -> str:
            parts = [f"n={node.n}", f"w={node.weight}", f"m={node.m}"]
            if node.bit is not None:
                parts.append(f"bit={node.bit}")
            if labels is not None and path in labels:
                parts.append(labels[path])
            return " ".join(parts)

        return self.shapes.dump(tree, annotate)

    def parse(self, text: str) -> TreeNode:
        return self.shapes.parse(text)
