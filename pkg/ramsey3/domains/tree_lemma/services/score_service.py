"""
加权得分
对内部节点的 f: V_in -> [0,1]，权重 Σ f(v)(n_v-2)，得分 Σ (1-f(v)) m_v。
ν*_T(W) 为权重不超过 W 时的最小得分。这是可分离的分数背包：
按 m_v/(n_v-2) 递减依次装满，权重为 0 的节点免费取 f=1，平局按先序。
叶子数不超过 exact_rational_leaf_limit 时用精确有理数计算。
"""
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from ramsey3.common.config import settings
from ramsey3.common.exceptions import InvalidParameterError, ResourceGuardError
from ramsey3.domains.tree_lemma.models import Path, TreeNode
from ramsey3.domains.tree_lemma.schemas import ScoreResult
from ramsey3.domains.tree_lemma.services.rotation_service import path_text

Number = Union[Fraction, float]


def _greedy_order(tree: TreeNode) -> List[Tuple[int, Path, TreeNode]]:
    """(先序下标, 路径, 节点)，按装入顺序排列"""
    nodes = [(index, path, node) for index, (path, node) in enumerate(tree.internal_nodes())]
    free = [item for item in nodes if item[2].weight == 0]
    paid = [item for item in nodes if item[2].weight > 0]
    paid.sort(key=lambda item: (-Fraction(item[2].m, item[2].weight), item[0]))
    return free + paid


class ScoreService:
    """ν*_T(W) 与 0/1 版本"""

    def min_score_given_weight(
        self,
        tree: TreeNode,
        budget: Number,
        exact: Optional[bool] = None,
    ) -> ScoreResult:
        if budget < 0:
            raise InvalidParameterError(f"W 必须非负: {budget}")
        if exact is None:
            exact = tree.n <= settings.exact_rational_leaf_limit
        remaining: Number = Fraction(budget) if exact else float(budget)
        zero: Number = Fraction(0) if exact else 0.0
        one: Number = Fraction(1) if exact else 1.0

        assignment: Dict[str, Number] = {}
        score: Number = zero
        used: Number = zero
        for _, path, node in _greedy_order(tree):
            if node.weight == 0:
                value = one
            elif remaining >= node.weight:
                value = one
            elif remaining > 0:
                value = remaining / node.weight
            else:
                value = zero
            remaining -= value * node.weight
            used += value * node.weight
            score += (one - value) * node.m
            assignment[path_text(path)] = value
        return ScoreResult(
            weight_budget=Fraction(budget) if exact else float(budget),
            score=score,
            used_weight=used,
            assignment=assignment,
            exact=exact,
        )

    def score_breakpoints(self, tree: TreeNode) -> List[int]:
        """ν*_T 是 W 的分段线性函数，拐点为贪心顺序下的累计权重"""
        points = [0]
        total = 0
        for _, _, node in _greedy_order(tree):
            if node.weight:
                total += node.weight
                points.append(total)
        return sorted(set(points))

    def min_score_set(self, tree: TreeNode, budget: Number, node_limit: Optional[int] = None) -> Tuple[int, List[str]]:
        """
        f 取 0/1 的版本：整数权重上的 0/1 背包，最大化被选节点的 Σ m_v。
        返回 (最小得分, 被选节点路径)
        """
        if budget < 0:
            raise InvalidParameterError(f"W 必须非负: {budget}")
        limit = node_limit if node_limit is not None else settings.set_score_node_limit
        nodes = [(path, node) for path, node in tree.internal_nodes() if node.weight > 0]
        if len(nodes) > limit:
            raise ResourceGuardError("0/1 得分的内部节点过多", size=len(nodes), limit=limit)

        capacity = int(min(Fraction(budget), sum(node.weight for _, node in nodes)))
        total = sum(node.m for _, node in tree.internal_nodes())
        # best[c] = (已选 Σm, 被选下标)；下标按先序，平局取字典序小的选择
        best: List[Tuple[int, Tuple[int, ...]]] = [(0, ())] * (capacity + 1)
        for index, (_, node) in enumerate(nodes):
            for c in range(capacity, node.weight - 1, -1):
                gain, chosen = best[c - node.weight]
                candidate = (gain + node.m, chosen + (index,))
                if candidate[0] > best[c][0]:
                    best[c] = candidate
        gain, chosen = max(best, key=lambda item: item[0])
        return total - gain, [path_text(nodes[i][0]) for i in chosen]
