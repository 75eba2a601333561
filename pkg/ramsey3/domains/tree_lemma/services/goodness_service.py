"""
分裂树好/坏节点分类
节点 S'（|S'| ≥ 3）在分裂位 t 上：若 S_0' 中的颜色 c_t(u) 没有任何一种出现超过 |S_0'|/2 次，则为好节点，否则为坏节点。
|S'| < 3 的节点标记为 neutral，权重为 0，不参与计数。
"""
from collections import Counter
from typing import Dict, Mapping, Tuple, Union

import numpy as np
from loguru import logger

from ramsey3.common.combinatorics import comb3
from ramsey3.common.exceptions import InvalidParameterError, MissingColorError
from ramsey3.domains.tree_lemma.models import Path, TreeNode
from ramsey3.domains.tree_lemma.schemas import GoodNodeReport, NodeSummary

GOOD = "good"
BAD = "bad"
NEUTRAL = "neutral"

VertexColors = Union[np.ndarray, Mapping[Tuple[int, int], int]]


def _lookup(vertex_colors: VertexColors, level: int, vertex: int) -> int:
    if isinstance(vertex_colors, np.ndarray):
        if vertex_colors.ndim != 2 or not (0 <= level < vertex_colors.shape[0] and 0 <= vertex < vertex_colors.shape[1]):
            raise MissingColorError(f"缺少颜色 c_{level}({vertex})", level=level, vertex=vertex)
        return int(vertex_colors[level, vertex])
    try:
        return int(vertex_colors[(level, vertex)])
    except KeyError:
        raise MissingColorError(f"缺少颜色 c_{level}({vertex})", level=level, vertex=vertex) from None


class GoodnessService:

    def classify_good_nodes(self, tree: TreeNode, vertex_colors: VertexColors) -> Dict[Path, str]:
        labels: Dict[Path, str] = {}
        for path, node in tree.internal_nodes():
            if node.n < 3:
                labels[path] = NEUTRAL
                continue
            if node.bit is None:
                raise InvalidParameterError(f"节点 {path} 没有分裂位，不是分裂树")
            s0 = node.left.leaves()
            counts = Counter(_lookup(vertex_colors, node.bit, u) for u in s0)
            top = max(counts.values())
            labels[path] = GOOD if 2 * top <= len(s0) else BAD
        return labels

    def good_lca_triple_count(self, tree: TreeNode, labels: Mapping[Path, str]) -> int:
        return sum(node.m for path, node in tree.internal_nodes() if labels.get(path) == GOOD)

    def bad_probability_bound(self, s0: int, palette_a: int) -> float:
        """
        坏节点概率上界 A·2^s0·A^(-(s0+1)/2)：
        选出现次数超过一半的颜色（A 种）与其位置集合（至多 2^s0 种），其余概率为 A^(-(s0+1)/2)
        """
        if s0 < 1 or palette_a < 1:
            raise InvalidParameterError(f"参数必须为正: s0={s0}, A={palette_a}")
        return float(palette_a) * 2.0 ** s0 * float(palette_a) ** (-(s0 + 1) / 2)

    def report(self, tree: TreeNode, vertex_colors: VertexColors) -> GoodNodeReport:
        labels = self.classify_good_nodes(tree, vertex_colors)
        nodes = [
            NodeSummary(path=path, n=node.n, weight=node.weight, m=node.m, bit=node.bit, label=labels[path])
            for path, node in tree.internal_nodes()
        ]
        good = self.good_lca_triple_count(tree, labels)
        bad_weight = sum(item.weight for item in nodes if item.label == BAD)
        logger.debug(f"好节点 LCA 三元组 {good}/{comb3(tree.n)}, 坏节点权重 {bad_weight}")
        return GoodNodeReport(
            nodes=nodes,
            good_lca_triples=good,
            total_triples=comb3(tree.n),
            bad_weight=bad_weight,
        )
