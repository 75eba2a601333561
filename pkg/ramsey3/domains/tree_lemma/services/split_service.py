from typing import Iterable, List, Optional

from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.domains.tree_lemma.models import TreeNode

SPLIT_ORDERS = ("low", "high")


class SplitTreeService:
    """
    顶点子集 S ⊆ [0, 2^ell) 的比特分裂树。
    order="low" 在最低的不一致位上分裂（此时跨两侧的对 u,w 都满足 v2(u-w) = 分裂位）；
    order="high" 在最高的不一致位上分裂。
    元素多的一侧为左孩子 S_0，平局时该位为 0 的一侧为 S_0。
    """

    def build_split_tree(
        self,
        vertices: Iterable[int],
        ell: Optional[int] = None,
        order: str = "low",
    ) -> TreeNode:
        if order not in SPLIT_ORDERS:
            raise InvalidParameterError(f"未知的分裂顺序: {order}")
        elements = sorted(set(int(v) for v in vertices))
        if not elements:
            raise InvalidParameterError("S 不能为空")
        if elements[0] < 0:
            raise InvalidParameterError(f"元素必须非负: {elements[0]}")
        if ell is not None and elements[-1] >= 2 ** ell:
            raise InvalidParameterError(f"元素 {elements[-1]} 超出 [0, 2^{ell})")
        return self._build(elements, order)

    def _build(self, elements: List[int], order: str) -> TreeNode:
        if len(elements) == 1:
            return TreeNode.leaf(elements[0])
        disagree = 0
        for value in elements[1:]:
            disagree |= value ^ elements[0]
        bit = (disagree & -disagree).bit_length() - 1 if order == "low" else disagree.bit_length() - 1
        zeros = [v for v in elements if not (v >> bit) & 1]
        ones = [v for v in elements if (v >> bit) & 1]
        larger, smaller = (zeros, ones) if len(zeros) >= len(ones) else (ones, zeros)
        return TreeNode.join(self._build(larger, order), self._build(smaller, order), bit=bit)
