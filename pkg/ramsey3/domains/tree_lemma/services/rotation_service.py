from typing import Iterator, List, Optional, Tuple

from loguru import logger

from ramsey3.common.exceptions import InvalidParameterError, NotAnImbalanceError
from ramsey3.domains.tree_lemma.models import Imbalance, Path, TreeNode
from ramsey3.domains.tree_lemma.schemas import RotationStep


class RotationService:
    """不平衡检测与旋转"""

    def iter_imbalances(self, tree: TreeNode) -> Iterator[Imbalance]:
        """先序扫描 u；在 u 内依次以左、右孩子为 v，在 v 内依次以左、右孩子为 x"""
        for path, node in tree.preorder():
            if node.is_leaf:
                continue
            for v_side in (0, 1):
                v, w = node.children[v_side], node.children[1 - v_side]
                if v.is_leaf:
                    continue
                for x_side in (0, 1):
                    x, y = v.children[x_side], v.children[1 - x_side]
                    if x.n > w.n and x.n >= y.n:
                        yield Imbalance(path=path, v_side=v_side, x_side=x_side, n_x=x.n, n_w=w.n, n_y=y.n)

    def find_imbalance(self, tree: TreeNode) -> Optional[Imbalance]:
        return next(self.iter_imbalances(tree), None)

    def is_imbalance(self, tree: TreeNode, imbalance: Imbalance) -> bool:
        try:
            u = tree.at(imbalance.path)
        except (InvalidParameterError, IndexError):
            return False
        if u.is_leaf:
            return False
        v, w = u.children[imbalance.v_side], u.children[1 - imbalance.v_side]
        if v.is_leaf:
            return False
        x, y = v.children[imbalance.x_side], v.children[1 - imbalance.x_side]
        return x.n > w.n and x.n >= y.n

    def rotate(self, tree: TreeNode, imbalance: Imbalance) -> TreeNode:
        """把 x 与 w 交换：x 上移一层，w 下移一层，D_total 减少 n_x - n_w"""
        if not self.is_imbalance(tree, imbalance):
            raise NotAnImbalanceError(f"路径 {imbalance.path} 处不是不平衡点")
        u = tree.at(imbalance.path)
        v, w = u.children[imbalance.v_side], u.children[1 - imbalance.v_side]
        x = v.children[imbalance.x_side]

        v_children = list(v.children)
        v_children[imbalance.x_side] = w
        new_v = TreeNode(children=tuple(v_children), label=v.label, bit=v.bit)
        u_children = [None, None]
        u_children[imbalance.v_side] = new_v
        u_children[1 - imbalance.v_side] = x
        new_u = TreeNode(children=tuple(u_children), label=u.label, bit=u.bit)
        return tree.replace(imbalance.path, new_u)

    def rotate_to_balance(self, tree: TreeNode, max_steps: Optional[int] = None) -> Tuple[TreeNode, List[RotationStep]]:
        """反复旋转直到没有不平衡；D_total 严格下降保证终止"""
        steps: List[RotationStep] = []
        current = tree
        d_total = current.d_total()
        while max_steps is None or len(steps) < max_steps:
            imbalance = self.find_imbalance(current)
            if imbalance is None:
                break
            current = self.rotate(current, imbalance)
            after = current.d_total()
            steps.append(RotationStep(
                path=imbalance.path,
                n_x=imbalance.n_x,
                n_w=imbalance.n_w,
                d_total_before=d_total,
                d_total_after=after,
            ))
            d_total = after
        logger.debug(f"旋转 {len(steps)} 次, D_total {tree.d_total()} -> {d_total}")
        return current, steps


def path_text(path: Path) -> str:
    return ".".join(str(i) for i in path)
