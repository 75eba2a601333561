"""
树引理领域模型
不可变二叉树：叶子带标签，内部节点恰有两个孩子，缓存 n（叶子数）。
节点在树中的位置用路径表示：从根出发，0 为左孩子，1 为右孩子。
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from ramsey3.common.exceptions import InvalidParameterError

Path = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class TreeNode:
    children: Tuple["TreeNode", ...] = ()
    label: Optional[int] = None
    # 分裂树中本节点所按的比特位；其余树为 None
    bit: Optional[int] = None
    n: int = field(init=False)

    def __post_init__(self) -> None:
        if self.children:
            if len(self.children) != 2:
                raise InvalidParameterError(f"内部节点必须恰有 2 个孩子: {len(self.children)}")
            object.__setattr__(self, "n", self.children[0].n + self.children[1].n)
        else:
            object.__setattr__(self, "n", 1)

    @classmethod
    def leaf(cls, label: int) -> "TreeNode":
        return cls(label=label)

    @classmethod
    def join(cls, left: "TreeNode", right: "TreeNode", bit: Optional[int] = None) -> "TreeNode":
        return cls(children=(left, right), bit=bit)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def left(self) -> "TreeNode":
        return self.children[0]

    @property
    def right(self) -> "TreeNode":
        return self.children[1]

    @property
    def weight(self) -> int:
        """内部节点的权重 n_v - 2"""
        return self.n - 2 if self.children else 0

    @property
    def m(self) -> int:
        """以本节点为最近公共祖先的叶子三元组个数 ½·n_x·n_y·(n_x+n_y-2)"""
        if not self.children:
            return 0
        nx, ny = self.left.n, self.right.n
        return nx * ny * (nx + ny - 2) // 2

    def leaves(self) -> List[int]:
        if not self.children:
            return [self.label if self.label is not None else 0]
        return self.left.leaves() + self.right.leaves()

    def preorder(self, path: Path = ()) -> Iterator[Tuple[Path, "TreeNode"]]:
        yield path, self
        for index, child in enumerate(self.children):
            yield from child.preorder(path + (index,))

    def internal_nodes(self) -> List[Tuple[Path, "TreeNode"]]:
        return [(p, node) for p, node in self.preorder() if node.children]

    def at(self, path: Path) -> "TreeNode":
        node = self
        for index in path:
            if not node.children:
                raise InvalidParameterError(f"路径越过叶子: {path}")
            node = node.children[index]
        return node

    def replace(self, path: Path, subtree: "TreeNode") -> "TreeNode":
        """路径复制：返回把 path 处子树换成 subtree 的新树"""
        if not path:
            return subtree
        head, rest = path[0], path[1:]
        children = list(self.children)
        children[head] = children[head].replace(rest, subtree)
        return TreeNode(children=tuple(children), label=self.label, bit=self.bit)

    def d_total(self) -> int:
        """叶子深度之和，等于所有内部节点的 n 之和"""
        return sum(node.n for _, node in self.internal_nodes())

    def shape_key(self) -> str:
        """忽略标签与孩子顺序的形状编码"""
        if not self.children:
            return "."
        keys = sorted(child.shape_key() for child in self.children)
        return "(" + "".join(keys) + ")"


@dataclass(frozen=True)
class Imbalance:
    """
    u 的孩子为 v, w；v 的孩子为 x, y；n_x > n_w 且 n_x ≥ n_y。
    v_side / x_side 为 v 在 u 中、x 在 v 中的孩子下标。
    """
    path: Path
    v_side: int
    x_side: int
    n_x: int
    n_w: int
    n_y: int
