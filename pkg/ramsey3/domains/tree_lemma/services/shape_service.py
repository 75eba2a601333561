"""
树形枚举、随机树与括号表示
括号表示：叶子为整数标签，内部节点为 "(左 右)"，节点后可跟 "{...}" 注释，解析时忽略注释。
"""
import re
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Callable, Iterator, List, Optional, Tuple

from ramsey3.common.exceptions import FormatParseError, InvalidParameterError
from ramsey3.common.random_streams import make_generator
from ramsey3.domains.tree_lemma.models import Path, TreeNode

TREE_STREAM = "tree.random"

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\{[^}]*\})|(-?\d+))")


@lru_cache(maxsize=None)
def _shapes(k: int) -> Tuple[TreeNode, ...]:
    if k == 1:
        return (TreeNode.leaf(0),)
    result: List[TreeNode] = []
    for a in range(k - 1, (k - 1) // 2, -1):
        b = k - a
        if a == b:
            pairs = combinations_with_replacement(_shapes(a), 2)
        else:
            pairs = product(_shapes(a), _shapes(b))
        result.extend(TreeNode.join(left, right) for left, right in pairs)
    return tuple(result)


def relabel(tree: TreeNode, start: int = 0) -> TreeNode:
    """叶子按先序依次标为 start, start+1, ..."""
    counter = [start]

    def visit(node: TreeNode) -> TreeNode:
        if node.is_leaf:
            counter[0] += 1
            return TreeNode.leaf(counter[0] - 1)
        return TreeNode(children=tuple(visit(child) for child in node.children), bit=node.bit)

    return visit(tree)


class ShapeService:
    """树形工具"""

    def enumerate_shapes(self, k: int) -> Iterator[TreeNode]:
        """k 个叶子的全部无序树形（每个形状一次），叶子按先序标号"""
        if k < 1:
            raise InvalidParameterError(f"叶子数必须为正: {k}")
        for shape in _shapes(k):
            yield relabel(shape)

    def random_tree(self, k: int, seed: int) -> TreeNode:
        """每个内部节点把 n 个叶子均匀地分成 a + (n-a)，1 ≤ a < n"""
        if k < 1:
            raise InvalidParameterError(f"叶子数必须为正: {k}")
        rng = make_generator(seed, TREE_STREAM)

        def grow(n: int) -> TreeNode:
            if n == 1:
                return TreeNode.leaf(0)
            a = int(rng.integers(1, n))
            return TreeNode.join(grow(a), grow(n - a))

        return relabel(grow(k))

    def dump(self, tree: TreeNode, annotate: Optional[Callable[[Path, TreeNode], str]] = None) -> str:
        def visit(path: Path, node: TreeNode) -> str:
            if node.is_leaf:
                return str(node.label)
            body = "(" + " ".join(visit(path + (i,), child) for i, child in enumerate(node.children)) + ")"
            if annotate is not None:
                body += "{" + annotate(path, node) + "}"
            return body

        return visit((), tree)

    def parse(self, text: str) -> TreeNode:
        tokens: List[Tuple[str, str]] = []
        position = 0
        stripped = text.rstrip()
        while position < len(stripped):
            match = _TOKEN.match(stripped, position)
            if match is None:
                raise FormatParseError(f"无法解析的树表示，位置 {position}: {stripped[position:position + 10]!r}")
            position = match.end()
            if match.group(1):
                tokens.append(("(", "("))
            elif match.group(2):
                tokens.append((")", ")"))
            elif match.group(4):
                tokens.append(("leaf", match.group(4)))
        if not tokens:
            raise FormatParseError("空的树表示")

        index = 0

        def read() -> TreeNode:
            nonlocal index
            if index >= len(tokens):
                raise FormatParseError("树表示提前结束")
            kind, value = tokens[index]
            index += 1
            if kind == "leaf":
                return TreeNode.leaf(int(value))
            if kind != "(":
                raise FormatParseError("多余的右括号")
            children = []
            while index < len(tokens) and tokens[index][0] != ")":
                children.append(read())
            if index >= len(tokens):
                raise FormatParseError("缺少右括号")
            index += 1
            if len(children) != 2:
                raise FormatParseError(f"内部节点必须恰有 2 个孩子: {len(children)}")
            return TreeNode.join(children[0], children[1])

        tree = read()
        if index != len(tokens):
            raise FormatParseError("树表示后有多余内容")
        return tree
