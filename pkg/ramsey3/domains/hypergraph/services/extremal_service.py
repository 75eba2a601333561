from functools import lru_cache
from typing import List, Optional, Tuple

from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.domains.hypergraph.schemas import ExtremalRow


@lru_cache(maxsize=None)
def _best(s: int) -> Tuple[int, Optional[Tuple[int, int, int]]]:
    # t(1) = t(2) = 0 由递推式强制
    if s <= 2:
        return 0, None
    best_value, best_split = -1, None
    for a in range(1, s // 3 + 1):
        for b in range(a, (s - a) // 2 + 1):
            c = s - a - b
            value = a * b * c + _best(a)[0] + _best(b)[0] + _best(c)[0]
            if value > best_value:
                best_value, best_split = value, (a, b, c)
    return best_value, best_split


def _lookup(s: int) -> Tuple[int, Optional[Tuple[int, int, int]]]:
    if s < 1:
        raise InvalidParameterError(f"s 必须为正整数: {s}")
    # 自底向上预热缓存，避免深递归
    for smaller in range(3, s):
        _best(smaller)
    return _best(s)


class ExtremalService:
    """t(s)：s 个顶点的迭代三部 3-图的最大边数"""

    def max_iterated_tripartite_edges(self, s: int) -> int:
        return _lookup(s)[0]

    def best_split(self, s: int) -> Optional[Tuple[int, int, int]]:
        return _lookup(s)[1]

    def table(self, max_s: int) -> List[ExtremalRow]:
        if max_s < 1:
            raise InvalidParameterError(f"max_s 必须为正整数: {max_s}")
        rows = []
        for s in range(1, max_s + 1):
            value, split = _lookup(s)
            rows.append(ExtremalRow(s=s, t=value, best_split=split))
        return rows
