from typing import List, Sequence, Union

from ramsey3.common.exceptions import IdenticalWordsError, InvalidParameterError

Word = Union[str, Sequence[int]]


def _symbols(word: Word) -> List[int]:
    symbols = [int(ch) for ch in word]
    if any(s not in (1, 2, 3) for s in symbols):
        raise InvalidParameterError(f"码字字母表必须是 {{1,2,3}}: {word}")
    return symbols


class WordService:
    """单个码字上的运算"""

    def trifference_count(self, u: Word, v: Word, w: Word) -> int:
        """三个符号两两不同的坐标个数"""
        a, b, c = _symbols(u), _symbols(v), _symbols(w)
        if not len(a) == len(b) == len(c):
            raise InvalidParameterError(f"码字长度不一致: {len(a)}, {len(b)}, {len(c)}")
        return sum(1 for x, y, z in zip(a, b, c) if x != y and y != z and x != z)

    def difference_set(self, u: Word, v: Word) -> List[int]:
        """c(uv)：两个码字不同的坐标（从 1 开始）"""
        a, b = _symbols(u), _symbols(v)
        if len(a) != len(b):
            raise InvalidParameterError(f"码字长度不一致: {len(a)}, {len(b)}")
        coordinates = [i + 1 for i, (x, y) in enumerate(zip(a, b)) if x != y]
        if not coordinates:
            raise IdenticalWordsError(f"码字相同: {''.join(map(str, a))}")
        return coordinates
