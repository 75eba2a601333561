"""
着色领域模型
- PairColoring：所有无序对上的颜色，按 colex 对排名存成 int64 数组
- TripleColoring：所有无序三元组的红/蓝，按 colex 三元组排名存成布尔数组（True 为红）
- AuxiliaryFunctions：构造过程中抽取的辅助随机函数
- ColoringBundle：构造器的统一返回值
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from ramsey3.common.combinatorics import comb2, comb3, pair_arrays, pair_rank, triple_rank, unrank_triples
from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.domains.hypergraph.models import ThreeGraph


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class PairColoring:
    """K_n 的边着色（对称，定义在全部 C(n,2) 个对上）；颜色编号位于 [0, palette)"""
    n: int
    colors: np.ndarray
    palette: int
    tag: str = "custom"
    seed: int = 0
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        colors = np.ascontiguousarray(self.colors, dtype=np.int64)
        if colors.shape != (comb2(self.n),):
            raise InvalidParameterError(f"对着色长度应为 C({self.n},2)={comb2(self.n)}，实际 {colors.shape}")
        if colors.size and colors.min() < 0:
            raise InvalidParameterError("颜色编号必须非负")
        object.__setattr__(self, "colors", _frozen(colors))

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise InvalidParameterError(f"对的两个顶点必须不同: {u}")
        return int(self.colors[pair_rank(u, v)])

    def matrix(self) -> np.ndarray:
        """n×n 对称颜色矩阵，对角线为 -1"""
        table = np.full((self.n, self.n), -1, dtype=np.int64)
        a, b = pair_arrays(self.n)
        table[a, b] = self.colors
        table[b, a] = self.colors
        return table

    def color_classes(self) -> Dict[int, Tuple[np.ndarray, np.ndarray]]:
        """颜色 -> 该颜色类的边 (a, b)，按颜色升序"""
        a, b = pair_arrays(self.n)
        order = np.argsort(self.colors, kind="stable")
        values, starts = np.unique(self.colors[order], return_index=True)
        bounds = list(starts) + [len(order)]
        return {
            int(value): (a[order[bounds[i]:bounds[i + 1]]], b[order[bounds[i]:bounds[i + 1]]])
            for i, value in enumerate(values)
        }

    def recolored(self, colors: np.ndarray) -> "PairColoring":
        return PairColoring(self.n, colors, self.palette, self.tag, self.seed, dict(self.params))

    def rainbow_level(self, color: int) -> Tuple[int, int]:
        """彩虹着色的颜色编号 t·A + 余数 -> (t, 余数)"""
        palette_a = int(self.params.get("A", 0))
        if palette_a <= 0:
            raise InvalidParameterError("不是彩虹着色（缺少参数 A）")
        return divmod(int(color), palette_a)

    def instance_hash(self) -> str:
        digest = hashlib.sha256()
        digest.update(f"paircol {self.n} {self.palette}\n".encode("ascii"))
        digest.update(self.colors.astype("<i8").tobytes())
        return digest.hexdigest()


@dataclass(frozen=True, eq=False)
class TripleColoring:
    """K_n^(3) 的红/蓝着色"""
    n: int
    red: np.ndarray
    tag: str = "custom"
    seed: int = 0
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        red = np.ascontiguousarray(self.red, dtype=bool)
        if red.shape != (comb3(self.n),):
            raise InvalidParameterError(f"三元组着色长度应为 C({self.n},3)={comb3(self.n)}，实际 {red.shape}")
        object.__setattr__(self, "red", _frozen(red))

    @classmethod
    def all_blue(cls, n: int, tag: str = "all-blue") -> "TripleColoring":
        return cls(n, np.zeros(comb3(n), dtype=bool), tag=tag)

    @classmethod
    def all_red(cls, n: int, tag: str = "all-red") -> "TripleColoring":
        return cls(n, np.ones(comb3(n), dtype=bool), tag=tag)

    @classmethod
    def from_red_triples(
        cls, n: int, triples: Iterable[Sequence[int]], tag: str = "custom", **kwargs: Any
    ) -> "TripleColoring":
        red = np.zeros(comb3(n), dtype=bool)
        for triple in triples:
            u, v, w = (int(x) for x in triple)
            if len({u, v, w}) != 3 or min(u, v, w) < 0 or max(u, v, w) >= n:
                raise InvalidParameterError(f"三元组不合法: {tuple(triple)}")
            red[triple_rank(u, v, w)] = True
        return cls(n, red, tag=tag, **kwargs)

    @property
    def red_count(self) -> int:
        return int(np.count_nonzero(self.red))

    def is_red(self, u: int, v: int, w: int) -> bool:
        if len({u, v, w}) != 3:
            raise InvalidParameterError(f"三元组的顶点必须互不相同: {(u, v, w)}")
        return bool(self.red[triple_rank(u, v, w)])

    def red_triples(self) -> np.ndarray:
        """所有红三元组，(k, 3) 数组，colex 顺序"""
        return unrank_triples(np.flatnonzero(self.red), self.n)

    def red_graph(self) -> ThreeGraph:
        return ThreeGraph.from_edges(self.n, (tuple(row) for row in self.red_triples().tolist()))

    def is_blue_clique(self, vertices: Iterable[int]) -> bool:
        ordered = sorted(set(int(v) for v in vertices))
        if len(ordered) < 3:
            return True
        ranks = np.fromiter(
            (triple_rank(a, b, c) for a, b, c in combinations(ordered, 3)),
            dtype=np.int64,
        )
        return not bool(self.red[ranks].any())

    def first_red_triple(self, vertices: Iterable[int]) -> Optional[Tuple[int, int, int]]:
        for a, b, c in combinations(sorted(set(int(v) for v in vertices)), 3):
            if self.red[triple_rank(a, b, c)]:
                return a, b, c
        return None

    def iter_red(self) -> Iterator[Tuple[int, int, int]]:
        for row in self.red_triples().tolist():
            yield row[0], row[1], row[2]

    def instance_hash(self) -> str:
        """着色内容的 SHA-256（与元数据无关）"""
        digest = hashlib.sha256()
        digest.update(f"tripcol {self.n}\n".encode("ascii"))
        digest.update(np.packbits(self.red, bitorder="little").tobytes())
        return digest.hexdigest()


@dataclass(frozen=True, eq=False)
class AuxiliaryFunctions:
    """
    构造中的辅助随机函数（都按 colex 对排名或顶点编号索引）
    g: 对 -> {1,2,3}；f1/f2/f3: 对 -> [palette]；
    vertex_strings: (N, ell) 的 {1,2,3} 串；vertex_colors: (ell, N) 的 c_t(u) ∈ [A]
    """
    g: Optional[np.ndarray] = None
    f1: Optional[np.ndarray] = None
    f2: Optional[np.ndarray] = None
    f3: Optional[np.ndarray] = None
    palette: Optional[int] = None
    vertex_strings: Optional[np.ndarray] = None
    vertex_colors: Optional[np.ndarray] = None


@dataclass(frozen=True, eq=False)
class ColoringBundle:
    """构造器返回值：χ、φ 与辅助函数"""
    chi: Optional[TripleColoring] = None
    phi: Optional[PairColoring] = None
    aux: AuxiliaryFunctions = field(default_factory=AuxiliaryFunctions)
