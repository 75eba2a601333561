"""
colex 排名工具
无序对 a<b 的排名为 C(b,2)+a；无序三元组 a<b<c 的排名为 C(c,3)+C(b,2)+a。
按最大元素 c 分块：块 c 内的三元组与 c 之前的所有对一一对应，
块内排名 = C(c,3) + pair_rank(a,b)。
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator, NamedTuple, Sequence, Tuple

import numpy as np


def comb2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


def comb3(n: int) -> int:
    return n * (n - 1) * (n - 2) // 6 if n >= 3 else 0


def pair_rank(u: int, v: int) -> int:
    a, b = (u, v) if u < v else (v, u)
    return comb2(b) + a


def triple_rank(u: int, v: int, w: int) -> int:
    a, b, c = sorted((u, v, w))
    return comb3(c) + comb2(b) + a


def pair_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """所有无序对 (a, b)，按 colex 排名排列"""
    counts = np.arange(n, dtype=np.int64)
    total = comb2(n)
    b = np.repeat(counts, counts)
    starts = np.repeat(np.cumsum(counts) - counts, counts)
    a = np.arange(total, dtype=np.int64) - starts
    return a, b


def unrank_pairs(ranks: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    ranks = np.asarray(ranks, dtype=np.int64)
    b = ((1 + np.sqrt(1 + 8 * ranks.astype(np.float64))) // 2).astype(np.int64)
    # 浮点开方的边界修正
    b = np.where(b * (b - 1) // 2 > ranks, b - 1, b)
    b = np.where((b + 1) * b // 2 <= ranks, b + 1, b)
    a = ranks - b * (b - 1) // 2
    return a, b


def unrank_triples(ranks: np.ndarray, n: int) -> np.ndarray:
    """colex 排名 -> (k, 3) 的有序三元组数组"""
    ranks = np.asarray(ranks, dtype=np.int64)
    starts = np.array([comb3(c) for c in range(n + 1)], dtype=np.int64)
    c = np.searchsorted(starts, ranks, side="right") - 1
    a, b = unrank_pairs(ranks - starts[c])
    return np.stack([a, b, c], axis=1) if len(ranks) else np.zeros((0, 3), dtype=np.int64)


class TripleBlock(NamedTuple):
    """以 c 为最大元素的三元组块"""
    c: int
    start: int
    a: np.ndarray
    b: np.ndarray
    ab: np.ndarray
    ac: np.ndarray
    bc: np.ndarray


def iter_triple_blocks(n: int) -> Iterator[TripleBlock]:
    """逐块给出三元组及其三条边在对数组中的排名"""
    all_a, all_b = pair_arrays(n)
    for c in range(2, n):
        size = comb2(c)
        a = all_a[:size]
        b = all_b[:size]
        base = comb2(c)
        yield TripleBlock(
            c=c,
            start=comb3(c),
            a=a,
            b=b,
            ab=np.arange(size, dtype=np.int64),
            ac=base + a,
            bc=base + b,
        )


def colex_triples(vertices: Sequence[int]) -> Iterator[Tuple[int, int, int]]:
    """给定顶点集内的三元组，按 colex 顺序"""
    ordered = sorted(vertices)
    for c_index in range(2, len(ordered)):
        for a, b in sorted(combinations(ordered[:c_index], 2), key=lambda p: (p[1], p[0])):
            yield a, b, ordered[c_index]
