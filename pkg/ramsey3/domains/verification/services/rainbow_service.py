"""
彩虹三角形计数
S 内三对颜色两两不同的三元组。按最大顶点分块向量化，块内对按 colex 顺序。
"""
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np
from loguru import logger

from ramsey3.common.combinatorics import pair_arrays
from ramsey3.common.config import settings
from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.common.random_streams import make_generator, substream_seed
from ramsey3.domains.colorings.models import PairColoring
from ramsey3.domains.verification.schemas import RainbowSample, RainbowStatistics
from ramsey3.domains.verification.services.red_structure_service import parallel_map

RAINBOW_SAMPLE_STREAM = "verification.rainbow-sample"


def _subset(pc: PairColoring, vertices: Iterable[int]) -> np.ndarray:
    chosen = np.array(sorted(set(int(v) for v in vertices)), dtype=np.int64)
    if chosen.size and (chosen[0] < 0 or chosen[-1] >= pc.n):
        raise InvalidParameterError(f"顶点超出 [0, {pc.n})")
    return chosen


def sub_matrix(pc: PairColoring, chosen: np.ndarray) -> np.ndarray:
    """S 上的 k×k 颜色矩阵（对角线为 -1）"""
    if chosen.size < 2:
        return np.full((chosen.size, chosen.size), -1, dtype=np.int64)
    low = np.minimum.outer(chosen, chosen)
    high = np.maximum.outer(chosen, chosen)
    ranks = high * (high - 1) // 2 + low
    np.fill_diagonal(ranks, 0)
    table = pc.colors[ranks]
    np.fill_diagonal(table, -1)
    return table


def _rainbow_blocks(table: np.ndarray) -> Iterator[Tuple[int, np.ndarray, np.ndarray]]:
    """每个 c（S 内下标）产出 (c, a, b)，a<b<c 且 abc 为彩虹三角形，按 colex 顺序"""
    for c in range(2, len(table)):
        a, b = pair_arrays(c)
        ab, ac, bc = table[a, b], table[a, c], table[b, c]
        mask = (ab != ac) & (ab != bc) & (ac != bc)
        yield c, a[mask], b[mask]


class RainbowService:

    def count_rainbow_triangles(self, pc: PairColoring, vertices: Optional[Iterable[int]] = None) -> int:
        chosen = _subset(pc, range(pc.n) if vertices is None else vertices)
        table = sub_matrix(pc, chosen)
        return sum(len(a) for _, a, _ in _rainbow_blocks(table))

    def edge_disjoint_rainbow_packing(
        self, pc: PairColoring, vertices: Optional[Iterable[int]] = None
    ) -> List[Tuple[int, int, int]]:
        """按 colex 顺序贪心选取两两不共边的彩虹三角形"""
        chosen = _subset(pc, range(pc.n) if vertices is None else vertices)
        table = sub_matrix(pc, chosen)
        used = np.zeros(table.shape, dtype=bool)
        packing: List[Tuple[int, int, int]] = []
        for c, a_list, b_list in _rainbow_blocks(table):
            for a, b in zip(a_list.tolist(), b_list.tolist()):
                if used[a, b] or used[a, c] or used[b, c]:
                    continue
                used[a, b] = used[a, c] = used[b, c] = True
                packing.append((int(chosen[a]), int(chosen[b]), int(chosen[c])))
        return packing

    def sample_subset(self, n: int, subset_size: int, sample_seed: int) -> List[int]:
        rng = make_generator(sample_seed, RAINBOW_SAMPLE_STREAM)
        return sorted(rng.choice(n, size=subset_size, replace=False).tolist())

    def rainbow_count_statistics(
        self,
        pc: PairColoring,
        samples: Optional[int] = None,
        subset_size: Optional[int] = None,
        seed: int = 0,
        required_fraction: Optional[float] = None,
        with_packing: bool = False,
        threads: Optional[int] = None,
    ) -> RainbowStatistics:
        """
        随机抽取 samples 个大小为 k 的子集，彩虹三角形数与 k^2.5/4 比较。
        第 i 个子集由派生种子 substream_seed(seed, 流标签, i) 独立抽取，失败时记录该种子。
        """
        count = settings.rainbow_samples if samples is None else samples
        k = settings.rainbow_subset_size if subset_size is None else subset_size
        required = settings.rainbow_pass_fraction if required_fraction is None else required_fraction
        if count < 1 or not 3 <= k <= pc.n:
            raise InvalidParameterError(f"采样参数不合法: samples={count}, k={k}, N={pc.n}")
        threshold = k ** 2.5 / 4

        def run(index: int) -> RainbowSample:
            sample_seed = substream_seed(seed, RAINBOW_SAMPLE_STREAM, index)
            subset = self.sample_subset(pc.n, k, sample_seed)
            triangles = self.count_rainbow_triangles(pc, subset)
            packing = len(self.edge_disjoint_rainbow_packing(pc, subset)) if with_packing else None
            return RainbowSample(
                index=index,
                seed=sample_seed,
                count=triangles,
                threshold=threshold,
                passed=triangles >= threshold,
                packing=packing,
            )

        rows = parallel_map(run, list(range(count)), threads)
        passed = sum(1 for row in rows if row.passed)
        for row in rows:
            if not row.passed:
                logger.warning(f"彩虹计数不足: 样本 {row.index} 种子 {row.seed} 计数 {row.count} < {threshold:.1f}")
        return RainbowStatistics(
            samples=rows,
            subset_size=k,
            threshold=threshold,
            pass_fraction=passed / count,
            required_fraction=required,
        )
