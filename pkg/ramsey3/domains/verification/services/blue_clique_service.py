"""
蓝团搜索
团内每个三元组都是蓝色。对每个对 (u, v) 预先算出扩展集
ext(u, v) = {w : uvw 为蓝}（Python 整数位掩码），
向团 Q 加入 v 后，候选集与 ext(u, v)（u ∈ Q）逐一求交，
并只保留与 v 相容（公共扩展点足够多）的顶点。
"""
from typing import List, Optional

import numpy as np
from loguru import logger

from ramsey3.common.combinatorics import comb2
from ramsey3.common.config import settings
from ramsey3.common.exceptions import Ramsey3Exception, ResourceGuardError
from ramsey3.common.random_streams import make_generator
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.verification.schemas import CliqueResult

GREEDY_STREAM = "verification.greedy-clique"


def red_row(chi: TripleColoring, u: int, v: int) -> np.ndarray:
    """长度 N 的布尔数组：w 处为 True 当且仅当 uvw 为红，或 w ∈ {u, v}"""
    others = np.arange(chi.n, dtype=np.int64)
    triples = np.sort(np.stack([np.full(chi.n, u), np.full(chi.n, v), others], axis=1), axis=1)
    a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
    valid = (others != u) & (others != v)
    ranks = np.where(valid, c * (c - 1) * (c - 2) // 6 + b * (b - 1) // 2 + a, 0)
    row = np.ones(chi.n, dtype=bool)
    row[valid] = chi.red[ranks[valid]]
    return row


def _mask(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def compatibility_masks(ext_sizes: np.ndarray, need: int) -> List[int]:
    """
    相容图的邻接位掩码：u、v 相容当且仅当 |ext(u, v)| >= need。
    大小为 s 的蓝团中任意两点都至少有 s-2 个公共扩展点
    """
    allowed = ext_sizes >= need
    np.fill_diagonal(allowed, False)
    return [_mask(row) for row in allowed]


class BlueCliqueService:

    def max_blue_clique_exact(
        self,
        chi: TripleColoring,
        size_limit: Optional[int] = None,
        vertex_limit: Optional[int] = None,
    ) -> CliqueResult:
        """
        分支定界求最大蓝团。N 超过 vertex_limit 时必须给出 size_limit，
        此时找到 size_limit 大小的蓝团即停止（结果为 min(ω, size_limit)）。
        """
        limit = settings.exact_clique_vertex_limit if vertex_limit is None else vertex_limit
        n = chi.n
        if n > limit and size_limit is None:
            raise ResourceGuardError("精确蓝团搜索的顶点数过多", size=n, limit=limit)
        cap = n if size_limit is None else min(size_limit, n)
        if n <= 2 or cap <= 2:
            witness = list(range(min(n, cap)))
            return CliqueResult(size=len(witness), witness=witness, exact=True, capped=cap < n)

        ext = [[0] * n for _ in range(n)]
        ext_sizes = np.zeros((n, n), dtype=np.int64)
        for v in range(n):
            for u in range(v):
                blue = ~red_row(chi, u, v)
                ext[u][v] = ext[v][u] = _mask(blue)
                ext_sizes[u, v] = ext_sizes[v, u] = int(blue.sum())
        logger.debug(f"扩展集构造完成: {comb2(n)} 个对")

        best: List[int] = [0, 1]
        nodes = 0
        # 只需寻找比 best 更大的团
        compat = compatibility_masks(ext_sizes, len(best) - 1)

        def expand(clique: List[int], candidates: int) -> bool:
            """返回 True 表示已达到 cap"""
            nonlocal best, nodes, compat
            nodes += 1
            if len(clique) > len(best):
                best = list(clique)
                if len(best) >= cap:
                    return True
                compat = compatibility_masks(ext_sizes, len(best) - 1)
            while candidates:
                if len(clique) + bin(candidates).count("1") <= len(best):
                    return False
                low = candidates & -candidates
                v = low.bit_length() - 1
                candidates ^= low
                narrowed = candidates & compat[v]
                for u in clique:
                    narrowed &= ext[u][v]
                if expand(clique + [v], narrowed):
                    return True
            return False

        expand([], (1 << n) - 1)
        witness = sorted(best)
        if not chi.is_blue_clique(witness):
            raise Ramsey3Exception(f"内部错误：搜索结果不是蓝团 {witness}")
        logger.info(f"精确蓝团: 大小 {len(witness)}, 访问 {nodes} 个节点")
        return CliqueResult(
            size=len(witness),
            witness=witness,
            exact=True,
            capped=size_limit is not None and len(witness) >= cap,
            nodes=nodes,
        )

    def greedy_blue_clique(
        self,
        chi: TripleColoring,
        restarts: Optional[int] = None,
        seed: int = 0,
    ) -> CliqueResult:
        """随机顺序贪心扩张，重启若干次取最好的结果"""
        rounds = settings.greedy_restarts if restarts is None else restarts
        rng = make_generator(seed, GREEDY_STREAM)
        best: List[int] = []
        sizes: List[int] = []
        for _ in range(max(rounds, 1)):
            order = rng.permutation(chi.n)
            clique: List[int] = []
            allowed = np.ones(chi.n, dtype=bool)
            for v in order.tolist():
                if not allowed[v]:
                    continue
                for u in clique:
                    allowed &= ~red_row(chi, u, v)
                allowed[v] = False
                clique.append(v)
            sizes.append(len(clique))
            if len(clique) > len(best):
                best = clique
        witness = sorted(best)
        if not chi.is_blue_clique(witness):
            raise Ramsey3Exception(f"内部错误：贪心结果不是蓝团 {witness}")
        logger.info(f"贪心蓝团: 最好 {len(witness)}, 重启 {len(sizes)} 次")
        return CliqueResult(size=len(witness), witness=witness, exact=False, restarts=sizes)

