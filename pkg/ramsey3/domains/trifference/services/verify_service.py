"""
三异码穷举校验
对每个 u，一次性计算所有 v<w (v,w>u) 的三异坐标数：
    popcount(D[u,v] & D[u,w] & D[v,w])，D[x,y] = (lo_x^lo_y) | (hi_x^hi_y)
按 u 并行（numpy 位运算释放 GIL），结果按 u 的顺序汇总。
"""
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from ramsey3.common.config import settings
from ramsey3.domains.trifference.models import TrifferenceCode, bitplanes
from ramsey3.domains.trifference.schemas import CodeVerification

Violation = Tuple[int, int, int]


def difference_planes(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """(N, N, W) 的差异位平面"""
    return (lo[:, None, :] ^ lo[None, :, :]) | (hi[:, None, :] ^ hi[None, :, :])


def _scan_row(diff: np.ndarray, u: int, r: int) -> Tuple[int, Optional[Violation]]:
    """以 u 为最小下标的违例三元组个数与其中字典序最小者"""
    head = diff[u, u + 1:]
    if len(head) < 2:
        return 0, None
    common = head[:, None, :] & head[None, :, :] & diff[u + 1:, u + 1:]
    counts = np.bitwise_count(common).sum(axis=-1, dtype=np.int64)
    bad = np.triu(counts < r, k=1)
    total = int(np.count_nonzero(bad))
    if total == 0:
        return 0, None
    v, w = np.argwhere(bad)[0]
    return total, (u, u + 1 + int(v), u + 1 + int(w))


def scan_violations(
    lo: np.ndarray, hi: np.ndarray, r: int, stop_at_first: bool, threads: Optional[int] = None
) -> Tuple[int, Optional[Violation]]:
    """返回 (违例个数, 首个违例)；stop_at_first 时个数只统计到首个违例所在的行"""
    size = lo.shape[0]
    if size < 3 or r <= 0:
        return 0, None
    diff = difference_planes(lo, hi)
    workers = max(1, threads if threads is not None else settings.threads)

    if stop_at_first or workers == 1:
        total, first = 0, None
        for u in range(size - 2):
            count, witness = _scan_row(diff, u, r)
            total += count
            if first is None and witness is not None:
                first = witness
                if stop_at_first:
                    break
        return total, first

    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows: List[Tuple[int, Optional[Violation]]] = list(
            pool.map(lambda u: _scan_row(diff, u, r), range(size - 2))
        )
    first = next((witness for _, witness in rows if witness is not None), None)
    return sum(count for count, _ in rows), first


class CodeVerifyService:
    """三异码校验"""

    def verify_code(self, code: TrifferenceCode) -> CodeVerification:
        _, first = scan_violations(code.lo, code.hi, code.r, stop_at_first=True)
        return self._result(code, first, None)

    def count_violations(self, code: TrifferenceCode, threads: Optional[int] = None) -> CodeVerification:
        total, first = scan_violations(code.lo, code.hi, code.r, stop_at_first=False, threads=threads)
        return self._result(code, first, total)

    def count_raw(self, words: np.ndarray, r: int, threads: Optional[int] = None) -> int:
        """未经码字互异校验的矩阵上的违例个数（生成过程使用）"""
        lo, hi = bitplanes(words)
        total, _ = scan_violations(lo, hi, r, stop_at_first=False, threads=threads)
        return total

    def _result(self, code: TrifferenceCode, first: Optional[Violation], total: Optional[int]) -> CodeVerification:
        return CodeVerification(
            passed=first is None,
            size=code.size,
            ell=code.ell,
            r=code.r,
            violations=total,
            first_violation=first,
            first_violation_words=[code.word(i) for i in first] if first else None,
        )
