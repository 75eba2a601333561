from fractions import Fraction
from math import comb
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from ramsey3.common.config import settings
from ramsey3.common.exceptions import InvalidParameterError, RetriesExhaustedError
from ramsey3.common.random_streams import make_generator
from ramsey3.domains.trifference.models import TrifferenceCode
from ramsey3.domains.trifference.services.verify_service import CodeVerifyService

CODE_STREAM = "trifference.code"
# 三个独立均匀符号两两不同的概率 3!/3^3
TRIFFERENT_PROBABILITY = Fraction(2, 9)


def expected_violating_triples(size: int, ell: int, r: int) -> float:
    """单次均匀抽样中违例三元组的期望个数 C(N,3)·Pr[Bin(ell, 2/9) < r]"""
    p = TRIFFERENT_PROBABILITY
    tail = sum(comb(ell, k) * p ** k * (1 - p) ** (ell - k) for k in range(min(r, ell + 1)))
    return float(comb(size, 3) * tail)


class CodeGenerateService:
    """整码拒绝采样"""

    def __init__(self):
        self.verifier = CodeVerifyService()

    def generate_code(
        self,
        size: int,
        ell: Optional[int] = None,
        r: Optional[int] = None,
        seed: int = 0,
        max_retries: Optional[int] = None,
    ) -> Tuple[TrifferenceCode, int]:
        """返回 (码, 使用的抽样次数)；同一参数与种子逐位可复现"""
        ell = settings.code_ell if ell is None else ell
        r = settings.code_r if r is None else r
        max_retries = settings.code_max_retries if max_retries is None else max_retries
        if size < 3:
            raise InvalidParameterError(f"N 至少为 3: {size}")
        if ell < 1 or not 0 <= r <= ell:
            raise InvalidParameterError(f"参数不合法: ell={ell}, r={r}")
        if size > 3 ** min(ell, 40):
            raise InvalidParameterError(f"{{1,2,3}}^{ell} 中没有 {size} 个不同码字")
        if max_retries < 1:
            raise InvalidParameterError(f"max_retries 至少为 1: {max_retries}")

        expected = expected_violating_triples(size, ell, r)
        logger.info(f"生成三异码: N={size}, ell={ell}, r={r}, seed={seed}, 期望违例数={expected:.4g}")
        if expected >= 1:
            logger.warning(f"期望违例数 {expected:.4g} ≥ 1，整码拒绝采样可能失败；建议增大 ell")

        rng = make_generator(seed, CODE_STREAM)
        best = None
        for attempt in range(1, max_retries + 1):
            words = rng.integers(1, 4, size=(size, ell), dtype=np.uint8)
            distinct = len(np.unique(words, axis=0)) == size
            violations = self.verifier.count_raw(words, r)
            if distinct and violations == 0:
                logger.info(f"第 {attempt} 次抽样通过校验")
                return TrifferenceCode(words, r), attempt
            if not distinct and violations == 0:
                # r = 0 时重复码字不构成三元组违例，单独计 1
                violations = 1
            best = violations if best is None else min(best, violations)
            logger.debug(f"第 {attempt} 次抽样: {violations} 个违例三元组")

        raise RetriesExhaustedError(best_violations=best or 0, attempts=max_retries)
