"""
概率诊断
- 紧着色中三角形 uvw 单色的精确概率 |c(uv)∩c(vw)∩c(uw)| / (|c(uv)|·|c(vw)|·|c(uw)|)
- 子集上单色三角形个数的精确期望，以及重抽 φ 的蒙特卡洛对照
- 两紧分支着色红三元组个数的精确期望与泊松区间
- 简化构造中单色三角形变红的比例（期望 2/9）
"""
import math
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

import numpy as np
from loguru import logger

from ramsey3.common.combinatorics import pair_arrays
from ramsey3.common.config import settings
from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.common.random_streams import make_generator
from ramsey3.domains.colorings.models import ColoringBundle, PairColoring, TripleColoring
from ramsey3.domains.colorings.services.tight_service import monochromatic_triples
from ramsey3.domains.colorings.services.two_component_service import two_component_red_probability
from ramsey3.domains.trifference.models import TrifferenceCode
from ramsey3.domains.trifference.services.verify_service import difference_planes
from ramsey3.domains.verification.schemas import MonteCarloEstimate, RedExpectation, RedFractionReport
from ramsey3.domains.verification.services.rainbow_service import RainbowService

MONO_SIMULATION_STREAM = "verification.mono-simulation"
ALT_RED_PROBABILITY = Fraction(2, 9)

_TRIAL_CHUNK = 10000


def _indices(code: TrifferenceCode, vertices: Optional[Iterable[int]]) -> np.ndarray:
    chosen = np.array(sorted(set(range(code.size) if vertices is None else (int(v) for v in vertices))), dtype=np.int64)
    if chosen.size and (chosen[0] < 0 or chosen[-1] >= code.size):
        raise InvalidParameterError(f"码字下标超出 [0, {code.size})")
    return chosen


def poisson_interval(mean: float, level: Optional[float] = None) -> Tuple[int, int]:
    """泊松分布的中心区间 [lo, hi]，两侧尾概率各不超过 (1-level)/2"""
    confidence = settings.poisson_level if level is None else level
    if mean < 0 or not 0 < confidence < 1:
        raise InvalidParameterError(f"参数不合法: mean={mean}, level={confidence}")
    if mean == 0:
        return 0, 0
    tail = (1 - confidence) / 2
    cumulative = 0.0
    low: Optional[int] = None
    k = 0
    while True:
        cumulative += math.exp(-mean + k * math.log(mean) - math.lgamma(k + 1))
        if low is None and cumulative > tail:
            low = k
        if cumulative >= 1 - tail:
            return low if low is not None else k, k
        k += 1


class ProbabilityService:

    def mono_triangle_probability(self, code: TrifferenceCode, u: int, v: int, w: int) -> Fraction:
        if len({u, v, w}) != 3:
            raise InvalidParameterError(f"三个码字下标必须互不相同: {(u, v, w)}")
        words = code.words
        d_uv, d_vw, d_uw = words[u] != words[v], words[v] != words[w], words[u] != words[w]
        common = int(np.count_nonzero(d_uv & d_vw & d_uw))
        return Fraction(common, int(d_uv.sum()) * int(d_vw.sum()) * int(d_uw.sum()))

    def expected_mono_triangles(self, code: TrifferenceCode, vertices: Optional[Iterable[int]] = None) -> Fraction:
        """S 内所有三元组单色概率之和；按分母归并后再做有理数求和"""
        chosen = _indices(code, vertices)
        if chosen.size < 3:
            return Fraction(0)
        diff = difference_planes(code.lo[chosen], code.hi[chosen])
        sizes = np.bitwise_count(diff).sum(axis=-1, dtype=np.int64)
        numerators: Dict[int, int] = {}
        for c in range(2, len(chosen)):
            a, b = pair_arrays(c)
            common = np.bitwise_count(diff[a, b] & diff[a, c] & diff[b, c]).sum(axis=-1, dtype=np.int64)
            denominators = sizes[a, b] * sizes[a, c] * sizes[b, c]
            keys, inverse = np.unique(denominators, return_inverse=True)
            sums = np.bincount(inverse.ravel(), weights=common, minlength=len(keys))
            for key, total in zip(keys.tolist(), sums.tolist()):
                numerators[key] = numerators.get(key, 0) + int(round(total))
        return sum((Fraction(num, den) for den, num in sorted(numerators.items())), Fraction(0))

    def simulate_mono_probability(
        self,
        code: TrifferenceCode,
        vertices: Optional[Iterable[int]] = None,
        trials: Optional[int] = None,
        seed: int = 0,
        tolerance: Optional[float] = None,
    ) -> MonteCarloEstimate:
        """
        每次试验对 S 内每个对独立地从 c(uv) 中均匀重抽 φ(uv)，统计单色三角形个数。
        |S| = 3 时即为单个三角形的单色概率。
        """
        count = settings.monte_carlo_trials if trials is None else trials
        sigma = settings.sigma_tolerance if tolerance is None else tolerance
        chosen = _indices(code, vertices)
        if chosen.size < 3 or count < 2:
            raise InvalidParameterError(f"至少需要 3 个码字与 2 次试验: |S|={chosen.size}, trials={count}")
        exact = self.expected_mono_triangles(code, chosen)

        a, b = pair_arrays(len(chosen))
        words = code.words[chosen]
        differs = words[a] != words[b]
        sizes = differs.sum(axis=1)
        # 每个对的差异坐标表（左对齐，右侧补 -1）
        table = np.full(differs.shape, -1, dtype=np.int64)
        for p in range(len(a)):
            coords = np.flatnonzero(differs[p])
            table[p, :len(coords)] = coords
        blocks = [self._block_pairs(c) for c in range(2, len(chosen))]
        ab_idx, ac_idx, bc_idx = (np.concatenate([block[i] for block in blocks]) for i in range(3))

        rng = make_generator(seed, MONO_SIMULATION_STREAM)
        totals = np.empty(count, dtype=np.int64)
        pair_index = np.arange(len(a))
        for start in range(0, count, _TRIAL_CHUNK):
            rows = min(_TRIAL_CHUNK, count - start)
            picks = rng.integers(0, sizes, size=(rows, len(a)))
            phi = table[pair_index[None, :], picks]
            mono = (phi[:, ab_idx] == phi[:, ac_idx]) & (phi[:, ab_idx] == phi[:, bc_idx])
            totals[start:start + rows] = mono.sum(axis=1)

        estimate = float(totals.mean())
        error = float(totals.std(ddof=1) / math.sqrt(count))
        if error > 0:
            z_score: Optional[float] = (estimate - float(exact)) / error
            within = abs(z_score) <= sigma
        else:
            z_score = None
            within = math.isclose(estimate, float(exact))
        logger.debug(f"蒙特卡洛: 精确 {float(exact):.6g}, 估计 {estimate:.6g} ± {error:.3g}")
        return MonteCarloEstimate(
            exact=exact,
            estimate=estimate,
            standard_error=error,
            trials=count,
            z_score=z_score,
            within_tolerance=within,
        )

    @staticmethod
    def _block_pairs(c: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """块 c 内三元组 a<b<c 的三个对排名 (ab, ac, bc)"""
        a, b = pair_arrays(c)
        base = c * (c - 1) // 2
        return a + b * (b - 1) // 2, a + base, b + base

    def two_component_red_expectation(
        self,
        phi: PairColoring,
        chi: Optional[TripleColoring] = None,
        level: Optional[float] = None,
    ) -> RedExpectation:
        confidence = settings.poisson_level if level is None else level
        triangles = RainbowService().count_rainbow_triangles(phi)
        probability = two_component_red_probability(phi.palette)
        mean = triangles * probability
        interval = poisson_interval(float(mean), confidence)
        observed = chi.red_count if chi is not None else None
        return RedExpectation(
            rainbow_triangles=triangles,
            probability=probability,
            mean=mean,
            interval=interval,
            level=confidence,
            observed=observed,
            within_interval=None if observed is None else interval[0] <= observed <= interval[1],
        )

    def alt_red_fraction(self, bundle: ColoringBundle, tolerance: Optional[float] = None) -> RedFractionReport:
        if bundle.chi is None or bundle.phi is None:
            raise InvalidParameterError("缺少 χ 或 φ")
        sigma = settings.sigma_tolerance if tolerance is None else tolerance
        mono = monochromatic_triples(bundle.phi.colors, bundle.phi.n)
        total = int(np.count_nonzero(mono))
        red = int(np.count_nonzero(bundle.chi.red & mono))
        expected = float(ALT_RED_PROBABILITY)
        if total == 0:
            return RedFractionReport(
                monochromatic=0, red=red, fraction=None, expected=expected, z_score=None, within_tolerance=red == 0
            )
        fraction = red / total
        z_score = (fraction - expected) / math.sqrt(expected * (1 - expected) / total)
        return RedFractionReport(
            monochromatic=total,
            red=red,
            fraction=fraction,
            expected=expected,
            z_score=z_score,
            within_tolerance=abs(z_score) <= sigma,
        )
