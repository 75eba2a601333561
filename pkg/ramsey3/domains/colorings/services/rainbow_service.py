"""
2-adic 彩虹边着色
顶点为 [0, 2^ell)。对 u<v 令 t = v2(v-u)，颜色为
    (t, (-1)^{⌊u/2^t⌋}·(c_t(u) - c_t(v)) mod A)
编码为整数 t·A + 余数，调色板大小 ell·A。
u, v 在第 t 位不同而低位相同，⌊u/2^t⌋ 与 ⌊v/2^t⌋ 奇偶相反，因此颜色与顶点顺序无关。
"""
from typing import Optional

import numpy as np
from loguru import logger

from ramsey3.common.combinatorics import pair_arrays
from ramsey3.common.config import settings
from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.common.random_streams import make_generator
from ramsey3.domains.colorings.models import AuxiliaryFunctions, ColoringBundle, PairColoring

RAINBOW_STREAM = "colorings.rainbow"


def two_adic_valuation(x: int) -> int:
    """v2(x)：整除 x 的 2 的最高次幂"""
    x = int(x)
    if x < 1:
        raise InvalidParameterError(f"v2 只对正整数有定义: {x}")
    return (x & -x).bit_length() - 1


def two_adic_valuations(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    if values.size and values.min() < 1:
        raise InvalidParameterError("v2 只对正整数有定义")
    return np.bitwise_count((values & -values) - 1).astype(np.int64)


def rainbow_colors(vertex_colors: np.ndarray, palette_a: int) -> np.ndarray:
    """由 c_t(u)（形状 (ell, N)）计算所有对的颜色编号，按 colex 对顺序"""
    size = vertex_colors.shape[1]
    a, b = pair_arrays(size)
    level = two_adic_valuations(b - a)
    sign = np.where(((a >> level) & 1) == 0, 1, -1)
    residue = np.mod(sign * (vertex_colors[level, a] - vertex_colors[level, b]), palette_a)
    return level * palette_a + residue


class RainbowColoringService:
    """彩虹边着色构造"""

    def build_rainbow_coloring(
        self,
        ell: int,
        palette_a: int,
        seed: int,
        min_palette: Optional[int] = None,
        allow_small_palette: bool = False,
    ) -> ColoringBundle:
        threshold = settings.rainbow_min_palette if min_palette is None else min_palette
        if ell < 1:
            raise InvalidParameterError(f"ell 至少为 1: {ell}")
        if palette_a < 1:
            raise InvalidParameterError(f"A 至少为 1: {palette_a}")
        if palette_a < threshold:
            if not allow_small_palette:
                raise InvalidParameterError(f"A={palette_a} 小于 {threshold}")
            logger.warning(f"A={palette_a} 小于 {threshold}，仅用于小规模实验")

        size = 2 ** ell
        logger.info(f"构造彩虹着色: ell={ell}, A={palette_a}, N={size}, seed={seed}")
        rng = make_generator(seed, RAINBOW_STREAM)
        # 按顶点递增、层递增的顺序抽样，存为 (ell, N)
        vertex_colors = rng.integers(0, palette_a, size=(size, ell)).T.copy()
        colors = rainbow_colors(vertex_colors, palette_a)
        phi = PairColoring(
            size,
            colors,
            palette=ell * palette_a,
            tag="rainbow",
            seed=seed,
            params={"ell": ell, "A": palette_a},
        )
        return ColoringBundle(phi=phi, aux=AuxiliaryFunctions(vertex_colors=vertex_colors))
