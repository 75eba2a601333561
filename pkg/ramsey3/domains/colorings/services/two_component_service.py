"""
两紧分支着色
对 u<v<w，三元组为红当且仅当：
1. uvw 在 φ 下是彩虹三角形
2. g(uv)=1, g(vw)=2, g(uw)=3
3. f1(uw)=f1(vw)=φ(uv)
4. f2(uv)=f2(uw)=φ(vw)
5. f3(uv)=f3(vw)=φ(uw)
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ramsey3.common.combinatorics import comb2, comb3, iter_triple_blocks, pair_rank
from ramsey3.common.exceptions import InvalidParameterError, PaletteMismatchError
from ramsey3.common.random_streams import make_generator
from ramsey3.domains.colorings.models import AuxiliaryFunctions, ColoringBundle, PairColoring, TripleColoring

TWO_COMPONENT_STREAM = "colorings.two-component"


def two_component_red_probability(palette: int) -> Fraction:
    """固定彩虹三角形为红的精确概率 (1/3)^3·palette^-6"""
    if palette < 1:
        raise InvalidParameterError(f"调色板大小至少为 1: {palette}")
    return Fraction(1, 27 * palette ** 6)


def sample_auxiliary(pairs: int, palette: int, seed: int) -> AuxiliaryFunctions:
    """依次抽取 g, f1, f2, f3（每个都按 colex 对顺序）"""
    rng = make_generator(seed, TWO_COMPONENT_STREAM)
    g = rng.integers(1, 4, size=pairs)
    f1 = rng.integers(0, palette, size=pairs)
    f2 = rng.integers(0, palette, size=pairs)
    f3 = rng.integers(0, palette, size=pairs)
    return AuxiliaryFunctions(g=g, f1=f1, f2=f2, f3=f3, palette=palette)


def _requirements(phi: PairColoring, triangle: Tuple[int, int, int]) -> Dict[Tuple[str, int], int]:
    """使三角形为红所需的 (函数名, 对排名) -> 取值"""
    u, v, w = sorted(triangle)
    uv, vw, uw = pair_rank(u, v), pair_rank(v, w), pair_rank(u, w)
    c_uv, c_vw, c_uw = int(phi.colors[uv]), int(phi.colors[vw]), int(phi.colors[uw])
    return {
        ("g", uv): 1, ("g", vw): 2, ("g", uw): 3,
        ("f1", uw): c_uv, ("f1", vw): c_uv,
        ("f2", uv): c_vw, ("f2", uw): c_vw,
        ("f3", uv): c_uw, ("f3", vw): c_uw,
    }


class TwoComponentColoringService:
    """两紧分支着色构造"""

    def build_two_component_coloring(
        self,
        rainbow: PairColoring,
        seed: int,
        aux: Optional[AuxiliaryFunctions] = None,
    ) -> ColoringBundle:
        n, palette = rainbow.n, rainbow.palette
        pairs = comb2(n)
        if aux is None or aux.g is None:
            aux = sample_auxiliary(pairs, palette, seed)
        self._check_auxiliary(aux, pairs, palette)
        logger.info(f"构造两紧分支着色: N={n}, 调色板={palette}, seed={seed}")

        phi, g = rainbow.colors, aux.g
        red = np.zeros(comb3(n), dtype=bool)
        for block in iter_triple_blocks(n):
            ab, ac, bc = block.ab, block.ac, block.bc
            c_ab, c_ac, c_bc = phi[ab], phi[ac], phi[bc]
            mask = (c_ab != c_ac) & (c_ab != c_bc) & (c_ac != c_bc)
            mask &= (g[ab] == 1) & (g[bc] == 2) & (g[ac] == 3)
            mask &= (aux.f1[ac] == c_ab) & (aux.f1[bc] == c_ab)
            mask &= (aux.f2[ab] == c_bc) & (aux.f2[ac] == c_bc)
            mask &= (aux.f3[ab] == c_ac) & (aux.f3[bc] == c_ac)
            red[block.start:block.start + len(ab)] = mask

        params = dict(rainbow.params)
        params["rainbow_seed"] = rainbow.seed
        chi = TripleColoring(n, red, tag="two-component", seed=seed, params=params)
        logger.info(f"两紧分支着色完成: {chi.red_count} 个红三元组")
        return ColoringBundle(chi=chi, phi=rainbow, aux=aux)

    def planted_auxiliary(
        self,
        rainbow: PairColoring,
        triangles: Iterable[Sequence[int]],
        seed: int,
    ) -> Tuple[AuxiliaryFunctions, List[Tuple[int, int, int]]]:
        """
        在随机辅助函数上依次固定取值，使给定的彩虹三角形变红；
        与已固定取值冲突或不是彩虹三角形的跳过。返回 (辅助函数, 实际植入的三角形)
        """
        base = sample_auxiliary(comb2(rainbow.n), rainbow.palette, seed)
        tables = {name: np.array(getattr(base, name)) for name in ("g", "f1", "f2", "f3")}
        fixed: Dict[Tuple[str, int], int] = {}
        planted: List[Tuple[int, int, int]] = []
        for triangle in triangles:
            u, v, w = sorted(int(x) for x in triangle)
            colors = {rainbow.color(u, v), rainbow.color(v, w), rainbow.color(u, w)}
            if len(colors) != 3:
                continue
            needed = _requirements(rainbow, (u, v, w))
            if any(fixed.get(key, value) != value for key, value in needed.items()):
                continue
            fixed.update(needed)
            planted.append((u, v, w))
        for (name, rank), value in fixed.items():
            tables[name][rank] = value
        logger.debug(f"植入 {len(planted)} 个红三角形")
        return AuxiliaryFunctions(palette=rainbow.palette, **tables), planted

    def _check_auxiliary(self, aux: AuxiliaryFunctions, pairs: int, palette: int) -> None:
        if aux.palette is not None and aux.palette != palette:
            raise PaletteMismatchError(f"辅助函数调色板 {aux.palette} 与彩虹着色调色板 {palette} 不一致")
        for name in ("g", "f1", "f2", "f3"):
            table = getattr(aux, name)
            if table is None or len(table) != pairs:
                raise InvalidParameterError(f"辅助函数 {name} 缺失或长度不是 {pairs}")
        if aux.g.min() < 1 or aux.g.max() > 3:
            raise InvalidParameterError("g 的取值必须在 {1,2,3}")
        for name in ("f1", "f2", "f3"):
            table = getattr(aux, name)
            if table.min() < 0 or table.max() >= palette:
                raise PaletteMismatchError(f"{name} 的取值超出调色板 [0, {palette})")
