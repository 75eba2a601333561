"""
紧着色（单紧分支情形）
φ(uv) 在差异集合 c(uv) 中均匀选取；三元组 uvw 为红当且仅当 φ(uv)=φ(vw)=φ(uw)。
另有简化版：φ(uv) 在 [ell] 中均匀选取，每个顶点抽一个 {1,2,3}^ell 串 f(v)，
公共层 i 上 f_i(u), f_i(v), f_i(w) 两两不同时才为红。
"""
from typing import Optional

import numpy as np
from loguru import logger

from ramsey3.common.combinatorics import comb2, comb3, iter_triple_blocks, pair_arrays
from ramsey3.common.exceptions import InvalidParameterError, UnverifiedCodeError
from ramsey3.common.random_streams import make_generator
from ramsey3.domains.colorings.models import AuxiliaryFunctions, ColoringBundle, PairColoring, TripleColoring
from ramsey3.domains.trifference.models import TrifferenceCode
from ramsey3.domains.trifference.services import CodeVerifyService

TIGHT_STREAM = "colorings.tight"
ALT_TIGHT_STREAM = "colorings.alt-tight"
_PAIR_CHUNK = 1 << 16


def monochromatic_triples(phi: np.ndarray, n: int) -> np.ndarray:
    """φ 在三条边上取同一值的三元组（colex 布尔数组）"""
    mono = np.zeros(comb3(n), dtype=bool)
    for block in iter_triple_blocks(n):
        first = phi[block.ab]
        mono[block.start:block.start + len(first)] = (first == phi[block.ac]) & (first == phi[block.bc])
    return mono


class TightColoringService:
    """紧着色构造"""

    def __init__(self):
        self.verifier = CodeVerifyService()

    def build_tight_coloring(self, code: TrifferenceCode, seed: int, verified: bool = False) -> ColoringBundle:
        if not verified:
            check = self.verifier.verify_code(code)
            if not check.passed:
                raise UnverifiedCodeError(data=check.first_violation)

        n, ell = code.size, code.ell
        logger.info(f"构造紧着色: N={n}, ell={ell}, r={code.r}, seed={seed}")
        a, b = pair_arrays(n)
        words = code.words
        sizes = np.empty(comb2(n), dtype=np.int64)
        for start in range(0, len(a), _PAIR_CHUNK):
            stop = start + _PAIR_CHUNK
            sizes[start:stop] = np.count_nonzero(words[a[start:stop]] != words[b[start:stop]], axis=1)

        # 每个对恰好一次抽样，按 colex 顺序
        rng = make_generator(seed, TIGHT_STREAM)
        choice = rng.integers(0, sizes) if len(sizes) else np.zeros(0, dtype=np.int64)

        phi = np.empty(comb2(n), dtype=np.int64)
        for start in range(0, len(a), _PAIR_CHUNK):
            stop = start + _PAIR_CHUNK
            differs = words[a[start:stop]] != words[b[start:stop]]
            running = np.cumsum(differs, axis=1)
            # 第 choice 个（从 0 计）差异坐标，输出从 1 开始
            phi[start:stop] = np.argmax(running > choice[start:stop, None], axis=1) + 1

        params = {"ell": ell, "r": code.r}
        chi = TripleColoring(n, monochromatic_triples(phi, n), tag="tight", seed=seed, params=params)
        logger.info(f"紧着色完成: {chi.red_count} 个红三元组")
        return ColoringBundle(
            chi=chi,
            phi=PairColoring(n, phi, palette=ell + 1, tag="tight-phi", seed=seed, params=params),
        )

    def build_alt_tight_coloring(self, size: int, ell: int, seed: int) -> ColoringBundle:
        if size < 3 or ell < 1:
            raise InvalidParameterError(f"参数不合法: N={size}, ell={ell}")
        logger.info(f"构造简化紧着色: N={size}, ell={ell}, seed={seed}")
        rng = make_generator(seed, ALT_TIGHT_STREAM)
        phi = rng.integers(0, ell, size=comb2(size)) + 1
        strings = rng.integers(1, 4, size=(size, ell), dtype=np.int64).astype(np.uint8)

        red = np.zeros(comb3(size), dtype=bool)
        for block in iter_triple_blocks(size):
            level = phi[block.ab] - 1
            same = (phi[block.ab] == phi[block.ac]) & (phi[block.ab] == phi[block.bc])
            fa = strings[block.a, level]
            fb = strings[block.b, level]
            fc = strings[block.c, level]
            red[block.start:block.start + len(level)] = same & (fa != fb) & (fb != fc) & (fa != fc)

        params = {"ell": ell}
        chi = TripleColoring(size, red, tag="alt-tight", seed=seed, params=params)
        logger.info(f"简化紧着色完成: {chi.red_count} 个红三元组")
        return ColoringBundle(
            chi=chi,
            phi=PairColoring(size, phi, palette=ell + 1, tag="alt-tight-phi", seed=seed, params=params),
            aux=AuxiliaryFunctions(vertex_strings=strings),
        )

    def red_fraction_on_monochromatic(self, bundle: ColoringBundle) -> Optional[float]:
        """φ 单色三角形中红三元组的比例"""
        if bundle.chi is None or bundle.phi is None:
            raise InvalidParameterError("缺少 χ 或 φ")
        mono = monochromatic_triples(bundle.phi.colors, bundle.phi.n)
        total = int(np.count_nonzero(mono))
        if total == 0:
            return None
        return int(np.count_nonzero(bundle.chi.red & mono)) / total
