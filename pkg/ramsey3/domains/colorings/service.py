"""
着色构造服务层（门面）
"""
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from ramsey3.domains.colorings.models import AuxiliaryFunctions, ColoringBundle, PairColoring
from ramsey3.domains.colorings.services import (
    RainbowColoringService,
    TightColoringService,
    TwoComponentColoringService,
    two_adic_valuation,
    two_component_red_probability,
)
from ramsey3.domains.trifference.models import TrifferenceCode


class ColoringService:
    """着色构造服务类"""

    def __init__(self):
        self.tight = TightColoringService()
        self.rainbow = RainbowColoringService()
        self.two_component = TwoComponentColoringService()

    def build_tight_coloring(self, code: TrifferenceCode, seed: int) -> ColoringBundle:
        return self.tight.build_tight_coloring(code, seed)

    def build_alt_tight_coloring(self, size: int, ell: int, seed: int) -> ColoringBundle:
        return self.tight.build_alt_tight_coloring(size, ell, seed)

    def two_adic_valuation(self, x: int) -> int:
        return two_adic_valuation(x)

    def build_rainbow_coloring(
        self, ell: int, palette_a: int, seed: int, allow_small_palette: bool = False
    ) -> ColoringBundle:
        return self.rainbow.build_rainbow_coloring(ell, palette_a, seed, allow_small_palette=allow_small_palette)

    def build_two_component_coloring(
        self, rainbow: PairColoring, seed: int, aux: Optional[AuxiliaryFunctions] = None
    ) -> ColoringBundle:
        return self.two_component.build_two_component_coloring(rainbow, seed, aux)

    def build_planted_two_component(
        self, rainbow: PairColoring, triangles: Iterable[Sequence[int]], seed: int
    ) -> Tuple[ColoringBundle, List[Tuple[int, int, int]]]:
        """辅助函数经植入后再构造，返回 (着色, 实际植入的三角形)"""
        aux, planted = self.two_component.planted_auxiliary(rainbow, triangles, seed)
        return self.two_component.build_two_component_coloring(rainbow, seed, aux), planted

    def two_component_red_probability(self, palette: int) -> Fraction:
        return two_component_red_probability(palette)
