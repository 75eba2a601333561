from ramsey3.domains.colorings.services.io_service import PairColoringCodec, TripleColoringCodec
from ramsey3.domains.colorings.services.rainbow_service import RainbowColoringService, two_adic_valuation
from ramsey3.domains.colorings.services.tight_service import TightColoringService
from ramsey3.domains.colorings.services.two_component_service import (
    TwoComponentColoringService,
    two_component_red_probability,
)

__all__ = [
    "PairColoringCodec",
    "TripleColoringCodec",
    "RainbowColoringService",
    "two_adic_valuation",
    "TightColoringService",
    "TwoComponentColoringService",
    "two_component_red_probability",
]
