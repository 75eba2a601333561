from ramsey3.domains.extraction.services.halving_service import (
    HalvingExtractionService,
    halving_bound,
    larger_sides,
)
from ramsey3.domains.extraction.services.iterated_service import (
    IteratedExtractionService,
    balanced_split,
    iterated_bound,
    two_largest,
)

__all__ = [
    "HalvingExtractionService",
    "halving_bound",
    "larger_sides",
    "IteratedExtractionService",
    "balanced_split",
    "iterated_bound",
    "two_largest",
]
