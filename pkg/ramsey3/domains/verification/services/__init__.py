from ramsey3.domains.verification.services.biclique_service import BicliqueService
from ramsey3.domains.verification.services.blue_clique_service import (
    BlueCliqueService,
    compatibility_masks,
    red_row,
)
from ramsey3.domains.verification.services.pairwise_union_service import PairwiseUnionService
from ramsey3.domains.verification.services.phi_constancy_service import PhiConstancyService
from ramsey3.domains.verification.services.probability_service import ProbabilityService, poisson_interval
from ramsey3.domains.verification.services.rainbow_service import RainbowService
from ramsey3.domains.verification.services.red_density_service import RedDensityService
from ramsey3.domains.verification.services.red_structure_service import RedStructureService, parallel_map

__all__ = [
    "BicliqueService",
    "BlueCliqueService",
    "compatibility_masks",
    "red_row",
    "PairwiseUnionService",
    "PhiConstancyService",
    "ProbabilityService",
    "poisson_interval",
    "RainbowService",
    "RedDensityService",
    "RedStructureService",
    "parallel_map",
]
