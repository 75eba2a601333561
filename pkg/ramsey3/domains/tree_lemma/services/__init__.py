from ramsey3.domains.tree_lemma.services.goodness_service import BAD, GOOD, NEUTRAL, GoodnessService
from ramsey3.domains.tree_lemma.services.rotation_service import RotationService, path_text
from ramsey3.domains.tree_lemma.services.score_service import ScoreService
from ramsey3.domains.tree_lemma.services.shape_service import ShapeService, relabel
from ramsey3.domains.tree_lemma.services.split_service import SPLIT_ORDERS, SplitTreeService

__all__ = [
    "BAD",
    "GOOD",
    "NEUTRAL",
    "GoodnessService",
    "RotationService",
    "path_text",
    "ScoreService",
    "ShapeService",
    "relabel",
    "SPLIT_ORDERS",
    "SplitTreeService",
]
