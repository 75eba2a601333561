from ramsey3.domains.hypergraph.services.catalog_service import CatalogService
from ramsey3.domains.hypergraph.services.components_service import TightComponentService
from ramsey3.domains.hypergraph.services.embedding_service import EmbeddingService
from ramsey3.domains.hypergraph.services.extremal_service import ExtremalService
from ramsey3.domains.hypergraph.services.io_service import CertificateCodec, EdgeListService
from ramsey3.domains.hypergraph.services.iterated_service import IteratedTripartiteService
from ramsey3.domains.hypergraph.services.tripartition_service import TripartitionService

__all__ = [
    "CatalogService",
    "TightComponentService",
    "EmbeddingService",
    "ExtremalService",
    "CertificateCodec",
    "EdgeListService",
    "IteratedTripartiteService",
    "TripartitionService",
]
