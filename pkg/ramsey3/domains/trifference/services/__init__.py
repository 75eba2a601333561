from ramsey3.domains.trifference.services.generate_service import CodeGenerateService, expected_violating_triples
from ramsey3.domains.trifference.services.io_service import CodeFileService
from ramsey3.domains.trifference.services.verify_service import CodeVerifyService
from ramsey3.domains.trifference.services.word_service import WordService

__all__ = [
    "CodeGenerateService",
    "expected_violating_triples",
    "CodeFileService",
    "CodeVerifyService",
    "WordService",
]
