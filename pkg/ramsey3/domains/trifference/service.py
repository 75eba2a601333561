"""
三异码服务层（门面）
"""
from typing import List, Optional, Tuple

from ramsey3.domains.trifference.models import TrifferenceCode
from ramsey3.domains.trifference.schemas import CodeSummary, CodeVerification
from ramsey3.domains.trifference.services import (
    CodeGenerateService,
    CodeVerifyService,
    WordService,
    expected_violating_triples,
)
from ramsey3.domains.trifference.services.word_service import Word


class TrifferenceService:
    """三异码服务类"""

    def __init__(self):
        self.words = WordService()
        self.generator = CodeGenerateService()
        self.verifier = CodeVerifyService()

    def trifference_count(self, u: Word, v: Word, w: Word) -> int:
        return self.words.trifference_count(u, v, w)

    def difference_set(self, u: Word, v: Word) -> List[int]:
        return self.words.difference_set(u, v)

    def generate_code(
        self,
        size: int,
        ell: Optional[int] = None,
        r: Optional[int] = None,
        seed: int = 0,
        max_retries: Optional[int] = None,
    ) -> TrifferenceCode:
        code, _ = self.generator.generate_code(size, ell, r, seed, max_retries)
        return code

    def generate_with_summary(
        self,
        size: int,
        ell: Optional[int] = None,
        r: Optional[int] = None,
        seed: int = 0,
        max_retries: Optional[int] = None,
    ) -> Tuple[TrifferenceCode, CodeSummary]:
        code, attempts = self.generator.generate_code(size, ell, r, seed, max_retries)
        summary = CodeSummary(
            size=code.size,
            ell=code.ell,
            r=code.r,
            seed=seed,
            attempts=attempts,
            expected_violations=expected_violating_triples(code.size, code.ell, code.r),
        )
        return code, summary

    def verify_code(self, code: TrifferenceCode) -> CodeVerification:
        return self.verifier.verify_code(code)

    def count_violations(self, code: TrifferenceCode) -> CodeVerification:
        return self.verifier.count_violations(code)
