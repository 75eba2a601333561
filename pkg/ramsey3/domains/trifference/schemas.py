"""
三异码 Pydantic 数据模型
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class CodeVerification(BaseModel):
    """三异码校验结果"""
    passed: bool = Field(..., description="是否满足三异条件")
    size: int = Field(..., description="码字个数 N")
    ell: int = Field(..., description="码长")
    r: int = Field(..., description="三异参数")
    violations: Optional[int] = Field(default=None, description="违例三元组个数（仅在完整计数时给出）")
    first_violation: Optional[Tuple[int, int, int]] = Field(default=None, description="首个违例三元组（码字下标）")
    first_violation_words: Optional[List[str]] = Field(default=None, description="首个违例三元组的码字")


class CodeSummary(BaseModel):
    """生成结果摘要"""
    size: int
    ell: int
    r: int
    seed: int
    attempts: int = Field(..., description="实际使用的抽样次数")
    expected_violations: float = Field(..., description="单次抽样违例三元组的期望个数")
