"""
统一响应模型
命令行所有输出（报告、清单、错误）都包在同一个响应体里：

1. 成功响应：
   {
     "code": 0,
     "message": "操作成功",
     "success": true,
     "data": {...}
   }

2. 错误响应：
   {
     "code": 2,
     "message": "参数不合法: ...",
     "success": false,
     "data": null
   }

JSON 一律按键排序输出，浮点数固定有效位数，保证字节级可复现。
"""
import csv
import io
from fractions import Fraction
from typing import Any, Generic, Iterable, Optional, Sequence, TypeVar

import orjson
from pydantic import BaseModel, Field

from ramsey3.common.config import settings

T = TypeVar('T')


class BaseResponse(BaseModel, Generic[T]):
    """基础响应模型"""
    code: int = Field(description="退出码")
    message: str = Field(description="响应消息")
    success: bool = Field(description="操作是否成功")
    data: Optional[T] = Field(default=None, description="响应数据")


class SuccessResponse(BaseResponse[T]):
    """成功响应模型"""
    code: int = 0
    message: str = "操作成功"
    success: bool = True

    @classmethod
    def create(cls, data: T = None, message: str = "操作成功") -> "SuccessResponse[T]":
        return cls(data=data, message=message)


class ViolationResponse(BaseResponse[T]):
    """检查发现违例：数据照常输出，退出码为 1"""
    code: int = 1
    message: str = "发现违例"
    success: bool = False

    @classmethod
    def create(cls, data: T = None, message: str = "发现违例") -> "ViolationResponse[T]":
        return cls(data=data, message=message)


class ErrorResponse(BaseResponse[Any]):
    """错误响应模型；data 携带异常附带的见证或规模信息"""
    success: bool = False

    @classmethod
    def create(cls, code: int = 2, message: str = "操作失败", data: Any = None) -> "ErrorResponse":
        return cls(code=code, message=message, data=data)


# 退出码常量
class ResponseCode:
    SUCCESS = 0
    VIOLATION = 1
    USAGE_ERROR = 2
    RESOURCE_GUARD = 3


def _stable(value: Any) -> Any:
    """把报告数据规范化为可稳定序列化的形式"""
    if isinstance(value, BaseModel):
        return _stable(value.model_dump(mode="python"))
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return float(f"{value:.{settings.report_float_digits}g}")
    if isinstance(value, dict):
        return {str(k): _stable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_stable(v) for v in value)
    if hasattr(value, "tolist"):
        # numpy 数组与标量
        return _stable(value.tolist())
    return value


def dump_json(value: Any) -> bytes:
    """按键排序、固定缩进的 JSON 序列化"""
    return orjson.dumps(_stable(value), option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2) + b"\n"


def dump_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> bytes:
    """固定列顺序的 CSV 序列化"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_stable(cell) for cell in row])
    return buffer.getvalue().encode("utf-8")


def dump_compact(value: Any) -> str:
    """单行 JSON（CSV 单元格内使用）"""
    return orjson.dumps(_stable(value), option=orjson.OPT_SORT_KEYS).decode("utf-8")
