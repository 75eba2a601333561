"""
运行清单
记录命令、参数、种子、输入/输出文件摘要、耗时与版本；
内容摘要不含耗时，重放同一清单应得到相同的内容摘要。
"""
import hashlib
import os
from typing import Any, Dict, List, Optional

import orjson
from pydantic import BaseModel, Field

from ramsey3 import __version__
from ramsey3.common.random_streams import STREAM_FAMILY
from ramsey3.common.response import dump_json

STDOUT_KEY = "<stdout>"
_VOLATILE_KEYS = frozenset({"timing", "timings"})


def _strip_volatile(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _strip_volatile(v) for k, v in value.items() if k not in _VOLATILE_KEYS}
    if isinstance(value, list):
        return [_strip_volatile(v) for v in value]
    return value


def content_digest(payload: bytes) -> str:
    """
    输出内容摘要：JSON 文档先去掉耗时字段再规范化，其余按原始字节
    """
    stripped = payload.lstrip()
    if stripped[:1] in (b"{", b"["):
        try:
            payload = dump_json(_strip_volatile(orjson.loads(payload)))
        except orjson.JSONDecodeError:
            pass
    return hashlib.sha256(payload).hexdigest()


def file_digest(path: str) -> str:
    with open(path, "rb") as handle:
        return content_digest(handle.read())


class RunManifest(BaseModel):
    """一次运行的清单"""
    command: str = Field(..., description="命令名，如 'gen tight'")
    argv: List[str] = Field(default_factory=list, description="完整命令行参数")
    params: Dict[str, Any] = Field(default_factory=dict, description="解析后的参数")
    seed: Optional[int] = Field(default=None, description="随机种子")
    stream_family: str = Field(default=STREAM_FAMILY, description="随机流族")
    inputs: Dict[str, str] = Field(default_factory=dict, description="输入文件 -> 摘要")
    outputs: Dict[str, str] = Field(default_factory=dict, description="输出文件 -> 摘要")
    exit_code: int = 0
    version: str = __version__
    timings: Dict[str, float] = Field(default_factory=dict, description="耗时（秒），不计入内容摘要")

    def content_hash(self) -> str:
        payload = self.model_dump(mode="python", exclude={"timings"})
        return hashlib.sha256(dump_json(payload)).hexdigest()

    def to_bytes(self) -> bytes:
        data = self.model_dump(mode="python")
        data["content_hash"] = self.content_hash()
        return dump_json(data)

    @classmethod
    def load(cls, path: str) -> "RunManifest":
        with open(path, "rb") as handle:
            data = orjson.loads(handle.read())
        data.pop("content_hash", None)
        return cls.model_validate(data)


def manifest_path_for(artifact: str, suffix: str) -> str:
    root, _ = os.path.splitext(artifact)
    return root + suffix
