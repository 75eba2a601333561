"""
可复现随机流
生成器族 pcg64-v1：
- 位生成器固定为 numpy PCG64
- 种子序列 SeedSequence(entropy=seed, spawn_key=标签字)
- 标签字 = BLAKE2b(标签) 前 16 字节，按小端拆成 4 个 uint32

同一 (seed, 标签) 在任何平台上产生同一条随机流；不同标签互相独立。
"""
from __future__ import annotations

import hashlib
from typing import Final, Tuple

import numpy as np

from ramsey3.common.exceptions import InvalidParameterError

STREAM_FAMILY: Final[str] = "pcg64-v1"


def _label_words(label: str) -> Tuple[int, ...]:
    digest = hashlib.blake2b(label.encode("utf-8"), digest_size=16).digest()
    return tuple(int.from_bytes(digest[i:i + 4], "little") for i in range(0, 16, 4))


def make_generator(seed: int, label: str) -> np.random.Generator:
    """按 (seed, 标签) 取一条独立随机流"""
    if seed < 0:
        raise InvalidParameterError(f"种子必须非负: {seed}")
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=_label_words(label))
    return np.random.Generator(np.random.PCG64(sequence))


def substream_seed(seed: int, label: str, index: int) -> int:
    """为第 index 个采样派生一个可记录的种子（用于日志中的复现信息）"""
    words = make_generator(seed, f"{label}#{index}").integers(0, 2**63 - 1, size=1)
    return int(words[0])
