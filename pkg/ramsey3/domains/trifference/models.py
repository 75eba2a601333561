"""
三异码领域模型
码字存为 (N, ell) 的 uint8 数组（字母表 {1,2,3}），同时缓存两个位平面：
每个符号 2 比特，1 -> (lo=1, hi=0)，2 -> (0, 1)，3 -> (1, 1)。
两个符号不同当且仅当 (lo^lo') | (hi^hi') 为 1，
三个符号两两不同当且仅当三对的差异位同时为 1。
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from ramsey3.common.exceptions import InvalidParameterError


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """(N, ell) 布尔矩阵 -> (N, ceil(ell/64)) 的 uint64 位平面"""
    rows, width = bits.shape
    words = max(1, -(-width // 64))
    padded = np.zeros((rows, words * 64), dtype=bool)
    padded[:, :width] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def bitplanes(words: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    words = np.asarray(words)
    return pack_bits((words == 1) | (words == 3)), pack_bits(words >= 2)


@dataclass(frozen=True, eq=False)
class TrifferenceCode:
    """N 个 {1,2,3}^ell 中互不相同的码字，以及三异参数 r"""
    words: np.ndarray
    r: int
    lo: np.ndarray = field(init=False, repr=False)
    hi: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        words = np.ascontiguousarray(self.words, dtype=np.uint8)
        if words.ndim != 2 or words.shape[1] < 1:
            raise InvalidParameterError(f"码字矩阵形状不合法: {words.shape}")
        if words.size and (words.min() < 1 or words.max() > 3):
            raise InvalidParameterError("码字字母表必须是 {1,2,3}")
        if len(np.unique(words, axis=0)) != len(words):
            raise InvalidParameterError("码字必须互不相同")
        if not 0 <= self.r <= words.shape[1]:
            raise InvalidParameterError(f"r 必须在 [0, ell] 内: r={self.r}, ell={words.shape[1]}")
        words.setflags(write=False)
        lo, hi = bitplanes(words)
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def from_strings(cls, strings: Sequence[str], r: int) -> "TrifferenceCode":
        if not strings:
            raise InvalidParameterError("码字列表为空")
        lengths = {len(s) for s in strings}
        if len(lengths) != 1:
            raise InvalidParameterError(f"码字长度不一致: {sorted(lengths)}")
        if any(ch not in "123" for s in strings for ch in s):
            raise InvalidParameterError("码字字母表必须是 {1,2,3}")
        return cls(np.array([[int(ch) for ch in s] for s in strings], dtype=np.uint8), r)

    @property
    def size(self) -> int:
        return int(self.words.shape[0])

    @property
    def ell(self) -> int:
        return int(self.words.shape[1])

    def word(self, index: int) -> str:
        return "".join(str(int(x)) for x in self.words[index])

    def strings(self) -> List[str]:
        return [self.word(i) for i in range(self.size)]

    def instance_hash(self) -> str:
        digest = hashlib.sha256()
        digest.update(f"trifcode {self.size} {self.ell} {self.r}\n".encode("ascii"))
        digest.update(self.words.tobytes())
        return digest.hexdigest()
