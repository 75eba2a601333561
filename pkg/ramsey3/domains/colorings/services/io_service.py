"""
着色文件格式

三元组着色：
    tripcol <N> <构造标签> <seed> [key=value ...]
    之后每行 16 个十六进制字符（一个 64 位整数），第 j 行第 i 位（最低位为 0）
    表示 colex 排名 64·j+i 的三元组是否为红；末行多余的位为 0。

对着色：
    paircol <N> <构造标签> <seed> palette=<P> [key=value ...]
    之后按 colex 对顺序写十进制颜色编号，每行 32 个，以空格分隔。
"""
from typing import Any, Dict, List, Tuple

import numpy as np

from ramsey3.common.combinatorics import comb2, comb3
from ramsey3.common.exceptions import FormatParseError, InvalidParameterError
from ramsey3.domains.colorings.models import PairColoring, TripleColoring

PAIRS_PER_LINE = 32


def _format_params(params: Dict[str, Any]) -> List[str]:
    tokens = []
    for key in sorted(params):
        value = params[key]
        text = str(value)
        if not key or any(ch.isspace() or ch == "=" for ch in key) or any(ch.isspace() for ch in text):
            raise InvalidParameterError(f"参数无法写入头部: {key}={value}")
        tokens.append(f"{key}={text}")
    return tokens


def _parse_value(text: str) -> Any:
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def _parse_header(line: str, magic: str) -> Tuple[int, str, int, Dict[str, Any]]:
    tokens = line.split()
    if len(tokens) < 4 or tokens[0] != magic:
        raise FormatParseError(f"缺少头部 '{magic} <N> <tag> <seed> ...'", line=1)
    try:
        n, seed = int(tokens[1]), int(tokens[3])
    except ValueError:
        raise FormatParseError("头部的 N 或 seed 不是整数", line=1)
    if n < 0:
        raise FormatParseError(f"N 必须非负: {n}", line=1)
    params: Dict[str, Any] = {}
    for token in tokens[4:]:
        key, sep, value = token.partition("=")
        if not sep or not key:
            raise FormatParseError(f"头部参数应为 key=value: {token}", line=1)
        params[key] = _parse_value(value)
    return n, tokens[2], seed, params


class TripleColoringCodec:
    """三元组着色文件读写"""

    def format(self, chi: TripleColoring) -> str:
        header = " ".join([f"tripcol {chi.n} {chi.tag} {chi.seed}"] + _format_params(chi.params))
        total = len(chi.red)
        padded = np.zeros(-(-total // 64) * 64, dtype=bool)
        padded[:total] = chi.red
        words = np.packbits(padded, bitorder="little").view("<u8")
        return "\n".join([header] + [f"{int(word):016x}" for word in words]) + "\n"

    def parse(self, text: str) -> TripleColoring:
        lines = text.splitlines()
        if not lines:
            raise FormatParseError("空文件")
        n, tag, seed, params = _parse_header(lines[0], "tripcol")
        total = comb3(n)
        body = [line.strip() for line in lines[1:] if line.strip()]
        expected = -(-total // 64)
        if len(body) != expected:
            raise FormatParseError(f"应有 {expected} 行数据，实际 {len(body)} 行")
        values = np.zeros(expected, dtype="<u8")
        for index, line in enumerate(body):
            if len(line) != 16:
                raise FormatParseError(f"每行应为 16 个十六进制字符: {line}", line=index + 2)
            try:
                values[index] = int(line, 16)
            except ValueError:
                raise FormatParseError(f"不是十六进制数: {line}", line=index + 2)
        bits = np.unpackbits(values.view(np.uint8), bitorder="little").astype(bool)
        if bits[total:].any():
            raise FormatParseError("末行的填充位必须为 0")
        return TripleColoring(n, bits[:total], tag=tag, seed=seed, params=params)


class PairColoringCodec:
    """对着色文件读写"""

    def format(self, phi: PairColoring) -> str:
        params = dict(phi.params)
        params["palette"] = phi.palette
        header = " ".join([f"paircol {phi.n} {phi.tag} {phi.seed}"] + _format_params(params))
        colors = phi.colors.tolist()
        rows = [
            " ".join(str(c) for c in colors[start:start + PAIRS_PER_LINE])
            for start in range(0, len(colors), PAIRS_PER_LINE)
        ]
        return "\n".join([header] + rows) + "\n"

    def parse(self, text: str) -> PairColoring:
        lines = text.splitlines()
        if not lines:
            raise FormatParseError("空文件")
        n, tag, seed, params = _parse_header(lines[0], "paircol")
        palette = params.pop("palette", None)
        if not isinstance(palette, int) or palette < 1:
            raise FormatParseError("头部缺少 palette=<正整数>", line=1)
        colors: List[int] = []
        for number, line in enumerate(lines[1:], start=2):
            try:
                colors.extend(int(token) for token in line.split())
            except ValueError:
                raise FormatParseError(f"颜色不是整数: {line}", line=number)
        if len(colors) != comb2(n):
            raise FormatParseError(f"应有 {comb2(n)} 个颜色，实际 {len(colors)} 个")
        if colors and (min(colors) < 0 or max(colors) >= palette):
            raise FormatParseError("颜色编号超出调色板")
        return PairColoring(n, np.array(colors, dtype=np.int64), palette=palette, tag=tag, seed=seed, params=params)
