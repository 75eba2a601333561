"""
边表文本格式
    p 3graph <num_vertices> <num_edges>
    a b c        （每行一条边）
以 "c " 或 "#" 开头的行为注释。顶点标签不是 [0, n) 内整数时按排序重新编号。
"""
from typing import Dict, List, Tuple

import orjson
from pydantic import ValidationError

from ramsey3.common.exceptions import FormatParseError, InvalidParameterError
from ramsey3.common.response import dump_json
from ramsey3.domains.hypergraph.models import ThreeGraph
from ramsey3.domains.hypergraph.schemas import CertificateNode


def _sort_key(label: str) -> Tuple[int, object]:
    try:
        return 0, int(label)
    except ValueError:
        return 1, label


class EdgeListService:
    """边表读写"""

    def parse(self, text: str) -> ThreeGraph:
        header = None
        raw_edges: List[Tuple[str, str, str]] = []
        for number, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped == "c" or stripped.startswith(("c ", "#")):
                continue
            tokens = stripped.split()
            if header is None:
                if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != "3graph":
                    raise FormatParseError("缺少头部 'p 3graph <n> <m>'", line=number)
                try:
                    header = (int(tokens[2]), int(tokens[3]))
                except ValueError:
                    raise FormatParseError("头部的顶点数/边数不是整数", line=number)
                continue
            if len(tokens) != 3:
                raise FormatParseError("每行必须恰有 3 个顶点", line=number)
            raw_edges.append((tokens[0], tokens[1], tokens[2]))

        if header is None:
            raise FormatParseError("空文件")
        num_vertices, num_edges = header
        if len(raw_edges) != num_edges:
            raise FormatParseError(f"声明 {num_edges} 条边，实际 {len(raw_edges)} 条")

        labels = {label for edge in raw_edges for label in edge}
        dense = all(label.lstrip("-").isdigit() and 0 <= int(label) < num_vertices for label in labels)
        if dense:
            mapping: Dict[str, int] = {label: int(label) for label in labels}
        else:
            mapping = {label: i for i, label in enumerate(sorted(labels, key=_sort_key))}
            num_vertices = max(num_vertices, len(mapping))
        try:
            return ThreeGraph.from_edges(num_vertices, [tuple(mapping[x] for x in edge) for edge in raw_edges])
        except InvalidParameterError as exc:
            raise FormatParseError(f"边不合法: {exc}")

    def format(self, graph: ThreeGraph) -> str:
        lines = [f"p 3graph {graph.num_vertices} {graph.num_edges}"]
        lines.extend(f"{a} {b} {c}" for a, b, c in graph.sorted_edges())
        return "\n".join(lines) + "\n"


class CertificateCodec:
    """迭代三部图证书的 JSON 读写（字段 vertices / parts / children）"""

    def dumps(self, certificate: CertificateNode) -> bytes:
        return dump_json(certificate)

    def loads(self, payload: bytes) -> CertificateNode:
        try:
            return CertificateNode.model_validate(orjson.loads(payload))
        except (orjson.JSONDecodeError, ValidationError) as exc:
            raise FormatParseError(f"证书格式错误: {exc}")
