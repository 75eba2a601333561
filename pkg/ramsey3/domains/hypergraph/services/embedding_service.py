from typing import TYPE_CHECKING, Dict, List, Optional, Set

from loguru import logger

from ramsey3.common.config import settings
from ramsey3.common.exceptions import InvalidParameterError, ResourceGuardError
from ramsey3.domains.hypergraph.models import Pair, ThreeGraph, Triple

if TYPE_CHECKING:
    from ramsey3.domains.colorings.models import TripleColoring


def _search_order(pattern: ThreeGraph) -> List[int]:
    """依次选与已选顶点共享边最多的顶点，平局取度数大者、编号小者"""
    degrees = pattern.degrees()
    remaining = set(pattern.vertex_support())
    chosen: List[int] = []
    placed: Set[int] = set()
    while remaining:
        def key(v: int):
            touching = sum(1 for e in pattern.edges if v in e and any(x in placed for x in e if x != v))
            return -touching, -degrees.get(v, 0), v

        vertex = min(remaining, key=key)
        chosen.append(vertex)
        placed.add(vertex)
        remaining.remove(vertex)
    return chosen


class EmbeddingService:
    """红色子超图嵌入：回溯搜索单射，使 H 的每条边映到 χ 的红三元组"""

    def contains_red_copy(
        self,
        chi: "TripleColoring",
        pattern: ThreeGraph,
        vertex_limit: Optional[int] = None,
    ) -> Optional[Dict[int, int]]:
        if pattern.num_vertices > chi.n:
            raise InvalidParameterError(f"模式图顶点数 {pattern.num_vertices} 超过着色顶点数 {chi.n}")
        limit = vertex_limit if vertex_limit is not None else settings.recognition_vertex_limit
        if pattern.num_vertices > limit:
            raise ResourceGuardError("子超图嵌入的模式图过大", size=pattern.num_vertices, limit=limit)

        red_index = chi.red_graph().pair_index()
        order = _search_order(pattern)
        position = {v: i for i, v in enumerate(order)}
        # 每个顶点在其位置上需检查的边：其余两点均已放置 / 恰一点已放置
        closing: Dict[int, List[Triple]] = {v: [] for v in order}
        touching: Dict[int, List[Triple]] = {v: [] for v in order}
        for edge in pattern.sorted_edges():
            for v in edge:
                others = [x for x in edge if x != v]
                if all(position[x] < position[v] for x in others):
                    closing[v].append(edge)
                elif any(position[x] < position[v] for x in others):
                    touching[v].append(edge)

        red_support = sorted({x for pair in red_index for x in pair})
        mapping: Dict[int, int] = {}
        used: Set[int] = set()
        steps = 0

        def candidates(vertex: int) -> List[int]:
            pool: Optional[Set[int]] = None
            for edge in closing[vertex]:
                y, z = (mapping[x] for x in edge if x != vertex)
                pair: Pair = (y, z) if y < z else (z, y)
                thirds = red_index.get(pair, set())
                pool = set(thirds) if pool is None else pool & thirds
                if not pool:
                    return []
            base = sorted(pool) if pool is not None else red_support
            result = []
            for image in base:
                if image in used:
                    continue
                ok = True
                for edge in touching[vertex]:
                    anchor = next(mapping[x] for x in edge if x != vertex and x in mapping)
                    if ((anchor, image) if anchor < image else (image, anchor)) not in red_index:
                        ok = False
                        break
                if ok:
                    result.append(image)
            return result

        def extend(index: int) -> bool:
            nonlocal steps
            if index == len(order):
                return True
            vertex = order[index]
            for image in candidates(vertex):
                steps += 1
                mapping[vertex] = image
                used.add(image)
                if extend(index + 1):
                    return True
                del mapping[vertex]
                used.discard(image)
            return False

        found = extend(0)
        logger.debug(f"红色嵌入搜索: {steps} 步, {'找到' if found else '未找到'}")
        if not found:
            return None

        # 孤立顶点映到任意未用顶点
        free = (v for v in range(chi.n) if v not in used)
        for vertex in range(pattern.num_vertices):
            if vertex not in mapping:
                mapping[vertex] = next(free)
        return dict(sorted(mapping.items()))
