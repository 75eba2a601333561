"""
s 个顶点上的最大红边数
深度优先按升序枚举 s-子集，加入 v 时红边数增加 Q 中与 v 构成红三元组的对数。
结果与 t(s) 对照（只报告，不判违例）。
"""
from typing import List, Optional

from loguru import logger

from ramsey3.common.config import settings
from ramsey3.common.exceptions import InvalidParameterError, ResourceGuardError
from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.hypergraph.services import ExtremalService
from ramsey3.domains.verification.schemas import RedDensityRow
from ramsey3.domains.verification.services.blue_clique_service import red_row


class RedDensityService:

    def max_red_edges_on_s_vertices(
        self, chi: TripleColoring, s: int, vertex_limit: Optional[int] = None
    ) -> RedDensityRow:
        limit = settings.red_density_vertex_limit if vertex_limit is None else vertex_limit
        n = chi.n
        if n > limit:
            raise ResourceGuardError("红边密度穷举的顶点数过多", size=n, limit=limit)
        if not 1 <= s <= n:
            raise InvalidParameterError(f"s 必须在 [1, N] 内: s={s}, N={n}")

        # link[v][u]：w < u 且 uvw 为红的位掩码（只在 u < v 时使用）
        link = [[0] * n for _ in range(n)]
        for v in range(n):
            for u in range(v):
                row = red_row(chi, u, v)
                link[v][u] = sum(1 << w for w in range(u) if row[w])

        best_count = -1
        best_set: List[int] = []

        def extend(chosen: List[int], mask: int, count: int, start: int) -> None:
            nonlocal best_count, best_set
            if len(chosen) == s:
                if count > best_count:
                    best_count, best_set = count, list(chosen)
                return
            for v in range(start, n - (s - len(chosen)) + 1):
                gain = sum(bin(link[v][u] & mask).count("1") for u in chosen)
                chosen.append(v)
                extend(chosen, mask | (1 << v), count + gain, v + 1)
                chosen.pop()

        extend([], 0, 0, 0)
        t_s = ExtremalService().max_iterated_tripartite_edges(s)
        logger.debug(f"s={s}: 最大红边数 {best_count}, t(s)={t_s}")
        return RedDensityRow(s=s, max_red_edges=best_count, witness=best_set, t_s=t_s, at_most_t=best_count <= t_s)
