"""
测试公共夹具
"""
import pytest
from loguru import logger

from ramsey3.domains.colorings.models import TripleColoring
from ramsey3.domains.hypergraph.services import CatalogService


@pytest.fixture(autouse=True)
def _quiet_logs():
    """测试期间只保留警告以上的日志"""
    logger.remove()
    handler = logger.add(lambda _: None, level="WARNING")
    yield
    try:
        logger.remove(handler)
    except ValueError:
        # main() 会重新配置日志并移除全部处理器
        pass


@pytest.fixture
def catalog() -> CatalogService:
    return CatalogService()


@pytest.fixture
def nested_reverse_chi() -> TripleColoring:
    """5 个顶点，红三元组 {0,1,2}、{0,3,4}、{1,3,4}"""
    return TripleColoring.from_red_triples(5, [(0, 1, 2), (0, 3, 4), (1, 3, 4)])


BLOWUP_BASE = [(0, 1, 3), (0, 2, 5), (1, 2, 5), (1, 3, 6), (2, 4, 5), (4, 5, 6)]


@pytest.fixture
def blown_up_pair_chi() -> TripleColoring:
    """
    7 顶点底图（两个紧分支，之并不是迭代三部图）的 3 倍爆破，共 21 个顶点。
    快速路径都不适用，且并集超过默认的识别上限
    """
    red = [
        (3 * x + i, 3 * y + j, 3 * z + k)
        for x, y, z in BLOWUP_BASE
        for i in range(3) for j in range(3) for k in range(3)
    ]
    return TripleColoring.from_red_triples(21, red)
