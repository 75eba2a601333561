"""
超图核心命令
t-table / components / recognize / embed
"""
import argparse

from loguru import logger

from ramsey3.common.response import SuccessResponse, ViolationResponse
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, read_input
from ramsey3.domains.hypergraph.service import HypergraphService
from ramsey3.domains.hypergraph.services import EdgeListService

router = CommandRouter(tags=["超图核心"])


@router.command(
    "t-table",
    summary="输出 t(s)（s 个顶点的迭代三部图最大边数）",
    arguments=[arg("--max-s", type=int, required=True, help="最大的 s")],
)
def t_table(args: argparse.Namespace) -> CommandOutcome:
    rows = HypergraphService().t_table(args.max_s)
    return CommandOutcome(response=SuccessResponse.create(data={"rows": rows}))


@router.command(
    "components",
    summary="紧分支分解与强制三部划分",
    arguments=[arg("--in", dest="input", required=True, help="边表文件")],
)
def components(args: argparse.Namespace) -> CommandOutcome:
    graph = EdgeListService().parse(read_input(args.input))
    service = HypergraphService()
    rows = []
    for component, partition in service.component_tripartitions(graph):
        rows.append({
            "edges": component.sorted_edges(),
            "vertices": component.vertex_support(),
            "tripartition": partition.canonical() if partition else None,
        })
    data = {"num_vertices": graph.num_vertices, "num_edges": graph.num_edges, "components": rows}
    return CommandOutcome(response=SuccessResponse.create(data=data), inputs=[args.input])


@router.command(
    "recognize",
    summary="迭代三部图识别（输出证书）",
    arguments=[
        arg("--in", dest="input", required=True, help="边表文件"),
        arg("--limit", type=int, default=None, help="顶点数上限（默认取配置）"),
    ],
)
def recognize(args: argparse.Namespace) -> CommandOutcome:
    graph = EdgeListService().parse(read_input(args.input))
    result = HypergraphService().recognize(graph, vertex_limit=args.limit)
    logger.info(f"识别结果: {'是' if result.iterated_tripartite else '否'}迭代三部图")
    response = SuccessResponse.create(data=result) if result.iterated_tripartite else ViolationResponse.create(
        data=result, message="不是迭代三部图"
    )
    return CommandOutcome(response=response, inputs=[args.input])


@router.command(
    "embed",
    summary="在三元组着色中寻找红色子超图",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--pattern", required=True, help="模式 3-图的边表文件"),
        arg("--limit", type=int, default=None, help="模式图顶点数上限"),
    ],
)
def embed(args: argparse.Namespace) -> CommandOutcome:
    from ramsey3.domains.colorings.services import TripleColoringCodec

    chi = TripleColoringCodec().parse(read_input(args.input))
    pattern = EdgeListService().parse(read_input(args.pattern))
    mapping = HypergraphService().contains_red_copy(chi, pattern, vertex_limit=args.limit)
    data = {"found": mapping is not None, "embedding": mapping}
    return CommandOutcome(response=SuccessResponse.create(data=data), inputs=[args.input, args.pattern])
