"""
蓝团提取命令
extract halving / iterated
"""
import argparse

from ramsey3.common.response import SuccessResponse, dump_json
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, read_input
from ramsey3.domains.colorings.services import TripleColoringCodec
from ramsey3.domains.extraction.schemas import ExtractionResult
from ramsey3.domains.extraction.service import ExtractionService

router = CommandRouter(prefix="extract", tags=["蓝团提取"])

_IN = arg("--in", dest="input", required=True, help="三元组着色文件")
_OUT = arg("--out", default=None, help="结果输出文件")


def _outcome(args: argparse.Namespace, result: ExtractionResult) -> CommandOutcome:
    response = SuccessResponse.create(
        data=result,
        message=f"{result.method}: 蓝团大小 {result.size}（下界 {result.lower_bound}）",
    )
    artifacts = {args.out: dump_json(response)} if args.out else {}
    return CommandOutcome(response=response, artifacts=artifacts, inputs=[args.input])


@router.command("halving", summary="减半递归提取蓝团（红紧分支须三部）", arguments=[_IN, _OUT])
def extract_halving(args: argparse.Namespace) -> CommandOutcome:
    chi = TripleColoringCodec().parse(read_input(args.input))
    return _outcome(args, ExtractionService().extract_blue_clique_halving(chi))


@router.command(
    "iterated",
    summary="迭代三部递归提取蓝团（红子图须迭代三部）",
    arguments=[_IN, arg("--limit", type=int, default=None, help="识别的顶点数上限"), _OUT],
)
def extract_iterated(args: argparse.Namespace) -> CommandOutcome:
    chi = TripleColoringCodec().parse(read_input(args.input))
    return _outcome(args, ExtractionService().extract_blue_clique_iterated(chi, args.limit))
