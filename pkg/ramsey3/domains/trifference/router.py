"""
三异码命令
gen code / verify code
"""
import argparse

from ramsey3.common.response import SuccessResponse, ViolationResponse
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, read_input
from ramsey3.domains.trifference.service import TrifferenceService
from ramsey3.domains.trifference.services import CodeFileService

router = CommandRouter(prefix="gen", tags=["构造"])
verify_router = CommandRouter(prefix="verify", tags=["校验"])


@router.command(
    "code",
    summary="整码拒绝采样生成 r-三异码",
    arguments=[
        arg("--n", type=int, required=True, help="码字个数 N"),
        arg("--ell", type=int, default=None, help="码长（默认取配置）"),
        arg("--r", type=int, default=None, help="三异参数（默认取配置）"),
        arg("--seed", type=int, required=True, help="随机种子"),
        arg("--max-retries", type=int, default=None, help="最大抽样次数"),
        arg("--out", required=True, help="输出码文件"),
    ],
)
def gen_code(args: argparse.Namespace) -> CommandOutcome:
    code, summary = TrifferenceService().generate_with_summary(
        args.n, args.ell, args.r, seed=args.seed, max_retries=args.max_retries
    )
    payload = CodeFileService().format(code).encode("ascii")
    return CommandOutcome(
        response=SuccessResponse.create(data=summary, message="生成成功"),
        artifacts={args.out: payload},
        seed=args.seed,
    )


@verify_router.command(
    "code",
    summary="穷举校验三异条件",
    arguments=[
        arg("--in", dest="input", required=True, help="码文件"),
        arg("--count", action="store_true", help="统计全部违例三元组"),
    ],
)
def verify_code(args: argparse.Namespace) -> CommandOutcome:
    code = CodeFileService().parse(read_input(args.input))
    service = TrifferenceService()
    result = service.count_violations(code) if args.count else service.verify_code(code)
    response = SuccessResponse.create(data=result) if result.passed else ViolationResponse.create(data=result)
    return CommandOutcome(response=response, inputs=[args.input])
