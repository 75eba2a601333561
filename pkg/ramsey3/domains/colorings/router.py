"""
着色构造命令
gen tight / alt-tight / rainbow / two-component
"""
import argparse
from typing import Dict, Optional

from ramsey3.common.response import SuccessResponse
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, read_input
from ramsey3.domains.colorings.models import ColoringBundle
from ramsey3.domains.colorings.service import ColoringService
from ramsey3.domains.colorings.services import PairColoringCodec, TripleColoringCodec
from ramsey3.domains.trifference.services import CodeFileService

router = CommandRouter(prefix="gen", tags=["构造"])


def _artifacts(bundle: ColoringBundle, out: Optional[str], phi_out: Optional[str]) -> Dict[str, bytes]:
    files: Dict[str, bytes] = {}
    if out and bundle.chi is not None:
        files[out] = TripleColoringCodec().format(bundle.chi).encode("ascii")
    elif out and bundle.phi is not None:
        files[out] = PairColoringCodec().format(bundle.phi).encode("ascii")
    if phi_out and bundle.phi is not None:
        files[phi_out] = PairColoringCodec().format(bundle.phi).encode("ascii")
    return files


def _summary(bundle: ColoringBundle) -> dict:
    data: dict = {}
    if bundle.chi is not None:
        data.update(
            n=bundle.chi.n,
            tag=bundle.chi.tag,
            red_triples=bundle.chi.red_count,
            instance_hash=bundle.chi.instance_hash(),
        )
    if bundle.phi is not None:
        data.update(n=bundle.phi.n, palette=bundle.phi.palette, phi_tag=bundle.phi.tag)
    return data


@router.command(
    "tight",
    summary="由三异码构造紧着色 (φ, χ)",
    arguments=[
        arg("--code", required=True, help="码文件"),
        arg("--seed", type=int, required=True, help="随机种子"),
        arg("--out", required=True, help="三元组着色输出文件"),
        arg("--phi-out", default=None, help="φ 的对着色输出文件"),
    ],
)
def gen_tight(args: argparse.Namespace) -> CommandOutcome:
    code = CodeFileService().parse(read_input(args.code))
    bundle = ColoringService().build_tight_coloring(code, args.seed)
    return CommandOutcome(
        response=SuccessResponse.create(data=_summary(bundle), message="生成成功"),
        artifacts=_artifacts(bundle, args.out, args.phi_out),
        inputs=[args.code],
        seed=args.seed,
    )


@router.command(
    "alt-tight",
    summary="构造简化紧着色（顶点串版本）",
    arguments=[
        arg("--n", type=int, required=True, help="顶点数 N"),
        arg("--ell", type=int, required=True, help="层数"),
        arg("--seed", type=int, required=True, help="随机种子"),
        arg("--out", required=True, help="三元组着色输出文件"),
        arg("--phi-out", default=None, help="φ 的对着色输出文件"),
    ],
)
def gen_alt_tight(args: argparse.Namespace) -> CommandOutcome:
    bundle = ColoringService().build_alt_tight_coloring(args.n, args.ell, args.seed)
    return CommandOutcome(
        response=SuccessResponse.create(data=_summary(bundle), message="生成成功"),
        artifacts=_artifacts(bundle, args.out, args.phi_out),
        seed=args.seed,
    )


@router.command(
    "rainbow",
    summary="构造 2^ell 个顶点上的 2-adic 彩虹边着色",
    arguments=[
        arg("--ell", type=int, required=True, help="层数，顶点数为 2^ell"),
        arg("--a", dest="palette_a", type=int, required=True, help="每层颜色数 A"),
        arg("--seed", type=int, required=True, help="随机种子"),
        arg("--out", required=True, help="对着色输出文件"),
        arg("--allow-small-palette", action="store_true", help="允许 A 小于配置下限（仅小规模实验）"),
    ],
)
def gen_rainbow(args: argparse.Namespace) -> CommandOutcome:
    bundle = ColoringService().build_rainbow_coloring(
        args.ell, args.palette_a, args.seed, allow_small_palette=args.allow_small_palette
    )
    return CommandOutcome(
        response=SuccessResponse.create(data=_summary(bundle), message="生成成功"),
        artifacts=_artifacts(bundle, args.out, None),
        seed=args.seed,
    )


@router.command(
    "two-component",
    summary="构造两紧分支着色（内部先按同一种子构造彩虹着色）",
    arguments=[
        arg("--ell", type=int, required=True, help="层数，顶点数为 2^ell"),
        arg("--a", dest="palette_a", type=int, required=True, help="每层颜色数 A"),
        arg("--seed", type=int, required=True, help="随机种子"),
        arg("--out", required=True, help="三元组着色输出文件"),
        arg("--phi-out", default=None, help="彩虹对着色输出文件"),
        arg("--allow-small-palette", action="store_true", help="允许 A 小于配置下限"),
    ],
)
def gen_two_component(args: argparse.Namespace) -> CommandOutcome:
    service = ColoringService()
    rainbow = service.build_rainbow_coloring(
        args.ell, args.palette_a, args.seed, allow_small_palette=args.allow_small_palette
    )
    bundle = service.build_two_component_coloring(rainbow.phi, args.seed)
    data = _summary(bundle)
    data["red_probability_per_rainbow_triangle"] = service.two_component_red_probability(rainbow.phi.palette)
    return CommandOutcome(
        response=SuccessResponse.create(data=data, message="生成成功"),
        artifacts=_artifacts(bundle, args.out, args.phi_out),
        seed=args.seed,
    )
