"""
树引理命令
tree split / rotate-to-balance / score / good
"""
import argparse
from fractions import Fraction
from typing import List

from ramsey3.common.exceptions import InvalidParameterError
from ramsey3.common.response import SuccessResponse
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, read_input
from ramsey3.domains.colorings.service import ColoringService
from ramsey3.domains.tree_lemma.models import TreeNode
from ramsey3.domains.tree_lemma.service import TreeLemmaService
from ramsey3.domains.tree_lemma.services import SPLIT_ORDERS, path_text

router = CommandRouter(prefix="tree", tags=["树引理"])


def parse_vertex_set(text: str) -> List[int]:
    """逗号分隔的整数或区间 a..b（含两端），如 "0,3,8..15" """
    values: List[int] = []
    for item in text.replace(" ", "").split(","):
        if not item:
            continue
        try:
            if ".." in item:
                low, high = item.split("..", 1)
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(int(item))
        except ValueError:
            raise InvalidParameterError(f"无法解析的顶点集合项: {item!r}") from None
    if not values:
        raise InvalidParameterError("顶点集合为空")
    return values


def _load_tree(args: argparse.Namespace, service: TreeLemmaService) -> TreeNode:
    if getattr(args, "input", None):
        return service.parse(read_input(args.input))
    if getattr(args, "vertex_set", None):
        return service.build_split_tree(parse_vertex_set(args.vertex_set), order=getattr(args, "order", "low"))
    raise InvalidParameterError("需要 --in 或 --set 之一")


def _tree_source_arguments():
    return [
        arg("--in", dest="input", default=None, help="括号表示的树文件"),
        arg("--set", dest="vertex_set", default=None, help="由顶点集合构造分裂树，如 0,1,5..9"),
        arg("--order", choices=SPLIT_ORDERS, default="low", help="分裂位顺序"),
    ]


@router.command(
    "split",
    summary="构造顶点集合的比特分裂树",
    arguments=[
        arg("--set", dest="vertex_set", required=True, help="顶点集合，如 0,1,5..9"),
        arg("--ell", type=int, default=None, help="位宽，元素须小于 2^ell"),
        arg("--order", choices=SPLIT_ORDERS, default="low", help="分裂位顺序"),
    ],
)
def tree_split(args: argparse.Namespace) -> CommandOutcome:
    service = TreeLemmaService()
    tree = service.build_split_tree(parse_vertex_set(args.vertex_set), args.ell, args.order)
    nodes = [
        {"path": path_text(path), "n": node.n, "weight": node.weight, "m": node.m, "bit": node.bit}
        for path, node in tree.internal_nodes()
    ]
    data = {"tree": service.dump(tree), "k": tree.n, "d_total": tree.d_total(), "nodes": nodes}
    return CommandOutcome(response=SuccessResponse.create(data=data))


@router.command(
    "rotate-to-balance",
    summary="反复旋转直到没有不平衡，输出 D_total 轨迹",
    arguments=_tree_source_arguments() + [
        arg("--max-steps", type=int, default=None, help="最多旋转次数"),
    ],
)
def tree_rotate(args: argparse.Namespace) -> CommandOutcome:
    service = TreeLemmaService()
    tree = _load_tree(args, service)
    trace = service.rotate_to_balance(tree, args.max_steps)
    return CommandOutcome(response=SuccessResponse.create(data=trace))


@router.command(
    "score",
    summary="权重预算 W 下的最小得分 ν*_T(W)",
    arguments=_tree_source_arguments() + [
        arg("--weight", required=True, help="权重预算 W，可写作分数 p/q"),
        arg("--set-version", action="store_true", help="f 只取 0/1"),
    ],
)
def tree_score(args: argparse.Namespace) -> CommandOutcome:
    service = TreeLemmaService()
    tree = _load_tree(args, service)
    try:
        budget = Fraction(args.weight)
    except (ValueError, ZeroDivisionError):
        raise InvalidParameterError(f"无法解析的权重: {args.weight!r}") from None
    if args.set_version:
        score, chosen = service.min_score_set(tree, budget)
        data = {"weight_budget": budget, "score": score, "chosen": chosen, "exact": True}
    else:
        data = service.min_score_given_weight(tree, budget).model_dump()
    data["breakpoints"] = service.score_breakpoints(tree)
    return CommandOutcome(response=SuccessResponse.create(data=data))


@router.command(
    "good",
    summary="用彩虹着色的顶点颜色 c_t(u) 给分裂树节点分类",
    arguments=[
        arg("--ell", type=int, required=True, help="层数，顶点数为 2^ell"),
        arg("--a", dest="palette_a", type=int, required=True, help="每层颜色数 A"),
        arg("--seed", type=int, required=True, help="随机种子（与 gen rainbow 相同）"),
        arg("--set", dest="vertex_set", required=True, help="顶点子集 S"),
        arg("--allow-small-palette", action="store_true", help="允许 A 小于配置下限"),
    ],
)
def tree_good(args: argparse.Namespace) -> CommandOutcome:
    bundle = ColoringService().build_rainbow_coloring(
        args.ell, args.palette_a, args.seed, allow_small_palette=args.allow_small_palette
    )
    service = TreeLemmaService()
    tree = service.build_split_tree(parse_vertex_set(args.vertex_set), args.ell, "low")
    labels = service.classify_good_nodes(tree, bundle.aux.vertex_colors)
    report = service.good_node_report(tree, bundle.aux.vertex_colors)
    data = report.model_dump()
    data["tree"] = service.dump(tree, labels)
    return CommandOutcome(response=SuccessResponse.create(data=data), seed=args.seed)
