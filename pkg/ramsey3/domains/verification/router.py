"""
实例校验命令
verify red-tripartite / phi-constancy / pairwise-iterated / biclique / rainbow-count /
       mono-probability / red-expectation / alt-fraction / red-density
clique exact / greedy
"""
import argparse
import time
from typing import Any, Dict, List, Optional, Sequence

from ramsey3.common.config import settings
from ramsey3.common.exceptions import ResourceGuardError
from ramsey3.common.response import SuccessResponse, ViolationResponse, dump_compact, dump_csv, dump_json
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, read_input
from ramsey3.domains.colorings.models import ColoringBundle
from ramsey3.domains.colorings.services import PairColoringCodec, TripleColoringCodec
from ramsey3.domains.trifference.services import CodeFileService
from ramsey3.domains.tree_lemma.router import parse_vertex_set
from ramsey3.domains.verification.schemas import CheckReport
from ramsey3.domains.verification.service import VerificationService

router = CommandRouter(prefix="verify", tags=["校验"])
clique_router = CommandRouter(prefix="clique", tags=["蓝团"])

_FORMAT = arg("--format", choices=("json", "csv"), default="json", help="报告格式")
_OUT = arg("--out", default=None, help="报告输出文件")


def _outcome(
    args: argparse.Namespace,
    report: CheckReport,
    started: float,
    inputs: Sequence[str],
    csv_columns: Sequence[str] = ("check", "kind", "detail"),
    csv_rows: Optional[List[Sequence[Any]]] = None,
    seed: Optional[int] = None,
) -> CommandOutcome:
    report = report.model_copy(update={"timing": time.perf_counter() - started})
    if args.format == "csv":
        rows = csv_rows if csv_rows is not None else [
            (report.check, violation.get("reason", "violation") if isinstance(violation, dict) else "violation",
             dump_compact(violation))
            for violation in report.violations
        ]
        body: Optional[bytes] = dump_csv(csv_columns, rows)
    else:
        body = None
    if report.violations:
        response = ViolationResponse.create(data=report, message=f"{report.check}: {len(report.violations)} 个违例")
    else:
        response = SuccessResponse.create(data=report, message=f"{report.check}: 无违例")
    artifacts: Dict[str, bytes] = {}
    if args.out:
        artifacts[args.out] = body if body is not None else dump_json(response)
    return CommandOutcome(response=response, artifacts=artifacts, inputs=list(inputs), report=body, seed=seed)


def _load_chi(path: str):
    return TripleColoringCodec().parse(read_input(path))


def _load_phi(path: str):
    return PairColoringCodec().parse(read_input(path))


@router.command(
    "red-tripartite",
    summary="每个红紧分支是否三部",
    arguments=[arg("--in", dest="input", required=True, help="三元组着色文件"), _FORMAT, _OUT],
)
def verify_red_tripartite(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    chi = _load_chi(args.input)
    result = VerificationService().check_red_components_tripartite(chi)
    report = CheckReport(
        instance_hash=chi.instance_hash(),
        check="red-tripartite",
        parameters={"n": chi.n},
        violations=result.violations,
        result={"num_red_edges": result.num_red_edges, "components": len(result.components)},
    )
    return _outcome(args, report, started, [args.input])


@router.command(
    "phi-constancy",
    summary="Φ 在红紧分支上恒定，彩虹 φ 上另查跨部分颜色律",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--phi", required=True, help="对着色文件"),
        _FORMAT,
        _OUT,
    ],
)
def verify_phi_constancy(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    chi, phi = _load_chi(args.input), _load_phi(args.phi)
    result = VerificationService().check_phi_constancy(chi, phi)
    report = CheckReport(
        instance_hash=chi.instance_hash(),
        check="phi-constancy",
        parameters={"n": chi.n, "palette": phi.palette, "cross_part_law": result.cross_part_law},
        violations=result.violations,
        result={"components": [c.model_dump() for c in result.components]},
    )
    return _outcome(args, report, started, [args.input, args.phi])


@router.command(
    "pairwise-iterated",
    summary="任意两个红紧分支之并是否迭代三部",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--component-limit", type=int, default=None, help="红紧分支个数上限"),
        arg("--limit", type=int, default=None, help="精确识别的顶点数上限"),
        _FORMAT,
        _OUT,
    ],
)
def verify_pairwise(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    chi = _load_chi(args.input)
    result = VerificationService().check_pairwise_unions_iterated(chi, args.component_limit, args.limit)
    if result.undecided and not result.failures:
        limit = settings.recognition_vertex_limit if args.limit is None else args.limit
        raise ResourceGuardError(
            "红紧分支之并超过精确识别的顶点数上限（可用 --limit 放宽）",
            size=max(row.num_vertices or 0 for row in result.undecided),
            limit=limit,
            details={"undecided": [[row.first, row.second] for row in result.undecided]},
        )
    violations = [
        {"reason": "not-iterated-tripartite", "components": [row.first, row.second], "method": row.method}
        for row in result.failures
    ]
    report = CheckReport(
        instance_hash=chi.instance_hash(),
        check="pairwise-iterated",
        parameters={"n": chi.n},
        violations=violations,
        result={
            "num_components": result.num_components,
            "pairs_checked": result.pairs_checked,
            "methods": result.methods,
            "undecided": [[row.first, row.second] for row in result.undecided],
            "matrix": result.matrix,
        },
    )
    return _outcome(args, report, started, [args.input])


@router.command(
    "biclique",
    summary="每个颜色类是否为顶点不交的完全二部图之并",
    arguments=[arg("--in", dest="input", required=True, help="对着色文件"), _FORMAT, _OUT],
)
def verify_biclique(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    phi = _load_phi(args.input)
    result = VerificationService().check_biclique_structure(phi)
    report = CheckReport(
        instance_hash=phi.instance_hash(),
        check="biclique",
        parameters={"n": phi.n, "palette": phi.palette},
        violations=result.violations,
        result={"classes_checked": result.classes_checked, "components_checked": result.components_checked},
    )
    return _outcome(args, report, started, [args.input])


@router.command(
    "rainbow-count",
    summary="随机子集上的彩虹三角形数与 k^2.5/4 比较",
    arguments=[
        arg("--in", dest="input", required=True, help="对着色文件"),
        arg("--samples", type=int, default=None, help="采样子集个数"),
        arg("--subset-size", type=int, default=None, help="子集大小 k"),
        arg("--seed", type=int, default=0, help="随机种子"),
        arg("--packing", action="store_true", help="同时计算边不交彩虹三角形装箱"),
        _FORMAT,
        _OUT,
    ],
)
def verify_rainbow_count(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    phi = _load_phi(args.input)
    stats = VerificationService().rainbow_count_statistics(
        phi, args.samples, args.subset_size, args.seed, with_packing=args.packing
    )
    violations = []
    if not stats.passed:
        violations.append({
            "reason": "pass-fraction",
            "pass_fraction": stats.pass_fraction,
            "required": stats.required_fraction,
            "failing_seeds": [row.seed for row in stats.samples if not row.passed],
        })
    report = CheckReport(
        instance_hash=phi.instance_hash(),
        check="rainbow-count",
        parameters={"samples": len(stats.samples), "subset_size": stats.subset_size, "seed": args.seed},
        violations=violations,
        result={
            "threshold": stats.threshold,
            "pass_fraction": stats.pass_fraction,
            "counts": [row.count for row in stats.samples],
            "packings": [row.packing for row in stats.samples] if args.packing else None,
        },
    )
    rows = [(row.index, row.seed, row.count, row.threshold, row.passed, row.packing) for row in stats.samples]
    return _outcome(
        args, report, started, [args.input],
        csv_columns=("index", "seed", "count", "threshold", "passed", "packing"),
        csv_rows=rows,
        seed=args.seed,
    )


@router.command(
    "mono-probability",
    summary="码字子集上单色三角形个数的精确期望与蒙特卡洛对照",
    arguments=[
        arg("--code", required=True, help="码文件"),
        arg("--set", dest="vertex_set", required=True, help="码字下标集合，如 0,1,2"),
        arg("--trials", type=int, default=None, help="蒙特卡洛试验次数"),
        arg("--seed", type=int, default=0, help="随机种子"),
        _FORMAT,
        _OUT,
    ],
)
def verify_mono_probability(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    code = CodeFileService().parse(read_input(args.code))
    vertices = parse_vertex_set(args.vertex_set)
    estimate = VerificationService().simulate_mono_probability(code, vertices, args.trials, args.seed)
    violations = [] if estimate.within_tolerance else [{"reason": "monte-carlo", "z_score": estimate.z_score}]
    report = CheckReport(
        instance_hash=code.instance_hash(),
        check="mono-probability",
        parameters={"vertices": sorted(set(vertices)), "trials": estimate.trials, "seed": args.seed},
        violations=violations,
        result=estimate.model_dump(),
    )
    return _outcome(args, report, started, [args.code], seed=args.seed)


@router.command(
    "red-expectation",
    summary="两紧分支着色红三元组数是否落在泊松区间内",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--phi", required=True, help="彩虹对着色文件"),
        _FORMAT,
        _OUT,
    ],
)
def verify_red_expectation(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    chi, phi = _load_chi(args.input), _load_phi(args.phi)
    expectation = VerificationService().two_component_red_expectation(phi, chi)
    violations = [] if expectation.within_interval else [
        {"reason": "poisson-interval", "observed": expectation.observed, "interval": list(expectation.interval)}
    ]
    report = CheckReport(
        instance_hash=chi.instance_hash(),
        check="red-expectation",
        parameters={"n": chi.n, "palette": phi.palette, "level": expectation.level},
        violations=violations,
        result=expectation.model_dump(),
    )
    return _outcome(args, report, started, [args.input, args.phi])


@router.command(
    "alt-fraction",
    summary="简化构造中 φ 单色三角形变红的比例（期望 2/9）",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--phi", required=True, help="φ 的对着色文件"),
        _FORMAT,
        _OUT,
    ],
)
def verify_alt_fraction(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    chi, phi = _load_chi(args.input), _load_phi(args.phi)
    result = VerificationService().alt_red_fraction(ColoringBundle(chi=chi, phi=phi))
    violations = [] if result.within_tolerance else [{"reason": "red-fraction", "z_score": result.z_score}]
    report = CheckReport(
        instance_hash=chi.instance_hash(),
        check="alt-fraction",
        parameters={"n": chi.n},
        violations=violations,
        result=result.model_dump(),
    )
    return _outcome(args, report, started, [args.input, args.phi])


@router.command(
    "red-density",
    summary="s 个顶点上的最大红边数，与 t(s) 对照",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--max-s", type=int, required=True, help="最大的 s"),
        arg("--limit", type=int, default=None, help="顶点数上限"),
        _FORMAT,
        _OUT,
    ],
)
def verify_red_density(args: argparse.Namespace) -> CommandOutcome:
    started = time.perf_counter()
    chi = _load_chi(args.input)
    service = VerificationService()
    rows = [service.max_red_edges_on_s_vertices(chi, s, args.limit) for s in range(1, min(args.max_s, chi.n) + 1)]
    report = CheckReport(
        instance_hash=chi.instance_hash(),
        check="red-density",
        parameters={"n": chi.n, "max_s": args.max_s},
        result={"rows": [row.model_dump() for row in rows]},
    )
    return _outcome(
        args, report, started, [args.input],
        csv_columns=("s", "max_red_edges", "t_s", "at_most_t"),
        csv_rows=[(row.s, row.max_red_edges, row.t_s, row.at_most_t) for row in rows],
    )


@clique_router.command(
    "exact",
    summary="分支定界求最大蓝团",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--limit", dest="size_limit", type=int, default=None, help="找到该大小的蓝团即停止（N 超过上限时必填）"),
    ],
)
def clique_exact(args: argparse.Namespace) -> CommandOutcome:
    chi = _load_chi(args.input)
    result = VerificationService().max_blue_clique_exact(chi, args.size_limit)
    data = {"instance_hash": chi.instance_hash(), "n": chi.n, **result.model_dump()}
    return CommandOutcome(response=SuccessResponse.create(data=data), inputs=[args.input])


@clique_router.command(
    "greedy",
    summary="随机贪心蓝团（输出每次重启的大小作为趋势数据）",
    arguments=[
        arg("--in", dest="input", required=True, help="三元组着色文件"),
        arg("--restarts", type=int, default=None, help="重启次数"),
        arg("--seed", type=int, default=0, help="随机种子"),
    ],
)
def clique_greedy(args: argparse.Namespace) -> CommandOutcome:
    chi = _load_chi(args.input)
    result = VerificationService().greedy_blue_clique(chi, args.restarts, args.seed)
    data = {"instance_hash": chi.instance_hash(), "n": chi.n, **result.model_dump()}
    return CommandOutcome(response=SuccessResponse.create(data=data), inputs=[args.input], seed=args.seed)
