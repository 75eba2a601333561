"""
ramsey3 命令行入口
配置日志、注册各业务域的命令路由、统一异常处理，并为每次运行写出运行清单
"""
import argparse
import os
import sys
import time
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ramsey3.common.config import settings
from ramsey3.common.exception_handlers import handle_exception
from ramsey3.common.manifest import STDOUT_KEY, RunManifest, content_digest, file_digest, manifest_path_for
from ramsey3.common.response import SuccessResponse, ViolationResponse, dump_json
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, build_parser
from ramsey3.domains.colorings.router import router as colorings_router
from ramsey3.domains.extraction.router import router as extraction_router
from ramsey3.domains.hypergraph.router import router as hypergraph_router
from ramsey3.domains.tree_lemma.router import router as tree_router
from ramsey3.domains.trifference.router import router as trifference_router
from ramsey3.domains.trifference.router import verify_router as code_verify_router
from ramsey3.domains.verification.router import clique_router
from ramsey3.domains.verification.router import router as verification_router

system_router = CommandRouter(tags=["系统"])

# 不进入清单参数表的全局选项
_GLOBAL_KEYS = frozenset({"command", "subcommand", "command_name", "log_level", "threads", "manifest"})


def configure_logging(level: Optional[str] = None) -> None:
    """日志输出到标准错误，标准输出只留给报告"""
    logger.remove()
    if settings.debug:
        fmt = "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | {name}:{function}:{line} - {message}"
    else:
        fmt = "<level>{level: <8}</level> | {message}"
    logger.add(sys.stderr, level=(level or settings.log_level).upper(), format=fmt)


def _routers() -> List[CommandRouter]:
    return [
        hypergraph_router,
        trifference_router,
        colorings_router,
        code_verify_router,
        verification_router,
        clique_router,
        tree_router,
        extraction_router,
        system_router,
    ]


def create_parser() -> Tuple[argparse.ArgumentParser, Dict]:
    return build_parser(
        _routers(),
        description=f"{settings.app_name} {settings.app_version}：3-一致超图拉姆齐构造与实例校验",
        common=[
            arg("--log-level", default=None, help="日志级别（默认取配置）"),
            arg("--threads", type=int, default=None, help="并行线程数（也可用 RAMSEY3_THREADS）"),
            arg("--manifest", default=None, help="运行清单输出路径"),
        ],
    )


def _write(path: str, payload: bytes) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "wb") as handle:
        handle.write(payload)


def execute(argv: Sequence[str], record: bool = True) -> Tuple[int, bytes, RunManifest]:
    """
    执行一条命令，返回 (退出码, 标准输出内容, 运行清单)
    record 为 False 时不写清单文件（重放时使用）
    """
    parser, table = create_parser()
    args = parser.parse_args(list(argv))
    if args.threads is not None:
        settings.threads = max(1, args.threads)

    command = table[args.command_name]
    params = {k: v for k, v in sorted(vars(args).items()) if k not in _GLOBAL_KEYS}
    started = time.perf_counter()
    logger.debug(f"执行命令: {command.name} {params}")

    try:
        outcome = command.handler(args)
    except Exception as exc:
        response, code = handle_exception(exc)
        outcome = CommandOutcome(response=response)
    else:
        code = outcome.exit_code
    elapsed = time.perf_counter() - started

    for path, payload in outcome.artifacts.items():
        _write(path, payload)
        logger.info(f"已写出 {path}")
    stdout = outcome.report if outcome.report is not None else dump_json(outcome.response)

    manifest = RunManifest(
        command=command.name,
        argv=list(argv),
        params=params,
        seed=outcome.seed,
        inputs={path: file_digest(path) for path in outcome.inputs if os.path.exists(path)},
        outputs={**{path: content_digest(payload) for path, payload in outcome.artifacts.items()},
                 STDOUT_KEY: content_digest(stdout)},
        exit_code=code,
        timings={"total": elapsed},
    )
    if record:
        target = args.manifest
        if target is None and outcome.artifacts:
            target = manifest_path_for(next(iter(outcome.artifacts)), settings.manifest_suffix)
        if target is not None:
            _write(target, manifest.to_bytes())
            logger.info(f"运行清单: {target}（内容摘要 {manifest.content_hash()[:16]}）")
    return code, stdout, manifest


@system_router.command(
    "replay",
    summary="按运行清单重新执行并比对输出摘要",
    arguments=[arg("path", help="运行清单文件")],
)
def replay(args: argparse.Namespace) -> CommandOutcome:
    recorded = RunManifest.load(args.path)
    if recorded.command == "replay":
        raise ValueError("不能重放 replay 命令本身")
    code, _, fresh = execute(recorded.argv, record=False)

    differences = []
    for path in sorted(set(recorded.outputs) | set(fresh.outputs)):
        before, after = recorded.outputs.get(path), fresh.outputs.get(path)
        if before != after:
            differences.append({"output": path, "recorded": before, "replayed": after})
    if code != recorded.exit_code:
        differences.append({"output": "exit_code", "recorded": recorded.exit_code, "replayed": code})

    data = {
        "command": recorded.command,
        "recorded_hash": recorded.content_hash(),
        "replayed_hash": fresh.content_hash(),
        "identical": not differences,
        "differences": differences,
    }
    if differences:
        return CommandOutcome(response=ViolationResponse.create(data=data, message="重放结果不一致"))
    return CommandOutcome(response=SuccessResponse.create(data=data, message="重放结果一致"))


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # 先取出日志级别，使解析阶段的日志也按配置输出
    level = None
    if "--log-level" in argv:
        index = argv.index("--log-level")
        if index + 1 < len(argv):
            level = argv[index + 1]
    configure_logging(level)

    code, stdout, _ = execute(argv)
    sys.stdout.buffer.write(stdout)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
