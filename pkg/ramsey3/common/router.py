"""
命令路由
各业务域用 CommandRouter 以装饰器注册子命令，main.py 统一 include 并生成 argparse 解析器：

    router = CommandRouter(prefix="gen", tags=["着色构造"])

    @router.command("tight", summary="构造紧着色", arguments=[arg("--seed", type=int, required=True)])
    def gen_tight(args) -> CommandOutcome:
        ...
"""
import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ramsey3.common.response import BaseResponse


@dataclass
class Argument:
    """一个命令行参数（透传给 add_argument）"""
    flags: Tuple[str, ...]
    options: Dict[str, Any]


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags=flags, options=options)


@dataclass
class CommandOutcome:
    """
    命令执行结果
    response 决定退出码；artifacts 为待写出的文件（路径 -> 内容）；
    report 非空时代替 JSON 响应写到标准输出（例如 CSV）
    """
    response: BaseResponse
    artifacts: Dict[str, bytes] = field(default_factory=dict)
    inputs: List[str] = field(default_factory=list)
    report: Optional[bytes] = None
    seed: Optional[int] = None

    @property
    def exit_code(self) -> int:
        return self.response.code


Handler = Callable[[argparse.Namespace], CommandOutcome]


@dataclass
class Command:
    path: Tuple[str, ...]
    handler: Handler
    summary: str
    arguments: List[Argument]

    @property
    def name(self) -> str:
        return " ".join(self.path)


class CommandRouter:
    """子命令路由器"""

    def __init__(self, prefix: str = "", tags: Optional[Sequence[str]] = None):
        self.prefix = prefix
        self.tags = list(tags or [])
        self.commands: List[Command] = []

    def command(
        self,
        name: str,
        summary: str = "",
        arguments: Sequence[Argument] = (),
    ) -> Callable[[Handler], Handler]:
        def decorator(handler: Handler) -> Handler:
            path = (self.prefix, name) if self.prefix else (name,)
            self.commands.append(Command(path=path, handler=handler, summary=summary, arguments=list(arguments)))
            return handler

        return decorator


def build_parser(
    routers: Sequence[CommandRouter],
    description: str = "",
    common: Sequence[Argument] = (),
) -> Tuple[argparse.ArgumentParser, Dict[str, Command]]:
    """由路由器生成解析器；返回 (解析器, 命令名 -> 命令)"""
    parser = argparse.ArgumentParser(prog="ramsey3", description=description)
    for argument in common:
        parser.add_argument(*argument.flags, **argument.options)
    top = parser.add_subparsers(dest="command", required=True)
    groups: Dict[str, Any] = {}
    table: Dict[str, Command] = {}

    for router in routers:
        for command in router.commands:
            if len(command.path) == 1:
                sub = top.add_parser(command.path[0], help=command.summary, description=command.summary)
            else:
                group_name, leaf = command.path
                if group_name not in groups:
                    group_parser = top.add_parser(group_name, help=", ".join(router.tags) or None)
                    groups[group_name] = group_parser.add_subparsers(dest="subcommand", required=True)
                sub = groups[group_name].add_parser(leaf, help=command.summary, description=command.summary)
            for argument in command.arguments:
                sub.add_argument(*argument.flags, **argument.options)
            sub.set_defaults(command_name=command.name)
            table[command.name] = command
    return parser, table


def read_input(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()
