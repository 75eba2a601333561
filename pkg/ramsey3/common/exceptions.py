"""
自定义异常类
code 即命令行退出码：1 发现违例，2 用法/解析错误，3 资源上限
"""
from typing import Any, Dict, Optional


class Ramsey3Exception(Exception):
    """异常基类"""

    def __init__(
        self,
        message: str = "操作失败",
        code: int = 1,
        data: Optional[Any] = None
    ):
        self.message = message
        self.code = code
        self.data = data
        super().__init__(self.message)


class InvalidParameterError(Ramsey3Exception):
    """参数不合法"""

    def __init__(self, message: str = "参数不合法", data: Optional[Any] = None):
        super().__init__(message=message, code=2, data=data)


class FormatParseError(InvalidParameterError):
    """文件格式解析失败"""

    def __init__(self, message: str = "文件格式错误", line: Optional[int] = None):
        if line is not None:
            message = f"{message}（第 {line} 行）"
        super().__init__(message=message, data={"line": line})


class IdenticalWordsError(InvalidParameterError):
    """两个码字相同，差异集合为空"""

    def __init__(self, message: str = "码字相同，差异集合为空"):
        super().__init__(message=message)


class UnverifiedCodeError(InvalidParameterError):
    """三异码未通过校验"""

    def __init__(self, message: str = "三异码未通过校验", data: Optional[Any] = None):
        super().__init__(message=message, data=data)


class NotTightlyConnectedError(InvalidParameterError):
    """输入不是紧连通的"""

    def __init__(self, message: str = "输入 3-图不是紧连通的", components: int = 0):
        super().__init__(message=message, data={"components": components})


class NotAnImbalanceError(InvalidParameterError):
    """指定节点处不存在不平衡结构"""

    def __init__(self, message: str = "指定节点不是不平衡点"):
        super().__init__(message=message)


class PaletteMismatchError(InvalidParameterError):
    """辅助函数的调色板与彩虹着色不一致"""

    def __init__(self, message: str = "调色板大小不一致"):
        super().__init__(message=message)


class MissingColorError(InvalidParameterError):
    """顶点颜色表缺少条目"""

    def __init__(self, message: str = "缺少顶点颜色", level: int = -1, vertex: int = -1):
        super().__init__(message=message, data={"level": level, "vertex": vertex})


class ResourceGuardError(Ramsey3Exception):
    """输入规模超过指数级算法的上限"""

    def __init__(
        self,
        message: str = "输入规模过大",
        size: int = 0,
        limit: int = 0,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(
            message=f"{message}: {size} > {limit}",
            code=3,
            data={"size": size, "limit": limit, **(details or {})},
        )


class RetriesExhaustedError(Ramsey3Exception):
    """随机构造的重试次数耗尽"""

    def __init__(self, message: str = "重试次数耗尽", best_violations: int = 0, attempts: int = 0):
        super().__init__(
            message=f"{message}: {attempts} 次尝试，最少违例数 {best_violations}",
            code=1,
            data={"best_violations": best_violations, "attempts": attempts},
        )
        self.best_violations = best_violations


class PreconditionViolatedError(Ramsey3Exception):
    """前置条件不满足（携带违例见证）"""

    def __init__(self, message: str = "前置条件不满足", witness: Optional[Any] = None):
        super().__init__(message=message, code=1, data={"witness": witness})
        self.witness = witness


class NotIteratedTripartiteError(PreconditionViolatedError):
    """红色子图不是迭代三部图"""

    def __init__(self, message: str = "红色子图不是迭代三部图", witness: Optional[Any] = None):
        super().__init__(message=message, witness=witness)
