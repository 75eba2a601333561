"""
全局异常处理器
把异常映射为错误响应与退出码
"""
from typing import Tuple

from loguru import logger

from ramsey3.common.exceptions import Ramsey3Exception, ResourceGuardError
from ramsey3.common.response import ErrorResponse, ResponseCode


def business_exception_handler(exc: Ramsey3Exception) -> Tuple[ErrorResponse, int]:
    """业务异常处理器"""
    if isinstance(exc, ResourceGuardError):
        logger.warning(f"资源上限: {exc.message}")
    else:
        logger.warning(f"业务异常: {exc.message}")
    return ErrorResponse.create(code=exc.code, message=exc.message, data=exc.data), exc.code


def value_error_handler(exc: ValueError) -> Tuple[ErrorResponse, int]:
    """参数异常处理器"""
    logger.warning(f"参数异常: {exc}")
    return ErrorResponse.create(code=ResponseCode.USAGE_ERROR, message=str(exc)), ResponseCode.USAGE_ERROR


def os_error_handler(exc: OSError) -> Tuple[ErrorResponse, int]:
    """文件读写异常处理器"""
    logger.error(f"文件异常: {exc}")
    return ErrorResponse.create(code=ResponseCode.USAGE_ERROR, message=f"文件读写失败: {exc}"), ResponseCode.USAGE_ERROR


def general_exception_handler(exc: Exception) -> Tuple[ErrorResponse, int]:
    """通用异常处理器"""
    logger.opt(exception=exc).error(f"系统异常: {exc}")
    return ErrorResponse.create(code=ResponseCode.VIOLATION, message="系统内部错误"), ResponseCode.VIOLATION


def handle_exception(exc: Exception) -> Tuple[ErrorResponse, int]:
    """按异常类型分派到对应处理器"""
    if isinstance(exc, Ramsey3Exception):
        return business_exception_handler(exc)
    if isinstance(exc, ValueError):
        return value_error_handler(exc)
    if isinstance(exc, OSError):
        return os_error_handler(exc)
    return general_exception_handler(exc)
