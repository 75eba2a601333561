"""
应用配置模块
默认值可被 .env 文件或 RAMSEY3_ 前缀的环境变量覆盖
"""
import os
from typing import Optional

from loguru import logger
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """应用配置类"""

    # 应用基础配置
    app_name: str = "ramsey3"
    app_version: str = "0.1.0"
    debug: bool = False

    # 日志配置
    log_level: str = "INFO"

    # 并行配置（按颜色类 / 采样子集并行）
    threads: int = 1

    # 指数级算法的规模上限
    recognition_vertex_limit: int = 15
    exact_clique_vertex_limit: int = 64
    pairwise_component_limit: int = 200
    set_score_node_limit: int = 20
    red_density_vertex_limit: int = 18

    # 三异码（trifference code）桌面规模默认参数
    code_ell: int = 120
    code_r: int = 5
    code_max_retries: int = 100

    # 彩虹着色
    rainbow_min_palette: int = 20

    # 树引理：叶子数不超过该值时使用精确有理数
    exact_rational_leaf_limit: int = 64

    # 团搜索
    greedy_restarts: int = 50

    # 统计检验
    rainbow_samples: int = 100
    rainbow_subset_size: int = 32
    rainbow_pass_fraction: float = 0.95
    sigma_tolerance: float = 3.0
    poisson_level: float = 0.999
    monte_carlo_trials: int = 100000

    # 报告输出
    report_float_digits: int = 12
    manifest_suffix: str = ".manifest.json"

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "env_prefix": "RAMSEY3_",
        "case_sensitive": False,
        "extra": "ignore",
    }


def load_settings(env_file: Optional[str] = ".env") -> Settings:
    """加载配置：存在 .env 时读取，否则使用默认值与环境变量"""
    if env_file and os.path.exists(env_file):
        logger.debug(f"使用配置文件: {env_file}")
        return Settings(_env_file=env_file)
    return Settings(_env_file=None)


# 全局配置实例
settings = load_settings()
