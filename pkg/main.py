#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
连续小波变换唯一性工具包主启动文件

负责：
1. 配置日志（控制台 + 轮转的系统日志与错误日志）
2. 把 loguru 的输出并入标准 logging 处理器
3. 启动 Typer 命令行
"""

import logging
import logging.handlers
import os
import sys
from typing import Any, Dict, Optional

from loguru import logger

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from WaveletUniqueness import component_status  # noqa: E402
from WaveletUniqueness.Cli import app  # noqa: E402
from WaveletUniqueness.common.config import get_config  # noqa: E402
from WaveletUniqueness.common.paths import ensure_directories  # noqa: E402


class PropagateHandler(logging.Handler):
    """把 loguru 记录转交给同名的标准 logging 日志器"""

    def emit(self, record: logging.LogRecord) -> None:
        logging.getLogger(record.name).handle(record)


# --- 日志系统配置 ---
def setup_logging(config: Optional[Dict[str, Any]] = None) -> logging.Logger:
    """
    设置系统日志

    Args:
        config: 日志配置，缺省取 get_config("log")
    """
    config = config or get_config("log")
    ensure_directories()

    # 创建主日志器
    root = logging.getLogger()
    root.setLevel(getattr(logging, config["log_level"]))

    # 清除现有处理器
    for handler in root.handlers[:]:
        root.removeHandler(handler)

    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    # 控制台只显示警告及以上，stdout 留给 JSON 报告
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, config["console_level"]))
    console_handler.setFormatter(formatter)
    root.addHandler(console_handler)

    system_file_handler = logging.handlers.RotatingFileHandler(
        config["log_file"],
        maxBytes=config["max_bytes"],
        backupCount=config["backup_count"],
        encoding="utf-8",
    )
    system_file_handler.setLevel(getattr(logging, config["log_level"]))
    system_file_handler.setFormatter(formatter)
    root.addHandler(system_file_handler)

    error_file_handler = logging.handlers.RotatingFileHandler(
        config["error_log_file"],
        maxBytes=config["max_bytes"],
        backupCount=config["backup_count"],
        encoding="utf-8",
    )
    error_file_handler.setLevel(logging.ERROR)
    error_file_handler.setFormatter(formatter)
    root.addHandler(error_file_handler)

    # 组件内部统一使用 loguru，这里改为转交给上面的处理器
    logger.remove()
    logger.add(PropagateHandler(), level=config["log_level"], format="{message}")

    # 控制第三方库日志级别
    for logger_name in ["hypothesis"]:
        logging.getLogger(logger_name).setLevel(logging.WARNING)

    main_logger = logging.getLogger("WaveletUniqueness")
    main_logger.info("日志系统已初始化")
    main_logger.info(f"日志级别: {config['log_level']}")
    main_logger.info(f"系统日志: {config['log_file']}")
    main_logger.info(f"错误日志: {config['error_log_file']}")
    return main_logger


def main():
    """
    主函数
    """
    main_logger = setup_logging()
    for name, available in component_status().items():
        if not available:
            main_logger.warning(f"组件 {name} 不可用")
    app(prog_name="wavelet-uniqueness")


if __name__ == "__main__":
    main()
