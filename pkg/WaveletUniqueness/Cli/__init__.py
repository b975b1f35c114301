"""
Cli 包：信号 / 系数矩阵文件读写、命令配置与 Typer 命令行。

模块结构：
- io: read_signal_csv / write_signal_csv / write_scalogram / read_scalogram / parse_scale_grid
- commands: CommandConfig / build_config / run_command
- app: Typer 应用
"""

__version__ = "1.0.0"

from .app import app
from .commands import CommandConfig, Subcommand, build_config, resolve_wavelet, run_command
from .io import (
    SCALOGRAM_HEADER,
    parse_scale_grid,
    read_scalogram,
    read_signal_csv,
    write_scalogram,
    write_signal_csv,
    write_spectrum_csv,
)

__all__ = [
    "app",
    "CommandConfig",
    "Subcommand",
    "build_config",
    "resolve_wavelet",
    "run_command",
    "SCALOGRAM_HEADER",
    "parse_scale_grid",
    "read_scalogram",
    "read_signal_csv",
    "write_scalogram",
    "write_signal_csv",
    "write_spectrum_csv",
    "__version__",
    "is_available",
]


def is_available() -> bool:
    """
    检查Cli组件是否可用

    Returns:
        bool: 组件是否可用
    """
    return True
