"""
统一异常模块
所有组件共享的异常层级，每个异常携带命令行退出码与错误名
"""

from typing import Any, Dict, Optional


class WaveletUniquenessError(Exception):
    """
    工具包异常基类

    Attributes:
        exit_code: 命令行退出码
        error_name: 输出到 stderr 的错误名
        details: 附加上下文（例如出错的频率）
    """

    exit_code: int = 1
    error_name: str = "WaveletUniquenessError"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.error_name, "message": str(self), "details": self.details}


class ValidationError(WaveletUniquenessError):
    """输入不满足类型不变量或前置条件"""

    exit_code = 2
    error_name = "ValidationError"


class DegenerateLeadingCoefficient(ValidationError):
    """矩恢复时多项式最高次系数为零"""

    error_name = "DegenerateLeadingCoefficient"


class TauberianFail(WaveletUniquenessError):
    """在给定阈值下找不到满足比值下限的覆盖区间"""

    exit_code = 3
    error_name = "TauberianFail"


class DegenerateDenominator(WaveletUniquenessError):
    """对偶小波分母在工作频带内不够正"""

    exit_code = 3
    error_name = "DegenerateDenominator"


class BandCoverage(WaveletUniquenessError):
    """信号频带未被对偶构造覆盖"""

    exit_code = 3
    error_name = "BandCoverage"


class StorageError(WaveletUniquenessError):
    """文件读写失败"""

    exit_code = 4
    error_name = "StorageError"
