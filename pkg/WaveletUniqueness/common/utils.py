"""
公共工具函数模块
包含系统所有组件的通用工具函数
"""

import dataclasses
import json
import os
from enum import Enum
from typing import Any, Union

import numpy as np
from loguru import logger

from .config import CLI_CONFIG


class JsonEncoder(json.JSONEncoder):
    """
    自定义JSON编码器，支持 numpy 标量/数组、复数、枚举与 dataclass
    """

    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return round_significant(float(obj))
        elif isinstance(obj, (complex, np.complexfloating)):
            return {"re": round_significant(obj.real), "im": round_significant(obj.imag)}
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, Enum):
            return obj.value
        elif dataclasses.is_dataclass(obj):
            return dataclasses.asdict(obj)
        else:
            return super().default(obj)


def round_significant(value: float, digits: int = None) -> float:
    """
    按有效位数舍入浮点数，保证报告输出稳定

    Args:
        value: 原始浮点数
        digits: 有效位数，默认取 CLI_CONFIG["json_digits"]

    Returns:
        舍入后的浮点数
    """
    digits = digits or CLI_CONFIG["json_digits"]
    if not np.isfinite(value) or value == 0.0:
        return float(value)
    return float(f"{value:.{digits - 1}e}")


def normalize_for_json(data: Any) -> Any:
    """
    递归地把报告数据中的浮点数舍入到固定有效位
    """
    if isinstance(data, dict):
        return {key: normalize_for_json(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [normalize_for_json(item) for item in data]
    if isinstance(data, (float, np.floating)):
        return round_significant(float(data))
    if isinstance(data, np.integer):
        return int(data)
    return data


def to_json_text(data: Any, indent: int = None) -> str:
    """
    渲染确定性的JSON文本（键顺序保持插入顺序，浮点位数固定）
    """
    indent = CLI_CONFIG["json_indent"] if indent is None else indent
    return json.dumps(normalize_for_json(data), ensure_ascii=False, indent=indent, cls=JsonEncoder)


def safe_json_dump(data: Any, file_path: Union[str, os.PathLike], ensure_ascii: bool = False,
                   indent: int = None) -> bool:
    """
    安全保存JSON数据到文件

    Args:
        data: 要保存的数据
        file_path: 文件路径
        ensure_ascii: 是否确保ASCII编码
        indent: 缩进空格数，默认取 CLI_CONFIG["json_indent"]

    Returns:
        是否保存成功
    """
    indent = CLI_CONFIG["json_indent"] if indent is None else indent
    try:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(normalize_for_json(data), f, ensure_ascii=ensure_ascii, indent=indent, cls=JsonEncoder)
            f.write("\n")
        return True
    except Exception as e:
        logger.error(f"[Utils] 保存JSON文件失败: {e}")
        return False


def relative_l2_error(estimate: np.ndarray, reference: np.ndarray) -> float:
    """
    相对 L² 误差 ‖estimate − reference‖ / ‖reference‖

    Args:
        estimate: 估计值
        reference: 参考值

    Returns:
        相对误差；参考为零时返回绝对误差
    """
    reference = np.asarray(reference)
    diff = np.linalg.norm(np.asarray(estimate) - reference)
    norm = np.linalg.norm(reference)
    return float(diff / norm) if norm > 0 else float(diff)


