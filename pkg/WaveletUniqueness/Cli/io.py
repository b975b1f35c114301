"""
文件读写：信号 CSV、小波系数矩阵（二进制 / CSV）、频谱采样 CSV，以及尺度网格字符串解析

二进制布局（小端）：
    magic "CWTS" | version u32 | n_scales u64 | n_translations u64 | x0 f64 | dx f64 | base_b f64
    scales f64[n_scales]
    coeffs (re f64, im f64)[n_scales × n_translations]，行优先
"""

import math
import re
from fractions import Fraction
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd
from loguru import logger

from ..common.config import CLI_CONFIG
from ..common.errors import StorageError, ValidationError
from ..Spectral import SampledSignal, UniformGrid
from ..Transform import ScaleGrid, Scalogram

PathLike = Union[str, Path]

SCALOGRAM_MAGIC = b"CWTS"
SCALOGRAM_VERSION = 1
SCALOGRAM_HEADER = np.dtype([
    ("magic", "S4"),
    ("version", "<u4"),
    ("n_scales", "<u8"),
    ("n_translations", "<u8"),
    ("x0", "<f8"),
    ("dx", "<f8"),
    ("base_b", "<f8"),
])

SPACING_RTOL = 1e-9

_GEOM_PATTERN = re.compile(
    r"^geom:b=(?P<base>[^,]+),jmin=(?P<jmin>[+-]?\d+),jmax=(?P<jmax>[+-]?\d+)$"
)
_EXPONENT_PATTERN = re.compile(r"^(?P<radix>[0-9.eE+-]+)\^(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?$")


def _float_format() -> str:
    return f"%.{CLI_CONFIG['significant_digits']}g"


# --------------------------------------------------
# 信号 CSV
# --------------------------------------------------
def _read_frame(path: PathLike) -> pd.DataFrame:
    try:
        return pd.read_csv(path, float_precision="round_trip")
    except FileNotFoundError as e:
        raise StorageError(f"文件不存在: {path}") from e
    except OSError as e:
        raise StorageError(f"读取文件失败: {path}: {e}") from e
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise ValidationError(f"CSV 解析失败: {path}: {e}") from e


def _numeric_column(frame: pd.DataFrame, name: str, path: PathLike) -> np.ndarray:
    try:
        values = pd.to_numeric(frame[name], errors="raise").to_numpy(dtype=float)
    except (ValueError, TypeError) as e:
        raise ValidationError(f"{path} 的列 {name} 含有非数值内容") from e
    if not np.all(np.isfinite(values)):
        raise ValidationError(f"{path} 的列 {name} 含有 NaN 或 Inf")
    return values


def _uniform_grid(x: np.ndarray, path: PathLike) -> UniformGrid:
    if len(x) < 2:
        raise ValidationError(f"{path} 至少需要 2 行数据，实际 {len(x)}")
    dx = (x[-1] - x[0]) / (len(x) - 1)
    if not dx > 0:
        raise ValidationError(f"{path} 的 x 列必须严格递增")
    deviation = float(np.max(np.abs(np.diff(x) - dx)))
    if deviation > SPACING_RTOL * dx:
        raise ValidationError(
            f"{path} 的采样间隔不均匀: 最大偏差 {deviation:.3e}，dx={dx:.6g}",
            details={"max_deviation": deviation, "dx": dx},
        )
    return UniformGrid(float(x[0]), float(dx), len(x))


def read_signal_csv(path: PathLike) -> SampledSignal:
    """
    读取表头为 x,value（实值）或 x,re,im（复值）的信号 CSV

    Raises:
        StorageError: 文件不可读
        ValidationError: 表头不符、解析失败、少于 2 行或间隔不均匀
    """
    frame = _read_frame(path)
    columns = [str(c).strip() for c in frame.columns]
    frame.columns = columns
    if columns == ["x", "value"]:
        values = _numeric_column(frame, "value", path)
    elif columns == ["x", "re", "im"]:
        values = _numeric_column(frame, "re", path) + 1j * _numeric_column(frame, "im", path)
    else:
        raise ValidationError(f"{path} 的表头必须是 x,value 或 x,re,im，实际 {','.join(columns)}")
    grid = _uniform_grid(_numeric_column(frame, "x", path), path)
    logger.debug(f"读取信号 {path}: n={grid.n}, x0={grid.x0:.6g}, dx={grid.dx:.6g}")
    return SampledSignal(grid, values)


def _write_frame(frame: pd.DataFrame, path: PathLike) -> None:
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format=_float_format(), lineterminator="\n")
    except OSError as e:
        raise StorageError(f"写入文件失败: {path}: {e}") from e


def write_signal_csv(signal: SampledSignal, path: PathLike) -> None:
    """按 x,value（实值）或 x,re,im（复值）写出，浮点保留 17 位有效数字"""
    if signal.is_complex:
        frame = pd.DataFrame({"x": signal.points, "re": signal.values.real, "im": signal.values.imag})
    else:
        frame = pd.DataFrame({"x": signal.points, "value": signal.values})
    _write_frame(frame, path)


def write_spectrum_csv(omega: np.ndarray, values: np.ndarray, path: PathLike) -> None:
    """频谱采样 omega,re,im"""
    values = np.asarray(values, dtype=np.complex128)
    _write_frame(pd.DataFrame({"omega": np.asarray(omega, dtype=float), "re": values.real, "im": values.imag}), path)


# --------------------------------------------------
# 小波系数矩阵
# --------------------------------------------------
def _scalogram_bytes(W: Scalogram) -> bytes:
    header = np.zeros(1, dtype=SCALOGRAM_HEADER)
    header["magic"] = SCALOGRAM_MAGIC
    header["version"] = SCALOGRAM_VERSION
    header["n_scales"] = W.shape[0]
    header["n_translations"] = W.shape[1]
    header["x0"] = W.translations.x0
    header["dx"] = W.translations.dx
    header["base_b"] = W.scales.base if W.scales.is_geometric else 0.0
    scales = np.asarray(W.scales.scales, dtype="<f8")
    coeffs = np.ascontiguousarray(W.coeffs, dtype="<c16")
    return header.tobytes() + scales.tobytes() + coeffs.tobytes()


def _scalogram_csv(W: Scalogram) -> pd.DataFrame:
    columns = {"t": W.translations.points}
    digits = CLI_CONFIG["significant_digits"]
    for i, s in enumerate(W.scales.scales):
        label = f"{s:.{digits}g}"
        columns[f"re:{label}"] = W.coeffs[i].real
        columns[f"im:{label}"] = W.coeffs[i].imag
    return pd.DataFrame(columns)


def write_scalogram(W: Scalogram, path: PathLike, fmt: str = "binary") -> None:
    """
    写出小波系数矩阵

    Args:
        W: 系数矩阵
        path: 目标路径
        fmt: binary（CWTS 布局）或 csv（首行为尺度表头，每行一个平移）

    Raises:
        ValidationError: 未知格式
        StorageError: 写入失败
    """
    if fmt == "csv":
        _write_frame(_scalogram_csv(W), path)
    elif fmt == "binary":
        try:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            Path(path).write_bytes(_scalogram_bytes(W))
        except OSError as e:
            raise StorageError(f"写入文件失败: {path}: {e}") from e
    else:
        raise ValidationError(f"未知的系数矩阵格式: {fmt}")
    logger.info(f"系数矩阵已写出: {path} ({fmt}, {W.shape[0]}×{W.shape[1]})")


def _scale_grid_from_values(scales: np.ndarray, base_b: float) -> ScaleGrid:
    if base_b > 0 and len(scales) > 0:
        j_min = int(round(math.log(scales[0]) / math.log(base_b)))
        grid = ScaleGrid.geometric(base_b, j_min, j_min + len(scales) - 1)
        if np.allclose(grid.scales, scales, rtol=1e-12, atol=0.0):
            return grid
    return ScaleGrid.explicit_scales(tuple(scales))


def _read_scalogram_binary(path: PathLike) -> Scalogram:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise StorageError(f"读取文件失败: {path}: {e}") from e
    if len(raw) < SCALOGRAM_HEADER.itemsize:
        raise ValidationError(f"{path} 长度不足以容纳文件头")
    header = np.frombuffer(raw, dtype=SCALOGRAM_HEADER, count=1)[0]
    if bytes(header["magic"]) != SCALOGRAM_MAGIC or int(header["version"]) != SCALOGRAM_VERSION:
        raise ValidationError(f"{path} 不是版本 {SCALOGRAM_VERSION} 的 CWTS 文件")
    n_scales, n_translations = int(header["n_scales"]), int(header["n_translations"])
    expected = SCALOGRAM_HEADER.itemsize + 8 * n_scales + 16 * n_scales * n_translations
    if len(raw) != expected:
        raise ValidationError(f"{path} 大小 {len(raw)} 与文件头声明的 {expected} 不一致")
    offset = SCALOGRAM_HEADER.itemsize
    scales = np.frombuffer(raw, dtype="<f8", count=n_scales, offset=offset)
    coeffs = np.frombuffer(raw, dtype="<c16", count=n_scales * n_translations, offset=offset + 8 * n_scales)
    grid = UniformGrid(float(header["x0"]), float(header["dx"]), n_translations)
    return Scalogram(_scale_grid_from_values(scales, float(header["base_b"])), grid,
                     coeffs.reshape(n_scales, n_translations))


def _read_scalogram_csv(path: PathLike) -> Scalogram:
    frame = _read_frame(path)
    columns = list(frame.columns)
    if not columns or columns[0] != "t" or len(columns) % 2 != 1:
        raise ValidationError(f"{path} 不是系数矩阵 CSV（首列应为 t，其后为 re/im 成对列）")
    real_columns, imag_columns = columns[1::2], columns[2::2]
    try:
        scales = np.array([float(name.split(":", 1)[1]) for name in real_columns])
    except (IndexError, ValueError) as e:
        raise ValidationError(f"{path} 的尺度表头无法解析") from e
    coeffs = np.array([
        _numeric_column(frame, re_name, path) + 1j * _numeric_column(frame, im_name, path)
        for re_name, im_name in zip(real_columns, imag_columns)
    ]).reshape(len(scales), len(frame))
    grid = _uniform_grid(_numeric_column(frame, "t", path), path)
    return Scalogram(ScaleGrid.explicit_scales(tuple(scales)), grid, coeffs)


def read_scalogram(path: PathLike, fmt: str = "binary") -> Scalogram:
    """
    读回 write_scalogram 的输出；CSV 不保存几何底，读回为显式尺度网格
    """
    if fmt == "binary":
        return _read_scalogram_binary(path)
    if fmt == "csv":
        return _read_scalogram_csv(path)
    raise ValidationError(f"未知的系数矩阵格式: {fmt}")


# --------------------------------------------------
# 尺度网格字符串
# --------------------------------------------------
def parse_scale_grid(text: str) -> ScaleGrid:
    """
    解析尺度网格

    支持：
        geom:b=<浮点数或 radix^p/q>,jmin=<整数>,jmax=<整数>
        list:<s1>,<s2>,...

    Raises:
        ValidationError: 语法错误或参数非法
    """
    text = text.strip().replace(" ", "")
    if text.startswith("list:"):
        try:
            return ScaleGrid.explicit_scales(tuple(float(v) for v in text[5:].split(",") if v))
        except ValueError as e:
            raise ValidationError(f"无法解析显式尺度列表: {text}") from e

    match = _GEOM_PATTERN.match(text)
    if match is None:
        raise ValidationError(f"无法解析尺度网格: {text}（应为 geom:b=...,jmin=...,jmax=... 或 list:...）")
    j_min, j_max = int(match["jmin"]), int(match["jmax"])
    base = match["base"]
    exponent = _EXPONENT_PATTERN.match(base)
    try:
        if exponent is not None:
            fraction = Fraction(int(exponent["num"]), int(exponent["den"] or 1))
            return ScaleGrid.from_exponent(float(exponent["radix"]), fraction, j_min, j_max)
        return ScaleGrid.geometric(float(base), j_min, j_max)
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"无法解析几何底: {base}") from e
