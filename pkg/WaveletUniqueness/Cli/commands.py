"""
命令配置与执行

每个子命令把输入交给对应组件，再把结果写成 JSON 报告 / CSV / 二进制文件。
异常在 run_command 一处映射到退出码，stderr 输出 "<错误名>: <消息>"。
"""

from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np
import typer
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError, model_validator

from ..Admissibility import DIVERGENT, admissibility_report, uniqueness_certificate
from ..common.config import CLI_CONFIG, get_config
from ..common.errors import StorageError, ValidationError, WaveletUniquenessError
from ..common.paths import get_path
from ..common.utils import relative_l2_error, safe_json_dump, to_json_text
from ..DualFrame import ReconstructionMode, auto_j_range, build_dual_for, partition_check, reconstruct, signal_band
from ..Moments import moment_vector
from ..Spectral import forward_ft
from ..Transform import cwt
from ..Wavelets import WaveletSpec, conjugate, list_wavelets, make_wavelet
from .io import parse_scale_grid, read_signal_csv, write_scalogram, write_signal_csv, write_spectrum_csv


class Subcommand(str, Enum):
    CWT = "cwt"
    ADMISSIBILITY = "admissibility"
    DUAL = "dual"
    RECONSTRUCT = "reconstruct"
    MOMENTS = "moments"
    UNIQUENESS = "uniqueness"
    WAVELETS = "wavelets"


NEEDS_SIGNAL = {Subcommand.CWT, Subcommand.RECONSTRUCT, Subcommand.UNIQUENESS}

DEFAULT_OUTPUTS = {
    Subcommand.DUAL: "dual_spectrum.csv",
    Subcommand.RECONSTRUCT: "reconstructed.csv",
}


class CommandConfig(BaseModel):
    """
    一次命令调用的全部参数；未知字段直接拒绝
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    subcommand: Subcommand
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    report_path: Optional[Path] = None
    wavelet: str = "mexican_hat"
    order: Optional[int] = Field(default=None, ge=1)
    scales: str = CLI_CONFIG["default_scales"]
    output_format: str = Field(default="binary", pattern="^(binary|csv)$")
    tau: Optional[float] = Field(default=None, gt=0)
    b_min: Optional[float] = Field(default=None, gt=1)
    b_max: Optional[float] = Field(default=None, gt=1)
    margin: Optional[float] = Field(default=None, gt=0, lt=0.5)
    mode: ReconstructionMode = ReconstructionMode.SPECTRAL
    j_min: Optional[int] = None
    j_max: Optional[int] = None
    max_order: int = Field(default=4, ge=0)
    band_low: float = Field(default=CLI_CONFIG["partition_band"][0], gt=0)
    band_high: float = Field(default=CLI_CONFIG["partition_band"][1], gt=0)
    probes: int = Field(default=CLI_CONFIG["partition_probes"], ge=2)
    max_workers: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_combinations(self) -> "CommandConfig":
        if self.subcommand in NEEDS_SIGNAL and self.input_path is None:
            raise ValueError(f"子命令 {self.subcommand.value} 需要 --input")
        if self.subcommand == Subcommand.CWT and self.output_path is None:
            raise ValueError("子命令 cwt 需要 --output")
        if (self.j_min is None) != (self.j_max is None):
            raise ValueError("--j-min 与 --j-max 必须同时给出")
        if self.j_min is not None and self.j_min > self.j_max:
            raise ValueError(f"j_min={self.j_min} 大于 j_max={self.j_max}")
        if self.b_min is not None and self.b_max is not None and self.b_max < self.b_min:
            raise ValueError(f"b_max={self.b_max} 小于 b_min={self.b_min}")
        if not self.band_low < self.band_high:
            raise ValueError(f"频带下限 {self.band_low} 必须小于上限 {self.band_high}")
        return self

    @property
    def j_range(self) -> Optional[Tuple[int, int]]:
        return None if self.j_min is None else (self.j_min, self.j_max)


def build_config(**options: Any) -> CommandConfig:
    """
    构造 CommandConfig，pydantic 的校验错误统一转换为 ValidationError
    """
    try:
        return CommandConfig(**options)
    except PydanticValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in error['loc']) or 'config'}: {error['msg']}" for error in e.errors()
        )
        raise ValidationError(f"参数不合法: {problems}") from e


def resolve_wavelet(name: str, order: Optional[int] = None) -> WaveletSpec:
    """
    种类名或采样小波 CSV 路径 → WaveletSpec
    """
    candidate = Path(name)
    if candidate.suffix.lower() == ".csv":
        return make_wavelet("sampled", {"signal": read_signal_csv(candidate)})
    params = {"order": order} if order is not None else {}
    return make_wavelet(name, params)


# --------------------------------------------------
# 各子命令
# --------------------------------------------------
def _calderon_json(value) -> Any:
    return "divergent" if value == DIVERGENT else value


def _run_cwt(config: CommandConfig) -> Dict[str, Any]:
    signal = read_signal_csv(config.input_path)
    psi = resolve_wavelet(config.wavelet, config.order)
    W = cwt(signal, psi, parse_scale_grid(config.scales), config.max_workers)
    write_scalogram(W, config.output_path, config.output_format)
    return {
        "wavelet": psi.name,
        "n_scales": W.shape[0],
        "n_translations": W.shape[1],
        "format": config.output_format,
        "underflow_scales": [float(s) for s, flagged in zip(W.scales.scales, W.underflow) if flagged],
    }


def _run_admissibility(config: CommandConfig) -> Dict[str, Any]:
    report = admissibility_report(resolve_wavelet(config.wavelet, config.order), config.tau)
    sides = []
    for side_report in (report.positive, report.negative):
        entry = side_report.to_dict()
        entry["calderon"] = _calderon_json(entry["calderon"])
        sides.append(entry)
    return {"wavelet": report.wavelet, "tau": report.tau, "sides": sides}


def _run_dual(config: CommandConfig) -> Dict[str, Any]:
    psi = resolve_wavelet(config.wavelet, config.order)
    mu = build_dual_for(psi, config.tau, config.b_min, config.margin, b_max=config.b_max)
    band = (config.band_low, config.band_high)
    deviation = partition_check(psi, mu, band, config.probes)

    probes = np.geomspace(band[0], band[1], config.probes)
    omega = np.concatenate([-probes[::-1], probes])
    output = config.output_path or get_path("output_dir") / DEFAULT_OUTPUTS[Subcommand.DUAL]
    write_spectrum_csv(omega, mu.spectrum_eval(omega), output)
    return {"base_b": mu.base_b, "max_deviation": deviation, "probes": config.probes}


def _run_reconstruct(config: CommandConfig) -> Dict[str, Any]:
    g = read_signal_csv(config.input_path)
    psi = resolve_wavelet(config.wavelet, config.order)
    mu = build_dual_for(conjugate(psi), config.tau, config.b_min, config.margin, b_max=config.b_max)

    j_range = config.j_range
    if j_range is None:
        band = signal_band(forward_ft(g))
        j_range = None if band is None else auto_j_range(mu, band)
    rebuilt = reconstruct(g, psi, mu, j_range, config.mode)

    output = config.output_path or get_path("output_dir") / DEFAULT_OUTPUTS[Subcommand.RECONSTRUCT]
    write_signal_csv(rebuilt, output)
    return {
        "rel_l2_error": relative_l2_error(rebuilt.values, g.values),
        "j_min": None if j_range is None else j_range[0],
        "j_max": None if j_range is None else j_range[1],
        "mode": config.mode.value,
    }


def _run_moments(config: CommandConfig) -> Any:
    return moment_vector(resolve_wavelet(config.wavelet, config.order), config.max_order).to_dict()


def _run_uniqueness(config: CommandConfig) -> Dict[str, Any]:
    signal = read_signal_csv(config.input_path)
    certificate = uniqueness_certificate(signal, resolve_wavelet(config.wavelet, config.order))
    return {
        "sides": [certificate.positive.to_dict(), certificate.negative.to_dict()],
        "products_vanish": certificate.products_vanish(),
    }


def _run_wavelets(config: CommandConfig) -> Any:
    return list_wavelets()


HANDLERS = {
    Subcommand.CWT: _run_cwt,
    Subcommand.ADMISSIBILITY: _run_admissibility,
    Subcommand.DUAL: _run_dual,
    Subcommand.RECONSTRUCT: _run_reconstruct,
    Subcommand.MOMENTS: _run_moments,
    Subcommand.UNIQUENESS: _run_uniqueness,
    Subcommand.WAVELETS: _run_wavelets,
}


def _emit_report(report: Any, config: CommandConfig) -> None:
    if config.report_path is None:
        typer.echo(to_json_text(report))
        return
    if not safe_json_dump(report, config.report_path):
        raise StorageError(f"写入报告失败: {config.report_path}")


def run_command(config: CommandConfig) -> int:
    """
    执行一个子命令

    Returns:
        退出码：0 成功，2 参数/解析错误，3 构造失败（Tauberian / 分母退化 / 频带覆盖），4 读写错误
    """
    codes = get_config("cli")["exit_codes"]
    try:
        report = HANDLERS[config.subcommand](config)
        _emit_report(report, config)
    except WaveletUniquenessError as e:
        logger.error(f"[{config.subcommand.value}] {e.error_name}: {e}")
        typer.echo(f"{e.error_name}: {e}", err=True)
        return e.exit_code
    except OSError as e:
        logger.error(f"[{config.subcommand.value}] StorageError: {e}")
        typer.echo(f"StorageError: {e}", err=True)
        return codes["io"]
    logger.info(f"子命令 {config.subcommand.value} 完成")
    return codes["success"]
