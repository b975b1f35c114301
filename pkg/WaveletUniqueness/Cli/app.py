"""
Typer 命令行入口

    wavelet-uniqueness cwt --input signal.csv --output W.bin --wavelet mexican --scales "geom:b=2^1/8,jmin=-32,jmax=32"
    wavelet-uniqueness admissibility --wavelet gaussian
    wavelet-uniqueness dual --wavelet psi.csv --b-min 4 --b-max 8
    wavelet-uniqueness reconstruct --input g.csv --mode temporal
    wavelet-uniqueness moments --wavelet mexican --max-order 2
    wavelet-uniqueness uniqueness --input f.csv --wavelet haar
    wavelet-uniqueness wavelets list
"""

from pathlib import Path
from typing import Any, Optional

import typer

from ..common.config import CLI_CONFIG
from ..common.errors import ValidationError
from ..DualFrame import ReconstructionMode
from .commands import Subcommand, build_config, run_command

app = typer.Typer(add_completion=False, no_args_is_help=True, help="连续小波变换唯一性工具包")
wavelets_app = typer.Typer(no_args_is_help=True, help="小波动物园")
app.add_typer(wavelets_app, name="wavelets")

WaveletOption = typer.Option("mexican_hat", "--wavelet", "-w", help="小波种类名，或采样小波的 CSV 路径")
OrderOption = typer.Option(None, "--order", help="gaussian_derivative 的阶数")
ReportOption = typer.Option(None, "--report", help="JSON 报告路径（缺省输出到 stdout）")
TauOption = typer.Option(None, "--tau", help="绝对阈值 τ")
BMinOption = typer.Option(None, "--b-min", help="覆盖比值下限")
BMaxOption = typer.Option(None, "--b-max", help="覆盖比值上限（缺省 2）")
MarginOption = typer.Option(None, "--margin", help="凸起的安全边 ε")


def _execute(subcommand: Subcommand, **options: Any) -> None:
    try:
        config = build_config(subcommand=subcommand, **{k: v for k, v in options.items() if v is not None})
    except ValidationError as e:
        typer.echo(f"{e.error_name}: {e}", err=True)
        raise typer.Exit(code=e.exit_code)
    raise typer.Exit(code=run_command(config))


@app.command("cwt")
def cwt_command(
    input_path: Path = typer.Option(..., "--input", "-i", help="信号 CSV（x,value）"),
    output_path: Path = typer.Option(..., "--output", "-o", help="系数矩阵输出路径"),
    wavelet: str = WaveletOption,
    order: Optional[int] = OrderOption,
    scales: str = typer.Option(CLI_CONFIG["default_scales"], "--scales", help="geom:b=...,jmin=...,jmax=... 或 list:..."),
    output_format: str = typer.Option("binary", "--format", help="binary 或 csv"),
    max_workers: Optional[int] = typer.Option(None, "--workers", help="按尺度并行的线程数"),
    report: Optional[Path] = ReportOption,
):
    """计算尺度网格上的连续小波变换"""
    _execute(Subcommand.CWT, input_path=input_path, output_path=output_path, wavelet=wavelet, order=order,
             scales=scales, output_format=output_format, max_workers=max_workers, report_path=report)


@app.command("admissibility")
def admissibility_command(
    wavelet: str = WaveletOption,
    order: Optional[int] = OrderOption,
    tau: Optional[float] = TauOption,
    report: Optional[Path] = ReportOption,
):
    """两侧的 Tauberian 检查与 Calderón 常数"""
    _execute(Subcommand.ADMISSIBILITY, wavelet=wavelet, order=order, tau=tau, report_path=report)


@app.command("dual")
def dual_command(
    wavelet: str = WaveletOption,
    order: Optional[int] = OrderOption,
    tau: Optional[float] = TauOption,
    b_min: Optional[float] = BMinOption,
    b_max: Optional[float] = BMaxOption,
    margin: Optional[float] = MarginOption,
    band_low: Optional[float] = typer.Option(None, "--band-low", help="单位分解检查频带下限"),
    band_high: Optional[float] = typer.Option(None, "--band-high", help="单位分解检查频带上限"),
    probes: Optional[int] = typer.Option(None, "--probes", help="每侧探测点数"),
    output_path: Optional[Path] = typer.Option(None, "--output", "-o", help="μ̂ 采样 CSV 路径"),
    report: Optional[Path] = ReportOption,
):
    """构造对偶小波并检查单位分解"""
    _execute(Subcommand.DUAL, wavelet=wavelet, order=order, tau=tau, b_min=b_min, b_max=b_max, margin=margin,
             band_low=band_low, band_high=band_high, probes=probes, output_path=output_path, report_path=report)


@app.command("reconstruct")
def reconstruct_command(
    input_path: Path = typer.Option(..., "--input", "-i", help="信号 CSV"),
    output_path: Optional[Path] = typer.Option(None, "--output", "-o", help="重构信号 CSV 路径"),
    wavelet: str = WaveletOption,
    order: Optional[int] = OrderOption,
    mode: ReconstructionMode = typer.Option(ReconstructionMode.SPECTRAL, "--mode", help="spectral 或 temporal"),
    j_min: Optional[int] = typer.Option(None, "--j-min"),
    j_max: Optional[int] = typer.Option(None, "--j-max"),
    tau: Optional[float] = TauOption,
    b_min: Optional[float] = BMinOption,
    b_max: Optional[float] = BMaxOption,
    margin: Optional[float] = MarginOption,
    report: Optional[Path] = ReportOption,
):
    """用对偶小波的离散重构公式还原信号"""
    _execute(Subcommand.RECONSTRUCT, input_path=input_path, output_path=output_path, wavelet=wavelet,
             order=order, mode=mode, j_min=j_min, j_max=j_max, tau=tau, b_min=b_min, b_max=b_max, margin=margin,
             report_path=report)


@app.command("moments")
def moments_command(
    wavelet: str = WaveletOption,
    order: Optional[int] = OrderOption,
    max_order: int = typer.Option(4, "--max-order", help="最高矩阶数 L"),
    report: Optional[Path] = ReportOption,
):
    """小波矩 M_0..M_L 及误差界"""
    _execute(Subcommand.MOMENTS, wavelet=wavelet, order=order, max_order=max_order, report_path=report)


@app.command("uniqueness")
def uniqueness_command(
    input_path: Path = typer.Option(..., "--input", "-i", help="信号 CSV"),
    wavelet: str = WaveletOption,
    order: Optional[int] = OrderOption,
    report: Optional[Path] = ReportOption,
):
    """两侧方向能量乘积构成的唯一性证书"""
    _execute(Subcommand.UNIQUENESS, input_path=input_path, wavelet=wavelet, order=order, report_path=report)


@wavelets_app.command("list")
def wavelets_list_command(report: Optional[Path] = ReportOption):
    """列出可用小波"""
    _execute(Subcommand.WAVELETS, report_path=report)
