"""
Unified Configuration Management Module
Contains configuration information for all toolkit components

说明：
- 所有数值默认值集中在此文件，各组件只从这里导入
- 命令行没有环境变量入口，所有参数通过命令行标志传入
"""

import os
from typing import Any, Dict

# Project root directory
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# ===============================
# 统一配置说明
# ===============================
# 1. 所有组件必须从 common/config.py 导入配置
# 2. 禁止在组件代码中硬编码容差与网格参数
# 3. 修改默认值时同步更新对应测试中的常数

# ===============================
# Spectral 配置
# ===============================
SPECTRAL_CONFIG: Dict[str, Any] = {
    "hermitian_rtol": 1e-12,        # Hermitian 对称性检查的相对容差
    "power_of_two_warning": True,   # 非 2 的幂长度时给出 DEBUG 提示
}

# ===============================
# Wavelets 配置
# ===============================
WAVELET_CONFIG: Dict[str, Any] = {
    # 缓存频谱时使用的细采样网格 (x_min, x_max, n)
    "fine_grids": {
        "smooth": {"x_min": -32.0, "x_max": 32.0, "n": 2 ** 14},
        "poisson": {"x_min": -100.0, "x_max": 100.0, "n": 2 ** 15},
        "haar": {"x_min": -32.0, "x_max": 32.0, "n": 2 ** 16},
    },
    # 闭式频谱与细采样 FFT 的文档化一致性容差（|ω| ≤ 4）
    "spectrum_tolerance": {"smooth": 1e-6, "poisson": 1e-2},
    "default_derivative_order": 1,
    # 时域有效支撑半径（包络低于 1e-12 峰值之外视为零）
    "gaussian_radius": 8.0,
    "hermite_radius": 12.0,
}

# ===============================
# Transform 配置
# ===============================
TRANSFORM_CONFIG: Dict[str, Any] = {
    "underflow_threshold": 1e-300,  # 某尺度下 |ψ̂(sω)| 全部低于该值时视为下溢
    "max_workers": 4,               # 按尺度并行计算行的线程数
    "quad_limit": 500,              # scipy quad 子区间上限
    "quad_epsabs": 1e-13,
    "quad_epsrel": 1e-12,
    "sampled_support_rtol": 1e-14,  # 采样信号有效支撑的相对阈值
}

# ===============================
# Admissibility 配置
# ===============================
ADMISSIBILITY_CONFIG: Dict[str, Any] = {
    "scan_log2_min": -20,           # 径向扫描范围 2^-20 .. 2^20
    "scan_log2_max": 20,
    "points_per_octave": 64,
    "relative_threshold": 1e-9,     # 默认 τ = 1e-9·sup|ψ̂|
    "cauchy_tolerance": 1e-8,       # 逐十倍程柯西判据
    "decades": 12,                  # Calderón 积分向 0 与 ∞ 各延伸的十倍程数
    "nodes_per_decade": 128,        # 每个十倍程的 Gauss-Legendre 节点数
}

# ===============================
# DualFrame 配置
# ===============================
DUAL_FRAME_CONFIG: Dict[str, Any] = {
    "margin": 0.05,                 # 覆盖区间两端的安全边 ε
    "b_min": 2.0 ** (1.0 / 8.0),
    "b_max": 2.0,                   # 覆盖比值上限，保证 λ 在区间端点附近不至过小
    "cover_relative_threshold": 0.1,  # 构造对偶时的默认 τ = 0.1·sup|ψ̂|
    "degeneracy_factor": 1e-12,     # δ = factor·sup|ψ̂|²
    "positivity_probes": 256,       # 每侧一个周期内的分母检查点
    "temporal_truncation": 1e-12,   # 时域卷积核截断阈值
    "coverage_tolerance": 1e-8,     # 重构乘子与 1 的偏差上限
    "significance_rtol": 1e-10,     # 频谱“显著”判定的相对阈值
}

# ===============================
# Moments 配置
# ===============================
MOMENTS_CONFIG: Dict[str, Any] = {
    "tail_tolerance": 1e-12,
    "condition_limit": 1e12,        # 矩恢复 Vandermonde 条件数告警阈值
    "quad_limit": 400,
}

# ===============================
# 日志配置
# ===============================
LOG_CONFIG: Dict[str, Any] = {
    "log_level": "INFO",
    "log_file": os.path.join(os.path.dirname(BASE_DIR), "logs", "system.log"),
    "error_log_file": os.path.join(os.path.dirname(BASE_DIR), "logs", "error.log"),
    "max_bytes": 10 * 1024 * 1024,
    "backup_count": 5,
    "console_level": "WARNING",
}

# ===============================
# CLI 配置
# ===============================
CLI_CONFIG: Dict[str, Any] = {
    "significant_digits": 17,       # CSV 浮点打印精度
    "json_digits": 15,              # JSON 报告浮点有效位
    "json_indent": 2,
    "default_scales": "geom:b=2^1/8,jmin=-32,jmax=32",
    "partition_band": (1e-3, 1e3),
    "partition_probes": 512,
    "exit_codes": {
        "success": 0,
        "validation": 2,
        "construction": 3,
        "io": 4,
    },
}


def get_config(component: str) -> Dict[str, Any]:
    """
    按组件名获取配置字典

    Args:
        component: 组件名（spectral / wavelet / transform / admissibility / dual_frame / moments / log / cli）

    Returns:
        配置字典的浅拷贝

    Raises:
        KeyError: 组件名不存在
    """
    configs = {
        "spectral": SPECTRAL_CONFIG,
        "wavelet": WAVELET_CONFIG,
        "transform": TRANSFORM_CONFIG,
        "admissibility": ADMISSIBILITY_CONFIG,
        "dual_frame": DUAL_FRAME_CONFIG,
        "moments": MOMENTS_CONFIG,
        "log": LOG_CONFIG,
        "cli": CLI_CONFIG,
    }
    if component not in configs:
        raise KeyError(f"配置组 '{component}' 不存在。可用组: {list(configs.keys())}")
    return dict(configs[component])
