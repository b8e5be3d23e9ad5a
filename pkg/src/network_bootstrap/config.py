"""Configuration management for the network bootstrap toolkit."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import List


def _get_env_float_list(name: str, default: List[float]) -> List[float]:
    raw = os.getenv(name)
    if not raw:
        return default
    return [float(item.strip()) for item in raw.split(",") if item.strip()]


@dataclass(frozen=True)
class RuntimeConfig:
    threads: int = field(default_factory=lambda: int(os.getenv("NETBOOT_THREADS", "1")))
    # Replicates per work unit; fixed so results do not depend on the thread count.
    chunk_size: int = field(
        default_factory=lambda: int(os.getenv("NETBOOT_CHUNK_SIZE", "256"))
    )

    def validate(self) -> None:
        if self.threads < 1:
            raise ValueError("NETBOOT_THREADS must be >= 1")
        if self.chunk_size < 1:
            raise ValueError("NETBOOT_CHUNK_SIZE must be >= 1")


@dataclass(frozen=True)
class CovarianceConfig:
    kernel: str = field(default_factory=lambda: os.getenv("NETBOOT_HAC_KERNEL", "bartlett"))
    repair_floor_scale: float = field(
        default_factory=lambda: float(os.getenv("NETBOOT_REPAIR_FLOOR_SCALE", "1e-3"))
    )
    sqrt_clip_scale: float = field(
        default_factory=lambda: float(os.getenv("NETBOOT_SQRT_CLIP_SCALE", "1e-10"))
    )
    symmetry_tol: float = field(
        default_factory=lambda: float(os.getenv("NETBOOT_SYMMETRY_TOL", "1e-10"))
    )

    def validate(self) -> None:
        if self.kernel not in {"truncated", "bartlett", "parzen"}:
            raise ValueError("NETBOOT_HAC_KERNEL must be truncated, bartlett, or parzen.")
        if self.repair_floor_scale <= 0:
            raise ValueError("NETBOOT_REPAIR_FLOOR_SCALE must be > 0")
        if self.sqrt_clip_scale < 0:
            raise ValueError("NETBOOT_SQRT_CLIP_SCALE must be >= 0")
        if self.symmetry_tol <= 0:
            raise ValueError("NETBOOT_SYMMETRY_TOL must be > 0")


@dataclass(frozen=True)
class BootstrapConfig:
    reps: int = field(default_factory=lambda: int(os.getenv("NETBOOT_REPS", "999")))
    alphas: List[float] = field(
        default_factory=lambda: _get_env_float_list("NETBOOT_ALPHAS", [0.05, 0.1])
    )

    def validate(self) -> None:
        if self.reps < 1:
            raise ValueError("NETBOOT_REPS must be >= 1")
        if not self.alphas or any(not (0.0 < a < 1.0) for a in self.alphas):
            raise ValueError("NETBOOT_ALPHAS must be a comma-separated list in (0, 1).")


@dataclass(frozen=True)
class DiagnosticsConfig:
    gamma_tail: str = field(default_factory=lambda: os.getenv("NETBOOT_GAMMA_TAIL", "error"))
    moment_r: float = field(default_factory=lambda: float(os.getenv("NETBOOT_MOMENT_R", "4")))
    moment_p: float = field(default_factory=lambda: float(os.getenv("NETBOOT_MOMENT_P", "4")))

    def validate(self) -> None:
        if self.gamma_tail not in {"error", "zero", "hold"}:
            raise ValueError("NETBOOT_GAMMA_TAIL must be error, zero, or hold.")
        if self.moment_r <= 2 or self.moment_p <= 2:
            raise ValueError("NETBOOT_MOMENT_R and NETBOOT_MOMENT_P must be > 2")


@dataclass(frozen=True)
class Settings:
    runtime: RuntimeConfig = field(default_factory=RuntimeConfig)
    covariance: CovarianceConfig = field(default_factory=CovarianceConfig)
    bootstrap: BootstrapConfig = field(default_factory=BootstrapConfig)
    diagnostics: DiagnosticsConfig = field(default_factory=DiagnosticsConfig)

    def validate(self) -> None:
        self.runtime.validate()
        self.covariance.validate()
        self.bootstrap.validate()
        self.diagnostics.validate()


__all__ = [
    "RuntimeConfig",
    "CovarianceConfig",
    "BootstrapConfig",
    "DiagnosticsConfig",
    "Settings",
]
