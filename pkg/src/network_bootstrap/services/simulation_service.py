"""Orchestration for simulated datasets and coverage studies."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Mapping

from ..api.schemas import SimulationSummary
from ..config import Settings
from ..datafiles import load_run_config, write_data_matrix, write_edge_list
from ..errors import ConfigurationError
from ..simulation.coverage import run_coverage, simulate
from ..simulation.processes import DGPSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverageOptions:
    """Top-level run parameters of a coverage config; CLI flags take precedence."""

    scheme: str = "dwb"
    radius: float = 1.0
    reps: int = 399
    alpha: float = 0.1
    mc_reps: int = 200

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any], overrides: Mapping[str, Any]) -> "CoverageOptions":
        merged = {key: raw[key] for key in ("scheme", "radius", "reps", "alpha", "mc_reps") if key in raw}
        merged.update({key: value for key, value in overrides.items() if value is not None})
        try:
            options = cls(
                scheme=str(merged.get("scheme", cls.scheme)),
                radius=float(merged.get("radius", cls.radius)),
                reps=int(merged.get("reps", cls.reps)),
                alpha=float(merged.get("alpha", cls.alpha)),
                mc_reps=int(merged.get("mc_reps", cls.mc_reps)),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"Invalid coverage config: {exc}") from exc
        return options


def _with_seed(raw: Mapping[str, Any], seed: int | None) -> Dict[str, Any]:
    merged = dict(raw)
    if seed is not None:
        merged["seed"] = seed
    return merged


class SimulationService:
    """Simulates datasets from a config file and runs coverage studies."""

    def __init__(self, settings: Settings) -> None:
        self._settings = settings

    def simulate(
        self,
        config_path: Path,
        seed: int | None = None,
        data_path: Path | None = None,
        edges_path: Path | None = None,
    ) -> SimulationSummary:
        spec = DGPSpec.from_mapping(_with_seed(load_run_config(config_path), seed))
        dataset = simulate(spec)
        if data_path is not None:
            write_data_matrix(dataset.data, data_path)
        if edges_path is not None:
            write_edge_list(dataset.network, edges_path)
        logger.info("Simulated %s on %s(n=%d)", spec.process, spec.network_kind, spec.n)
        return SimulationSummary(
            network_kind=spec.network_kind,
            process=spec.process,
            n=spec.n,
            edge_count=dataset.network.edge_count,
            seed=spec.seed,
            true_mean=dataset.model.true_mean,
            true_variance=dataset.model.true_variance,
            sample_mean=float(dataset.data.mean()),
            gamma=dataset.model.gamma,
            data_path=None if data_path is None else str(data_path),
            edges_path=None if edges_path is None else str(edges_path),
        )

    def coverage(
        self,
        config_path: Path,
        seed: int | None = None,
        overrides: Mapping[str, Any] | None = None,
        threads: int | None = None,
        records_path: Path | None = None,
    ) -> Dict[str, object]:
        raw = _with_seed(load_run_config(config_path), seed)
        spec = DGPSpec.from_mapping(raw)
        options = CoverageOptions.from_mapping(raw, overrides or {})
        report = run_coverage(
            spec,
            scheme=options.scheme,
            s_n=options.radius,
            B=options.reps,
            alpha=options.alpha,
            mc_reps=options.mc_reps,
            threads=threads or self._settings.runtime.threads,
            keep_records=records_path is not None,
        )
        if records_path is not None:
            lines = [json.dumps(record, sort_keys=True) for record in report.records]
            Path(records_path).write_text("\n".join(lines) + "\n", encoding="utf-8")
            logger.info("Wrote %d per-rep records to %s", len(lines), records_path)
        payload = report.to_dict()
        payload.update({"network_kind": spec.network_kind, "process": spec.process, "n": spec.n, "seed": spec.seed})
        return payload


__all__ = ["CoverageOptions", "SimulationService"]
