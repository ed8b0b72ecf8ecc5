"""End-to-end orchestration: wavelet set -> filter -> dynamics -> super-wavelet."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Optional

from .dynamics import (
    Cycle,
    DEFAULT_MAX_SPLITS,
    PartitionGraph,
    PiecewisePath,
    chosen_paths,
    cycle_subrep_check,
    density_check,
    discover_partition,
    graph_cycles,
)
from .encoding import (
    ComponentFunction,
    SymbolicSet,
    build_F_tilde,
    build_P_tilde,
    decode_components,
    translation_tiling,
    verify_orthonormal_dilation,
)
from .filters import DStrategy, FilterSet, PaperDefault, build_filter
from .intervals import IntervalSet
from .wavelets import (
    InvalidWaveletSet,
    ScalingData,
    WaveletSetReport,
    scaling_set,
    verify_wavelet_set,
)

ENV_MAX_SPLITS = "PARSEVAL_DILATE_MAX_SPLITS"


def split_budget(explicit: Optional[int] = None) -> int:
    """Partition-discovery budget: explicit arg, else env override, else 2^12."""
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_MAX_SPLITS)
    if env:
        return int(env)
    return DEFAULT_MAX_SPLITS


@dataclass
class DilationResult:
    report: WaveletSetReport
    scaling: ScalingData
    filter_set: FilterSet
    graph: PartitionGraph
    cycles: List[Cycle]
    paths: PiecewisePath
    F_tilde: SymbolicSet
    P_tilde: SymbolicSet
    phi: ComponentFunction
    psi: ComponentFunction
    verification: dict


def dilate_pipeline(
    P: IntervalSet,
    strategy: DStrategy = PaperDefault(),
    j_window: int = 10,
    max_splits: Optional[int] = None,
) -> DilationResult:
    """Construct and verify the orthonormal dilation of an MRA Parseval wavelet set."""
    report = verify_wavelet_set(P)
    if not report.is_parseval:
        raise InvalidWaveletSet("input is not a Parseval wavelet set")
    scaling = scaling_set(P)
    if not scaling.F_is_translation_simple:
        raise InvalidWaveletSet(
            "scaling set is not translation simple; the dilation needs the MRA property"
        )
    filter_set = build_filter(scaling.F, strategy)
    graph = discover_partition(filter_set.M, split_budget(max_splits))
    cycles = graph_cycles(graph)
    paths = chosen_paths(filter_set.M, graph)

    F_tilde = build_F_tilde(paths)
    P_tilde = build_P_tilde(F_tilde)
    proper = [c for c in cycles if c.word not in ("0", "1")]
    phi = decode_components(F_tilde, proper)
    psi = decode_components(P_tilde, proper)

    verification = verify_orthonormal_dilation(psi, P=P, j_window=j_window)
    verification["phi_translation_tiling"] = translation_tiling(phi)
    verification["density"] = density_check(filter_set.M, scaling.F, paths)
    verification["cycle_subrepresentations"] = {
        c.word: cycle_subrep_check(filter_set.M, c) for c in cycles
    }
    return DilationResult(
        report=report,
        scaling=scaling,
        filter_set=filter_set,
        graph=graph,
        cycles=cycles,
        paths=paths,
        F_tilde=F_tilde,
        P_tilde=P_tilde,
        phi=phi,
        psi=psi,
        verification=verification,
    )
