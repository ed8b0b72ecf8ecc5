"""Exact orthonormal dilations of MRA Parseval wavelet sets.

From a candidate wavelet set the package constructs the scaling set and QMF
filter, runs the associated dyadic symbolic dynamics to find chosen paths and
cycles, and emits the dilated orthonormal super-wavelet as exact interval
sets, verifying every tiling and orthogonality condition with rational
arithmetic.
"""

from .dynamics import (
    Cycle,
    NotSubordinated,
    PartitionGraph,
    PiecewisePath,
    Unpartitionable,
    chosen_digit_pieces,
    chosen_paths,
    cycle_subrep_check,
    density_check,
    discover_partition,
    graph_cycles,
    is_qmf,
    verify_partition,
)
from .encoding import (
    ComponentFunction,
    SymbolicSet,
    UnresolvedPath,
    build_F_tilde,
    build_P_tilde,
    d_C,
    d_C_inv,
    d_Z,
    d_Z_inv,
    decode_components,
    r_tilde,
    r_tilde_inv,
    shift_identity_check,
    translation_tiling,
    verify_orthonormal_dilation,
)
from .filters import (
    CycleSeeded,
    ExplicitSet,
    FilterSet,
    InvalidCompletion,
    PaperDefault,
    aperiodic_filter,
    build_aperiodic_filter_prefix,
    build_cycle_filter,
    build_filter,
)
from .gram import (
    GramMatrix,
    complement_gram,
    gram_report,
    invariance_check,
    parseval_partial_sum,
    wavelet_inner_product,
)
from .intervals import IntervalParseError, IntervalSet, rat, rat_str
from .pipeline import DilationResult, dilate_pipeline, split_budget
from .wavelets import (
    SHANNON,
    InvalidWaveletSet,
    NonClosingScalingSet,
    ScalingData,
    WaveletSetReport,
    scaling_set,
    semiorthogonal_complement,
    verify_wavelet_set,
)
from .words import EPWord

__all__ = [
    "Cycle",
    "ComponentFunction",
    "CycleSeeded",
    "DilationResult",
    "EPWord",
    "ExplicitSet",
    "FilterSet",
    "GramMatrix",
    "IntervalParseError",
    "IntervalSet",
    "InvalidCompletion",
    "InvalidWaveletSet",
    "NonClosingScalingSet",
    "NotSubordinated",
    "PaperDefault",
    "PartitionGraph",
    "PiecewisePath",
    "ScalingData",
    "SHANNON",
    "SymbolicSet",
    "Unpartitionable",
    "UnresolvedPath",
    "WaveletSetReport",
    "aperiodic_filter",
    "build_aperiodic_filter_prefix",
    "build_cycle_filter",
    "build_filter",
    "build_F_tilde",
    "build_P_tilde",
    "chosen_digit_pieces",
    "chosen_paths",
    "complement_gram",
    "cycle_subrep_check",
    "d_C",
    "d_C_inv",
    "d_Z",
    "d_Z_inv",
    "decode_components",
    "density_check",
    "dilate_pipeline",
    "discover_partition",
    "gram_report",
    "graph_cycles",
    "invariance_check",
    "is_qmf",
    "parseval_partial_sum",
    "r_tilde",
    "r_tilde_inv",
    "rat",
    "rat_str",
    "scaling_set",
    "semiorthogonal_complement",
    "shift_identity_check",
    "split_budget",
    "translation_tiling",
    "verify_orthonormal_dilation",
    "verify_partition",
    "verify_wavelet_set",
    "wavelet_inner_product",
]
