"""Command-line front end for the dilation pipeline.

Every command reads interval sets in the exact text syntax
(``[-1/4,-1/8)u[1/8,1/4)``), prints JSON by default (``--human`` for tables),
and is fully deterministic: the same inputs produce byte-identical output.
Exit codes: 0 success, 1 mathematical failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .dynamics import NotSubordinated, Unpartitionable
from .encoding import UnresolvedPath
from .filters import (
    CycleSeeded,
    ExplicitSet,
    InvalidCompletion,
    PaperDefault,
    build_filter,
)
from .gram import gram_report
from .intervals import IntervalParseError, IntervalSet
from .pipeline import ENV_MAX_SPLITS, dilate_pipeline, split_budget
from .render import components_svg, write_svg
from .wavelets import (
    InvalidWaveletSet,
    NonClosingScalingSet,
    scaling_set,
    semiorthogonal_complement,
    verify_wavelet_set,
)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2

MATH_ERRORS = (
    InvalidWaveletSet,
    NonClosingScalingSet,
    InvalidCompletion,
    NotSubordinated,
    Unpartitionable,
    UnresolvedPath,
    ValueError,
)


def _add_common(sub: argparse.ArgumentParser, strategy: bool = False) -> None:
    sub.add_argument("-P", required=True, metavar="SET",
                     help="wavelet set, e.g. \"[-1/4,-1/8)u[1/8,1/4)\"")
    sub.add_argument("--j-window", type=int, default=10, metavar="N",
                     help="window for dilation checks (default 10)")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output (default)")
    group.add_argument("--human", action="store_true", help="key/value tables")
    if strategy:
        dgroup = sub.add_mutually_exclusive_group()
        dgroup.add_argument("--d-default", action="store_true",
                            help="default completion of the undecided zone")
        dgroup.add_argument("--d-set", metavar="SET",
                            help="explicit completion set D")
        dgroup.add_argument("--d-cycle", metavar="WORD",
                            help="cycle-seeded completion, e.g. 1001100")


def _strategy(args: argparse.Namespace):
    if getattr(args, "d_set", None):
        return ExplicitSet(IntervalSet.parse(args.d_set))
    if getattr(args, "d_cycle", None):
        return CycleSeeded(args.d_cycle)
    return PaperDefault()


def _emit(args: argparse.Namespace, payload: dict) -> None:
    if args.human:
        for key, value in payload.items():
            print(f"{key}: {json.dumps(value, sort_keys=False)}")
    else:
        print(json.dumps(payload, indent=2))


def cmd_verify(args) -> int:
    report = verify_wavelet_set(IntervalSet.parse(args.P), j_window=args.j_window)
    _emit(args, report.to_json())
    return EXIT_OK if report.is_parseval else EXIT_MATH


def cmd_scaling(args) -> int:
    data = scaling_set(IntervalSet.parse(args.P))
    _emit(args, data.to_json())
    return EXIT_OK


def cmd_filter(args) -> int:
    data = scaling_set(IntervalSet.parse(args.P))
    filter_set = build_filter(data.F, _strategy(args))
    _emit(args, filter_set.to_json())
    return EXIT_OK


def cmd_paths(args) -> int:
    result = dilate_pipeline(
        IntervalSet.parse(args.P), _strategy(args),
        j_window=args.j_window, max_splits=split_budget(),
    )
    _emit(args, {
        "pieces": result.paths.to_json(),
        "cycles": [c.to_json() for c in result.cycles],
    })
    return EXIT_OK


def cmd_dilate(args) -> int:
    result = dilate_pipeline(
        IntervalSet.parse(args.P), _strategy(args),
        j_window=args.j_window, max_splits=split_budget(),
    )
    payload = {
        "phi": result.phi.to_json(),
        "psi": result.psi.to_json(),
        "cycles": [c.to_json() for c in result.cycles],
        "filter": result.filter_set.to_json(),
        "verification": result.verification,
    }
    _emit(args, payload)
    if args.svg:
        write_svg(args.svg, components_svg(result.psi, result.phi))
    return EXIT_OK


def cmd_complement(args) -> int:
    G = IntervalSet.parse(args.g_set) if args.g_set else None
    F_prime, report = semiorthogonal_complement(IntervalSet.parse(args.P), G)
    _emit(args, {"F_prime": F_prime.to_json(), "report": report})
    return EXIT_OK


def cmd_gram(args) -> int:
    try:
        J, K = (int(part) for part in args.gram.split(","))
    except ValueError:
        raise IntervalParseError("--gram expects J,K", 0) from None
    report = gram_report(IntervalSet.parse(args.P), J, K, samples=args.samples)
    _emit(args, report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parseval-dilate",
        description="Exact orthonormal dilations of MRA Parseval wavelet sets.",
        epilog=f"The environment variable {ENV_MAX_SPLITS} overrides the "
               "partition-discovery split budget (default 4096).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="tiling/orthogonality report for a wavelet set")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scaling", help="exact scaling set F with F = F/2 u P/2")
    _add_common(p)
    p.set_defaults(func=cmd_scaling)

    p = sub.add_parser("filter", help="QMF filter set for a chosen completion")
    _add_common(p, strategy=True)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("paths", help="chosen paths and cycles of the filter dynamics")
    _add_common(p, strategy=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("dilate", help="orthonormal super-wavelet components")
    _add_common(p, strategy=True)
    p.add_argument("--svg", metavar="PATH", help="write a figure of the supports")
    p.set_defaults(func=cmd_dilate)

    p = sub.add_parser("complement", help="semi-orthogonal complement wavelet set")
    _add_common(p)
    p.add_argument("--g-set", metavar="SET",
                   help="orthonormal reference set G (default: Shannon)")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("gram", help="complement Gram kernel PSD/invariance report")
    _add_common(p)
    p.add_argument("--gram", default="2,3", metavar="J,K",
                   help="index window (default 2,3)")
    p.add_argument("--samples", type=int, default=200,
                   help="invariance sample count (default 200)")
    p.set_defaults(func=cmd_gram)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except IntervalParseError as exc:
        print(json.dumps({"error": "parse", "message": str(exc),
                          "position": exc.position}), file=sys.stderr)
        return EXIT_USAGE
    except MATH_ERRORS as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return EXIT_MATH


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
