"""Static SVG rendering of component supports on labelled number lines."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .encoding import ComponentFunction
from .intervals import IntervalSet

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]

ROW_H = 34
PAD_X = 120
PAD_Y = 28


def _rows_of(cf: ComponentFunction, prefix: str) -> List[Tuple[str, IntervalSet]]:
    rows = [(f"{prefix} real", cf.real)]
    for cyc, slots in cf.cycles:
        for j, s in enumerate(slots):
            rows.append((f"{prefix} cycle {cyc.word} slot {j}", s))
    return rows


def components_svg(
    psi: ComponentFunction, phi: Optional[ComponentFunction] = None, width: int = 900
) -> str:
    """One number line per component; psi rows first, then phi rows."""
    rows = _rows_of(psi, "psi")
    if phi is not None:
        rows += _rows_of(phi, "phi")

    endpoints = [e for _, s in rows for iv in s.intervals for e in iv]
    lo = min(endpoints + [Fraction(0)])
    hi = max(endpoints + [Fraction(1)])
    span = hi - lo if hi > lo else Fraction(1)

    def px(x: Fraction) -> float:
        return PAD_X + float((x - lo) / span) * (width - PAD_X - 20)

    height = PAD_Y * 2 + ROW_H * len(rows)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" font-family="monospace" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    zero_x = px(Fraction(0))
    parts.append(
        f'<line x1="{zero_x:.2f}" y1="{PAD_Y - 10}" x2="{zero_x:.2f}" '
        f'y2="{height - PAD_Y + 10}" stroke="#bbbbbb" stroke-dasharray="3,3"/>'
    )
    for i, (label, s) in enumerate(rows):
        y = PAD_Y + ROW_H * i + ROW_H // 2
        color = PALETTE[i % len(PALETTE)]
        parts.append(
            f'<line x1="{PAD_X}" y1="{y}" x2="{width - 20}" y2="{y}" '
            f'stroke="#dddddd"/>'
        )
        parts.append(f'<text x="8" y="{y + 4}">{label}</text>')
        for a, b in s.intervals:
            xa, xb = px(a), px(b)
            parts.append(
                f'<rect x="{xa:.2f}" y="{y - 7}" width="{max(xb - xa, 1.0):.2f}" '
                f'height="14" fill="{color}" fill-opacity="0.8"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)


def write_svg(path: str, svg: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(svg)
