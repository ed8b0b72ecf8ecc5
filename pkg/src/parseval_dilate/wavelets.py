"""Parseval wavelet-set verification, scaling sets, semi-orthogonal complements.

A set P with psi-hat = chi_P generates a Parseval frame of dilates and
translates exactly when {2^j P} partitions the line up to measure zero and P
is translation simple.  Both conditions are decided exactly here: the dilation
family is certified through dyadic block normalisation (every piece of P cut
to +-[2^k, 2^{k+1}) and rescaled into +-[1,2); the family tiles the line iff
the rescaled blocks partition +-[1,2)), which covers all scales at once, and
translation simplicity is mod-1 injectivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .intervals import IntervalSet


class InvalidWaveletSet(ValueError):
    """Raised when a candidate set is empty, null, or fails a precondition."""


class NonClosingScalingSet(RuntimeError):
    """Raised when the scaling-set iteration cannot be closed and certified."""


@dataclass(frozen=True)
class WaveletSetReport:
    is_multiplicative_tile: bool
    is_translation_simple: bool
    covers_line: bool
    is_parseval: bool
    is_orthonormal: bool

    def to_json(self) -> dict:
        return {
            "is_multiplicative_tile": self.is_multiplicative_tile,
            "is_translation_simple": self.is_translation_simple,
            "covers_line": self.covers_line,
            "is_parseval": self.is_parseval,
            "is_orthonormal": self.is_orthonormal,
        }


@dataclass(frozen=True)
class ScalingData:
    F: IntervalSet
    P: IntervalSet
    F_is_translation_simple: bool

    def to_json(self) -> dict:
        return {
            "F": self.F.to_json(),
            "P": self.P.to_json(),
            "F_is_translation_simple": self.F_is_translation_simple,
        }


# -- dyadic block normalisation ----------------------------------------------


def log2_floor(x: Fraction) -> int:
    """floor(log2 x) for positive rational x, exact."""
    if x <= 0:
        raise ValueError("positive rational required")
    k = x.numerator.bit_length() - x.denominator.bit_length()
    if Fraction(2) ** (k + 1) <= x:
        k += 1
    if Fraction(2) ** k > x:
        k -= 1
    return k


def dyadic_blocks(A: IntervalSet) -> Dict[Tuple[int, int], IntervalSet]:
    """Cut A at powers of two and rescale each piece into +-[1,2).

    Returns {(sign, k): Q} where Q is sign*[1,2) rescaled from the part of A
    in sign*[2^k, 2^{k+1}).  A must be bounded away from 0 (pieces touching 0
    would need infinitely many blocks).
    """
    blocks: Dict[Tuple[int, int], list] = {}
    for lo, hi in A.intervals:
        if lo <= 0 <= hi:
            raise ValueError("dyadic_blocks: set touches 0")
        for sign in (1, -1):
            a = lo if sign > 0 else -hi
            b = hi if sign > 0 else -lo
            a = max(a, Fraction(0))
            if b <= a or b <= 0:
                continue
            k = log2_floor(a)
            cur = a
            while cur < b:
                top = min(b, Fraction(2) ** (k + 1))
                blocks.setdefault((sign, k), []).append(
                    (cur / Fraction(2) ** k, top / Fraction(2) ** k)
                )
                cur = top
                k += 1
    return {key: IntervalSet(vals) for key, vals in blocks.items()}


def blocks_tiling(
    blocks: Dict[Tuple[int, int], IntervalSet],
) -> Dict[int, Tuple[bool, bool]]:
    """Per sign: (pairwise disjoint within [1,2), cover [1,2) exactly)."""
    full = IntervalSet.interval(1, 2)
    out = {}
    for sign in (1, -1):
        total = Fraction(0)
        acc = IntervalSet.empty()
        for (s, _k), q in blocks.items():
            if s != sign:
                continue
            total += q.measure()
            acc = acc.union(q)
        out[sign] = (acc.measure() == total, acc == full)
    return out


# -- wavelet-set verification --------------------------------------------------


def verify_wavelet_set(P: IntervalSet, j_window: int = 8) -> WaveletSetReport:
    """Check the Parseval wavelet-set tiling conditions exactly.

    Dyadic-block normalisation certifies disjointness and coverage of the full
    dilation family {2^j P}; the explicit pairwise check over |j| <= j_window
    is run as well and must agree.
    """
    if P.is_empty or P.measure() == 0:
        raise InvalidWaveletSet("candidate wavelet set must have positive measure")

    touch_pos = any(lo <= 0 < hi for lo, hi in P.intervals)
    touch_neg = any(lo < 0 <= hi for lo, hi in P.intervals)
    away = IntervalSet(
        [(lo, hi) for lo, hi in P.intervals if hi < 0 or lo > 0]
    )
    blocks = dyadic_blocks(away) if not away.is_empty else {}
    per_sign = blocks_tiling(blocks)

    if touch_pos or touch_neg:
        # a set whose closure meets 0 collides with its own double
        disjoint = False
    else:
        disjoint = per_sign[1][0] and per_sign[-1][0]
        for d in range(1, j_window + 1):
            if not P.intersect(P.affine(Fraction(2) ** d)).is_empty:
                disjoint = False
                break

    covers = (touch_pos or per_sign[1][1]) and (touch_neg or per_sign[-1][1])
    simple = P.mod1_is_injective()
    tile = disjoint and covers
    parseval = tile and simple
    orthonormal = parseval and P.mod1() == IntervalSet.unit()
    return WaveletSetReport(
        is_multiplicative_tile=tile,
        is_translation_simple=simple,
        covers_line=covers,
        is_parseval=parseval,
        is_orthonormal=orthonormal,
    )


# -- scaling set ----------------------------------------------------------------


def scaling_set(P: IntervalSet, max_iter: int = 0) -> ScalingData:
    """Exact fixed point F of F = F/2 union P/2, certified after the fill at 0.

    Iterates F_{k+1} = F_k/2 union P/2 from F_0 = P/2.  The pieces accumulate
    geometrically at 0, so unless the iteration closes on its own, the hole
    around 0 is filled with [0, delta+) and [-delta-, 0) (delta = distance from
    P to 0 on each side; the tiling property guarantees those fills) and the
    guess is certified by verifying both fixed-point identities exactly.
    """
    report = verify_wavelet_set(P)
    if not report.is_parseval:
        raise InvalidWaveletSet("scaling sets exist only for Parseval wavelet sets")

    half = Fraction(1, 2)
    P_half = P.affine(half)
    if max_iter <= 0:
        dens = max(x.denominator.bit_length() for iv in P.intervals for x in iv)
        w = max(abs(P.inf), abs(P.sup))
        delta = min(abs(e) for iv in P.intervals for e in iv if e != 0)
        max_iter = max(16, dens, log2_floor(w / delta) + 4)

    F = P_half
    closed = False
    for _ in range(max_iter):
        nxt = F.affine(half).union(P_half)
        if nxt == F:
            closed = True
            break
        F = nxt
    if not closed:
        fills = []
        pos = [lo for lo, hi in P.intervals if lo > 0]
        neg = [hi for lo, hi in P.intervals if hi < 0]
        if pos:
            fills.append((Fraction(0), min(pos)))
        if neg:
            fills.append((max(neg), Fraction(0)))
        F = F.union(IntervalSet(fills))

    if F.affine(half).union(P_half) != F:
        raise NonClosingScalingSet(
            "scaling-set iteration did not close; fixed point not certifiable"
        )
    if F.affine(2).subtract(F) != P:
        raise NonClosingScalingSet("certified F does not satisfy P = 2F \\ F")
    return ScalingData(F=F, P=P, F_is_translation_simple=F.mod1_is_injective())


# -- semi-orthogonal complement ---------------------------------------------------

SHANNON = IntervalSet([(-1, Fraction(-1, 2)), (Fraction(1, 2), 1)])


def semiorthogonal_complement(
    P: IntervalSet, G: Optional[IntervalSet] = None, j_window: int = 8
):
    """Complement wavelet set F' pulled back inside an orthonormal wavelet set G.

    E := mod1(P) is the translation footprint of P; [0,1) \\ E is pulled back
    through the translation congruence G <-> [0,1).  The pair (P, F') then
    tiles [0,1) by translations, and the dilates of F' are pairwise disjoint
    because F' sits inside the multiplicative tile G.
    """
    if G is None:
        G = SHANNON
    if not verify_wavelet_set(P).is_parseval:
        raise InvalidWaveletSet("complement requires a Parseval wavelet set")
    if not (G.mod1_is_injective() and G.mod1() == IntervalSet.unit()):
        raise ValueError("G must be translation congruent to [0,1)")

    E = P.mod1()
    missing = IntervalSet.unit().subtract(E)
    F_prime = IntervalSet.empty()
    for lo, hi in G.intervals:
        k = lo.numerator // lo.denominator
        while k < hi:
            piece = G.intersect(IntervalSet.interval(k, k + 1))
            if not piece.is_empty:
                part = piece.translate(-k).intersect(missing)
                if not part.is_empty:
                    F_prime = F_prime.union(part.translate(k))
            k += 1

    tiles = E.union(F_prime.mod1()) == IntervalSet.unit() and E.is_disjoint_from(
        F_prime.mod1()
    )
    dilates_disjoint = True
    dilates = [F_prime.affine(Fraction(2) ** j) for j in range(-j_window, j_window + 1)]
    for i in range(len(dilates)):
        for j in range(i + 1, len(dilates)):
            if not dilates[i].is_disjoint_from(dilates[j]):
                dilates_disjoint = False
    report = {
        "E": E.to_json(),
        "translation_tiling": tiles,
        "dilates_pairwise_disjoint": dilates_disjoint,
        "measure_P_plus_F_prime": str(P.measure() + F_prime.measure()),
    }
    return F_prime, report
