"""QMF low-pass filter sets built from scaling sets.

The filter support M decomposes as tau(F/2) | C | D: the part forced by the
scaling identity, the part forced by the QMF pairing (C = s(tau(F) minus
tau(F/2))), and a free completion D of the remaining "undecided zone".  The
choice of D is the degree of freedom that produces genuinely different
orthonormal dilations, so it is fully caller-controllable.  Every constructed
filter is verified exactly: QMF partition, completion validity, and the
scaling identity F/2 = F intersect Per(M).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .dynamics import Cycle, interior_radius, is_qmf
from .intervals import IntervalSet, RationalLike, rat, rat_str

HALF = Fraction(1, 2)
UNIT = IntervalSet.interval(0, 1)


class InvalidCompletion(ValueError):
    """A D-strategy broke s-simplicity, disjointness, or the QMF partition."""

    def __init__(self, message: str, offending: Optional[IntervalSet] = None):
        if offending is not None and not offending.is_empty:
            message = f"{message}: {offending}"
        super().__init__(message)
        self.offending = offending


@dataclass(frozen=True)
class PaperDefault:
    """Complete the undecided zone with its lower half, the default recipe."""


@dataclass(frozen=True)
class ExplicitSet:
    D: IntervalSet


@dataclass(frozen=True)
class CycleSeeded:
    """Seed the completion with the cycle-interval family around a cycle word.

    Uses the midpoint recipe of the cycle-filter construction, which assumes a
    scaling set of the form [-a, a) with a < 1/16.
    """

    word: str


DStrategy = Union[PaperDefault, ExplicitSet, CycleSeeded]


@dataclass(frozen=True)
class FilterSet:
    M: IntervalSet
    tau_F_half: IntervalSet
    C: IntervalSet
    D: IntervalSet

    def to_json(self) -> dict:
        return {
            "M": self.M.to_json(),
            "provenance": {
                "tau_F_half": self.tau_F_half.to_json(),
                "C": self.C.to_json(),
                "D": self.D.to_json(),
            },
        }


def s_map(A: IntervalSet) -> IntervalSet:
    return A.s_map()


def default_completion(mandatory: IntervalSet) -> IntervalSet:
    """The displayed default D: the lower half of what remains undecided.

    D := [0,1/2) minus ((mandatory cap [0,1/2)) union s(mandatory cap [1/2,1))).
    For any s-simple mandatory part this yields a QMF completion.
    """
    lower = mandatory.intersect(IntervalSet.interval(0, HALF))
    upper = mandatory.intersect(IntervalSet.interval(HALF, 1))
    return IntervalSet.interval(0, HALF).subtract(lower.union(upper.s_map()))


def per_restricted(M: IntervalSet, window: IntervalSet) -> IntervalSet:
    """Per(M) = union of M + k, restricted to the window of interest."""
    if window.is_empty:
        return IntervalSet.empty()
    lo = window.inf.numerator // window.inf.denominator - 1
    hi = window.sup
    out = IntervalSet.empty()
    k = lo
    while k < hi:
        out = out.union(M.translate(k))
        k += 1
    return out.intersect(window)


def _window_of(F: IntervalSet) -> IntervalSet:
    pad = Fraction(1)
    return IntervalSet.interval(F.inf - pad, F.sup + pad)


def build_filter(F: IntervalSet, strategy: DStrategy = PaperDefault()) -> FilterSet:
    """Assemble and verify the filter set M = tau(F/2) | C | D."""
    if not F.mod1_is_injective():
        raise InvalidCompletion("scaling set must be translation simple")
    P = F.affine(2).subtract(F)
    if F.affine(HALF).union(P.affine(HALF)) != F:
        raise InvalidCompletion("F does not satisfy the fixed point F = F/2 u P/2")

    tau_F = F.mod1()
    tau_F_half = F.affine(HALF).mod1()
    C = tau_F.subtract(tau_F_half).s_map()
    mandatory = C.union(tau_F_half)

    if isinstance(strategy, PaperDefault):
        D = default_completion(mandatory)
    elif isinstance(strategy, ExplicitSet):
        D = strategy.D
    elif isinstance(strategy, CycleSeeded):
        a = _symmetric_radius(F)
        cycle_filter = build_cycle_filter(a, strategy.word)
        D = cycle_filter.M.subtract(mandatory)
    else:
        raise TypeError(f"unknown D strategy: {strategy!r}")

    overlap = D.intersect(mandatory.union(mandatory.s_map()))
    if not overlap.is_empty:
        raise InvalidCompletion("D overlaps the forced or forbidden zone", overlap)
    self_overlap = D.intersect(D.s_map())
    if not self_overlap.is_empty:
        raise InvalidCompletion("D is not s-simple", self_overlap)

    M = mandatory.union(D)
    if not is_qmf(M):
        missing = UNIT.subtract(M.union(M.s_map()))
        raise InvalidCompletion("completion does not close the QMF partition", missing)

    window = _window_of(F)
    if F.intersect(per_restricted(M, window)) != F.affine(HALF):
        raise InvalidCompletion("scaling identity F/2 = F cap Per(M) failed")
    return FilterSet(M=M, tau_F_half=tau_F_half, C=C, D=D)


def _symmetric_radius(F: IntervalSet) -> Fraction:
    if len(F.intervals) != 1 or F.inf != -F.sup:
        raise InvalidCompletion(
            "cycle-seeded completion needs a scaling set of the form [-a, a)"
        )
    return F.sup


# -- the cycle-interval filter family ------------------------------------------


def build_cycle_filter(a: RationalLike, cycle_word: str) -> FilterSet:
    """Filter whose completion traps a chosen cycle in its interior.

    Midpoint recipe: between neighbouring "main points" (cycle points and
    their s-supplements) each cycle point c receives the interval
    [(l(c)+c)/2, (c+r(c))/2), with the two points flanking 1/2 attached to the
    forced edge intervals.  The result is verified to be QMF and to contain
    every cycle point in its interior.
    """
    a = rat(a)
    if not (0 < a < Fraction(1, 16)):
        raise ValueError("cycle filters require 0 < a < 1/16")
    word = cycle_word
    if not word or any(c not in "01" for c in word):
        raise ValueError(f"cycle word must be binary, got {word!r}")
    if "0" not in word or "1" not in word:
        theta = Cycle.from_word(word).points[0]
        raise ValueError(
            f"degenerate cycle word {word!r}: point {rat_str(theta)} "
            "is not in the undecided zone"
        )

    cyc = Cycle.from_word(word)
    points = sorted(set(cyc.points))
    if len(points) != len(cyc.points):
        raise ValueError(f"cycle word {word!r} revisits a point; use its primitive root")
    supplements = sorted((t + HALF) if t < HALF else (t - HALF) for t in points)
    zone = IntervalSet([(a, HALF - a), (HALF + a, 1 - a)])
    for t in sorted(set(points) | set(supplements)):
        if not zone.contains_point(t):
            raise ValueError(
                f"main point {rat_str(t)} lies outside the undecided zone"
            )
    main = sorted(set(points) | set(supplements))
    if len(main) != 2 * len(points):
        raise ValueError("a supplement coincides with a cycle point")

    c_l = max(t for t in points if t < HALF)
    c_r = min(t for t in points if t > HALF)

    def neighbours(c: Fraction) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        i = main.index(c)
        left = main[i - 1] if i > 0 else None
        right = main[i + 1] if i + 1 < len(main) else None
        return left, right

    intervals: List[Tuple[Fraction, Fraction]] = []
    for c in points:
        left, right = neighbours(c)
        if c == c_l:
            if left is None:
                raise ValueError(f"no main point left of {rat_str(c)}")
            intervals.append(((left + c) / 2, HALF - a / 2))
        elif c == c_r:
            if right is None:
                raise ValueError(f"no main point right of {rat_str(c)}")
            intervals.append((HALF + a / 2, (c + right) / 2))
        else:
            if left is None or right is None:
                raise ValueError(f"cycle point {rat_str(c)} has no flanking main point")
            intervals.append(((left + c) / 2, (c + right) / 2))

    tau_F_half = IntervalSet([(0, a / 2), (1 - a / 2, 1)])
    C_part = IntervalSet([(HALF - a, HALF - a / 2), (HALF + a / 2, HALF + a)])
    mandatory = tau_F_half.union(C_part)
    cycle_part = IntervalSet(intervals)
    M = mandatory.union(cycle_part)

    if not is_qmf(M):
        raise InvalidCompletion(
            "cycle recipe did not close the QMF partition",
            M.intersect(M.s_map()),
        )
    for t in cyc.points:
        if interior_radius(M, t) is None:
            raise InvalidCompletion(
                f"cycle point {rat_str(t)} is not interior to the filter"
            )
    return FilterSet(
        M=M, tau_F_half=tau_F_half, C=C_part, D=M.subtract(mandatory)
    )


# -- the aperiodic (non-cycle) filter family --------------------------------------


def _run_violation(eta: str, p: int) -> Optional[Tuple[int, int]]:
    run_start = 0
    for i in range(1, len(eta) + 1):
        if i == len(eta) or eta[i] != eta[run_start]:
            if i - run_start >= p:
                return run_start, i
            run_start = i
    return None


def build_aperiodic_filter_prefix(eta_prefix: str, p: int, N: int):
    """Images of the seed interval I = [.10^p10, .10^p11) along a digit prefix.

    Returns (S_N, report): S_N is the union of the first N images
    tau_{eta_n} ... tau_{eta_1} I, and the report certifies their pairwise
    disjointness, s-simplicity of S_N, and positive distance to {0, 1/2, 1}.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if any(c not in "01" for c in eta_prefix):
        raise ValueError("eta prefix must be a binary word")
    if len(eta_prefix) < N:
        raise ValueError(f"eta prefix holds {len(eta_prefix)} digits, need {N}")
    viol = _run_violation(eta_prefix, p)
    if viol is not None:
        i, j = viol
        raise ValueError(
            f"digit run {eta_prefix[i:j]!r} at positions {i}..{j - 1} has length >= {p}"
        )

    lo = HALF + Fraction(1, 1 << (p + 2))
    seed = (lo, lo + Fraction(1, 1 << (p + 3)))
    pairs = []
    cur = seed
    total = Fraction(0)
    for n in range(N):
        digit = int(eta_prefix[n])
        cur = ((cur[0] + digit) / 2, (cur[1] + digit) / 2)
        pairs.append(cur)
        total += cur[1] - cur[0]

    S = IntervalSet(pairs)
    disjoint = S.measure() == total
    s_simple = S.is_disjoint_from(S.s_map())

    d0 = S.inf
    d1 = 1 - S.sup
    if any(lo_ <= HALF <= hi for lo_, hi in S.intervals):
        dhalf = Fraction(0)
    else:
        dhalf = min(
            (HALF - hi) if hi < HALF else (lo_ - HALF) for lo_, hi in S.intervals
        )

    report = {
        "pairwise_disjoint": disjoint,
        "s_simple": s_simple,
        "distance_to_0": rat_str(d0),
        "distance_to_half": rat_str(dhalf),
        "distance_to_1": rat_str(d1),
    }
    return S, report


def aperiodic_filter(eta_prefix: str, p: int, N: int) -> FilterSet:
    """A QMF filter containing the first N prefix images plus edge intervals."""
    S, report = build_aperiodic_filter_prefix(eta_prefix, p, N)
    if not (report["pairwise_disjoint"] and report["s_simple"]):
        raise InvalidCompletion("prefix images are not disjoint or not s-simple")
    dist = min(rat(report["distance_to_0"]),
               rat(report["distance_to_half"]),
               rat(report["distance_to_1"]))
    if dist <= 0:
        raise InvalidCompletion("prefix images touch {0, 1/2, 1}")
    eps = min(dist, Fraction(1, 4)) / 2
    edges = IntervalSet([(0, eps), (1 - eps, 1)])
    mandatory = S.union(edges)
    D = default_completion(mandatory)
    M = mandatory.union(D)
    if not is_qmf(M):
        raise InvalidCompletion(
            "aperiodic completion failed", M.intersect(M.s_map())
        )
    return FilterSet(M=M, tau_F_half=edges, C=IntervalSet.empty(), D=M.subtract(edges))
