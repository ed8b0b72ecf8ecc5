"""Two's-complement and cycle encodings; the symbolic dilation and its decoding.

Words ending in the constant streams encode integers (the two's-complement
bijection d_Z); words ending in a repeated cycle word encode points of
R x Z_p through d_C.  The dilated scaling set F-tilde = {(x, chosen path of x)}
and the super-wavelet support P-tilde = r-tilde(F-tilde) \\ F-tilde live on
finitely many (interval, word) fibres, which decode component-by-component
into explicit interval sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .dynamics import Cycle, PiecewisePath
from .intervals import IntervalSet, rat
from .wavelets import dyadic_blocks
from .words import EPWord, rotations

HALF = Fraction(1, 2)
UNIT = IntervalSet.interval(0, 1)


class UnresolvedPath(ValueError):
    """A path period that is neither constant nor a listed cycle rotation."""


# -- integer encoding ------------------------------------------------------------


def d_Z(w: EPWord) -> int:
    """Decode a constant-tailed word to an integer (two's complement).

    d_0(w_1..w_n 0...) = sum w_k 2^{k-1};
    d_1(w_1..w_n 1...) = sum w_k 2^{k-1} - 2^n.
    """
    if not w.is_constant_tail:
        raise ValueError(f"d_Z needs a constant tail, got {w}")
    value = sum(int(c) << k for k, c in enumerate(w.pre))
    if w.per == "1":
        value -= 1 << len(w.pre)
    return value


def d_Z_inv(k: int) -> EPWord:
    """Encode an integer as a canonical constant-tailed word."""
    if k >= 0:
        bits = ""
        while k:
            bits += str(k & 1)
            k >>= 1
        return EPWord(bits, "0")
    n = (-k).bit_length()
    value = k + (1 << n)
    bits = ""
    for _ in range(n):
        bits += str(value & 1)
        value >>= 1
    return EPWord(bits, "1")


def shift_identity_check(x, w: EPWord, n: int) -> bool:
    """Exact check of (x + d(w)) / 2^n = tau_{w_n}..tau_{w_1} x + d(shifted w)."""
    x = rat(x)
    lhs = (x + d_Z(w)) / (1 << n)
    y = x
    for i in range(n):
        y = (y + w.digit(i)) / 2
    rhs = y + d_Z(w.shift(n))
    return lhs == rhs


# -- cycle encoding ---------------------------------------------------------------


def d_C_params(w: EPWord, C: Cycle) -> Tuple[int, int]:
    """(j, k) for a word ending in a rotation of the cycle word.

    The preperiod is padded to the next multiple of p; the rotation index j is
    the unique one whose tail reads l_j l_{j+1} ...; k is the integer
    sum w_i 2^i + theta_j (1 - 2^{np}).
    """
    p = len(C.word)
    if w.per not in rotations(C.word):
        raise UnresolvedPath(f"period of {w} is not a rotation of {C.word!r}")
    n0 = len(w.pre)
    np_ = ((n0 + p - 1) // p) * p
    tail = tuple(w.digit(np_ + i) for i in range(p))
    j = None
    for cand in range(p):
        if all(int(C.word[(cand + i) % p]) == tail[i] for i in range(p)):
            j = cand
            break
    if j is None:  # unreachable for primitive cycle words
        raise UnresolvedPath(f"no rotation of {C.word!r} matches the tail of {w}")
    theta = C.points[j]
    k = Fraction(sum(w.digit(i) << i for i in range(np_))) + theta - (1 << np_) * theta
    if k.denominator != 1:
        raise ArithmeticError(f"k({w}) = {k} is not an integer")
    return j, int(k)


def d_C(x, w: EPWord, C: Cycle) -> Tuple[Fraction, int]:
    """Decode (x, w) with w ending in the cycle to a point of R x Z_p."""
    x = rat(x)
    j, k = d_C_params(w, C)
    return x - C.points[j] + k, j


def d_C_inv(y, j: int, C: Cycle) -> Tuple[Fraction, EPWord]:
    """Inverse decoding by the division-with-remainder chain."""
    y = rat(y)
    p = len(C.word)
    theta_j = C.points[j]
    total = y + theta_j
    k = total.numerator // total.denominator
    x = total - k

    digits: List[int] = []
    seen: Dict[Tuple[int, int], int] = {}
    a, s = k, j
    limit = 64 * p + abs(k).bit_length()
    while (a, s) not in seen:
        if len(digits) > limit:
            raise ArithmeticError("division chain failed to become periodic")
        seen[(a, s)] = len(digits)
        l = int(C.word[s])
        d = (a + l) % 2
        digits.append(d)
        a = (a + l - d) // 2
        s = (s + 1) % p
    start = seen[(a, s)]
    return x, EPWord(digits[:start], digits[start:])


# -- symbolic subsets of [0,1) x Omega ------------------------------------------


@dataclass(frozen=True)
class SymbolicSet:
    """Finite union of fibres base x {path} with distinct canonical paths."""

    pieces: Tuple[Tuple[IntervalSet, EPWord], ...] = ()

    @staticmethod
    def build(pairs: Sequence[Tuple[IntervalSet, EPWord]]) -> "SymbolicSet":
        by_word: Dict[EPWord, IntervalSet] = {}
        for base, word in pairs:
            if base.is_empty:
                continue
            by_word[word] = by_word.get(word, IntervalSet.empty()).union(base)
        ordered = sorted(by_word.items(), key=lambda kv: (kv[0].pre, kv[0].per))
        return SymbolicSet(tuple((base, word) for word, base in ordered))

    def lam(self) -> Fraction:
        """The measure lambda: Lebesgue in x, counting along fibres."""
        return sum((base.measure() for base, _ in self.pieces), Fraction(0))

    def restrict_base(self, A: IntervalSet) -> "SymbolicSet":
        return SymbolicSet.build(
            [(base.intersect(A), word) for base, word in self.pieces]
        )

    def subtract(self, other: "SymbolicSet") -> "SymbolicSet":
        other_map = {word: base for base, word in other.pieces}
        out = []
        for base, word in self.pieces:
            if word in other_map:
                base = base.subtract(other_map[word])
            out.append((base, word))
        return SymbolicSet.build(out)

    def to_json(self) -> list:
        return [
            {"base": base.to_json(), "path": word.to_text()}
            for base, word in self.pieces
        ]


def r_tilde(S: SymbolicSet) -> SymbolicSet:
    """(x, w) -> (2x mod 1, (digit inverting the doubling) w), symbolically."""
    out = []
    lower = IntervalSet.interval(0, HALF)
    upper = IntervalSet.interval(HALF, 1)
    for base, word in S.pieces:
        b0 = base.intersect(lower)
        if not b0.is_empty:
            out.append((b0.affine(2), word.prepend(0)))
        b1 = base.intersect(upper)
        if not b1.is_empty:
            out.append((b1.affine(2, -1), word.prepend(1)))
    return SymbolicSet.build(out)


def r_tilde_inv(S: SymbolicSet) -> SymbolicSet:
    """(x, w) -> (tau_{w_1} x, shifted w), symbolically."""
    out = []
    for base, word in S.pieces:
        d = word.digit(0)
        out.append((base.affine(HALF, Fraction(d, 2)), word.shift(1)))
    return SymbolicSet.build(out)


def build_F_tilde(paths: PiecewisePath) -> SymbolicSet:
    """F-tilde = {(x, chosen path of x)} as a symbolic set."""
    Ft = SymbolicSet.build(list(paths.pieces))
    if Ft.lam() != 1:
        raise ValueError("chosen paths must partition [0,1)")
    return Ft


def build_P_tilde(Ft: SymbolicSet) -> SymbolicSet:
    """P-tilde = r-tilde(F-tilde) minus F-tilde, fibrewise."""
    return r_tilde(Ft).subtract(Ft)


# -- decoding into components ----------------------------------------------------


@dataclass(frozen=True)
class ComponentFunction:
    """Real component plus one interval set per cycle slot."""

    real: IntervalSet
    cycles: Tuple[Tuple[Cycle, Tuple[IntervalSet, ...]], ...] = ()

    def to_json(self) -> dict:
        return {
            "real": self.real.to_json(),
            "cycles": [
                {"word": cyc.word, "slots": [s.to_json() for s in slots]}
                for cyc, slots in self.cycles
            ],
        }

    def slot(self, word: str, j: int) -> IntervalSet:
        for cyc, slots in self.cycles:
            if cyc.word == word:
                return slots[j]
        raise KeyError(word)


def decode_components(S: SymbolicSet, cycles: Sequence[Cycle]) -> ComponentFunction:
    """Decode fibres: constant tails to the real line, cycle tails to slots."""
    listed = [c for c in cycles if c.word not in ("0", "1")]
    real = IntervalSet.empty()
    slots: Dict[str, List[IntervalSet]] = {
        c.word: [IntervalSet.empty()] * len(c.word) for c in listed
    }
    for base, word in S.pieces:
        if word.is_constant_tail:
            real = real.union(base.translate(d_Z(word)))
            continue
        for cyc in listed:
            if word.per in rotations(cyc.word):
                j, k = d_C_params(word, cyc)
                shifted = base.translate(k - cyc.points[j])
                slots[cyc.word][j] = slots[cyc.word][j].union(shifted)
                break
        else:
            raise UnresolvedPath(
                f"path {word} does not end in a listed cycle; "
                "the dynamics is not cycle-decomposable"
            )
    return ComponentFunction(
        real=real,
        cycles=tuple((cyc, tuple(slots[cyc.word])) for cyc in listed),
    )


# -- exact verification of the dilated wavelet ------------------------------------


def _translation_parts(cf: ComponentFunction) -> List[IntervalSet]:
    parts = []
    if not cf.real.is_empty:
        parts.append(cf.real.mod1())
    for cyc, slots in cf.cycles:
        for j, s in enumerate(slots):
            if not s.is_empty:
                parts.append(s.translate(cyc.points[j]).mod1())
    return parts


def translation_tiling(cf: ComponentFunction) -> bool:
    """The theta-shifted component supports partition [0,1) mod 1 exactly."""
    parts = _translation_parts(cf)
    total = sum((p.measure() for p in parts), Fraction(0))
    union = IntervalSet.empty()
    for p in parts:
        union = union.union(p)
    return total == 1 and union == UNIT


def _chain_blocks_tile(slots: Sequence[IntervalSet]) -> bool:
    """Exact dilation tiling for one cycle chain under alpha: (x,j)->(2x,j-1).

    Per slot i the dilates {2^n S_{(i+n) mod p}} must partition the line.
    Writing y = +-2^m u with u in [1,2), membership depends only on the dyadic
    block (s, k) with s + k = i + m (mod p), so the family tiles iff for every
    residue c the blocks {Q_{s,k} : s + k = c (mod p)} partition +-[1,2).
    """
    p = len(slots)
    full = IntervalSet.interval(1, 2)
    per_class: Dict[Tuple[int, int], List[IntervalSet]] = {}
    for s, S in enumerate(slots):
        if S.is_empty:
            continue
        if any(lo <= 0 <= hi for lo, hi in S.intervals):
            return False
        # blocks hold normalised absolute values in [1,2) for either sign
        for (sign, k), q in dyadic_blocks(S).items():
            per_class.setdefault((sign, (s + k) % p), []).append(q)
    for sign in (1, -1):
        for c in range(p):
            qs = per_class.get((sign, c), [])
            total = sum((q.measure() for q in qs), Fraction(0))
            union = IntervalSet.empty()
            for q in qs:
                union = union.union(q)
            if total != 1 or union != full:
                return False
    return True


def _chain_window_disjoint(slots: Sequence[IntervalSet], j_window: int) -> bool:
    p = len(slots)
    dil = {
        n: [s.affine(Fraction(2) ** n) for s in slots]
        for n in range(-j_window, j_window + 1)
    }
    for i in range(p):
        for n1 in range(-j_window, j_window + 1):
            for n2 in range(n1 + 1, j_window + 1):
                a = dil[n1][(i + n1) % p]
                b = dil[n2][(i + n2) % p]
                if not a.is_disjoint_from(b):
                    return False
    return True


def verify_orthonormal_dilation(
    psi: ComponentFunction,
    P: Optional[IntervalSet] = None,
    j_window: int = 10,
) -> dict:
    """Exact orthonormal-wavelet checks for the decoded super-wavelet.

    (a) translation tiling of [0,1) by the theta-shifted supports,
    (b) dilation tiling per component chain: pairwise disjointness over the
        window plus the dyadic-block certificate covering all scales,
    (c) the real component projects back onto the input wavelet set.
    """
    report: dict = {"translation_tiling": translation_tiling(psi)}

    dil_ok = True
    window_ok = True
    if psi.real.is_empty:
        dil_ok = False
    else:
        window_ok = _chain_window_disjoint([psi.real], j_window) and window_ok
        dil_ok = _chain_blocks_tile([psi.real]) and dil_ok
    for _cyc, slots in psi.cycles:
        if all(s.is_empty for s in slots):
            continue
        window_ok = _chain_window_disjoint(list(slots), j_window) and window_ok
        dil_ok = _chain_blocks_tile(list(slots)) and dil_ok
    report["dilation_window_disjoint"] = window_ok
    report["dilation_tiling_certified"] = dil_ok and window_ok
    if P is not None:
        report["projection_consistent"] = psi.real == P
    report["passes"] = all(
        v for k, v in report.items() if isinstance(v, bool)
    )
    return report
