"""Exact algebra of finite unions of half-open intervals with rational endpoints.

An :class:`IntervalSet` is a finite union of intervals ``[lo, hi)`` whose
endpoints are :class:`fractions.Fraction` values, stored in a unique canonical
form: intervals sorted, pairwise disjoint and never abutting (abutting pieces
are merged on construction).  Two measurable sets that agree up to Lebesgue
measure zero therefore have equal canonical forms, and set equality is exact
structural equality.

Text format: ``[-1/4,-1/8)u[1/8,1/4)`` (the empty set prints as ``empty``);
JSON format: list of ``[lo, hi]`` string pairs.  Parser and printer round-trip
exactly.
"""

from __future__ import annotations

import bisect
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple, Union

RationalLike = Union[Fraction, int, str]

HALF = Fraction(1, 2)
ONE = Fraction(1)
ZERO = Fraction(0)


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, a string like ``-3/8``, or a Fraction to an exact rational.

    Floats are rejected: everything in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Print a rational as ``p/q``, or ``p`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class IntervalParseError(ValueError):
    """Raised on malformed interval-set text; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IntervalSet:
    """Canonical finite union of half-open rational intervals."""

    __slots__ = ("_ivs",)

    def __init__(self, intervals: Iterable[Tuple[RationalLike, RationalLike]] = ()):
        pairs = []
        for lo, hi in intervals:
            lo, hi = rat(lo), rat(hi)
            if lo < hi:
                pairs.append((lo, hi))
        pairs.sort()
        merged: list = []
        for lo, hi in pairs:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        self._ivs: Tuple[Tuple[Fraction, Fraction], ...] = tuple(merged)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def interval(lo: RationalLike, hi: RationalLike) -> "IntervalSet":
        return IntervalSet([(lo, hi)])

    @staticmethod
    def empty() -> "IntervalSet":
        return _EMPTY

    @staticmethod
    def unit() -> "IntervalSet":
        """The interval [0, 1)."""
        return _UNIT

    # -- basic accessors --------------------------------------------------

    @property
    def intervals(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return self._ivs

    @property
    def is_empty(self) -> bool:
        return not self._ivs

    @property
    def inf(self) -> Fraction:
        if not self._ivs:
            raise ValueError("empty set has no bounds")
        return self._ivs[0][0]

    @property
    def sup(self) -> Fraction:
        if not self._ivs:
            raise ValueError("empty set has no bounds")
        return self._ivs[-1][1]

    def __iter__(self) -> Iterator[Tuple[Fraction, Fraction]]:
        return iter(self._ivs)

    def __len__(self) -> int:
        return len(self._ivs)

    def __bool__(self) -> bool:
        return bool(self._ivs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalSet) and self._ivs == other._ivs

    def __hash__(self) -> int:
        return hash(self._ivs)

    def __repr__(self) -> str:
        return f"IntervalSet({self.to_text()!r})"

    def measure(self) -> Fraction:
        """Exact Lebesgue measure, the sum of interval lengths."""
        return sum((hi - lo for lo, hi in self._ivs), ZERO)

    def contains_point(self, x: RationalLike) -> bool:
        """Membership of a single point, honouring the half-open convention."""
        x = rat(x)
        i = bisect.bisect_right(self._ivs, (x, _PLUS_INF))
        if i:
            lo, hi = self._ivs[i - 1]
            if lo <= x < hi:
                return True
        return False

    def piece_containing(self, x: RationalLike):
        """The interval [lo, hi) containing x, or None."""
        x = rat(x)
        for lo, hi in self._ivs:
            if lo <= x < hi:
                return (lo, hi)
        return None

    # -- boolean algebra --------------------------------------------------

    def union(self, other: "IntervalSet") -> "IntervalSet":
        if not self._ivs:
            return other
        if not other._ivs:
            return self
        return IntervalSet(self._ivs + other._ivs)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        a, b = self._ivs, other._ivs
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                out.append((lo, hi))
            if a[i][1] <= b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet(out)

    def subtract(self, other: "IntervalSet") -> "IntervalSet":
        if not self._ivs or not other._ivs:
            return self
        out = []
        b = other._ivs
        j = 0
        for lo, hi in self._ivs:
            cur = lo
            while j > 0 and b[j - 1][1] > cur:
                j -= 1
            k = j
            while k < len(b) and b[k][0] < hi:
                blo, bhi = b[k]
                if blo > cur:
                    out.append((cur, min(blo, hi)))
                cur = max(cur, bhi)
                if cur >= hi:
                    break
                k += 1
            if cur < hi:
                out.append((cur, hi))
        return IntervalSet(out)

    def symmetric_difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.subtract(other).union(other.subtract(self))

    def complement_within(self, window: "IntervalSet") -> "IntervalSet":
        return window.subtract(self)

    def is_disjoint_from(self, other: "IntervalSet") -> bool:
        return self.intersect(other).is_empty

    def is_subset_of(self, other: "IntervalSet") -> bool:
        return self.subtract(other).is_empty

    __or__ = union
    __and__ = intersect
    __sub__ = subtract
    __xor__ = symmetric_difference

    # -- geometry ---------------------------------------------------------

    def affine(self, scale: RationalLike, shift: RationalLike = 0) -> "IntervalSet":
        """Image under x -> scale*x + shift; scale must be nonzero.

        A negative scale reverses orientation; the result is re-canonicalised
        as half-open intervals (the endpoint discrepancy has measure zero).
        """
        scale, shift = rat(scale), rat(shift)
        if scale == 0:
            raise ValueError("affine scale must be nonzero")
        if scale > 0:
            return IntervalSet(
                [(scale * lo + shift, scale * hi + shift) for lo, hi in self._ivs]
            )
        return IntervalSet(
            [(scale * hi + shift, scale * lo + shift) for lo, hi in self._ivs]
        )

    def translate(self, shift: RationalLike) -> "IntervalSet":
        return self.affine(1, shift)

    def mod1(self) -> "IntervalSet":
        """Set image under x -> x mod 1, multiplicity collapsed."""
        out = []
        for lo, hi in self._ivs:
            k = _floor(lo)
            while k < hi:
                a = max(lo, Fraction(k))
                b = min(hi, Fraction(k + 1))
                if a < b:
                    out.append((a - k, b - k))
                k += 1
        return IntervalSet(out)

    def mod1_is_injective(self) -> bool:
        """True when x -> x mod 1 is injective on this set up to measure zero."""
        return self.mod1().measure() == self.measure()

    def s_map(self) -> "IntervalSet":
        """Image under s(x) = (x + 1/2) mod 1; the input must lie in [0, 1)."""
        if self._ivs and (self.inf < 0 or self.sup > 1):
            raise ValueError("s_map input must be a subset of [0,1)")
        return self.translate(HALF).mod1()

    # -- serialisation ----------------------------------------------------

    def to_text(self) -> str:
        if not self._ivs:
            return "empty"
        return "u".join(f"[{rat_str(lo)},{rat_str(hi)})" for lo, hi in self._ivs)

    __str__ = to_text

    def to_json(self) -> list:
        return [[rat_str(lo), rat_str(hi)] for lo, hi in self._ivs]

    @staticmethod
    def from_json(data: Sequence[Sequence[str]]) -> "IntervalSet":
        return IntervalSet([(rat(lo), rat(hi)) for lo, hi in data])

    @staticmethod
    def parse(text: str) -> "IntervalSet":
        return _parse_interval_set(text)


_EMPTY = IntervalSet()
_UNIT = IntervalSet([(0, 1)])
_PLUS_INF = Fraction(1 << 512)  # sentinel for bisect keys only


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _parse_interval_set(text: str) -> IntervalSet:
    s = text.strip()
    if s == "" or s == "empty":
        return IntervalSet()
    pos = 0
    n = len(s)

    def skip_ws(p: int) -> int:
        while p < n and s[p].isspace():
            p += 1
        return p

    def parse_rational(p: int) -> Tuple[Fraction, int]:
        p = skip_ws(p)
        start = p
        if p < n and s[p] in "+-":
            p += 1
        digits0 = p
        while p < n and s[p].isdigit():
            p += 1
        if p == digits0:
            raise IntervalParseError("expected a rational number", start)
        if p < n and s[p] == "/":
            p += 1
            digits1 = p
            while p < n and s[p].isdigit():
                p += 1
            if p == digits1:
                raise IntervalParseError("expected a denominator", p)
        try:
            value = Fraction(s[start:p])
        except ZeroDivisionError:
            raise IntervalParseError("zero denominator", start) from None
        return value, p

    pairs = []
    while True:
        pos = skip_ws(pos)
        if pos >= n or s[pos] != "[":
            raise IntervalParseError("expected '['", pos)
        pos += 1
        lo, pos = parse_rational(pos)
        pos = skip_ws(pos)
        if pos >= n or s[pos] != ",":
            raise IntervalParseError("expected ','", pos)
        lo_pos = pos
        pos += 1
        hi, pos = parse_rational(pos)
        pos = skip_ws(pos)
        if pos >= n or s[pos] != ")":
            raise IntervalParseError("expected ')'", pos)
        if lo >= hi:
            raise IntervalParseError("interval endpoints must satisfy lo < hi", lo_pos)
        pairs.append((lo, hi))
        pos += 1
        pos = skip_ws(pos)
        if pos >= n:
            break
        if s[pos] not in "uU":
            raise IntervalParseError("expected 'u' between intervals", pos)
        pos += 1
    return IntervalSet(pairs)
