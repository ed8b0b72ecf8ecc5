"""Eventually periodic binary words in canonical form.

An :class:`EPWord` is an infinite binary word ``preperiod . period period ...``
stored canonically: the period is primitive (not a power of a shorter word)
and the preperiod is minimal (its last digit differs from the digit the
rotated period would supply).  Two EPWords describe the same digit stream
iff their canonical forms are equal.

Text form: ``preperiod(period)``, e.g. ``01(100)``; the constant streams are
``(0)`` and ``(1)``.
"""

from __future__ import annotations

from typing import Iterable, Tuple


def _as_word(digits) -> str:
    if isinstance(digits, str):
        word = digits
    else:
        word = "".join(str(d) for d in digits)
    if any(c not in "01" for c in word):
        raise ValueError(f"binary word expected, got {digits!r}")
    return word


def _primitive(period: str) -> str:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            return period[:d]
    return period


class EPWord:
    """Canonical eventually periodic binary word."""

    __slots__ = ("pre", "per")

    def __init__(self, preperiod="", period="0"):
        pre = _as_word(preperiod)
        per = _primitive(_as_word(period))
        if not per:
            raise ValueError("period must be nonempty")
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        self.pre = pre
        self.per = per

    # -- digit access -------------------------------------------------------

    def digit(self, i: int) -> int:
        """The i-th digit of the stream, 0-indexed."""
        if i < len(self.pre):
            return int(self.pre[i])
        return int(self.per[(i - len(self.pre)) % len(self.per)])

    def digits(self, n: int) -> Tuple[int, ...]:
        return tuple(self.digit(i) for i in range(n))

    @property
    def period_length(self) -> int:
        return len(self.per)

    @property
    def is_constant_tail(self) -> bool:
        return self.per in ("0", "1")

    # -- structure ----------------------------------------------------------

    def prepend(self, digit: int) -> "EPWord":
        return EPWord(str(digit) + self.pre, self.per)

    def shift(self, n: int) -> "EPWord":
        """Drop the first n digits."""
        if n <= len(self.pre):
            return EPWord(self.pre[n:], self.per)
        k = (n - len(self.pre)) % len(self.per)
        return EPWord("", self.per[k:] + self.per[:k])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EPWord)
            and self.pre == other.pre
            and self.per == other.per
        )

    def __hash__(self) -> int:
        return hash((self.pre, self.per))

    def __repr__(self) -> str:
        return f"EPWord({self.to_text()!r})"

    # -- serialisation --------------------------------------------------------

    def to_text(self) -> str:
        return f"{self.pre}({self.per})"

    __str__ = to_text

    @staticmethod
    def parse(text: str) -> "EPWord":
        s = text.strip()
        i = s.find("(")
        if i < 0 or not s.endswith(")"):
            raise ValueError(f"EPWord text must look like 'pre(period)': {text!r}")
        return EPWord(s[:i], s[i + 1 : -1])

    @staticmethod
    def zero() -> "EPWord":
        return EPWord("", "0")

    @staticmethod
    def one() -> "EPWord":
        return EPWord("", "1")


def rotations(word: str) -> list:
    """All rotations of a finite word, starting with the word itself."""
    return [word[k:] + word[:k] for k in range(len(word))]
