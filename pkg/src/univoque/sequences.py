"""Eventually periodic binary sequences and their lexicographic algebra.

Finite words are plain ``str`` objects over the characters ``0`` and ``1``;
for words of equal length Python's string comparison is the lexicographic
order.  Infinite sequences are :class:`EventuallyPeriodicSequence` values,
always kept in canonical form (shortest preperiod, primitive period), so
``==`` and ``hash`` are structural.

The literal grammar is ``[01]*"("[01]+")"``; ``011(100)`` denotes
``011100100100...``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator

Word = str

#: Upper bound on digit comparisons performed by :func:`compare`.
COMPARE_LIMIT = 10**6

_LITERAL = re.compile(r"([01]*)\(([01]*)\)")


class SequenceSyntaxError(ValueError):
    """Raised when a sequence literal does not match ``[01]*"("[01]+")"``."""


class ComparisonLimitError(RuntimeError):
    """Raised when comparing two sequences would exceed the digit budget."""


def check_word(w: str) -> Word:
    if any(c not in "01" for c in w):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def primitive_root(w: Word) -> Word:
    """Shortest ``u`` with ``w == u * k``."""
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p]
    return w


def flip(w: Word) -> Word:
    return w.translate(str.maketrans("01", "10"))


@dataclass(frozen=True)
class EventuallyPeriodicSequence:
    """The infinite sequence ``preperiod + period + period + ...``.

    Construction normalises to canonical form, so two instances compare equal
    exactly when they describe the same infinite sequence.
    """

    preperiod: Word
    period: Word

    def __post_init__(self):
        pre, per = check_word(self.preperiod), check_word(self.period)
        if not per:
            raise ValueError("period must be nonempty")
        per = primitive_root(per)
        # roll trailing preperiod digits into the period
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def periodic(cls, w: Word) -> "EventuallyPeriodicSequence":
        return cls("", w)

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})"

    def __repr__(self) -> str:
        return f"seq({str(self)!r})"

    def __len__(self):
        raise TypeError("infinite sequence has no len(); use prefix()")

    @property
    def tail_start(self) -> int:
        return len(self.preperiod)

    def digit(self, i: int) -> int:
        """Digit at 0-based position ``i``."""
        pre, per = self.preperiod, self.period
        if i < len(pre):
            return int(pre[i])
        return int(per[(i - len(pre)) % len(per)])

    def prefix(self, n: int) -> Word:
        """The first ``n`` digits as a word."""
        pre, per = self.preperiod, self.period
        if n <= len(pre):
            return pre[:n]
        k = n - len(pre)
        reps = -(-k // len(per))
        return pre + (per * reps)[:k]

    def __iter__(self) -> Iterator[int]:
        i = 0
        while True:
            yield self.digit(i)
            i += 1

    def shift(self, n: int) -> "EventuallyPeriodicSequence":
        """Drop the first ``n`` digits."""
        if n < 0:
            raise ValueError("shift amount must be nonnegative")
        pre, per = self.preperiod, self.period
        if n <= len(pre):
            return EventuallyPeriodicSequence(pre[n:], per)
        r = (n - len(pre)) % len(per)
        return EventuallyPeriodicSequence("", per[r:] + per[:r])

    def suffixes(self) -> Iterator[tuple[int, "EventuallyPeriodicSequence"]]:
        """All distinct shifts ``(n, shift(self, n))``; later shifts repeat these."""
        for n in range(len(self.preperiod) + len(self.period)):
            yield n, self.shift(n)

    def prepend(self, w: Word) -> "EventuallyPeriodicSequence":
        return EventuallyPeriodicSequence(check_word(w) + self.preperiod, self.period)

    def flipped(self) -> "EventuallyPeriodicSequence":
        """Digitwise complement ``i -> 1 - i``; reverses the lexicographic order."""
        return EventuallyPeriodicSequence(flip(self.preperiod), flip(self.period))

    def is_ultimately(self, d: int) -> bool:
        return self.period == str(d)

    # lexicographic order
    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0


Seq = EventuallyPeriodicSequence


def decisive_length(x: Seq, y: Seq) -> int:
    """Number of leading digits that determine the order of ``x`` and ``y``."""
    return max(len(x.preperiod), len(y.preperiod)) + math.lcm(len(x.period), len(y.period))


def compare(x: Seq, y: Seq, limit: int = COMPARE_LIMIT) -> int:
    """Return -1, 0 or 1 as ``x`` is lexicographically below, equal to or above ``y``."""
    if x == y:
        return 0
    n = decisive_length(x, y)
    if n > limit:
        raise ComparisonLimitError(f"comparison of {x} and {y} needs {n} digits (limit {limit})")
    px, py = x.prefix(n), y.prefix(n)
    if px == py:
        return 0
    return -1 if px < py else 1


def shift(x: Seq, n: int) -> Seq:
    return x.shift(n)


def concat(w: Word, x: Seq) -> Seq:
    """The sequence ``w x``."""
    return x.prepend(w)


def parse(text: str) -> Seq:
    """Parse a literal such as ``"011(100)"`` or ``"(0)"``."""
    m = _LITERAL.fullmatch(text.strip())
    if m is None:
        raise SequenceSyntaxError(f"malformed sequence literal {text!r}; expected [01]*([01]+)")
    if not m.group(2):
        raise SequenceSyntaxError(f"empty period in {text!r}")
    return EventuallyPeriodicSequence(m.group(1), m.group(2))


def render(x: Seq) -> str:
    return str(x)


def word_compare(u: Word, v: Word) -> int:
    """Lexicographic comparison of two words of the same length."""
    if len(u) != len(v):
        raise ValueError("words must have equal length")
    return (u > v) - (u < v)
