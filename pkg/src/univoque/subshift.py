"""Binary subshifts with a lexicographic hole.

For ``a`` starting with 0 and ``b`` starting with 1, ``Omega_{a,b}`` is the
set of binary sequences none of whose suffixes lies strictly between ``a``
and ``b``.  Everything here is exact: sequences are eventually periodic, so
membership only involves finitely many distinct suffixes, and languages are
counted with a finite automaton that tracks the longest current match
against prefixes of ``a`` and ``b``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .expansions import BasePair, project
from .sequences import Seq, Word, parse

DEFAULT_MAX_REDUCTIONS = 10**4


class NotAdmissibleError(ValueError):
    """Raised when a counting routine receives a hole outside ``W``."""


class ReductionLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class Hole:
    """The open lexicographic interval ``]a, b[``."""

    a: Seq
    b: Seq

    def __post_init__(self):
        if self.a.digit(0) != 0:
            raise ValueError(f"left endpoint {self.a} must start with 0")
        if self.b.digit(0) != 1:
            raise ValueError(f"right endpoint {self.b} must start with 1")

    @classmethod
    def parse(cls, a: str, b: str) -> "Hole":
        return cls(parse(a), parse(b))

    def __str__(self) -> str:
        return f"]{self.a}, {self.b}["

    def contains(self, x: Seq) -> bool:
        """True iff ``a < x < b`` strictly."""
        return self.a < x < self.b

    @property
    def admissible(self) -> bool:
        return is_admissible(self)


@dataclass(frozen=True)
class ExtremalPair:
    ell: Seq
    r: Seq
    admissible: bool
    reductions: int = 0

    @property
    def hole(self) -> Hole:
        return Hole(self.ell, self.r)


def in_omega(x: Seq, h: Hole) -> bool:
    """Whether every suffix of ``x`` avoids the open hole."""
    return not any(h.contains(s) for _, s in x.suffixes())


def is_admissible(h: Hole) -> bool:
    """Membership of ``(a, b)`` in ``W``: both endpoints lie in their own subshift."""
    return in_omega(h.a, h) and in_omega(h.b, h)


def _first_inner_suffix(x: Seq, h: Hole) -> int | None:
    for n, s in x.suffixes():
        if n >= 1 and h.contains(s):
            return n
    return None


def extremal_pair(h: Hole, max_reductions: int = DEFAULT_MAX_REDUCTIONS) -> ExtremalPair:
    """Compute ``(ell_{a,b}, r_{a,b})``.

    Whenever the n-th suffix of an endpoint falls inside the hole, the
    endpoint is replaced by the periodic word on its first ``n`` digits,
    which leaves the subshift unchanged.  The left endpoint is reduced until
    stable, then the right one, alternating until neither moves.
    """
    a, b = h.a, h.b
    admissible = is_admissible(h)
    count = 0
    changed = True
    while changed:
        changed = False
        while (n := _first_inner_suffix(a, Hole(a, b))) is not None:
            a = Seq.periodic(a.prefix(n))
            count += 1
            changed = True
            if count > max_reductions:
                raise ReductionLimitError(f"more than {max_reductions} reductions for {h}")
        while (n := _first_inner_suffix(b, Hole(a, b))) is not None:
            b = Seq.periodic(b.prefix(n))
            count += 1
            changed = True
            if count > max_reductions:
                raise ReductionLimitError(f"more than {max_reductions} reductions for {h}")
    return ExtremalPair(a, b, admissible, count)


def normalize(h: Hole) -> Hole:
    """The admissible hole defining the same subshift."""
    if is_admissible(h):
        return h
    return extremal_pair(h).hole


def _require_admissible(h: Hole) -> None:
    if not is_admissible(h):
        raise NotAdmissibleError(f"{h} is not admissible; pass extremal_pair(h).hole instead")


# --- language automaton -------------------------------------------------


def _failure(w: Word) -> list[int]:
    """KMP border table: ``fail[k]`` is the longest proper border of ``w[:k]``."""
    fail = [0] * (len(w) + 1)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = fail[k]
        if w[i] == w[k]:
            k += 1
        fail[i + 1] = k
    return fail


class LanguageAutomaton:
    """Deterministic automaton accepting the words of ``L_{a,b,n}``.

    The state is the pair of longest suffix matches against prefixes of
    ``a`` and ``b``.  Every shorter match is a border of the longest, so the
    pair determines all pending comparisons.  A digit is rejected if some
    pending comparison against ``a`` sees a 1 where ``a`` has a 0 (the suffix
    climbs above ``a``), or against ``b`` sees a 0 where ``b`` has a 1.
    For admissible holes there are no dead ends, so accepted words are
    exactly the factors of the subshift.
    """

    def __init__(self, h: Hole, depth: int):
        self.hole = h
        self.depth = depth
        self.a = h.a.prefix(depth + 1)
        self.b = h.b.prefix(depth + 1)
        self.fail_a = _failure(self.a)
        self.fail_b = _failure(self.b)
        self._step_cache: dict[tuple[int, int, str], tuple[int, int] | None] = {}

    @staticmethod
    def _advance(k: int, c: str, ref: Word, fail: list[int], lead: str) -> int | None:
        """New longest match length, or None if some pending match is violated."""
        best = 0
        j = k
        while True:
            if j == 0:
                if c == lead:
                    best = max(best, 1)
                break
            r = ref[j]
            if c == r:
                best = max(best, j + 1)
            elif (lead == "0" and c > r) or (lead == "1" and c < r):
                return None
            j = fail[j]
        return best

    def step(self, state: tuple[int, int], c: str) -> tuple[int, int] | None:
        key = (state[0], state[1], c)
        try:
            return self._step_cache[key]
        except KeyError:
            pass
        ka = self._advance(state[0], c, self.a, self.fail_a, "0")
        kb = None if ka is None else self._advance(state[1], c, self.b, self.fail_b, "1")
        out = None if kb is None else (ka, kb)
        self._step_cache[key] = out
        return out

    def counts(self, n: int) -> list[int]:
        """``[#L_0, #L_1, ..., #L_n]``."""
        layer = Counter({(0, 0): 1})
        out = [1]
        for _ in range(n):
            nxt: Counter = Counter()
            for state, c in layer.items():
                for d in "01":
                    s = self.step(state, d)
                    if s is not None:
                        nxt[s] += c
            layer = nxt
            out.append(sum(layer.values()))
        return out

    def weight_counts(self, n: int) -> dict[int, int]:
        """``{k: #{w in L_n with k ones}}``."""
        layer = Counter({((0, 0), 0): 1})
        for _ in range(n):
            nxt: Counter = Counter()
            for (state, ones), c in layer.items():
                for d in "01":
                    s = self.step(state, d)
                    if s is not None:
                        nxt[(s, ones + (d == "1"))] += c
            layer = nxt
        out: Counter = Counter()
        for (_, ones), c in layer.items():
            out[ones] += c
        return dict(out)

    def words(self, n: int) -> list[Word]:
        """All words of length ``n``, in lexicographic order (depth-first)."""
        out: list[Word] = []
        stack = [("", (0, 0))]
        while stack:
            w, state = stack.pop()
            if len(w) == n:
                out.append(w)
                continue
            for d in "10":
                s = self.step(state, d)
                if s is not None:
                    stack.append((w + d, s))
        return out


@lru_cache(maxsize=256)
def automaton(h: Hole, depth: int) -> LanguageAutomaton:
    return LanguageAutomaton(h, depth)


def language_count(h: Hole, n: int) -> int:
    """``#L_{a,b,n}`` for an admissible hole."""
    _require_admissible(h)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return automaton(h, max(n, 1)).counts(n)[n]


def language_counts(h: Hole, n: int) -> list[int]:
    _require_admissible(h)
    return automaton(h, max(n, 1)).counts(n)


def language(h: Hole, n: int) -> list[Word]:
    _require_admissible(h)
    return automaton(h, max(n, 1)).words(n)


def q_words(h: Hole, n: int) -> list[Word]:
    """``Q_{a,b,n}``: words ``w`` of ``L_n`` with ``w a`` and ``w b`` in the subshift."""
    _require_admissible(h)
    return [w for w in language(h, n) if in_omega(h.a.prepend(w), h) and in_omega(h.b.prepend(w), h)]


def q_count(h: Hole, n: int) -> int:
    return len(q_words(h, n))


def check_decomposition(h: Hole, n: int) -> bool:
    """Verify the unique factorisation of ``L_n`` words into a Q-word and a prefix of ``a`` (resp. ``b``).

    Each ``w`` in ``L_n`` other than ``1^n`` must split in exactly one way as
    ``u a_1...a_{n-k}`` with ``u`` in ``Q_k``, ``0 <= k < n``; symmetrically
    with ``b`` for ``w != 0^n``.
    """
    _require_admissible(h)
    if n < 1:
        return True
    qsets = [set(q_words(h, k)) for k in range(n)]
    a, b = h.a.prefix(n), h.b.prefix(n)
    for w in language(h, n):
        for ref, excluded in ((a, "1" * n), (b, "0" * n)):
            if w == excluded:
                continue
            splits = sum(1 for k in range(n) if w[k:] == ref[: n - k] and w[:k] in qsets[k])
            if splits != 1:
                return False
    return True


def lexmax_zero_prefix(h: Hole, n: int) -> Word:
    """Greedy length-``n`` prefix of the largest subshift element starting with 0."""
    _require_admissible(h)
    auto = automaton(h, n)
    state = auto.step((0, 0), "0")
    w = "0"
    while len(w) < n:
        s1 = auto.step(state, "1")
        if s1 is not None:
            w, state = w + "1", s1
        else:
            w, state = w + "0", auto.step(state, "0")
    return w


def lexmin_one_prefix(h: Hole, n: int) -> Word:
    """Greedy length-``n`` prefix of the smallest subshift element starting with 1."""
    _require_admissible(h)
    auto = automaton(h, n)
    state = auto.step((0, 0), "1")
    w = "1"
    while len(w) < n:
        s0 = auto.step(state, "0")
        if s0 is not None:
            w, state = w + "0", s0
        else:
            w, state = w + "1", auto.step(state, "1")
    return w


@dataclass(frozen=True)
class CylinderExtremes:
    max_zero: float
    min_one: float

    @property
    def full(self) -> bool:
        """The two cylinders overlap, so the projection fills ``[0, 1/(q1-1)]``."""
        return self.max_zero >= self.min_one


def cylinder_extreme(h: Hole, q: BasePair) -> CylinderExtremes:
    """Projections of the lexicographic extremes of the cylinders ``[0]`` and ``[1]``.

    For an admissible hole every element starting with 0 is at most ``a``
    and ``a`` itself belongs to the subshift, so the greedy largest element
    of ``[0]`` is ``a``; symmetrically the smallest element of ``[1]`` is ``b``.
    """
    _require_admissible(h)
    return CylinderExtremes(project(h.a, q), project(h.b, q))
