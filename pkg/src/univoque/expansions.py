"""Projection of binary sequences to the line and (q0, q1)-expansions of reals.

A digit sequence ``i_1 i_2 ...`` represents

    sum_k i_k / (q_{i_1} * ... * q_{i_k})

and for eventually periodic input the sum is evaluated in closed form: a
finite sum over the preperiod plus a geometric series over the period.  The
evaluation only uses ``+ - * /`` and ``**``, so it works unchanged for
floats, numpy arrays (vectorised over an exponent) and ``mpmath.mpf``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import mpmath
import numpy as np

from .sequences import EventuallyPeriodicSequence, Seq, flip

DEFAULT_TOL = 1e-12
DEFAULT_DEPTH = 256


class DomainError(ValueError):
    """Raised when a point lies outside the domain of the requested expansion."""


@dataclass(frozen=True)
class BasePair:
    q0: float
    q1: float

    def __post_init__(self):
        if not (self.q0 > 1 and self.q1 > 1):
            raise ValueError(f"bases must exceed 1, got q0={self.q0}, q1={self.q1}")

    def __getitem__(self, digit: int):
        return self.q1 if digit else self.q0

    def swapped(self) -> "BasePair":
        return BasePair(self.q1, self.q0)

    def power(self, t) -> "BasePair":
        return BasePair(self.q0**t, self.q1**t)

    @property
    def top(self):
        """Right endpoint ``1/(q1-1)`` of the attractor."""
        return 1 / (self.q1 - 1)

    @property
    def overlapping(self) -> bool:
        """True when ``q0 + q1 >= q0*q1``, the regime where expansions are non-unique."""
        return self.q0 + self.q1 >= self.q0 * self.q1


@dataclass(frozen=True)
class ExpansionResult:
    sequence: Seq
    exact: bool
    depth_used: int
    in_regime: bool = True


def series(x: Seq, z0, z1):
    """``sum_k i_k z_{i_1} ... z_{i_k}`` for the inverse bases ``z_i = 1/q_i``."""
    z = (z0, z1)
    total = 0
    weight = 1
    for c in x.preperiod:
        weight = weight * z[c == "1"]
        if c == "1":
            total = total + weight
    cycle_weight = 1
    cycle_sum = 0
    for c in x.period:
        cycle_weight = cycle_weight * z[c == "1"]
        if c == "1":
            cycle_sum = cycle_sum + cycle_weight
    return total + weight * cycle_sum / (1 - cycle_weight)


def project(x: Seq, q: BasePair):
    """The real number whose (q0, q1)-expansion is ``x``."""
    return series(x, 1 / q.q0, 1 / q.q1)


def project_power(x: Seq, q: BasePair, t):
    """``project(x, (q0**t, q1**t))``; ``t`` may be a numpy array."""
    if isinstance(t, np.ndarray):
        z0, z1 = np.exp(-t * math.log(q.q0)), np.exp(-t * math.log(q.q1))
    else:
        if t <= 0:
            raise ValueError("exponent must be positive")
        z0, z1 = q.q0 ** (-t), q.q1 ** (-t)
    return series(x, z0, z1)


def apply_T(i: int, x, q: BasePair):
    """The expanding branch ``T_i(x) = q_i x - i``."""
    return q[i] * x - i


def _forced_period(digits: list[int]) -> tuple[int, int]:
    """Pick ``(start, p)`` so that ``digits[start:]`` is p-periodic and as long as possible."""
    n = len(digits)
    best = (n - 1, 1)
    best_len = 1
    for p in range(1, n // 3 + 1):
        i = n - 1 - p
        while i >= 0 and digits[i] == digits[i + p]:
            i -= 1
        run = n - 1 - i
        # need at least two full periods to call it a repeat
        if run >= 2 * p and run > best_len:
            best_len = run
            best = (i + 1, p)
    return best


def _recurrence_key(y, tol):
    return math.floor(float(y) / tol)


def quasi_greedy(x, q: BasePair, depth_cap: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL) -> ExpansionResult:
    """Lexicographically largest expansion of ``x`` not ending in ``0^inf``.

    Digits follow ``i_n = 1`` iff the current orbit point exceeds ``1/q1``
    (ties within ``tol`` give 0).  The orbit is stopped as soon as it returns
    within ``tol`` of an earlier point; otherwise the sequence is truncated at
    ``depth_cap`` digits, its tail period is guessed from the longest
    repeating suffix and the result is marked ``exact=False``.

    Arithmetic follows the type of ``x`` and the bases, so passing
    ``mpmath.mpf`` values runs the orbit in extended precision.
    """
    top = q.top
    if not (0 < x <= top * (1 + 1e-15)):
        raise DomainError(f"x={x} outside (0, 1/(q1-1)]")
    in_regime = bool(q.overlapping)
    if not in_regime:
        warnings.warn("q0 + q1 < q0*q1: quasi-greedy recursion run outside its regime", stacklevel=2)
    threshold = 1 / q.q1
    y = x
    seen: dict[int, list[tuple[float, int]]] = {_recurrence_key(y, tol): [(float(y), 0)]}
    digits: list[int] = []
    for n in range(1, depth_cap + 1):
        d = 1 if y > threshold + tol else 0
        y = apply_T(d, y, q)
        digits.append(d)
        fy = float(y)
        key = _recurrence_key(y, tol)
        for k in (key - 1, key, key + 1):
            for fm, m in seen.get(k, ()):
                if abs(fy - fm) <= tol:
                    pre = "".join(map(str, digits[:m]))
                    per = "".join(map(str, digits[m:]))
                    return ExpansionResult(EventuallyPeriodicSequence(pre, per), True, n, in_regime)
        seen.setdefault(key, []).append((fy, n))
    start, p = _forced_period(digits)
    pre = "".join(map(str, digits[:start]))
    per = "".join(map(str, digits[start : start + p]))
    return ExpansionResult(EventuallyPeriodicSequence(pre, per), False, depth_cap, in_regime)


def reflect_point(x, q: BasePair):
    """Affine conjugacy sending (q0, q1)-expansions to flipped (q1, q0)-expansions.

    ``project(u.flipped(), q.swapped()) == reflect_point(project(u, q), q)``.
    """
    return (1 - (q.q1 - 1) * x) / (q.q0 - 1)


def quasi_lazy(x, q: BasePair, depth_cap: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL) -> ExpansionResult:
    """Lexicographically smallest expansion of ``x`` not ending in ``1^inf``.

    Obtained from the quasi-greedy expansion in the swapped bases through the
    digit flip, which reverses the lexicographic order.
    """
    if not (0 <= x < q.top):
        raise DomainError(f"x={x} outside [0, 1/(q1-1))")
    if x == 0:
        return ExpansionResult(EventuallyPeriodicSequence("", "0"), True, 0, q.overlapping)
    res = quasi_greedy(reflect_point(x, q), q.swapped(), depth_cap, tol)
    return ExpansionResult(res.sequence.flipped(), res.exact, res.depth_used, res.in_regime)


def working_digits(q: BasePair, depth_cap: int) -> int:
    """Decimal precision keeping ``depth_cap`` orbit steps accurate."""
    return int(depth_cap * math.log10(max(q.q0, q.q1))) + 30


def greedy_endpoint(q: BasePair, depth_cap: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL, precise: bool = True) -> ExpansionResult:
    """``a_{q0,q1}``: the quasi-greedy expansion of ``1/q1``.

    With ``precise`` the orbit runs in mpmath at a precision that keeps all
    ``depth_cap`` digits exact for the given (float) bases; in double
    precision digits beyond roughly 50 steps are rounding noise.
    """
    if not precise:
        return quasi_greedy(1 / q.q1, q, depth_cap, tol)
    with mpmath.workdps(working_digits(q, depth_cap)):
        qq = BasePair(mpmath.mpf(q.q0), mpmath.mpf(q.q1))
        return quasi_greedy(1 / qq.q1, qq, depth_cap, tol)


def lazy_endpoint(q: BasePair, depth_cap: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL, precise: bool = True) -> ExpansionResult:
    """``b_{q0,q1}``: the quasi-lazy expansion of ``1/(q0(q1-1))``.

    The reflected point is exactly ``1/q0``, so it is passed directly rather
    than through :func:`reflect_point` to avoid rounding.
    """
    res = greedy_endpoint(q.swapped(), depth_cap, tol, precise)
    return ExpansionResult(res.sequence.flipped(), res.exact, res.depth_used, res.in_regime)


__all__ = [
    "BasePair",
    "DomainError",
    "ExpansionResult",
    "apply_T",
    "flip",
    "greedy_endpoint",
    "lazy_endpoint",
    "project",
    "project_power",
    "quasi_greedy",
    "quasi_lazy",
    "reflect_point",
    "series",
]
