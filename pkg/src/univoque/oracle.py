"""Brute-force cross-checks that share no code path with the kneading solver.

* :func:`naive_language` enumerates words by checking every suffix against
  prefixes of the hole endpoints with plain string comparison.
* :func:`moran_estimate` solves the depth-n pressure equation
  ``sum_{w in L_n} (q_{w_1} ... q_{w_n})**-s = 1``; these roots decrease
  towards the Hausdorff dimension as ``n`` grows.
* :func:`series_identity_check` evaluates truncations of the generating
  functions ``L``, ``Q``, ``A`` and the closed-form kneading invariant
  ``K`` and measures how far ``L = z1/(1-z1) + A Q`` and ``Q K = z1/(1-z1)``
  are from holding, against a geometric bound on the truncation error.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from scipy.optimize import brentq

from .expansions import BasePair, series
from .sequences import Word
from .subshift import Hole, in_omega

ENUMERATION_CAP = 20
MORAN_CAP = 18
SERIES_CAP = 18
MORAN_XTOL = 1e-10


class OracleLimitError(ValueError):
    pass


def _extends(w: Word, a: Word, b: Word) -> bool:
    """Check every suffix of ``w`` against the matching prefix of ``a`` or ``b``."""
    m = len(w)
    for j in range(m):
        tail = w[j:]
        if tail[0] == "0":
            if tail > a[: m - j]:
                return False
        elif tail < b[: m - j]:
            return False
    return True


@lru_cache(maxsize=128)
def _naive(h: Hole, n: int, lookahead: int) -> tuple[Word, ...]:
    total = n + lookahead
    a, b = h.a.prefix(total), h.b.prefix(total)
    out: list[Word] = []

    def grow(w: Word) -> bool:
        if len(w) == total:
            return True
        alive = False
        for d in "01":
            v = w + d
            if _extends(v, a, b) and grow(v):
                alive = True
                if len(w) >= n:
                    break
        return alive

    def walk(w: Word):
        if len(w) == n:
            if lookahead == 0 or grow(w):
                out.append(w)
            return
        for d in "01":
            v = w + d
            if _extends(v, a, b):
                walk(v)

    walk("")
    return tuple(out)


def naive_language(h: Hole, n: int, lookahead: int = 0) -> list[Word]:
    """Words of length ``n`` none of whose suffixes is excluded by the hole.

    With ``lookahead > 0`` a word is kept only if it extends to a valid word
    of length ``n + lookahead``, which removes dead ends for holes that are
    not admissible.
    """
    if n > ENUMERATION_CAP:
        raise OracleLimitError(f"n={n} exceeds enumeration cap {ENUMERATION_CAP}")
    return list(_naive(h, n, lookahead))


def naive_q_words(h: Hole, n: int) -> list[Word]:
    return [w for w in naive_language(h, n) if in_omega(h.a.prepend(w), h) and in_omega(h.b.prepend(w), h)]


def ones_profile(words: list[Word]) -> Counter:
    return Counter(w.count("1") for w in words)


def moran_estimate(h: Hole, q: BasePair, n: int, s_max: float = 1.5) -> float:
    """Root of the depth-n pressure equation, by bracketing in ``[0, s_max]``."""
    if n > MORAN_CAP:
        raise OracleLimitError(f"n={n} exceeds Moran depth cap {MORAN_CAP}")
    profile = ones_profile(naive_language(h, n))
    l0, l1 = math.log(q.q0), math.log(q.q1)

    def pressure(s):
        return math.log(sum(c * math.exp(-s * ((n - k) * l0 + k * l1)) for k, c in profile.items()))

    if pressure(0) <= 0:
        return 0.0
    if pressure(s_max) >= 0:
        return s_max
    return brentq(pressure, 0.0, s_max, xtol=MORAN_XTOL)


def entropy_upper(h: Hole, n: int) -> float:
    """``log(#L_n) / n``; an upper bound for the entropy."""
    return math.log(len(naive_language(h, n))) / n


@dataclass(frozen=True)
class SeriesResiduals:
    laq: float
    qk: float
    laq_bound: float
    qk_bound: float

    @property
    def ok(self) -> bool:
        return self.laq <= self.laq_bound and self.qk <= self.qk_bound


def series_identity_check(h: Hole, z0: float, z1: float, N: int) -> SeriesResiduals:
    """Residuals of the truncated identities ``L = z1/(1-z1) + A Q`` and ``Q K = z1/(1-z1)``.

    With ``rho = z0 + z1 < 1`` every length-n slice of ``L``, ``Q`` and of
    the product ``A Q`` weighs at most ``rho**n``, which gives the tail
    bounds returned alongside the residuals.
    """
    if not (0 < z0 < 0.5 and 0 < z1 < 0.5):
        raise ValueError("z0, z1 must lie in (0, 1/2)")
    if N > SERIES_CAP:
        raise OracleLimitError(f"N={N} exceeds series cap {SERIES_CAP}")
    z = (z0, z1)

    def weight(w: Word) -> float:
        return math.prod(z[c == "1"] for c in w)

    L = sum(weight(w) for n in range(1, N + 1) for w in naive_language(h, n))
    Q = sum(weight(w) for n in range(0, N + 1) for w in naive_q_words(h, n))
    a = h.a.prefix(N)
    A = sum(weight(a[:n]) for n in range(1, N + 1))
    K = series(h.b, z0, z1) - series(h.a, z0, z1)
    target = z1 / (1 - z1)

    rho = z0 + z1
    tail = rho ** (N + 1) / (1 - rho)
    zmax = max(z0, z1)
    k_bound = 2 * zmax / (1 - zmax)
    return SeriesResiduals(
        laq=abs(L - target - A * Q),
        qk=abs(Q * K - target),
        laq_bound=2 * tail,
        qk_bound=tail * k_bound,
    )


@dataclass(frozen=True)
class OracleReport:
    depth: int
    language_size: int
    entropy_upper: float
    dim_estimate: float
    series_residuals: SeriesResiduals


def oracle_report(h: Hole, q: BasePair, n: int, z: float = 0.3) -> OracleReport:
    words = naive_language(h, n)
    return OracleReport(
        depth=n,
        language_size=len(words),
        entropy_upper=math.log(len(words)) / n if n else 0.0,
        dim_estimate=moran_estimate(h, q, n),
        series_residuals=series_identity_check(h, z, z, min(n, SERIES_CAP)),
    )
