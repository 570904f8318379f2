"""Entropy and Hausdorff dimension from the kneading function of a hole.

For an admissible hole ``(a, b)`` and bases ``(q0, q1)`` let

    K(t) = (pi_t(b) - pi_t(a)) * (q1**t - 1),   pi_t = projection in bases (q0**t, q1**t).

``K`` is positive for large ``t``.  The dimension of the projected subshift
is ``min(1, s)`` for the largest zero ``s`` of ``K`` (or 0 if there is
none), and the entropy is ``log(beta)`` for the largest ``beta`` in (1, 2]
with ``pi_{beta,beta}(a) = pi_{beta,beta}(b)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .expansions import DEFAULT_DEPTH, DEFAULT_TOL, BasePair, greedy_endpoint, lazy_endpoint, series
from .sequences import Seq, Word, check_word
from .subshift import DEFAULT_MAX_REDUCTIONS, ExtremalPair, Hole, extremal_pair, normalize

GRID_POINTS = 512
T_MIN = 1e-4
ROOT_XTOL = 1e-13
TOUCH_TOL = 1e-12
COMPLEX_STEP = 1e-30

E_BASES = BasePair(math.e, math.e)

ENTROPY_ZERO = "entropy_zero"
KNEADING_ROOT = "kneading_root"
FULL_INTERVAL_BOUNDARY = "full_interval_boundary"
PRESSURE_ROOT = "pressure_root"


class BracketError(RuntimeError):
    """The kneading function is not positive at the top of the search interval."""


@dataclass
class RootResult:
    root: Optional[float]
    bracket: tuple[float, float]
    residual: float
    evaluations: int
    tangent: bool = False


@dataclass
class DimensionResult:
    value: float
    case_tag: str
    root_bracket: Optional[tuple[float, float]] = None
    diagnostics: dict = field(default_factory=dict)
    approximate: bool = False
    hole: Optional[Hole] = None
    entropy: Optional[float] = None

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ValueError(f"dimension {self.value} outside [0, 1]")


def default_t_max(q: BasePair) -> float:
    return 4 * max(1.0, math.log(2) / math.log(min(q.q0, q.q1)))


def ktilde(h: Hole, q: BasePair, t):
    """The normalised kneading function ``(pi_t(b) - pi_t(a)) (q1**t - 1)``.

    ``t`` may be a float or a numpy array of positive exponents.
    """
    l0, l1 = math.log(q.q0), math.log(q.q1)
    if isinstance(t, np.ndarray):
        z0, z1 = np.exp(-t * l0), np.exp(-t * l1)
        scale = np.expm1(t * l1)
    else:
        if t <= 0:
            raise ValueError("t must be positive")
        z0, z1 = math.exp(-t * l0), math.exp(-t * l1)
        scale = math.expm1(t * l1)
    return (series(h.b, z0, z1) - series(h.a, z0, z1)) * scale


def ktilde_slope(h: Hole, q: BasePair, t: float) -> float:
    """``d/dt ktilde`` by the complex-step rule, exact to rounding."""
    l0, l1 = math.log(q.q0), math.log(q.q1)
    tc = complex(t, COMPLEX_STEP)
    z0, z1 = cmath.exp(-tc * l0), cmath.exp(-tc * l1)
    val = (series(h.b, z0, z1) - series(h.a, z0, z1)) * (cmath.exp(tc * l1) - 1)
    return val.imag / COMPLEX_STEP


def largest_root(
    h: Hole,
    q: BasePair,
    t_min: float = T_MIN,
    t_max: Optional[float] = None,
    grid: int = GRID_POINTS,
    xtol: float = ROOT_XTOL,
    touch_tol: float = TOUCH_TOL,
) -> RootResult:
    """Largest zero of :func:`ktilde` in ``[t_min, t_max]``.

    Scans a geometric grid for the topmost sign change.  Zeros where the
    function touches 0 without changing sign (double roots, which occur for
    holes such as ``(u v^inf, v u^inf)``) fall between grid points, so every
    grid-local minimum above that sign change is refined: the minimum is
    located as a zero of the derivative, and counts as a root when the
    function value there is at most ``touch_tol``.  ``root`` is None when no
    zero exists.
    """
    if t_max is None:
        t_max = default_t_max(q)
    ts = np.geomspace(t_min, t_max, grid)
    ks = ktilde(h, q, ts)
    evals = grid
    if not ks[-1] > 0:
        raise BracketError(f"kneading function not positive at t_max={t_max} for {h}")
    f = lambda t: ktilde(h, q, t)  # noqa: E731
    nonpos = np.nonzero(ks <= 0)[0]
    floor = nonpos[-1] + 1 if len(nonpos) else 0

    for j in range(grid - 2, max(floor, 1) - 1, -1):
        if not (ks[j] <= ks[j - 1] and ks[j] <= ks[j + 1]):
            continue
        lo, hi = float(ts[j - 1]), float(ts[j + 1])
        slope = lambda t: ktilde_slope(h, q, t)  # noqa: E731
        if slope(lo) < 0 < slope(hi):
            tm, info = brentq(slope, lo, hi, xtol=xtol, full_output=True)
            evals += info.function_calls + 2
        else:
            opt = minimize_scalar(f, bounds=(lo, hi), method="bounded", options={"xatol": xtol})
            tm, evals = opt.x, evals + opt.nfev
        fm = f(tm)
        if fm < 0:
            root, info = brentq(f, tm, hi, xtol=xtol, full_output=True)
            return RootResult(float(root), (float(tm), hi), float(abs(f(root))), evals + info.function_calls)
        if fm <= touch_tol:
            return RootResult(float(tm), (lo, hi), float(fm), evals, tangent=True)

    if len(nonpos):
        i = nonpos[-1]
        lo, hi = ts[i], ts[i + 1]
        if ks[i] == 0:
            return RootResult(float(lo), (float(lo), float(hi)), 0.0, evals)
        root, info = brentq(f, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps, full_output=True)
        return RootResult(float(root), (float(lo), float(hi)), float(abs(f(root))), evals + info.function_calls)
    return RootResult(None, (float(t_min), float(t_max)), float(ks.min()), evals)


def entropy_root(h: Hole) -> RootResult:
    """Largest zero in ``t = log(beta)`` of the equal-base kneading function."""
    h = normalize(h)
    return largest_root(h, E_BASES, t_max=4.0)


def entropy(h: Hole) -> float:
    """Topological entropy (natural log) of the subshift with hole ``h``."""
    res = entropy_root(h)
    return 0.0 if res.root is None else res.root


def entropy_base(h: Hole) -> float:
    """``beta = exp(entropy)``."""
    return math.exp(entropy(h))


def dimension(h: Hole, q: BasePair) -> DimensionResult:
    """Hausdorff dimension of the projection of the subshift with hole ``h``."""
    h = normalize(h)
    ent = entropy(h)
    if ent == 0:
        return DimensionResult(0.0, ENTROPY_ZERO, hole=h, entropy=0.0)
    res = largest_root(h, q)
    if res.root is None:
        # positive entropy forces a root; reaching this is a numerical failure
        raise BracketError(f"no kneading root for {h} at {q} despite entropy {ent}")
    diagnostics = {"evaluations": res.evaluations, "residual": res.residual, "s": res.root}
    if res.tangent:
        diagnostics["tangent"] = True
    return DimensionResult(min(1.0, res.root), KNEADING_ROOT, res.bracket, diagnostics, hole=h, entropy=ent)


def pressure_dimension(q: BasePair) -> float:
    """Root ``s`` of ``q0**-s + q1**-s = 1``."""
    return brentq(lambda s: q.q0**-s + q.q1**-s - 1, 1e-12, 1e3, xtol=1e-15, rtol=4 * np.finfo(float).eps)


@dataclass
class UnivoqueAnalysis:
    """Endpoints and extremal pair behind a univoque-set dimension."""

    a: Seq
    b: Seq
    extremal: ExtremalPair
    exact: bool


def analyse_bases(
    q: BasePair, depth_cap: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL, max_reductions: int = DEFAULT_MAX_REDUCTIONS
) -> UnivoqueAnalysis:
    ra = greedy_endpoint(q, depth_cap, tol)
    rb = lazy_endpoint(q, depth_cap, tol)
    ex = extremal_pair(Hole(ra.sequence, rb.sequence), max_reductions)
    return UnivoqueAnalysis(ra.sequence, rb.sequence, ex, ra.exact and rb.exact)


BOUNDARY_TOL = 1e-14


def univoque_dimension(
    q: BasePair, depth_cap: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL, max_reductions: int = DEFAULT_MAX_REDUCTIONS
) -> DimensionResult:
    """Hausdorff dimension of the set of reals with a unique (q0, q1)-expansion."""
    excess = 1 / q.q0 + 1 / q.q1 - 1
    if abs(excess) <= BOUNDARY_TOL:
        return DimensionResult(1.0, FULL_INTERVAL_BOUNDARY, entropy=math.log(2))
    if excess < 0:
        s = pressure_dimension(q)
        return DimensionResult(min(1.0, s), PRESSURE_ROOT, diagnostics={"s": s}, entropy=math.log(2))
    an = analyse_bases(q, depth_cap, tol, max_reductions)
    res = dimension(an.extremal.hole, q)
    res.approximate = not an.exact
    res.diagnostics.update(a=str(an.a), b=str(an.b))
    return res


# --- substitutions ---------------------------------------------------------


@dataclass(frozen=True)
class Substitution:
    """The morphism ``0 -> image0``, ``1 -> image1`` with images starting 0 and 1."""

    image0: Word
    image1: Word

    def __post_init__(self):
        check_word(self.image0)
        check_word(self.image1)
        if not self.image0.startswith("0") or not self.image1.startswith("1"):
            raise ValueError("substitution must map 0 to 0{0,1}* and 1 to 1{0,1}*")

    def word(self, w: Word) -> Word:
        return "".join(self.image1 if c == "1" else self.image0 for c in w)

    def __call__(self, x):
        if isinstance(x, str):
            return self.word(x)
        return apply_substitution(self, x)

    def power(self, k: int) -> "Substitution":
        """The k-fold composition."""
        out = Substitution("0", "1")
        for _ in range(k):
            out = Substitution(self.word(out.image0), self.word(out.image1))
        return out


IDENTITY = Substitution("0", "1")


def apply_substitution(phi: Substitution, x: Seq) -> Seq:
    return Seq(phi.word(x.preperiod), phi.word(x.period))


def substitution_dimension(phi: Substitution, q: BasePair) -> float:
    """Dimension of the projection of ``phi({0,1}^inf)``: root of the two-word pressure equation."""
    w0 = math.prod(q[int(c)] for c in phi.image0)
    w1 = math.prod(q[int(c)] for c in phi.image1)
    s = brentq(lambda s: w0**-s + w1**-s - 1, 1e-12, 1e3, xtol=1e-15)
    return min(1.0, s)


@dataclass
class EqualDimReport:
    u: Word
    v: Word
    bases: BasePair
    d_periodic: float
    d_mixed: float
    hypothesis: bool
    entropy_periodic: float
    one_sided: dict = field(default_factory=dict)

    @property
    def difference(self) -> float:
        return abs(self.d_periodic - self.d_mixed)


def check_equaldim(u: Word, v: Word, q: BasePair, a: Optional[Seq] = None, b: Optional[Seq] = None) -> EqualDimReport:
    """Compare ``d(u^inf, v^inf)`` with ``d(u v^inf, v u^inf)``.

    The two agree whenever the subshift of ``(u^inf, v^inf)`` has positive
    entropy.  With ``b`` (resp. ``a``) supplied, also compares
    ``d(u^inf, b)`` with ``d(u b, b)`` (resp. ``d(a, v^inf)`` with ``d(a, v a)``),
    which agree unconditionally.
    """
    if not u.startswith("0") or not v.startswith("1"):
        raise ValueError("u must start with 0 and v with 1")
    ui, vi = Seq.periodic(u), Seq.periodic(v)
    periodic = Hole(ui, vi)
    mixed = Hole(vi.prepend(u), ui.prepend(v))
    ent = entropy(periodic)
    rep = EqualDimReport(u, v, q, dimension(periodic, q).value, dimension(mixed, q).value, ent > 0, ent)
    if b is not None:
        rep.one_sided["left"] = (dimension(Hole(ui, b), q).value, dimension(Hole(b.prepend(u), b), q).value)
    if a is not None:
        rep.one_sided["right"] = (dimension(Hole(a, vi), q).value, dimension(Hole(a, a.prepend(v)), q).value)
    return rep
