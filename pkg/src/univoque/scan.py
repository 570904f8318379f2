"""Grid evaluation of the univoque dimension and an adjacent-cell jump statistic."""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .expansions import DEFAULT_DEPTH, DEFAULT_TOL, BasePair
from .kneading import BracketError, univoque_dimension
from .subshift import DEFAULT_MAX_REDUCTIONS, ReductionLimitError

FAILURE = "numerical_failure"


@dataclass(frozen=True)
class AxisRange:
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if not self.lo > 1:
            raise ValueError(f"range must start above 1, got {self.lo}")
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        if self.steps > 1 and not self.hi > self.lo:
            raise ValueError(f"need hi > lo, got [{self.lo}, {self.hi}]")

    def points(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class ScanRow:
    q0: float
    q1: float
    dim: float
    entropy: float
    case_tag: str
    exact: bool


def evaluate(q0: float, q1: float, depth: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL, max_reductions: int = DEFAULT_MAX_REDUCTIONS) -> ScanRow:
    """One grid point; numerical failures become a row tagged ``numerical_failure``."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            r = univoque_dimension(BasePair(q0, q1), depth, tol, max_reductions)
        except (BracketError, ReductionLimitError):
            return ScanRow(q0, q1, math.nan, math.nan, FAILURE, False)
    ent = math.nan if r.entropy is None else r.entropy
    return ScanRow(q0, q1, r.value, ent, r.case_tag, not r.approximate)


def _evaluate_packed(args) -> ScanRow:
    return evaluate(*args)


def scan(
    q0_range: AxisRange,
    q1_range: AxisRange,
    threads: int = 1,
    depth: int = DEFAULT_DEPTH,
    tol: float = DEFAULT_TOL,
    max_reductions: int = DEFAULT_MAX_REDUCTIONS,
    sink: Optional[Callable[[ScanRow], None]] = None,
) -> list[ScanRow]:
    """Evaluate every grid point, sorted by ``(q0, q1)``.

    ``sink`` sees each row as it completes, so a caller can keep partial
    results if the scan is interrupted.
    """
    jobs = [(float(a), float(b), depth, tol, max_reductions) for a in q0_range.points() for b in q1_range.points()]
    rows: list[ScanRow] = []
    if threads <= 1:
        results: Iterable[ScanRow] = map(_evaluate_packed, jobs)
        for row in results:
            rows.append(row)
            if sink:
                sink(row)
    else:
        pool = ProcessPoolExecutor(max_workers=threads)
        try:
            for row in pool.map(_evaluate_packed, jobs, chunksize=max(1, len(jobs) // (8 * threads))):
                rows.append(row)
                if sink:
                    sink(row)
        except KeyboardInterrupt:
            pool.shutdown(wait=False, cancel_futures=True)
            raise
        pool.shutdown()
    return sorted(rows, key=lambda r: (r.q0, r.q1))


def as_grid(rows: list[ScanRow]) -> np.ndarray:
    """Dimension values as a ``len(q0s) x len(q1s)`` array."""
    q0s = sorted({r.q0 for r in rows})
    q1s = sorted({r.q1 for r in rows})
    grid = np.full((len(q0s), len(q1s)), math.nan)
    i0 = {v: i for i, v in enumerate(q0s)}
    i1 = {v: i for i, v in enumerate(q1s)}
    for r in rows:
        grid[i0[r.q0], i1[r.q1]] = r.dim
    return grid


@dataclass(frozen=True)
class Continuity:
    max_jump: float
    mean_jump: float
    argmax: tuple[int, int]
    axis: int


def continuity(grid: np.ndarray) -> Continuity:
    """Largest absolute difference between horizontally or vertically adjacent cells."""
    best = (-1.0, (0, 0), 0)
    jumps = []
    for axis in (0, 1):
        if grid.shape[axis] < 2:
            continue
        d = np.abs(np.diff(grid, axis=axis))
        jumps.append(d[~np.isnan(d)])
        if np.all(np.isnan(d)):
            continue
        k = int(np.nanargmax(d))
        idx = np.unravel_index(k, d.shape)
        if d[idx] > best[0]:
            best = (float(d[idx]), (int(idx[0]), int(idx[1])), axis)
    flat = np.concatenate(jumps) if jumps else np.array([])
    if best[0] < 0:
        return Continuity(0.0, 0.0, (0, 0), 0)
    return Continuity(best[0], float(flat.mean()) if flat.size else 0.0, best[1], best[2])
