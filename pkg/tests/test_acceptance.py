"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import io
import json
import math
import os
import sys
import time

import mpmath
import numpy as np
import pytest
from scipy.optimize import bisect

sys.path.insert(0, os.path.dirname(__file__))

from conftest import FIXTURE_HOLES  # noqa: E402
from univoque.cli import main  # noqa: E402
from univoque.expansions import BasePair  # noqa: E402
from univoque.fixtures import run_all, summary  # noqa: E402
from univoque.kneading import check_equaldim, dimension, entropy, univoque_dimension  # noqa: E402
from univoque.oracle import moran_estimate, naive_language, series_identity_check  # noqa: E402
from univoque.scan import AxisRange, as_grid, continuity, scan  # noqa: E402
from univoque.subshift import Hole, check_decomposition, language_count  # noqa: E402


def _cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def criterion_1():
    q0 = float(mpmath.findroot(lambda x: x**3 - 2 * x**2 - x + 1, 2.25))
    q1 = 1 + 1 / q0
    t = time.perf_counter()
    code_e, out_e = _cli("expand", repr(q0), repr(q1), "--json")
    code_d, out_d = _cli("dim", repr(q0), repr(q1), "--json")
    elapsed = time.perf_counter() - t
    e, d = json.loads(out_e), json.loads(out_d)
    seqs = (e["a"], e["b"], e["ell"], e["r"])
    ok = (
        code_e == code_d == 0
        and seqs == ("011(100)", "(10)", "(011)", "(10)")
        and abs(d["value"] - 0.512255) <= 1e-5
        and elapsed < 1.0
    )
    return ok, f"a,b,ell,r={','.join(seqs)} s={d['value']:.9f} time={elapsed:.3f}s"


def criterion_2():
    oracle = bisect(lambda x: x**3 - x - 1, 1.0, 2.0, xtol=1e-15)
    beta = math.exp(entropy(Hole.parse("(011)", "(10)")))
    ok = abs(beta - 1.3247179572) < 1e-9 and abs(beta - oracle) < 1e-9
    return ok, f"beta={beta:.13f} bisection={oracle:.13f}"


def criterion_3():
    e1 = entropy(Hole.parse("(01)", "(10)"))
    e2 = entropy(Hole.parse("01(10)", "10(01)"))
    e3 = entropy(Hole.parse("0(1)", "1(0)"))
    ok = e1 == 0 and abs(e2 - 0.5 * math.log(2)) < 1e-9 and abs(e3 - math.log(2)) < 1e-9
    return ok, f"h={e1:.3g}, {e2:.12f} (target {0.5 * math.log(2):.12f}), {e3:.12f}"


def criterion_4():
    d33 = univoque_dimension(BasePair(3, 3)).value
    d22 = univoque_dimension(BasePair(2, 2)).value
    d15 = univoque_dimension(BasePair(1.5, 1.5)).value
    ok = abs(d33 - math.log(2) / math.log(3)) < 1e-9 and d22 == 1.0 and d15 == 0.0
    return ok, f"d(3,3)={d33:.12f} d(2,2)={d22!r} d(1.5,1.5)={d15!r}"


CRIT5_HOLES = [("(011)", "(10)"), ("01(10)", "10(01)"), ("0(1)", "1(0)")]
CRIT5_BASES = [BasePair(2, 2), BasePair(2.247, 1.445), BasePair(1.9, 2.1)]


def criterion_5():
    t = time.perf_counter()
    worst, monotone, parts = 0.0, True, []
    for a, b in CRIT5_HOLES:
        h = Hole.parse(a, b)
        for q in CRIT5_BASES:
            # the projection lies in the line, so the estimate is capped at 1 like the dimension
            s = [min(1.0, moran_estimate(h, q, n)) for n in (6, 8, 10, 12, 14)]
            monotone &= all(x >= y - 1e-12 for x, y in zip(s, s[1:]))
            gap = abs(s[-1] - dimension(h, q).value)
            worst = max(worst, gap)
            parts.append(f"{a},{b}@({q.q0:g},{q.q1:g}):{gap:.3f}")
    elapsed = time.perf_counter() - t
    ok = worst <= 0.02 and monotone and elapsed < 300
    return ok, f"max|s14-d|={worst:.4f} monotone={monotone} time={elapsed:.1f}s [{' '.join(parts)}]"


def criterion_6():
    bad = []
    for a, b in FIXTURE_HOLES:
        h = Hole.parse(a, b)
        for n in range(0, 15):
            if language_count(h, n) != len(naive_language(h, n)):
                bad.append((a, b, n))
    return not bad, f"{len(FIXTURE_HOLES)} holes, n<=14, mismatches={bad}"


def criterion_7():
    bad = [(a, b, n) for a, b in FIXTURE_HOLES for n in range(1, 13) if not check_decomposition(Hole.parse(a, b), n)]
    return not bad, f"{len(FIXTURE_HOLES)} holes, n<=12, failures={bad}"


def criterion_8():
    worst = 0.0
    ok = True
    for a, b in FIXTURE_HOLES:
        r = series_identity_check(Hole.parse(a, b), 0.3, 0.3, 14)
        ok &= r.ok
        worst = max(worst, r.laq / r.laq_bound, r.qk / r.qk_bound)
    return ok, f"max residual/bound={worst:.3g}"


def criterion_9():
    rng = np.random.default_rng(20240611)
    pairs = [BasePair(*rng.uniform(1.2, 3.0, 2)) for _ in range(5)]
    diffs = [check_equaldim("011", "10", q).difference for q in pairs]
    holds = all(check_equaldim("011", "10", q).hypothesis for q in pairs)
    c1 = check_equaldim("0", "1", BasePair(2, 2))
    c2 = check_equaldim("01", "10", BasePair(2, 2))
    counter = all(not c.hypothesis and c.difference > 0.1 for c in (c1, c2))
    ok = holds and max(diffs) < 1e-9 and counter
    return ok, (
        f"max diff={max(diffs):.2e} over 5 pairs; "
        f"u=0,v=1: d={c1.d_periodic:g} vs {c1.d_mixed:g}; u=01,v=10: d={c2.d_periodic:g} vs {c2.d_mixed:g}"
    )


def criterion_10():
    def max_jump(n):
        r = AxisRange(1.7, 2.3, n)
        return continuity(as_grid(scan(r, r, threads=os.cpu_count() or 1))).max_jump

    coarse, fine = max_jump(40), max_jump(80)
    ratio = coarse / fine if fine > 0 else math.inf
    return ratio >= 2, f"max jump 40x40={coarse:.4f} 80x80={fine:.4f} ratio={ratio:.3f} (need >= 2)"


def criterion_11():
    reports = run_all()
    ok = all(r.passed for r in reports)
    return ok, summary(reports).replace("\n", "; ")


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 12)}


def _line(n, ok, detail):
    return f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("n", list(CRITERIA))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        results.append(ok)
        print(_line(n, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
