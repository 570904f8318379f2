"""Regression suite of worked hole examples: admissibility, extremal pairs, substitutions, equal dimensions.

Each example returns a :class:`FixtureReport`; ``run_all`` runs the six of
them.  Holes whose endpoints are not eventually periodic (the limits of the
substitution families and the Fibonacci pair) are checked on long prefixes
with :func:`prefix_admissible`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .expansions import BasePair
from .kneading import Substitution, dimension
from .sequences import Seq, Word, parse
from .subshift import Hole, extremal_pair, is_admissible

PREFIX_DEPTH = 200
DIM_TOL = 1e-9
EXAMPLE_Q0 = 2.2469796037174694
FIXTURE_BASES = (BasePair(2.0, 2.0), BasePair(EXAMPLE_Q0, 1 + 1 / EXAMPLE_Q0), BasePair(1.9, 2.1))


@dataclass
class FixtureCheck:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class FixtureReport:
    name: str
    checks: list[FixtureCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append(FixtureCheck(label, bool(ok), detail))


def prefix_admissible(a: Word, b: Word) -> bool:
    """Every suffix of ``a`` and ``b`` stays outside the hole, as far as the given prefixes can tell.

    A suffix starting with 0 must not exceed the prefix of ``a`` of the same
    length, one starting with 1 must not fall below the prefix of ``b``.
    """
    for w in (a, b):
        for j in range(len(w)):
            tail = w[j:]
            ref = a if tail[0] == "0" else b
            if (tail[0] == "0" and tail > ref[: len(tail)]) or (tail[0] == "1" and tail < ref[: len(tail)]):
                return False
    return True


def strictly_below(x: Word, y: Word) -> bool:
    """``x < y`` decided within the common length (equal prefixes do not count)."""
    n = min(len(x), len(y))
    return x[:n] < y[:n]


def _same_dimension(report: FixtureReport, label: str, holes: list[Hole]) -> None:
    for q in FIXTURE_BASES:
        ds = [dimension(h, q).value for h in holes]
        spread = max(ds) - min(ds)
        report.check(f"{label} at ({q.q0:.4g}, {q.q1:.4g})", spread < DIM_TOL, ", ".join(f"{d:.12f}" for d in ds))


# --- ex1 -------------------------------------------------------------------


def ex1_substitution(k: int) -> Substitution:
    zero = "0" + "".join("1" + "10" * j for j in range(1, k - 1)) + "1"
    return Substitution(zero, "10" * (k - 1) + "1")


def ex1_target(n: int) -> Word:
    """Prefix of ``0 1(10) 1(10)^2 1(10)^3 ...``."""
    out, j = "0", 1
    while len(out) < n:
        out += "1" + "10" * j
        j += 1
    return out[:n]


def ex1() -> FixtureReport:
    rep = FixtureReport("ex1")
    a = ex1_target(PREFIX_DEPTH)
    b = parse("(10)")
    rep.check("(a, b) admissible on prefixes", prefix_admissible(a, b.prefix(PREFIX_DEPTH)))
    rep.check("phi_3 images", ex1_substitution(3) == Substitution("01101", "10101"))
    prev_a = prev_b = None
    prev_match = 0
    for k in range(2, 6):
        phi = ex1_substitution(k)
        ak, bk = phi(parse("(01)")), phi(parse("(10)"))
        rep.check(f"k={k}: |phi(0)|+|phi(1)| = k^2+1", len(phi.image0) + len(phi.image1) == k * k + 1)
        rep.check(f"k={k}: pair in W", is_admissible(Hole(ak, bk)), f"{ak}, {bk}")
        pa = ak.prefix(PREFIX_DEPTH)
        match = next((i for i in range(PREFIX_DEPTH) if pa[i] != a[i]), PREFIX_DEPTH)
        rep.check(f"k={k}: phi((01)) below a", strictly_below(pa, a))
        rep.check(f"k={k}: phi((10)) above b", bk > b)
        if prev_a is not None:
            rep.check(f"k={k}: left image increases", ak > prev_a)
            rep.check(f"k={k}: right image decreases", bk < prev_b)
            rep.check(f"k={k}: agreement with a grows", match > prev_match, f"{prev_match} -> {match}")
        prev_a, prev_b, prev_match = ak, bk, match
    return rep


# --- ex2 -------------------------------------------------------------------


def ex2() -> FixtureReport:
    rep = FixtureReport("ex2")
    a, b = parse("(011)"), parse("(10)")
    rep.check("(a, b) in W", is_admissible(Hole(a, b)))
    prev = None
    for k in range(2, 5):
        phi = Substitution("01" + "101" * (k - 2), "101")
        phi_p = Substitution("01" * k, "1")
        left, right = Seq.periodic("011" * (k - 1) + "01"), Seq.periodic("10" * k + "1")
        rep.check(f"k={k}: pair in W", is_admissible(Hole(left, right)), f"{left}, {right}")
        rep.check(f"k={k}: phi_k((01)) = ((011)^(k-1)01)", phi(parse("(01)")) == left)
        rep.check(f"k={k}: phi_k((10)) = (10(101)^(k-1))", phi(parse("(10)")) == Seq.periodic("10" + "101" * (k - 1)))
        rep.check(f"k={k}: phi'_k((01)) = ((01)^k1)", phi_p(parse("(01)")) == Seq.periodic("01" * k + "1"))
        rep.check(f"k={k}: phi'_k((10)) = ((10)^k1)", phi_p(parse("(10)")) == right)
        rep.check(f"k={k}: left image below a, right above b", left < a and right > b)
        if prev is not None:
            rep.check(f"k={k}: images move towards (a, b)", left > prev[0] and right < prev[1])
        prev = (left, right)
    return rep


# --- ex3 -------------------------------------------------------------------

PSI = Substitution("010", "10")


def fixed_point(letter: str, n: int, sub: Substitution = PSI) -> Word:
    w = letter
    while len(w) < n:
        w = sub.word(w)
    return w[:n]


def ex3() -> FixtureReport:
    rep = FixtureReport("ex3")
    a, b = fixed_point("0", PREFIX_DEPTH), fixed_point("1", PREFIX_DEPTH)
    rep.check("a starts 01010010", a.startswith("01010010"), a[:16])
    rep.check("b starts 10010010", b.startswith("10010010"), b[:16])
    for depth in (30, PREFIX_DEPTH):
        rep.check(f"(a, b) admissible to depth {depth}", prefix_admissible(a[:depth], b[:depth]))
    for k in range(1, 5):
        pk = PSI.power(k - 1)
        n = PREFIX_DEPTH
        rep.check(f"k={k}: psi^(k-1)((100)) below b", strictly_below(pk(parse("(100)")).prefix(n), b))
        rep.check(
            f"k={k}: psi^(k-1)(0^inf) < a < psi^(k-1)((01))",
            strictly_below(pk(parse("(0)")).prefix(n), a) and strictly_below(a, pk(parse("(01)")).prefix(n)),
        )
        rep.check(
            f"k={k}: psi^(k-1)(10^inf) < b < psi^(k-1)((10))",
            strictly_below(pk(parse("1(0)")).prefix(n), b) and strictly_below(b, pk(parse("(10)")).prefix(n)),
        )
    return rep


# --- ex4 -------------------------------------------------------------------


def ex4() -> FixtureReport:
    rep = FixtureReport("ex4")
    a, b = parse("(01110)"), parse("(10011)")
    phi = Substitution("011", "10")
    rep.check("(a, b) in W", is_admissible(Hole(a, b)))
    rep.check("a = phi((01)), b = phi((10))", phi(parse("(01)")) == a and phi(parse("(10)")) == b)
    holes = [Hole(phi(parse("(0)")), phi(parse("(1)"))), Hole(phi(parse("0110(01)")), phi(parse("1001(10)"))), Hole(a, b)]
    _same_dimension(rep, "d constant around (a, b)", holes)
    return rep


# --- ex5 -------------------------------------------------------------------


def ex5() -> FixtureReport:
    rep = FixtureReport("ex5")
    a, b = parse("(011)"), parse("10(011)")
    rep.check("(a, b) in W", is_admissible(Hole(a, b)))
    for k in range(0, 5):
        left = parse("(01)").prepend("011" * k)
        rep.check(f"k={k}: ((011)^k(01), (10)) in W", is_admissible(Hole(left, parse("(10)"))), str(left))
    for k in range(1, 4):
        lo = parse("(01)").prepend("011" * k)
        inner = extremal_pair(Hole(lo, lo.prepend("10")))
        rep.check(f"k={k}: b'=10a' gives r = 10 ell", inner.ell == lo and inner.r == lo.prepend("10"), f"{inner.ell}, {inner.r}")
        for a_near in (lo, parse("(011)").prepend("011" * k + "01"), parse("(10)").prepend("011" * k)):
            for b_near in (lo.prepend("10"), a_near.prepend("10")):
                ell = extremal_pair(Hole(a_near, b_near)).ell
                rep.check(f"k={k}: ell of ({a_near}, {b_near}) in range", lo <= ell <= a_near, str(ell))
            outer = extremal_pair(Hole(a_near, parse("10100(1)")))
            rep.check(f"k={k}: b' above 10a' gives r = (10), a'={a_near}", outer.r == parse("(10)") and lo <= outer.ell <= a_near)
    ex = extremal_pair(Hole(a, b))
    rep.check("extremal pair of (a, b) is itself", ex.ell == a and ex.r == b)
    _same_dimension(rep, "d(a, (10)) = d(a, b)", [Hole(a, parse("(10)")), Hole(a, b)])
    return rep


# --- ex6 -------------------------------------------------------------------


def ex6() -> FixtureReport:
    rep = FixtureReport("ex6")
    a, b = parse("011(10)"), parse("10011(10)")
    rep.check("(a, b) in W", is_admissible(Hole(a, b)))
    for k in range(2, 6):
        phi = Substitution("011" + "10" * (k - 2), "10")
        rep.check(f"k={k}: a = phi'_k(01^inf)", phi(parse("0(1)")) == a)
        lo, hi = phi(parse("(0)")), phi(parse("1(0)"))
        rep.check(f"k={k}: phi'_k(0^inf) <= a and phi'_k(10^inf) <= b", lo <= a and hi <= b)
    _same_dimension(rep, "d(a, (10)) = d(a, b)", [Hole(a, parse("(10)")), Hole(a, b)])
    return rep


EXAMPLES = {"ex1": ex1, "ex2": ex2, "ex3": ex3, "ex4": ex4, "ex5": ex5, "ex6": ex6}


def run_all() -> list[FixtureReport]:
    return [f() for f in EXAMPLES.values()]


def summary(reports: list[FixtureReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({sum(c.ok for c in r.checks)}/{len(r.checks)})")
        for c in r.checks:
            if not c.ok:
                lines.append(f"  FAIL {c.label}" + (f": {c.detail}" if c.detail else ""))
    return "\n".join(lines)


__all__ = ["EXAMPLES", "FixtureReport", "prefix_admissible", "run_all", "summary"]
