import math

import numpy as np
import pytest

from conftest import EXAMPLE_BASES, GOLDEN
from univoque.expansions import BasePair
from univoque.kneading import (
    ENTROPY_ZERO,
    FULL_INTERVAL_BOUNDARY,
    IDENTITY,
    KNEADING_ROOT,
    PRESSURE_ROOT,
    BracketError,
    DimensionResult,
    Substitution,
    check_equaldim,
    dimension,
    entropy,
    entropy_base,
    ktilde,
    largest_root,
    pressure_dimension,
    substitution_dimension,
    univoque_dimension,
)
from univoque.sequences import parse
from univoque.subshift import Hole

# Frozen oracle values.
# Example dimension: root of (q1^s + 1)/(q0^s q1^2s - 1) = q0^s/(q0^s q1^s - 1), solved with brentq
EXAMPLE_S = 0.512254980558169
# plastic number: real root of x^3 = x + 1, by bisection
PLASTIC = 1.3247179572447454

PLASTIC_HOLE = Hole.parse("(011)", "(10)")
FULL = Hole.parse("0(1)", "1(0)")


def test_ktilde_full_shift_vanishes_at_pressure_root():
    q = BasePair(1.9, 2.1)
    s = pressure_dimension(q)
    assert q.q0**-s + q.q1**-s == pytest.approx(1, abs=1e-14)
    assert ktilde(FULL, q, s) == pytest.approx(0, abs=1e-12)
    # closed form: (1 - q0^-t - q1^-t) q1^t / (q0^-t... ) has the sign of 1 - q0^-t - q1^-t
    for t in (0.5 * s, 2 * s):
        assert np.sign(ktilde(FULL, q, t)) == np.sign(1 - q.q0**-t - q.q1**-t)


def test_ktilde_positive_for_large_t():
    ts = np.array([5.0, 10.0, 20.0])
    assert np.all(ktilde(PLASTIC_HOLE, BasePair(1.9, 2.1), ts) > 0)


def test_ktilde_vanishes_at_plastic_number():
    b = BasePair(PLASTIC, PLASTIC)
    assert ktilde(PLASTIC_HOLE, b, 1.0) == pytest.approx(0, abs=1e-13)


def test_ktilde_rejects_nonpositive_t():
    with pytest.raises(ValueError):
        ktilde(PLASTIC_HOLE, BasePair(2, 2), 0.0)


def test_largest_root_full_shift_base_two():
    r = largest_root(FULL, BasePair(2, 2))
    assert r.root == pytest.approx(1, abs=1e-12)
    assert r.bracket[0] <= r.root <= r.bracket[1]


def test_largest_root_raises_when_not_positive_at_top():
    with pytest.raises(BracketError):
        largest_root(PLASTIC_HOLE, BasePair(2, 2), t_max=0.2)


def test_entropy_values():
    assert entropy_base(PLASTIC_HOLE) == pytest.approx(PLASTIC, abs=1e-12)
    assert entropy(Hole.parse("(01)", "(10)")) == 0
    assert entropy(Hole.parse("01(10)", "10(01)")) == pytest.approx(0.5 * math.log(2), abs=1e-12)
    assert entropy(FULL) == pytest.approx(math.log(2), abs=1e-12)
    assert entropy(Hole.parse("(0)", "(1)")) == 0


def test_entropy_normalises_non_admissible_holes():
    assert entropy(Hole.parse("011(100)", "(10)")) == pytest.approx(math.log(PLASTIC), abs=1e-12)


def test_dimension_values():
    assert dimension(PLASTIC_HOLE, EXAMPLE_BASES).value == pytest.approx(EXAMPLE_S, abs=1e-12)
    assert dimension(PLASTIC_HOLE, EXAMPLE_BASES).value == pytest.approx(0.512255, abs=1e-5)
    assert dimension(PLASTIC_HOLE, BasePair(2, 2)).value == pytest.approx(math.log(PLASTIC) / math.log(2), abs=1e-12)
    assert dimension(Hole.parse("(0)", "(1)"), BasePair(1.9, 2.1)).value == 0
    assert dimension(FULL, BasePair(2, 2)).value == pytest.approx(1, abs=1e-12)


def test_dimension_result_checks_range():
    with pytest.raises(ValueError):
        DimensionResult(1.5, KNEADING_ROOT)


def test_univoque_dimension_dispatch():
    r = univoque_dimension(EXAMPLE_BASES)
    assert r.case_tag == KNEADING_ROOT and r.value == pytest.approx(EXAMPLE_S, abs=1e-12)
    assert r.hole == PLASTIC_HOLE

    r = univoque_dimension(BasePair(2, 2))
    assert r.case_tag == FULL_INTERVAL_BOUNDARY and r.value == 1.0

    r = univoque_dimension(BasePair(3, 3))
    assert r.case_tag == PRESSURE_ROOT and r.value == pytest.approx(math.log(2) / math.log(3), abs=1e-12)

    for q in (1.5, GOLDEN, 1.2):
        r = univoque_dimension(BasePair(q, q))
        assert r.case_tag == ENTROPY_ZERO and r.value == 0


def test_boundary_with_unequal_bases():
    q0 = 3.0
    r = univoque_dimension(BasePair(q0, q0 / (q0 - 1)))
    assert r.case_tag == FULL_INTERVAL_BOUNDARY and r.value == 1.0


def test_dimension_approaches_one_near_boundary():
    vals = [univoque_dimension(BasePair(2 - e, 2 - e)).value for e in (0.05, 0.01, 0.002)]
    assert vals == sorted(vals) and vals[-1] > 0.97


def test_substitution_examples():
    phi = Substitution("011", "10")
    assert phi(parse("(01)")) == parse("(01110)")
    assert IDENTITY(parse("01(10)")) == parse("01(10)")
    psi = Substitution("010", "10")
    assert psi.power(4).image0.startswith("01010010")
    assert psi(psi("0")) == psi.power(2).image0
    with pytest.raises(ValueError):
        Substitution("10", "1")


def test_substitution_dimension_matches_hole_dimension():
    # phi({0,1}^N) for phi = (011, 10) is the subshift of ((011), (10))
    q = BasePair(2, 2)
    assert substitution_dimension(Substitution("011", "10"), q) == pytest.approx(
        dimension(PLASTIC_HOLE, q).value, abs=1e-12
    )


@pytest.mark.parametrize("q", [BasePair(2, 2), EXAMPLE_BASES, BasePair(1.9, 2.1), BasePair(2.4, 1.6)])
def test_equaldim_with_positive_entropy(q):
    rep = check_equaldim("011", "10", q, a=parse("(011)"), b=parse("(10)"))
    assert rep.hypothesis
    assert rep.difference < 1e-9
    for left, right in rep.one_sided.values():
        assert left == pytest.approx(right, abs=1e-9)


def test_equaldim_counterexamples():
    q = BasePair(2, 2)
    rep = check_equaldim("0", "1", q)
    assert not rep.hypothesis and rep.d_periodic == 0 and rep.d_mixed == pytest.approx(1)
    rep = check_equaldim("01", "10", q)
    assert not rep.hypothesis and rep.d_periodic == 0 and rep.d_mixed == pytest.approx(0.5, abs=1e-12)
