import pytest

from univoque.fixtures import EXAMPLES, ex1_substitution, ex1_target, fixed_point, prefix_admissible, run_all


@pytest.mark.parametrize("name", list(EXAMPLES))
def test_example_passes(name):
    rep = EXAMPLES[name]()
    assert rep.passed, [c for c in rep.checks if not c.ok]


def test_prefix_admissible_rejects_bad_pair():
    # 011100... has the suffix 100... strictly between a and b = 1010...
    assert not prefix_admissible("011100100100", "101010101010")
    assert prefix_admissible("011011011011", "101010101010")


def test_ex1_family():
    assert ex1_substitution(2).image0 == "01"
    assert ex1_substitution(4).image0 == "0110110101"
    assert ex1_target(12) == "011011010110"


def test_fibonacci_fixed_points():
    a, b = fixed_point("0", 13), fixed_point("1", 13)
    assert a == "0101001010010"
    assert b == "1001001010010"


def test_run_all_covers_six():
    assert [r.name for r in run_all()] == ["ex1", "ex2", "ex3", "ex4", "ex5", "ex6"]
