import math

import pytest

from univoque.expansions import BasePair
from univoque.subshift import Hole

# admissible holes used across the suite
FIXTURE_HOLES = [
    ("(011)", "(10)"),
    ("01(10)", "10(01)"),
    ("0(1)", "1(0)"),
    ("(0)", "(1)"),
    ("(01)", "(10)"),
    ("(01110)", "(10011)"),
    ("(011)", "10(011)"),
    ("011(10)", "10011(10)"),
]

EXAMPLE_Q0 = 2.2469796037174694  # real root of q^3 = 2q^2 + q - 1
EXAMPLE_BASES = BasePair(EXAMPLE_Q0, 1 + 1 / EXAMPLE_Q0)
GOLDEN = (1 + math.sqrt(5)) / 2


@pytest.fixture(params=FIXTURE_HOLES, ids=lambda p: f"{p[0]},{p[1]}")
def fixture_hole(request):
    return Hole.parse(*request.param)
