import pytest
from hypothesis import given
from hypothesis import strategies as st

from univoque.sequences import (
    ComparisonLimitError,
    EventuallyPeriodicSequence as Seq,
    SequenceSyntaxError,
    compare,
    concat,
    parse,
    primitive_root,
    render,
    shift,
)

words = st.text(alphabet="01", max_size=8)
periods = st.text(alphabet="01", min_size=1, max_size=6)
seqs = st.builds(Seq, words, periods)


def test_compare_examples():
    assert compare(parse("(0)"), parse("(1)")) == -1
    assert compare(parse("(01)"), parse("(01)")) == 0
    assert compare(parse("011(100)"), parse("(10)")) == -1


def test_shift_examples():
    assert shift(parse("011(100)"), 3) == parse("(100)")
    assert shift(parse("(10)"), 1) == parse("(01)")
    assert shift(parse("(0)"), 5) == parse("(0)")


def test_parse_examples():
    assert parse("011(100)") == Seq("011", "100")
    assert parse("(0)").is_ultimately(0)
    assert parse(" (011) ").period == "011"


@pytest.mark.parametrize("text", ["", "01", "(", "()", "0(1", "0(2)", "(1)0", "a(1)"])
def test_parse_rejects(text):
    with pytest.raises(SequenceSyntaxError):
        parse(text)


def test_concat_examples():
    assert concat("10", parse("(011)")) == parse("10(011)")
    x = parse("01(10)")
    assert concat("", x) == x
    assert concat("0", parse("(1)")) == parse("0(1)")


def test_canonical_form():
    assert Seq("0101", "0101") == parse("(01)")
    assert Seq("0110", "10") == parse("01(10)")
    assert str(Seq("", "1111")) == "(1)"
    assert primitive_root("101101") == "101"


def test_comparison_limit():
    x, y = Seq("", "0" * 10 + "1"), Seq("", "0" * 12 + "1")
    with pytest.raises(ComparisonLimitError):
        compare(x, y, limit=50)


def test_flip_reverses_order():
    assert parse("011(100)").flipped() == parse("100(011)")


@given(seqs)
def test_canonicalisation_idempotent(x):
    assert Seq(x.preperiod, x.period) == x
    assert parse(render(x)) == x


@given(seqs, seqs)
def test_equality_is_sequence_equality(x, y):
    n = 2 * max(len(x.preperiod), len(y.preperiod)) + len(x.period) * len(y.period) + 1
    assert (x == y) == (x.prefix(n) == y.prefix(n))


@given(seqs, seqs, seqs)
def test_total_order(x, y, z):
    assert compare(x, y) == -compare(y, x)
    if x <= y and y <= z:
        assert x <= z


@given(seqs, seqs)
def test_compare_matches_long_prefix(x, y):
    n = 64
    px, py = x.prefix(n), y.prefix(n)
    if px != py:
        assert compare(x, y) == (-1 if px < py else 1)


@given(seqs, st.integers(0, 12), st.integers(0, 12))
def test_shift_composition(x, m, n):
    assert x.shift(m).shift(n) == x.shift(m + n)
    assert x.shift(n).prefix(10) == x.prefix(n + 10)[n:]


@given(seqs)
def test_suffixes_cover_all_shifts(x):
    distinct = {s for _, s in x.suffixes()}
    for n in range(40):
        assert x.shift(n) in distinct


@given(words, seqs)
def test_prepend_then_shift(w, x):
    assert concat(w, x).shift(len(w)) == x


@given(seqs, seqs)
def test_flip_reverses(x, y):
    assert compare(x.flipped(), y.flipped()) == -compare(x, y)
