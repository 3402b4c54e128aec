from fractions import Fraction
from math import gcd

from hypothesis import settings, strategies as st

from lkobstruct.algebra import FieldElem, LaurentPoly
from lkobstruct.slopes import SlopeParam
from lkobstruct.words import GroupWord

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def laurent_polys(draw, max_terms=5, lo=-4, hi=4):
    terms = draw(st.dictionaries(st.integers(lo, hi), small_rationals, max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def int_laurent_polys(draw, max_terms=4, lo=-2, hi=3):
    terms = draw(st.dictionaries(st.integers(lo, hi), st.integers(-5, 5), max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def field_elems(draw, nonzero=False):
    a, b = draw(small_rationals), draw(small_rationals)
    if nonzero and a == 0 and b == 0:
        a = Fraction(1)
    return FieldElem(a, b)


@st.composite
def words(draw, gens=("u", "v"), max_len=8, max_exp=3):
    letters = draw(st.lists(st.tuples(st.sampled_from(gens),
                                      st.integers(-max_exp, max_exp).filter(bool)),
                            max_size=max_len))
    return GroupWord(tuple(letters))


@st.composite
def slopes(draw, cmax=40, dmax=99, allow_zero=False, allow_negative=True):
    if allow_zero and draw(st.booleans()) and draw(st.booleans()):
        return SlopeParam(0, 1)
    c = 2 * draw(st.integers(1, cmax // 2))
    d = draw(st.integers(1, dmax).filter(lambda d: gcd(c, d) == 1))
    if allow_negative and draw(st.booleans()):
        c = -c
    return SlopeParam(c, d)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
