import pytest

from polarix.monomials import MonomialIdeal, colored_ring, letter_names, parse_monomial
from polarix.polarization import family_from_ideal


def ideal_from_letters(words, m, n):
    names = letter_names(m, n)
    return MonomialIdeal([parse_monomial(w, names) for w in words.split()], colored_ring(m, n))


THREE_COLORS_N3 = "x1x2x3 x1x2y2 x1x2z2 x2y1y2 x1y1z2 x1z1z2 y1y2y3 y1y2z2 y1z2z3 z1z2z3"
TWO_QS_EDGES = "x1x2 x1y1 x2z1 y1y2 y1z2 z1z2"
# the dual generators of the three-color n=3 family, worked out by hand
THREE_COLORS_N3_DUAL = "x1y2z2 x2y2z2 x3y2z2 x1y1z2 x2y1z2 x1y1z1 x2y1z1 x2y3z2 x1y1z3 x1y2z3"


@pytest.fixture
def ex_ideal():
    return ideal_from_letters(THREE_COLORS_N3, 3, 3)


@pytest.fixture
def ex_family(ex_ideal):
    return family_from_ideal(ex_ideal, 3, 3)


@pytest.fixture
def bad_ideal():
    return ideal_from_letters(TWO_QS_EDGES, 3, 2)


@pytest.fixture
def bad_family(bad_ideal):
    return family_from_ideal(bad_ideal, 3, 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
