import os
import sys
from fractions import Fraction

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from bimehler.algebra import WeightPoly  # noqa: E402
from bimehler.biegf import BiSeries  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_coeffs = st.one_of(
    st.integers(-3, 3),
    st.builds(Fraction, st.integers(-3, 3), st.integers(1, 4)),
)


@st.composite
def weight_polys(draw, max_deg=2, coeffs=small_coeffs, max_terms=4):
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    terms = draw(st.lists(st.tuples(exps, coeffs), max_size=max_terms))
    return WeightPoly(terms)


@st.composite
def bi_series(draw, bounds=(3, 3), constant=True, max_deg=1):
    max_m, max_n = bounds
    poly = weight_polys(max_deg=max_deg, coeffs=st.integers(-2, 2), max_terms=2)
    cells = draw(st.dictionaries(st.tuples(st.integers(0, max_m), st.integers(0, max_n)), poly, max_size=5))
    if not constant:
        cells.pop((0, 0), None)
    return BiSeries.from_cells(max_m, max_n, cells)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.format_results()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
