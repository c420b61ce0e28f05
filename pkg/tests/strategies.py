"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from heckeq.ring import ParamPolynomial
from heckeq.series import TruncatedSeries

small_fracs = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
nonzero_fracs = small_fracs.filter(bool)


@st.composite
def param_polys(draw, max_terms=4, lo=-2, hi=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        key = (draw(st.integers(lo, hi)), draw(st.integers(lo, hi)))
        terms[key] = draw(small_fracs)
    return ParamPolynomial(terms)


@st.composite
def uni_series(draw, order=12, lo=0, unit=False):
    n = draw(st.integers(1 if unit else 0, order - lo))
    cs = [draw(small_fracs) for _ in range(n)]
    if unit:
        cs[0] = draw(nonzero_fracs)
    return TruncatedSeries.from_coeffs(cs, order, lo=lo)


@st.composite
def param_series(draw, order=15, max_terms=6):
    """Series in q, a, b with nonnegative degrees."""
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        i, j = draw(st.integers(0, 2)), draw(st.integers(0, 2))
        e = draw(st.integers(0, 6))
        terms[(e, i, j)] = draw(small_fracs)
    return TruncatedSeries.from_terms(terms, order, parametric=True)
