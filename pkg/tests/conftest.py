from fractions import Fraction

from hypothesis import strategies as st

from curveh.algebra import HomogeneousPolynomial, monomials

coefficients = st.integers(min_value=-5, max_value=5).map(Fraction)


@st.composite
def forms(draw, min_degree=0, max_degree=5, density=0.6):
    d = draw(st.integers(min_degree, max_degree))
    terms = {}
    for m in monomials(d):
        if draw(st.floats(0, 1)) < density:
            terms[m] = draw(coefficients)
    return HomogeneousPolynomial(d, terms)
