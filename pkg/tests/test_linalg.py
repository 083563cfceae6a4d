from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curveh.algebra import GF, QQ
from curveh.linalg import ExactMatrix, SubspaceBasis, in_span, kernel_basis, rank, row_space, span_dim

entries = st.integers(-4, 4)


@st.composite
def matrices(draw, max_rows=6, max_cols=7):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(rows):
    M = ExactMatrix(rows)
    K = kernel_basis(M)
    assert rank(M) + K.dim == M.ncols
    for v in K.vectors:
        assert all(e == 0 for e in M @ v)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_row_space_is_canonical(rows, rnd):
    # any invertible recombination of the rows spans the same canonical basis
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    combined = [[a + 2 * b for a, b in zip(shuffled[0], r)] for r in shuffled[1:]] + [shuffled[0]]
    assert row_space(ExactMatrix(rows)) == row_space(ExactMatrix(combined))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_span_membership(rows):
    basis = SubspaceBasis.from_rows(rows, len(rows[0]), QQ)
    total = [sum(col) for col in zip(*rows)]
    assert in_span(total, basis)
    assert span_dim(rows, len(rows[0])) == basis.dim


def test_quotient_map_kernel_is_subspace():
    basis = SubspaceBasis.from_rows([[1, 2, 0, 1], [0, 0, 1, 3]], 4, QQ)
    Q = ExactMatrix(basis.quotient_map(), 4)
    assert kernel_basis(Q) == basis


def test_rationals_are_exact():
    M = ExactMatrix([[Fraction(1, 3), Fraction(1, 7)], [Fraction(7, 3), 1]])
    assert rank(M) == 1
    assert kernel_basis(M).vectors == [[1, Fraction(-7, 3)]]


def test_prime_field_rank_can_drop():
    rows = [[1, 2], [3, 1]]
    assert rank(ExactMatrix(rows)) == 2
    assert rank(ExactMatrix(rows, field=GF(5))) == 1


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        span_dim([[1, 2]], 3)
