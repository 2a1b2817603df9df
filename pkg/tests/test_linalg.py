from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from linkgenus.oracle.linalg import echelon, integer_row, nullspace, rank

entries = st.one_of(st.integers(-6, 6), st.fractions(min_value=-4, max_value=4, max_denominator=5))


@st.composite
def matrices(draw):
    ncols = draw(st.integers(1, 7))
    nrows = draw(st.integers(0, 7))
    rows = [draw(st.lists(entries, min_size=ncols, max_size=ncols)) for _ in range(nrows)]
    # low-rank structure shows up more often with duplicated combinations
    if rows and draw(st.booleans()):
        a, b = draw(st.integers(-3, 3)), draw(st.integers(-3, 3))
        rows.append([a * x + b * y for x, y in zip(rows[0], rows[-1])])
    return rows, ncols


def to_sympy(rows, ncols):
    return sympy.Matrix(len(rows), ncols, lambda i, j: sympy.Rational(rows[i][j]))


def test_integer_row():
    assert integer_row([Fraction(1, 2), Fraction(-1, 3), 0]) == [3, -2, 0]
    assert integer_row([4, 6, 8]) == [2, 3, 4]
    assert integer_row([0, 0]) == [0, 0]


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_rank_matches_sympy(data):
    rows, ncols = data
    expected = to_sympy(rows, ncols).rank() if rows else 0
    assert rank(rows, ncols) == expected


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_nullspace_is_a_kernel_basis(data):
    rows, ncols = data
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - rank(rows, ncols)
    for vec in basis:
        assert all(isinstance(x, int) for x in vec)
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0
    if basis:
        assert to_sympy(basis, ncols).rank() == len(basis)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_echelon_shape(data):
    rows, ncols = data
    ech, pivots = echelon(rows, ncols)
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    for row, pc in zip(ech, pivots):
        assert row[pc] != 0 and all(x == 0 for x in row[:pc])
    if rows:
        both = to_sympy(rows + ech, ncols).rank()
        assert both == len(ech)


def test_large_entries_stay_exact():
    n = 8
    hilbert = [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)]
    assert rank(hilbert, n) == n
    assert nullspace(hilbert, n) == []
    singular = hilbert[:-1] + [[sum(r[j] for r in hilbert[:-1]) for j in range(n)]]
    assert rank(singular, n) == n - 1
