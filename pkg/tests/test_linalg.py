import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from octofib.linalg import RowSpace, combine, fraction_free_rank


def det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def minor_rank(rows):
    """Largest k with a nonzero k x k minor."""
    if not rows:
        return 0
    h, w = len(rows), len(rows[0])
    for k in range(min(h, w), 0, -1):
        for ri in itertools.combinations(range(h), k):
            for ci in itertools.combinations(range(w), k):
                if det([[rows[r][c] for c in ci] for r in ri]) != 0:
                    return k
    return 0


matrices = st.integers(1, 4).flatmap(
    lambda w: st.lists(
        st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=w, max_size=w),
        min_size=1,
        max_size=4,
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_oracles_agree(rows):
    r = minor_rank(rows)
    assert fraction_free_rank(rows) == r
    assert RowSpace(rows).rank == r


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_membership_coordinates(rows, data):
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(rows), max_size=len(rows)))
    x = combine([Fraction(c) for c in coeffs], rows)
    res = RowSpace(rows).membership(x)
    assert res.member
    assert combine(res.coordinates, rows) == x


def test_non_member_has_residual():
    res = RowSpace([[1, 0, 0], [0, 1, 0]]).membership([1, 2, 3])
    assert not res.member and res.residual == (0, 0, 3)


def test_rank_examples():
    assert fraction_free_rank([[1, 2], [2, 4]]) == 1
    assert fraction_free_rank([[Fraction(1, 2), 1], [1, 3]]) == 2
    assert fraction_free_rank([[0, 0, 0]]) == 0
    assert fraction_free_rank([]) == 0


def test_validation():
    with pytest.raises(ValueError):
        RowSpace([])
    with pytest.raises(ValueError):
        RowSpace([[1, 2], [1]])
    with pytest.raises(ValueError):
        RowSpace([[1, 2]]).membership([1])
