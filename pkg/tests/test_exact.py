from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from flagdomains.exact import (ExactScalar, apply_rows, inverse_matrix, rank, solve, unit_vector,
                               vec_str)

small = st.integers(-3, 3)
scalars = st.builds(ExactScalar, st.fractions(-4, 4, max_denominator=3), st.fractions(-4, 4, max_denominator=3))


def vectors(m):
    return st.lists(st.builds(ExactScalar, small, small), min_size=m, max_size=m).map(tuple)


def naive_rank(vs):
    """Division-based elimination over Q(i)."""
    rows = [list(v) for v in vs]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


@given(scalars, scalars, scalars)
def test_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if a:
        assert a * a.inverse() == ExactScalar(1, 0)


def test_scalar_text():
    assert str(ExactScalar(0, 1)) == "i"
    assert str(ExactScalar(1, -1)) == "1-i"
    assert str(ExactScalar(Fraction(1, 2), 0)) == "1/2"
    assert vec_str((ExactScalar(1), ExactScalar(0), ExactScalar(0, -1))) == "e1 - ie3"


@given(st.lists(vectors(4), min_size=1, max_size=6))
def test_fraction_free_rank_matches_division_rank(vs):
    assert rank(vs) == naive_rank(vs)


def test_rank_with_fractions():
    v = (ExactScalar(Fraction(1, 2)), ExactScalar(0, Fraction(1, 3)))
    w = (ExactScalar(3), ExactScalar(0, 2))
    assert rank([v, w]) == 1


@given(vectors(3))
def test_solve_and_inverse(target):
    basis = [(ExactScalar(1), ExactScalar(0, 1), ExactScalar(0)),
             (ExactScalar(1), ExactScalar(0, -1), ExactScalar(0)),
             unit_vector(3, 3, 2)]
    coords = solve(basis, target)
    rebuilt = tuple(sum((c * b[i] for c, b in zip(coords, basis)), ExactScalar(0)) for i in range(3))
    assert rebuilt == target
    assert list(apply_rows(inverse_matrix(basis), target)) == coords
