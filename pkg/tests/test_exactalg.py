import random
from fractions import Fraction

import pytest

from qhgrass import linalg
from qhgrass.errors import InternalConsistencyError
from qhgrass.polynomials import UniPoly, interpolate, poly_from_roots


def test_unipoly_basics():
    p = UniPoly([1, 2, 3])
    q = UniPoly([0, 1])
    assert (p + q).coeffs == (1, 3, 3)
    assert (p * q).coeffs == (0, 1, 2, 3)
    assert (-p).coeffs == (-1, -2, -3)
    assert p(2) == 1 + 4 + 12
    assert UniPoly([1, 0, 0]).coeffs == (1,)
    assert UniPoly().is_zero() and UniPoly().degree == -1
    assert UniPoly([Fraction(4, 2)]).coeffs == (2,)


def test_unipoly_division():
    p = UniPoly([1, 2, 1])  # (1+x)^2
    q, r = p.divmod(UniPoly([1, 1]))
    assert q == UniPoly([1, 1]) and r.is_zero()
    assert p.div_exact(UniPoly([1, 1])) == UniPoly([1, 1])
    with pytest.raises(InternalConsistencyError):
        UniPoly([1, 0, 1]).div_exact(UniPoly([1, 1]))


def test_unipoly_palindromic_and_pretty():
    assert UniPoly([1, 3, 1]).is_palindromic()
    assert not UniPoly([1, 2, 3]).is_palindromic()
    assert UniPoly([1, -2, 0, 1]).pretty("y") == "1 - 2*y + y^3"
    assert UniPoly().pretty() == "0"


def test_interpolation_round_trip():
    p = poly_from_roots([1, 2, Fraction(1, 3)])
    points = [(x, p(x)) for x in range(5)]
    assert interpolate(points) == p


def test_kernel_rank_solve():
    a = [[1, 2, 3], [2, 4, 6], [1, 1, 1]]
    assert linalg.rank(a) == 2
    ker = linalg.kernel_basis(a)
    assert len(ker) == 1
    for row in a:
        assert sum(x * y for x, y in zip(row, ker[0])) == 0
    b = [[2, 0], [0, 3], [1, 1]]
    x = linalg.solve(b, [4, 9, 5])
    assert x == [2, 3]
    with pytest.raises(InternalConsistencyError):
        linalg.solve(b, [4, 9, 6])


def test_det_and_inverse():
    a = [[2, 1], [1, 1]]
    assert linalg.det_bareiss(a) == 1
    inv = linalg.mat_inverse(a)
    assert linalg.mat_mul(a, inv) == linalg.identity(2)
    assert linalg.det_bareiss([[1, 2], [2, 4]]) == 0
    with pytest.raises(InternalConsistencyError):
        linalg.mat_inverse([[1, 2], [2, 4]])


def test_charpoly_known_values():
    a = [[2, 1], [1, 2]]
    assert linalg.charpoly(a) == UniPoly([3, -4, 1])  # (x-1)(x-3)
    assert linalg.charpoly_berkowitz(a) == UniPoly([3, -4, 1])
    ident = linalg.identity(4)
    assert linalg.charpoly(ident) == poly_from_roots([1, 1, 1, 1])


def test_charpoly_dual_route_random():
    rng = random.Random(7)
    for trial in range(25):
        m = rng.randrange(1, 7)
        a = [[Fraction(rng.randrange(-4, 5), rng.choice((1, 1, 2))) for _ in range(m)] for _ in range(m)]
        p1 = linalg.charpoly(a)
        p2 = linalg.charpoly_berkowitz(a)
        assert p1 == p2, (trial, a)
        # trace and determinant read off the coefficients
        assert p1[m - 1] == -linalg.trace(a)
        assert p1[0] == (-1) ** m * linalg.det_bareiss(a)


def test_trace_product_matches_explicit():
    rng = random.Random(3)
    a = [[rng.randrange(-3, 4) for _ in range(5)] for _ in range(5)]
    b = [[rng.randrange(-3, 4) for _ in range(5)] for _ in range(5)]
    assert linalg.trace_product(a, b) == linalg.trace(linalg.mat_mul(a, b))


def test_column_span_solver():
    cols = [[1, 0, 2], [0, 1, 3]]
    solver = linalg.ColumnSpanSolver(cols)
    assert solver.coords([1, 1, 5]) == [1, 1]
    with pytest.raises(InternalConsistencyError):
        solver.coords([1, 1, 6])
    with pytest.raises(InternalConsistencyError):
        linalg.ColumnSpanSolver([[1, 2], [2, 4]])


def test_mat_pow():
    a = [[1, 1], [0, 1]]
    assert linalg.mat_pow(a, 5) == [[1, 5], [0, 1]]
    assert linalg.mat_pow(a, 0) == linalg.identity(2)
