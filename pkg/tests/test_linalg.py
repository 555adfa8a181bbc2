import random
from fractions import Fraction

from jordanred.gaussrat import gr
from jordanred.linalg import (RowSpan, invert, mat_mul, nullspace, rank,
                              rank_int, rref)


def frac_matrix(rows):
    return [[Fraction(v) for v in r] for r in rows]


def test_rank_agrees_with_bareiss():
    rng = random.Random(1)
    for _ in range(30):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        a = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)]
        assert rank(frac_matrix(a)) == rank_int(a)


def test_nullspace_is_kernel():
    rng = random.Random(2)
    for _ in range(30):
        n, m = rng.randint(1, 5), rng.randint(1, 7)
        a = frac_matrix([[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)])
        basis = nullspace(a)
        assert len(basis) == m - rank(a)
        for v in basis:
            for row in a:
                assert sum(c * x for c, x in zip(row, v)) == 0
        if basis:
            assert rank(basis) == len(basis)


def test_nullspace_gauss_rational():
    a = [[gr(1), gr(0, 1), gr(0)], [gr(0), gr(0), gr(0)]]
    basis = nullspace(a)
    assert len(basis) == 2
    for v in basis:
        assert (v[0] + gr(0, 1) * v[1]).is_zero()


def test_invert_round_trip():
    rng = random.Random(3)
    count = 0
    while count < 15:
        n = rng.randint(1, 5)
        a = frac_matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if rank(a) < n:
            continue
        count += 1
        inv = invert(a)
        prod = mat_mul(a, inv)
        for i in range(n):
            for j in range(n):
                assert prod[i][j] == (1 if i == j else 0)


def test_rref_pivots():
    a = frac_matrix([[0, 2, 1], [0, 4, 2], [1, 0, 0]])
    red, pivots = rref(a)
    assert pivots == [0, 1]
    assert len(red) == 2


def test_row_span_membership():
    span = RowSpan([[Fraction(1), Fraction(2), Fraction(0)],
                    [Fraction(0), Fraction(1), Fraction(1)]])
    assert span.dim == 2
    assert span.contains([Fraction(1), Fraction(3), Fraction(1)])
    assert not span.contains([Fraction(0), Fraction(0), Fraction(1)])
    assert not span.add([Fraction(2), Fraction(4), Fraction(0)])
    assert span.add([Fraction(0), Fraction(0), Fraction(1)])
    assert span.dim == 3
