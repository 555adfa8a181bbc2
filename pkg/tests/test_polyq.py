from fractions import Fraction

import pytest

from jordanred.gaussrat import GR_ONE, gr
from jordanred.polyq import (PolyQi, integer_divisors, poly_gcd,
                             rational_roots_of_int_poly, roots_qi,
                             squarefree_factors)


def P(*cs):
    return PolyQi(list(cs))


def linear(root):
    return PolyQi([-root, GR_ONE])


def test_arithmetic_and_division():
    f = P(1, 2, 1)          # (t+1)^2
    g = linear(gr(-1))
    q, r = f.divmod(g)
    assert r.is_zero() and q == P(1, 1)
    assert (q * g) == f
    assert f.derivative() == P(2, 2)
    assert f(gr(-1)).is_zero() and f(gr(1)) == gr(4)


def test_gcd():
    f = linear(gr(2)) * linear(gr(0, 1)) * linear(gr(-3))
    g = linear(gr(2)) * linear(gr(0, 1)) * linear(gr(5))
    h = poly_gcd(f, g)
    assert h.degree == 2
    assert h(gr(2)).is_zero() and h(gr(0, 1)).is_zero()


def test_roots_rational_cubic():
    roots, left = roots_qi(P(6, -7, 0, 1))  # (t-1)(t-2)(t+3)
    assert not left
    assert sorted(r.re for r in roots) == [-3, 1, 2]


def test_roots_gaussian():
    roots, left = roots_qi(P(-2, 1, -2, 1))  # (t^2+1)(t-2)
    assert not left and gr(0, 1) in roots and gr(0, -1) in roots
    roots, left = roots_qi(P(gr(0, -2), gr(0), gr(1)))  # t^2 - 2i
    assert not left and gr(1, 1) in roots and gr(-1, -1) in roots


def test_roots_complex_cubic_all_rational():
    f = linear(gr(0, 1)) * linear(gr(1, 1)) * linear(gr(3))
    roots, left = roots_qi(f)
    assert not left
    assert {(r.re, r.im) for r in roots} == {(0, 1), (1, 1), (3, 0)}


def test_roots_complex_cubic_mixed():
    # one Q(i) root, one quadratic factor irreducible over Q(i)
    f = P(-1, -1, 1) * linear(gr(1, 1))
    roots, left = roots_qi(f)
    assert roots == [gr(1, 1)]
    assert len(left) == 1 and left[0].degree == 2


def test_roots_complex_cubic_nonreal_root_via_norm():
    # properly complex coefficients, non-real Gaussian root found through
    # the quadratic-factor enumeration of the norm polynomial
    f = linear(gr(2, 3)) * P(gr(1), gr(0, 1), gr(1))
    roots, left = roots_qi(f)
    assert gr(2, 3) in roots


@pytest.mark.parametrize("poly", [P(-2, 0, 0, 1), P(-2, 0, 1), P(2, 0, 1)])
def test_irreducible_over_qi(poly):
    roots, left = roots_qi(poly)
    assert not roots and len(left) == 1 and left[0].degree == poly.degree


def test_squarefree_decomposition():
    f = linear(gr(1)) * linear(gr(1)) * linear(gr(1)) * linear(gr(-2))
    parts = squarefree_factors(f)
    assert sorted((g.degree, m) for g, m in parts) == [(1, 1), (1, 3)]
    for g, _ in parts:
        assert g.degree == 1


def test_integer_helpers():
    assert integer_divisors(12) == [1, 2, 3, 4, 6, 12]
    assert integer_divisors(-7) == [1, 7]
    assert set(rational_roots_of_int_poly([6, -5, 1])) == {Fraction(2), Fraction(3)}
    assert Fraction(1, 2) in rational_roots_of_int_poly([-1, 0, 4])
