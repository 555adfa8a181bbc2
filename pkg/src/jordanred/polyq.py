"""Univariate polynomials over Q(i), with exact root extraction in degree <= 3.

Used to intersect pencils of Jordan matrices with the projected rank-one
locus.  Roots living in Q(i) are always found; factors that are irreducible
over Q(i) are returned as such (their roots are counted, not constructed).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .gaussrat import GR_ONE, GR_ZERO, GaussRational


class PolyQi:
    """Dense polynomial with GaussRational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [GaussRational(c) if not isinstance(c, GaussRational) else c for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, PolyQi) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "PolyQi(0)"
        return "PolyQi(" + " + ".join("%r*t^%d" % (c, k) for k, c in enumerate(self.coeffs)
                                      if not c.is_zero()) + ")"

    def __add__(self, other: "PolyQi") -> "PolyQi":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [GR_ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [GR_ZERO] * (n - len(other.coeffs))
        return PolyQi([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "PolyQi") -> "PolyQi":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [GR_ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [GR_ZERO] * (n - len(other.coeffs))
        return PolyQi([x - y for x, y in zip(a, b)])

    def __neg__(self) -> "PolyQi":
        return PolyQi([-c for c in self.coeffs])

    def __mul__(self, other: "PolyQi") -> "PolyQi":
        if self.is_zero() or other.is_zero():
            return PolyQi([])
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolyQi(out)

    def scale(self, s: GaussRational) -> "PolyQi":
        return PolyQi([c * s for c in self.coeffs])

    def monic(self) -> "PolyQi":
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return self.scale(GR_ONE / lc)

    def __call__(self, t: GaussRational) -> GaussRational:
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "PolyQi":
        return PolyQi([c * k for k, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "PolyQi"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return PolyQi([]), self
        quot = [GR_ZERO] * (dq + 1)
        lc = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lc
            quot[k] = c
            if not c.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return PolyQi(quot), PolyQi(rem)

    def divides(self, other: "PolyQi") -> bool:
        _, r = other.divmod(self)
        return r.is_zero()

    def conj_coeffs(self) -> "PolyQi":
        return PolyQi([c.conj() for c in self.coeffs])

    def real_part(self):
        return [c.re for c in self.coeffs]

    def imag_part(self):
        return [c.im for c in self.coeffs]


def poly_gcd(a: PolyQi, b: PolyQi) -> PolyQi:
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic() if not a.is_zero() else a


def squarefree_factors(f: PolyQi):
    """Yun's decomposition: list of (squarefree factor, exact multiplicity)."""
    f = f.monic()
    out = []
    g = poly_gcd(f, f.derivative())
    w, _ = f.divmod(g)
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, g)
        fac, r = w.divmod(y)
        assert r.is_zero()
        if fac.degree > 0:
            out.append((fac.monic(), i))
        w = y
        g, r = g.divmod(y)
        assert r.is_zero()
        i += 1
    return out


def squarefree_part(f: PolyQi) -> PolyQi:
    g = poly_gcd(f, f.derivative())
    q, _ = f.monic().divmod(g)
    return q.monic()


# -- integer helpers ---------------------------------------------------------


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    import random

    rng = random.Random(0xC0FFEE ^ n)
    while True:
        x = rng.randrange(2, n)
        y, c, d = x, rng.randrange(1, n), 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d


def _factorize(n: int) -> dict:
    n = abs(n)
    out = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = None
        f = 17
        while f * f <= m and f < 100000:
            if m % f == 0:
                d = f
                break
            f += 2
        if d is None:
            d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def integer_divisors(n: int):
    """All positive divisors of |n| (n nonzero)."""
    fac = _factorize(n)
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots_of_int_poly(coeffs):
    """Rational roots of an integer-coefficient polynomial (ascending coeffs)."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        raise ValueError("zero polynomial")
    roots = []
    shift = 0
    while coeffs[0] == 0:
        shift += 1
        coeffs = coeffs[1:]
    if shift:
        roots.append(Fraction(0))
    if len(coeffs) == 1:
        return roots
    a0, an = coeffs[0], coeffs[-1]
    for p in integer_divisors(a0):
        for q in integer_divisors(an):
            for sgn in (1, -1):
                r = Fraction(sgn * p, q)
                if _eval_int_poly(coeffs, r) == 0 and r not in roots:
                    roots.append(r)
    return roots


def _eval_int_poly(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _clear_denominators(fracs):
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


# -- roots over Q(i) -----------------------------------------------------------


def roots_qi(f: PolyQi):
    """All Q(i)-roots of f (degree <= 3 handled completely).

    Returns (roots, leftover_irreducible_factors); each leftover factor is
    irreducible over Q(i), so its degree counts conjugate roots living in a
    proper extension.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no root list")
    f = f.monic()
    roots = []
    leftovers = []
    while f.degree > 0:
        if f.degree > 3:
            raise NotImplementedError("root extraction implemented for degree <= 3")
        r = _find_one_root(f)
        if r is None:
            leftovers.append(f)
            break
        roots.append(r)
        f, rem = f.divmod(PolyQi([-r, GR_ONE]))
        assert rem.is_zero()
    return roots, leftovers


def _find_one_root(f: PolyQi):
    if f.coeffs[0].is_zero():
        return GR_ZERO
    if f.degree == 1:
        return -f.coeffs[0] / f.coeffs[1]
    if f.degree == 2:
        c, b, a = f.coeffs
        disc = b * b - 4 * a * c
        s = disc.sqrt()
        if s is None:
            return None
        return (-b + s) / (2 * a)
    # degree 3: try rational (real) roots first
    re, im = f.real_part(), f.imag_part()
    if any(im):
        gr_re = PolyQi([GaussRational(c) for c in re])
        gr_im = PolyQi([GaussRational(c) for c in im])
        g = poly_gcd(gr_re, gr_im)
        if g.degree >= 1:
            cand = rational_roots_of_int_poly(_clear_denominators([c.re for c in g.coeffs]))
            for r in cand:
                rr = GaussRational(r)
                if f(rr).is_zero():
                    return rr
    else:
        cand = rational_roots_of_int_poly(_clear_denominators(re))
        for r in cand:
            return GaussRational(r)
        # real coefficients with no rational root: any Q(i) root r would force
        # conj(r) to be a root too, leaving a rational third root. None exists.
        return None
    # properly complex cubic: non-real roots have a rational quadratic minimal
    # polynomial dividing f * conj(f); enumerate them Kronecker-style.
    G = f * f.conj_coeffs()
    gint = _clear_denominators([c.re for c in G.coeffs])
    for m in _quadratic_factors(gint):
        c0, c1, c2 = m
        disc = GaussRational(Fraction(c1 * c1 - 4 * c2 * c0))
        s = disc.sqrt()
        if s is None:
            continue
        for ss in (s, -s):
            r = (GaussRational(Fraction(-c1)) + ss) / GaussRational(Fraction(2 * c2))
            if f(r).is_zero():
                return r
    return None


def _quadratic_factors(gint):
    """Candidate integer quadratic factors (c0, c1, c2) of an integer poly."""
    g0 = _eval_int_poly(gint, Fraction(0))
    g1 = _eval_int_poly(gint, Fraction(1))
    gm1 = _eval_int_poly(gint, Fraction(-1))
    if g0 == 0 or g1 == 0 or gm1 == 0:
        return  # rational root present; handled elsewhere
    lead = gint[-1]
    out = set()
    for c2 in integer_divisors(lead):
        for d0 in integer_divisors(int(g0)):
            for s0 in (1, -1):
                c0 = s0 * d0
                for d1 in integer_divisors(int(g1)):
                    for s1 in (1, -1):
                        # m(1) = c2 + c1 + c0 = s1*d1
                        c1 = s1 * d1 - c2 - c0
                        # check m(-1) divides gm1
                        mval = c2 - c1 + c0
                        if mval == 0 or int(gm1) % mval != 0:
                            continue
                        key = (c0, c1, c2)
                        if key not in out and _int_poly_divides([c0, c1, c2], gint):
                            out.add(key)
    for key in sorted(out):
        yield key


def _int_poly_divides(m, g) -> bool:
    """Whether the integer polynomial m divides g exactly over Q."""
    mm = PolyQi([GaussRational(c) for c in m])
    gg = PolyQi([GaussRational(c) for c in g])
    if mm.degree < 1:
        return False
    _, r = gg.divmod(mm)
    return r.is_zero()
