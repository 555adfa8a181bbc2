"""The Jordan algebra of Hermitian 3x3 matrices over a composition algebra.

A matrix is stored cyclically as three diagonal scalars c_1, c_2, c_3 and
three algebra entries x_1, x_2, x_3 sitting at positions (2,3), (3,1),
(1,2), with conjugates opposite:

        [ c_1     x_3     conj(x_2) ]
        [ conj(x_3)  c_2     x_1    ]
        [ x_2     conj(x_1)  c_3    ]

"Hermitian" refers to the algebra conjugation only; the diagonal scalars
are arbitrary complex numbers (the form is complex-bilinear throughout).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .algebra import AlgebraTag, AlgElement, qbilin, tag_by_name
from .gaussrat import GR_ONE, GR_ZERO, GaussRational


HALF = GaussRational(1, 0) / 2
THIRD = GaussRational(1, 0) / 3
SIXTH = GaussRational(1, 0) / 6


class JordanMatrix:
    __slots__ = ("tag", "c", "x")

    def __init__(self, tag: AlgebraTag, c, x):
        self.tag = tag
        self.c = tuple(GaussRational(v) if not isinstance(v, GaussRational) else v
                       for v in c)
        self.x = tuple(x)
        if len(self.c) != 3 or len(self.x) != 3:
            raise ValueError("need 3 diagonal scalars and 3 off-diagonal entries")
        for e in self.x:
            if e.tag != tag:
                raise ValueError("off-diagonal entry from the wrong algebra")

    # -- constructors -----------------------------------------------------

    @classmethod
    def diag(cls, tag: AlgebraTag, c1, c2, c3) -> "JordanMatrix":
        z = AlgElement.zero(tag)
        return cls(tag, (c1, c2, c3), (z, z, z))

    @classmethod
    def identity(cls, tag: AlgebraTag) -> "JordanMatrix":
        return cls.diag(tag, 1, 1, 1)

    @classmethod
    def zero(cls, tag: AlgebraTag) -> "JordanMatrix":
        return cls.diag(tag, 0, 0, 0)

    @classmethod
    def from_entries(cls, tag: AlgebraTag, entries) -> "JordanMatrix":
        """Build from a full 3x3 array of AlgElement, checking Hermitian shape."""
        for i in range(3):
            d = entries[i][i]
            if any(not c.is_zero() for c in d.coords[1:]):
                raise ValueError("diagonal entries must be scalar")
            for j in range(3):
                if entries[i][j] != entries[j][i].conj():
                    raise ValueError("matrix is not Hermitian")
        c = tuple(entries[i][i].coords[0] for i in range(3))
        x = (entries[1][2], entries[2][0], entries[0][1])
        return cls(tag, c, x)

    def entries(self):
        """The full 3x3 array of AlgElement."""
        s = [AlgElement.scalar(self.tag, ci) for ci in self.c]
        x1, x2, x3 = self.x
        return [
            [s[0], x3, x2.conj()],
            [x3.conj(), s[1], x1],
            [x2, x1.conj(), s[2]],
        ]

    # -- linear structure ---------------------------------------------------

    def _check(self, other: "JordanMatrix"):
        if self.tag != other.tag:
            raise ValueError("algebra mismatch: %s vs %s" % (self.tag, other.tag))

    def __add__(self, other: "JordanMatrix") -> "JordanMatrix":
        self._check(other)
        return JordanMatrix(self.tag,
                            tuple(a + b for a, b in zip(self.c, other.c)),
                            tuple(a + b for a, b in zip(self.x, other.x)))

    def __sub__(self, other: "JordanMatrix") -> "JordanMatrix":
        self._check(other)
        return JordanMatrix(self.tag,
                            tuple(a - b for a, b in zip(self.c, other.c)),
                            tuple(a - b for a, b in zip(self.x, other.x)))

    def __neg__(self) -> "JordanMatrix":
        return JordanMatrix(self.tag, tuple(-a for a in self.c),
                            tuple(-a for a in self.x))

    def scale(self, s) -> "JordanMatrix":
        s = GaussRational(s) if not isinstance(s, GaussRational) else s
        return JordanMatrix(self.tag, tuple(a * s for a in self.c),
                            tuple(a.scale(s) for a in self.x))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.c) and all(e.is_zero() for e in self.x)

    def __eq__(self, other):
        if not isinstance(other, JordanMatrix):
            return NotImplemented
        return self.tag == other.tag and self.c == other.c and self.x == other.x

    def __hash__(self):
        return hash((self.tag, self.c, self.x))

    def __repr__(self):
        return "JordanMatrix(%s, c=%r, x=%r)" % (self.tag, self.c, self.x)

    # -- trace forms ---------------------------------------------------------

    def trace(self) -> GaussRational:
        return self.c[0] + self.c[1] + self.c[2]

    def is_traceless(self) -> bool:
        return self.trace().is_zero()

    # -- JSON ------------------------------------------------------------------

    def to_json(self):
        return {
            "algebra": self.tag.name,
            "c": [ci.to_json() for ci in self.c],
            "x1": self.x[0].to_json(),
            "x2": self.x[1].to_json(),
            "x3": self.x[2].to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "JordanMatrix":
        tag = tag_by_name(obj["algebra"])
        c = [GaussRational.from_json(v) for v in obj["c"]]
        x = [AlgElement.from_json(obj[k]) for k in ("x1", "x2", "x3")]
        for e in x:
            if e.tag != tag:
                raise ValueError("off-diagonal entry algebra differs from header")
        return cls(tag, c, x)


def jordan_mul(A: JordanMatrix, B: JordanMatrix) -> JordanMatrix:
    """The symmetrized product (AB + BA)/2, entrywise.

    For diagonal i (cyclic indices):   c_i d_i + q(x_{i+1},y_{i+1}) + q(x_{i+2},y_{i+2})
    For off-diagonal slot i:  ((c_{i+1}+c_{i+2}) y_i + (d_{i+1}+d_{i+2}) x_i
                               + conj(y_{i+1} x_{i+2} + x_{i+1} y_{i+2})) / 2
    """
    A._check(B)
    c, x = A.c, A.x
    d, y = B.c, B.x
    q12 = qbilin(x[0], y[0])
    q20 = qbilin(x[1], y[1])
    q01 = qbilin(x[2], y[2])
    new_c = (
        c[0] * d[0] + q20 + q01,
        c[1] * d[1] + q01 + q12,
        c[2] * d[2] + q12 + q20,
    )
    new_x = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        e = y[i].scale((c[j] + c[k]) * HALF) + x[i].scale((d[j] + d[k]) * HALF)
        e = e + (y[j] * x[k] + x[j] * y[k]).conj().scale(HALF)
        new_x.append(e)
    return JordanMatrix(A.tag, new_c, tuple(new_x))


def jordan_mul_full(A: JordanMatrix, B: JordanMatrix) -> JordanMatrix:
    """Oracle for jordan_mul: symmetrize the plain 3x3 matrix product."""
    ea, eb = A.entries(), B.entries()
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            s = AlgElement.zero(A.tag)
            for k in range(3):
                s = s + ea[i][k] * eb[k][j] + eb[i][k] * ea[k][j]
            row.append(s.scale(HALF))
        out.append(row)
    return JordanMatrix.from_entries(A.tag, out)


def inner(A: JordanMatrix, B: JordanMatrix) -> GaussRational:
    """trace(A o B), the invariant symmetric bilinear form."""
    A._check(B)
    s = A.c[0] * B.c[0] + A.c[1] * B.c[1] + A.c[2] * B.c[2]
    for i in range(3):
        s = s + qbilin(A.x[i], B.x[i]) * 2
    return s


def trace_forms(X: JordanMatrix) -> Tuple[GaussRational, GaussRational, GaussRational]:
    """(trace, Q, Q') with Q = trace(X o X) and Q' = (trace^2 - Q)/2."""
    t = X.trace()
    q = inner(X, X)
    return t, q, (t * t - q) * HALF


def det(X: JordanMatrix) -> GaussRational:
    """Determinant via traces of Jordan powers: (t1^3 - 3 t1 t2 + 2 t3)/6."""
    x2 = jordan_mul(X, X)
    x3 = jordan_mul(X, x2)
    t1, t2, t3 = X.trace(), x2.trace(), x3.trace()
    return (t1 * t1 * t1 - 3 * t1 * t2 + 2 * t3) * SIXTH


def det3(X: JordanMatrix, Y: JordanMatrix, Z: JordanMatrix) -> GaussRational:
    """Full symmetric trilinear polarization, normalized by det3(X,X,X) = det(X)."""
    s = det(X + Y + Z)
    s = s - det(X + Y) - det(Y + Z) - det(X + Z)
    s = s + det(X) + det(Y) + det(Z)
    return s * SIXTH


def char_poly(X: JordanMatrix):
    """Coefficients (1, -trace, Q', -det) of t^3 - trace t^2 + Q' t - det."""
    t, _, qp = trace_forms(X)
    return (GR_ONE, -t, qp, -det(X))


def cayley_hamilton_residual(X: JordanMatrix) -> JordanMatrix:
    """X^3 - trace(X) X^2 + Q'(X) X - det(X) I, which must vanish."""
    x2 = jordan_mul(X, X)
    x3 = jordan_mul(X, x2)
    t, _, qp = trace_forms(X)
    r = x3 - x2.scale(t) + X.scale(qp)
    return r - JordanMatrix.identity(X.tag).scale(det(X))


class SeveriClass(Enum):
    RANK_ONE = "rank_one"
    SQUARE_ZERO = "square_zero"
    PROJECTED_RANK_ONE = "projected_rank_one"
    NONE = "none"


def is_rank_one(X: JordanMatrix) -> bool:
    """X o X = trace(X) X, the equations cutting out the rank-one locus."""
    return jordan_mul(X, X) == X.scale(X.trace())


def classify_severi(X: JordanMatrix) -> Tuple[SeveriClass, Optional[GaussRational]]:
    """Membership of a nonzero matrix in the rank-one locus or its projection.

    For traceless X the projected class carries the scalar s with
    X o X - (Q/3) I = s X; the rank-one lift is then X + s I and 6 s^2 = Q.
    All decisions are made rationally, with no square roots.
    """
    if X.is_zero():
        raise ValueError("cannot classify the zero matrix")
    sq = jordan_mul(X, X)
    t = X.trace()
    if not t.is_zero():
        if sq == X.scale(t):
            return SeveriClass.RANK_ONE, None
        return SeveriClass.NONE, None
    if sq.is_zero():
        return SeveriClass.SQUARE_ZERO, GR_ZERO
    q = inner(X, X)
    n = sq - JordanMatrix.identity(X.tag).scale(q * THIRD)
    s = _proportionality_factor(n, X)
    if s is not None and 6 * s * s == q:
        return SeveriClass.PROJECTED_RANK_ONE, s
    return SeveriClass.NONE, None


def _proportionality_factor(N: JordanMatrix, X: JordanMatrix):
    """s with N = s X, or None.  X is assumed nonzero."""
    s = None
    for a, b in zip(N.c, X.c):
        if not b.is_zero():
            s = a / b
            break
    if s is None:
        for e, f in zip(N.x, X.x):
            for a, b in zip(e.coords, f.coords):
                if not b.is_zero():
                    s = a / b
                    break
            if s is not None:
                break
    if s is None:
        return None
    return s if X.scale(s) == N else None


def rank_one_lift(X: JordanMatrix):
    """For a projected rank-one (or square-zero) X, the rank-one Z = X + s I."""
    cls, s = classify_severi(X)
    if cls not in (SeveriClass.PROJECTED_RANK_ONE, SeveriClass.SQUARE_ZERO):
        raise ValueError("matrix is not on the projected rank-one locus")
    return X + JordanMatrix.identity(X.tag).scale(s), s


def discriminant(X: JordanMatrix) -> GaussRational:
    """Q(X)^3 - 54 det(X)^2 on traceless matrices.

    Vanishes exactly when the characteristic cubic t^3 - (Q/2) t - det has
    a multiple root; degree 6 in the entries of X.
    """
    if not X.is_traceless():
        raise ValueError("discriminant is defined on traceless matrices")
    q = inner(X, X)
    d = det(X)
    return q * q * q - 54 * d * d


def rank_one_from_chart(tag: AlgebraTag, x: AlgElement, y: AlgElement) -> JordanMatrix:
    """The rank-one matrix with first row (1, x, y) in the affine chart c_1 = 1."""
    one = AlgElement.one(tag)
    e = [
        [one, x, y],
        [x.conj(), AlgElement.scalar(tag, qbilin(x, x)), x.conj() * y],
        [y.conj(), y.conj() * x, AlgElement.scalar(tag, qbilin(y, y))],
    ]
    return JordanMatrix.from_entries(tag, e)


def sigma1(X: JordanMatrix) -> JordanMatrix:
    """The Jordan automorphism inducing the transposition (1 2) of diagonal units.

    Conjugation of the full matrix by the permutation matrix of (1 2); in the
    cyclic storage this swaps c_1/c_2 and sends (x_1,x_2,x_3) to the
    conjugates (conj x_2, conj x_1, conj x_3).
    """
    c1, c2, c3 = X.c
    x1, x2, x3 = X.x
    return JordanMatrix(X.tag, (c2, c1, c3), (x2.conj(), x1.conj(), x3.conj()))


def sigma2(X: JordanMatrix) -> JordanMatrix:
    """The Jordan automorphism inducing the transposition (2 3) of diagonal units."""
    c1, c2, c3 = X.c
    x1, x2, x3 = X.x
    return JordanMatrix(X.tag, (c1, c3, c2), (x1.conj(), x3.conj(), x2.conj()))
