"""The four complexified composition algebras R, C, H, O.

Elements carry exact Q(i) coordinates over an orthonormal basis
e_0 = 1, e_1, ..., e_{a-1}.  The multiplication table is generated by the
Cayley-Dickson doubling  (a, b)(c, d) = (ac - d*b, da + bc*)  starting from
the reals; for a = 8 this fixes one Fano-plane convention, whose index
triples are listed by `fano_triples`.  The table is not trusted on faith:
the test suite checks the composition law q(xy) = q(x)q(y) and
alternativity exhaustively over basis pairs and triples.

The quadratic form q is complex-bilinear (a plain sum of coordinate
products, no conjugation), matching the complexified norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gaussrat import GR_ONE, GR_ZERO, GaussRational


@dataclass(frozen=True)
class AlgebraTag:
    name: str
    dim: int

    def __post_init__(self):
        if _DIM_BY_NAME.get(self.name) != self.dim:
            raise ValueError("bad algebra tag %r/%d" % (self.name, self.dim))

    def __repr__(self):
        return self.name


_DIM_BY_NAME = {"R": 1, "C": 2, "H": 4, "O": 8}

ALG_R = AlgebraTag("R", 1)
ALG_C = AlgebraTag("C", 2)
ALG_H = AlgebraTag("H", 4)
ALG_O = AlgebraTag("O", 8)

ALL_TAGS = (ALG_R, ALG_C, ALG_H, ALG_O)


def tag_by_name(name: str) -> AlgebraTag:
    for t in ALL_TAGS:
        if t.name == name:
            return t
    raise ValueError("unknown algebra %r (expected R, C, H or O)" % name)


def _cd_index(dim: int, i: int, j: int):
    """(k, sign) with e_i e_j = sign * e_k in the Cayley-Dickson algebra."""
    if dim == 1:
        return 0, 1
    half = dim // 2
    hi, hj = i >= half, j >= half
    li, lj = i % half, j % half
    # conjugation in the half algebra: e_0 fixed, others negated
    if not hi and not hj:  # (p,0)(q,0) = (pq, 0)
        return _cd_index(half, li, lj)
    if not hi and hj:  # (p,0)(0,q) = (0, qp)
        k, s = _cd_index(half, lj, li)
        return k + half, s
    if hi and not hj:  # (0,p)(q,0) = (0, p conj(q))
        k, s = _cd_index(half, li, lj)
        if lj != 0:
            s = -s
        return k + half, s
    # (0,p)(0,q) = (-conj(q) p, 0)
    k, s = _cd_index(half, lj, li)
    if lj != 0:
        s = -s
    return k, -s


@lru_cache(maxsize=None)
def mult_table(dim: int):
    return tuple(
        tuple(_cd_index(dim, i, j) for j in range(dim)) for i in range(dim)
    )


def fano_triples():
    """The 7 cyclically-oriented index triples (i, j, k) with e_i e_j = e_k."""
    table = mult_table(8)
    triples = []
    for i in range(1, 8):
        for j in range(i + 1, 8):
            k, s = table[i][j]
            if s == 1:
                triples.append((i, j, k))
            else:
                triples.append((j, i, k))
    seen = set()
    out = []
    for t in triples:
        key = frozenset(t)
        if key not in seen:
            seen.add(key)
            out.append(t)
    return out


class AlgElement:
    """An element of a complexified composition algebra."""

    __slots__ = ("tag", "coords")

    def __init__(self, tag: AlgebraTag, coords):
        coords = tuple(GaussRational(c) if not isinstance(c, GaussRational) else c
                       for c in coords)
        if len(coords) != tag.dim:
            raise ValueError("expected %d coordinates, got %d" % (tag.dim, len(coords)))
        self.tag = tag
        self.coords = coords

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, tag: AlgebraTag) -> "AlgElement":
        return cls(tag, (GR_ZERO,) * tag.dim)

    @classmethod
    def one(cls, tag: AlgebraTag) -> "AlgElement":
        return cls.basis(tag, 0)

    @classmethod
    def basis(cls, tag: AlgebraTag, k: int) -> "AlgElement":
        c = [GR_ZERO] * tag.dim
        c[k] = GR_ONE
        return cls(tag, c)

    @classmethod
    def scalar(cls, tag: AlgebraTag, s) -> "AlgElement":
        c = [GR_ZERO] * tag.dim
        c[0] = GaussRational(s) if not isinstance(s, GaussRational) else s
        return cls(tag, c)

    # -- ring structure --------------------------------------------------

    def _check(self, other: "AlgElement"):
        if self.tag != other.tag:
            raise ValueError("algebra mismatch: %s vs %s" % (self.tag, other.tag))

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.tag, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.tag, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.tag, tuple(-a for a in self.coords))

    def scale(self, s) -> "AlgElement":
        return AlgElement(self.tag, tuple(a * s for a in self.coords))

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        """The composition-algebra product, from the structure-constant table."""
        self._check(other)
        dim = self.tag.dim
        table = mult_table(dim)
        acc = [GR_ZERO] * dim
        for i, xi in enumerate(self.coords):
            if xi.is_zero():
                continue
            ti = table[i]
            for j, yj in enumerate(other.coords):
                if yj.is_zero():
                    continue
                k, s = ti[j]
                term = xi * yj
                acc[k] = acc[k] - term if s < 0 else acc[k] + term
        return AlgElement(self.tag, acc)

    def conj(self) -> "AlgElement":
        return AlgElement(self.tag, (self.coords[0],) + tuple(-c for c in self.coords[1:]))

    def re(self) -> GaussRational:
        return self.coords[0]

    def im_part(self) -> "AlgElement":
        return AlgElement(self.tag, (GR_ZERO,) + self.coords[1:])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.tag == other.tag and self.coords == other.coords

    def __hash__(self):
        return hash((self.tag, self.coords))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if c.is_zero():
                continue
            terms.append("%r%s" % (c, "" if k == 0 else "*e%d" % k))
        return " + ".join(terms) if terms else "0"

    # -- JSON ---------------------------------------------------------------

    def to_json(self):
        return {"algebra": self.tag.name,
                "coords": [[GaussRational._frac_str(c.re), GaussRational._frac_str(c.im)]
                           for c in self.coords]}

    @classmethod
    def from_json(cls, obj) -> "AlgElement":
        tag = tag_by_name(obj["algebra"])
        coords = [GaussRational.from_json(c) for c in obj["coords"]]
        return cls(tag, coords)


def qbilin(x: AlgElement, y: AlgElement) -> GaussRational:
    """The complex-bilinear scalar product: sum of coordinate products."""
    if x.tag != y.tag:
        raise ValueError("algebra mismatch: %s vs %s" % (x.tag, y.tag))
    s = GR_ZERO
    for a, b in zip(x.coords, y.coords):
        if a.is_zero() or b.is_zero():
            continue
        s = s + a * b
    return s


def qform(x: AlgElement) -> GaussRational:
    return qbilin(x, x)
