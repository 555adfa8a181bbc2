"""Seeded random generators for property campaigns.

All sampling flows through an explicit random.Random instance so that CLI
reports and tests are byte-for-byte reproducible.  Coordinates are kept to
small Gaussian integers to keep the exact arithmetic fast.
"""

from __future__ import annotations

import random

from .algebra import AlgebraTag, AlgElement, qbilin
from .gaussrat import GR_I, GR_ONE, GaussRational
from .jordan import JordanMatrix, rank_one_from_chart
from .reductions import ReductionLine, pierce_from_roots

DEFAULT_SEED = 20570


def make_rng(seed: int = DEFAULT_SEED) -> random.Random:
    return random.Random(seed)


def random_scalar(rng: random.Random, span: int = 2) -> GaussRational:
    return GaussRational(rng.randint(-span, span), rng.randint(-1, 1))


def random_element(tag: AlgebraTag, rng: random.Random, span: int = 2) -> AlgElement:
    return AlgElement(tag, [random_scalar(rng, span) for _ in range(tag.dim)])


def random_imaginary(tag: AlgebraTag, rng: random.Random) -> AlgElement:
    coords = [GaussRational(0)] + [random_scalar(rng) for _ in range(tag.dim - 1)]
    return AlgElement(tag, coords)


def random_jordan(tag: AlgebraTag, rng: random.Random) -> JordanMatrix:
    return JordanMatrix(tag, [random_scalar(rng) for _ in range(3)],
                        [random_element(tag, rng) for _ in range(3)])


def random_traceless(tag: AlgebraTag, rng: random.Random) -> JordanMatrix:
    c1, c2 = random_scalar(rng), random_scalar(rng)
    return JordanMatrix(tag, (c1, c2, -c1 - c2),
                        [random_element(tag, rng) for _ in range(3)])


def random_rank_one(tag: AlgebraTag, rng: random.Random) -> JordanMatrix:
    """A random point of the rank-one locus, in the first affine chart."""
    return rank_one_from_chart(tag, random_element(tag, rng), random_element(tag, rng))


def random_projected_rank_one(tag: AlgebraTag, rng: random.Random) -> JordanMatrix:
    """A traceless matrix on the projection of the rank-one locus."""
    while True:
        z = random_rank_one(tag, rng)
        t = z.trace()
        x = z - JordanMatrix.identity(tag).scale(t / 3)
        if not x.is_zero():
            return x


def element_of_norm(tag: AlgebraTag, target: GaussRational) -> AlgElement:
    """An element with q(y) equal to a prescribed scalar (needs dim >= 2)."""
    if tag.dim < 2:
        s = target.sqrt()
        if s is None:
            raise ValueError("norm not a square in the one-dimensional algebra")
        return AlgElement(tag, [s])
    beta = (target + GR_ONE) / 2
    gamma = (target - GR_ONE) / 2 * GR_I
    coords = [GaussRational(0)] * tag.dim
    coords[0] = beta
    coords[1] = gamma
    out = AlgElement(tag, coords)
    assert qbilin(out, out) == target
    return out


def random_square_zero(tag: AlgebraTag, rng: random.Random) -> JordanMatrix:
    """A traceless matrix with vanishing square (rank one on the hyperplane)."""
    from fractions import Fraction

    if tag.dim == 1:
        # 1 + x0^2 must be a rational square: x0 = (m^2-1)/2m works
        m = rng.randint(2, 9)
        x = AlgElement(tag, [GaussRational(Fraction(m * m - 1, 2 * m))])
        y = AlgElement(tag, [GaussRational(0, Fraction(m * m + 1, 2 * m))])
    else:
        x = random_element(tag, rng)
        y = element_of_norm(tag, GaussRational(-1) - qbilin(x, x))
    z = rank_one_from_chart(tag, x, y)
    assert z.trace().is_zero()
    return z


def random_pierce_triple(tag: AlgebraTag, rng: random.Random):
    """A Pierce triple conjugate to the diagonal one by a unipotent automorphism."""
    from .liealg import apply_j0_linear, random_unipotent

    g = random_unipotent(tag, rng, factors=2)
    x = apply_j0_linear(tag, g, JordanMatrix.diag(tag, -1, 0, 1))
    return pierce_from_roots(x, (GaussRational(-1), GaussRational(0), GaussRational(1)))


def random_member_line(tag: AlgebraTag, rng: random.Random) -> ReductionLine:
    """A random member of the variety of reductions, from a Pierce triple."""
    tri = random_pierce_triple(tag, rng)
    ident = JordanMatrix.identity(tag)
    p1 = tri.e1 - ident.scale(GaussRational(1) / 3)
    p2 = tri.e2 - ident.scale(GaussRational(1) / 3)
    return ReductionLine(p1, p2)
