from fractions import Fraction

import pytest

from jordanred.algebra import ALG_C, ALG_H, ALG_O, ALG_R, ALL_TAGS, AlgElement
from jordanred.gaussrat import GR_ZERO, gr
from jordanred.jordan import JordanMatrix, inner, jordan_mul
from jordanred.liealg import (So3AOperator, apply_j0_linear, bform_gram,
                              bform_inverse, bracket_in_span,
                              is_nilpotent, j0_basis, j0_coords, j0_dim,
                              j0_from_coords, j0_gram, lr_triality_triple,
                              nilpotent_generators, random_unipotent,
                              so3a_basis, so3a_rank, stabilizer_dims,
                              standard_derivation, triality_basis,
                              triality_identity_holds)
from jordanred.linalg import RowSpan, rank
from jordanred.sampling import make_rng, random_jordan, random_traceless

T_DIMS = {1: 0, 2: 2, 4: 9, 8: 28}


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_triality_dimension(tag):
    assert len(triality_basis(tag)) == T_DIMS[tag.dim]


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_triality_identity_exhaustive(tag):
    for triple in triality_basis(tag):
        assert triality_identity_holds(tag, triple)
        for m in triple:
            # skew in the orthonormal basis
            for i in range(tag.dim):
                for j in range(tag.dim):
                    assert m[i][j] == -m[j][i]


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_so3a_dimension_and_independence(tag):
    basis = so3a_basis(tag)
    assert len(basis) == T_DIMS[tag.dim] + 3 * tag.dim
    assert so3a_rank(tag) == len(basis)


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_operators_kill_identity_and_trace(tag):
    ident = JordanMatrix.identity(tag)
    rng = make_rng()
    for op in so3a_basis(tag):
        assert op.apply(ident).is_zero()
        x = random_jordan(tag, rng)
        assert op.apply(x).trace() == GR_ZERO


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_derivation_and_orthogonality(tag):
    """Every basis operator is a derivation and is skew for the trace form."""
    rng = make_rng()
    pairs = [(random_jordan(tag, rng), random_jordan(tag, rng))
             for _ in range(20)]
    for op in so3a_basis(tag):
        for x, y in pairs:
            assert op.apply(jordan_mul(x, y)) == \
                jordan_mul(op.apply(x), y) + jordan_mul(x, op.apply(y))
            assert (inner(op.apply(x), y) + inner(x, op.apply(y))).is_zero()


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_slot_generators_are_inner_derivations(tag):
    """a_i generators equal 2 [L_{F_i(a)}, L_{D_i}], an independent oracle."""
    rng = make_rng()
    diags = {1: (0, 1, -1), 2: (-1, 0, 1), 3: (-1, 1, 0)}
    zero = AlgElement.zero(tag)
    for slot in (1, 2, 3):
        d = JordanMatrix.diag(tag, *diags[slot])
        for k in range(tag.dim):
            a = AlgElement.basis(tag, k)
            xs = [zero] * 3
            xs[slot - 1] = a
            f = JordanMatrix(tag, (0, 0, 0), tuple(xs))
            op = So3AOperator(tag, **{"a%d" % slot: a})
            for _ in range(4):
                x = random_jordan(tag, rng)
                comm = (jordan_mul(f, jordan_mul(d, x))
                        - jordan_mul(d, jordan_mul(f, x))).scale(2)
                assert op.apply(x) == comm


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_action_formulas_on_diagonals(tag):
    a1 = AlgElement.basis(tag, 0)
    op = So3AOperator(tag, a1=a1)
    out = op.apply(JordanMatrix.diag(tag, 5, 3, 2))
    assert out.c == (GR_ZERO, GR_ZERO, GR_ZERO)
    assert out.x[0] == a1.scale(gr(1)) and out.x[1].is_zero() and out.x[2].is_zero()
    for triple in triality_basis(tag):
        top = So3AOperator(tag, tmats=triple)
        assert top.apply(JordanMatrix.diag(tag, 5, 3, 2)).is_zero()


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_realized_matrix_agrees_with_formulas(tag):
    rng = make_rng()
    for op in so3a_basis(tag)[::4]:
        x = random_traceless(tag, rng)
        via_mat = op.apply_coords(j0_coords(x))
        assert j0_from_coords(tag, via_mat) == op.apply(x)


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_stabilizer_dims(tag):
    a = tag.dim
    ann, orb, perp = stabilizer_dims(JordanMatrix.diag(tag, 0, 1, -1))
    assert ann == T_DIMS[a]
    assert orb == 3 * a and perp == 2
    _, orb, perp = stabilizer_dims(JordanMatrix.diag(tag, 1, 1, -2))
    assert orb == 2 * a and perp == a + 2
    with pytest.raises(ValueError):
        stabilizer_dims(JordanMatrix.zero(tag))


def test_stabilizer_dims_square_zero_point():
    for tag in ALL_TAGS:
        z = AlgElement.zero(tag)
        zrep = JordanMatrix(tag, (1, -1, 0),
                            (z, z, AlgElement.scalar(tag, gr(0, 1))))
        _, orb, perp = stabilizer_dims(zrep)
        assert perp == tag.dim + 2


@pytest.mark.parametrize("tag", (ALG_R, ALG_C, ALG_H), ids=str)
def test_bracket_closure_exhaustive(tag):
    n = len(so3a_basis(tag))
    for i in range(n):
        for j in range(i + 1, n):
            assert bracket_in_span(tag, i, j)


def test_bracket_closure_octonions_sampled():
    rng = make_rng()
    n = len(so3a_basis(ALG_O))
    for _ in range(200):
        i, j = rng.randrange(n), rng.randrange(n)
        assert bracket_in_span(ALG_O, i, j)


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_bform_invertible(tag):
    g = bform_gram(tag)
    assert len(g) == len(so3a_basis(tag))
    binv = bform_inverse(tag)
    n = len(g)
    for i in range(n):
        for j in range(n):
            s = sum(Fraction(g[i][k]) * binv[k][j] for k in range(n))
            assert s == (1 if i == j else 0)


@pytest.mark.parametrize("tag", (ALG_C, ALG_H, ALG_O), ids=str)
def test_lr_presentation_cross_check(tag):
    """L/R combinations and diagonal derivations recover t(A) exactly."""
    tb = triality_basis(tag)

    def flat(tr):
        return [Fraction(v) for m in tr for row in m for v in row]

    span = RowSpan([flat(t) for t in tb])
    assert span.dim == len(tb)
    cover = RowSpan()
    zero = AlgElement.zero(tag)
    for k in range(1, tag.dim):
        e = AlgElement.basis(tag, k)
        for pair in ((e, zero), (zero, e)):
            trip = lr_triality_triple(*pair)
            assert triality_identity_holds(tag, trip)
            assert span.contains(flat(trip))
            cover.add(flat(trip))
    for i in range(1, tag.dim):
        for j in range(i + 1, tag.dim):
            d = standard_derivation(AlgElement.basis(tag, i),
                                    AlgElement.basis(tag, j))
            trip = (d, d, d)
            assert triality_identity_holds(tag, trip)
            assert span.contains(flat(trip))
            cover.add(flat(trip))
    assert cover.dim == len(tb)


def test_lr_triple_requires_imaginary():
    with pytest.raises(ValueError):
        lr_triality_triple(AlgElement.one(ALG_H), AlgElement.zero(ALG_H))


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_unipotent_automorphisms(tag):
    rng = make_rng()
    gens = nilpotent_generators(tag)
    assert gens
    for m in gens:
        assert is_nilpotent(m)
    g = random_unipotent(tag, rng, factors=3)
    for _ in range(5):
        x, y = random_jordan(tag, rng), random_jordan(tag, rng)
        gx, gy = apply_j0_linear(tag, g, x), apply_j0_linear(tag, g, y)
        assert apply_j0_linear(tag, g, jordan_mul(x, y)) == jordan_mul(gx, gy)
        assert inner(gx, gy) == inner(x, y)
    ident = JordanMatrix.identity(tag)
    assert apply_j0_linear(tag, g, ident) == ident


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_j0_coordinates(tag):
    rng = make_rng()
    basis = j0_basis(tag)
    assert len(basis) == j0_dim(tag) == 3 * tag.dim + 2
    x = random_traceless(tag, rng)
    assert j0_from_coords(tag, j0_coords(x)) == x
    with pytest.raises(ValueError):
        j0_coords(JordanMatrix.identity(tag))
    g = j0_gram(tag)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            assert inner(bi, bj) == gr(g[i][j])
