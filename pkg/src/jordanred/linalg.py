"""Exact dense linear algebra for small matrices.

The generic routines work over any exact field whose elements support
+, -, *, / and == (Fraction and GaussRational both do).  Integer matrices
get a fraction-free Bareiss rank for the larger kernels.
"""

from __future__ import annotations

from fractions import Fraction


def _is_zero(x) -> bool:
    return not x


def rank(rows) -> int:
    """Rank of a matrix given as a list of rows over an exact field."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not _is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            if _is_zero(f):
                continue
            g = f / pv
            row = m[i]
            for j in range(c, ncols):
                row[j] = row[j] - g * prow[j]
        r += 1
        if r == nrows:
            break
    return r


def rank_int(rows) -> int:
    """Bareiss fraction-free rank for integer matrices."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            if f == 0 and prev == 1:
                continue
            for j in range(c, ncols):
                row[j] = (pv * row[j] - f * prow[j]) // prev
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not _is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        prow = m[r]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i][c]
            if _is_zero(f):
                continue
            row = m[i]
            for j in range(c, ncols):
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def nullspace(rows, ncols=None, one=None):
    """Basis of the right kernel of the matrix, as a list of vectors.

    `one` is the field unit used to fill in the free coordinates; it is
    inferred from the matrix when omitted.
    """
    m = [list(r) for r in rows]
    if m:
        ncols = len(m[0])
    if ncols is None:
        raise ValueError("empty matrix needs an explicit column count")
    if one is None:
        if m:
            x = m[0][0]
            one = x - x + 1 if isinstance(x, (int, Fraction)) else (x - x) ** 0
        else:
            one = 1
    if not m:
        basis = []
        for c in range(ncols):
            v = [one - one] * ncols
            v[c] = one
            basis.append(v)
        return basis
    red, pivots = rref(m)
    zero = one - one
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def invert(rows):
    """Inverse of a small square matrix over an exact field."""
    n = len(rows)
    m = [list(r) for r in rows]
    x = m[0][0]
    one = x - x + 1 if isinstance(x, (int, Fraction)) else (x - x) ** 0
    zero = one - one
    aug = [m[i] + [one if j == i else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not _is_zero(aug[i][c]):
                piv = i
                break
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        prow = aug[c]
        for i in range(n):
            if i == c:
                continue
            f = aug[i][c]
            if _is_zero(f):
                continue
            row = aug[i]
            for j in range(c, 2 * n):
                row[j] = row[j] - f * prow[j]
    return [row[n:] for row in aug]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = ai[0] * b[0][j]
            for t in range(1, k):
                if ai[t]:
                    s = s + ai[t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = None
        for x, y in zip(row, v):
            if x:
                s = x * y if s is None else s + x * y
        if s is None:
            s = row[0] * v[0]  # a zero of the right type
        out.append(s)
    return out


def mat_trace_of_product(a, b):
    """trace(a @ b) without forming the product."""
    s = a[0][0] * b[0][0]
    first = True
    n = len(a)
    for i in range(n):
        ai = a[i]
        for k in range(n):
            if ai[k]:
                t = ai[k] * b[k][i]
                if first:
                    s = t
                    first = False
                else:
                    s = s + t
    if first:
        s = a[0][0] * b[0][0]
    return s


class RowSpan:
    """Incrementally reduced row space, for exact span-membership tests."""

    def __init__(self, vectors=()):
        self.rows = []  # list of (pivot_index, normalized row)
        for v in vectors:
            self.add(v)

    def reduce(self, vec):
        v = list(vec)
        for piv, row in self.rows:
            f = v[piv]
            if _is_zero(f):
                continue
            for j in range(len(v)):
                if not _is_zero(row[j]):
                    v[j] = v[j] - f * row[j]
        return v

    def add(self, vec) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        v = self.reduce(vec)
        for piv in range(len(v)):
            if not _is_zero(v[piv]):
                pv = v[piv]
                v = [x / pv for x in v]
                self.rows.append((piv, v))
                self.rows.sort(key=lambda t: t[0])
                return True
        return False

    def contains(self, vec) -> bool:
        return all(_is_zero(x) for x in self.reduce(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)
