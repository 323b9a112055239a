"""Exact dense linear algebra over Gaussian rationals and jets.

Matrices are lists of lists.  Entries only need ring operations plus
a ``val`` attribute whose ``is_zero()`` decides pivot viability, so
Scalar and Jet matrices share every routine here.  The determinant
specializes to fraction-free elimination over Gaussian integers when
all entries are Scalars.
"""

from __future__ import annotations

import math

from .errors import InvalidInputError, StratumError
from .scalar import ONE, ZERO, Scalar

Matrix = list


def identity(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(x, y):
    n, m, p = len(x), len(y), len(y[0])
    out = []
    for i in range(n):
        xi = x[i]
        row = []
        for j in range(p):
            acc = xi[0] * y[0][j]
            for k in range(1, m):
                c = xi[k]
                if isinstance(c, Scalar) and c.is_zero():
                    continue
                acc = acc + c * y[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_eq(x, y) -> bool:
    return len(x) == len(y) and all(
        len(r) == len(s) and all(a == b for a, b in zip(r, s)) for r, s in zip(x, y)
    )


def mat_transpose(x):
    return [list(col) for col in zip(*x)]


def mat_copy(x):
    return [row[:] for row in x]


def diag_matrix(entries):
    n = len(entries)
    return [[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)]


def scale_cols(x, diag):
    """x @ diag(entries) without building the diagonal matrix."""
    return [[v * diag[j] for j, v in enumerate(row)] for row in x]


def scale_rows(diag, x):
    return [[diag[i] * v for v in row] for i, row in enumerate(x)]


def mul_right_i_plus(g, terms):
    """g @ (I + M) for sparse M given as [(row, col, weight), ...].

    Mutates and returns g.  Source columns are snapshotted per row, so
    overlapping row/col pairs in M are handled correctly.
    """
    terms = [
        (r, col, w)
        for (r, col, w) in terms
        if not (isinstance(w, Scalar) and w.is_zero())
    ]
    if not terms:
        return g
    for gi in g:
        src = [gi[r] for (r, _, _) in terms]
        for (_, col, w), v in zip(terms, src):
            if isinstance(v, Scalar) and v.is_zero():
                continue
            gi[col] = gi[col] + v * w
    return g


def mat_inverse(x):
    """Exact inverse via Gauss-Jordan; InvalidInputError when singular."""
    n = len(x)
    a = mat_copy(x)
    inv = identity(n)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not a[i][k].val.is_zero():
                piv = i
                break
        if piv is None:
            raise InvalidInputError("matrix is singular")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            inv[k], inv[piv] = inv[piv], inv[k]
        p = a[k][k]
        a[k] = [v / p for v in a[k]]
        inv[k] = [v / p for v in inv[k]]
        for i in range(n):
            if i == k:
                continue
            f = a[i][k]
            if f.is_zero():
                continue
            a[i] = [u - f * v for u, v in zip(a[i], a[k])]
            inv[i] = [u - f * v for u, v in zip(inv[i], inv[k])]
    return inv


def _gauss_div(xa, xb, ya, yb):
    # exact division in Z[i]; callers guarantee divisibility
    q = ya * ya + yb * yb
    na = xa * ya + xb * yb
    nb = xb * ya - xa * yb
    qa, ra = divmod(na, q)
    qb, rb = divmod(nb, q)
    if ra or rb:
        raise ArithmeticError("inexact Gaussian division in Bareiss elimination")
    return qa, qb


def det_exact(x) -> Scalar:
    """Determinant of a Scalar matrix, fraction-free over Z[i]."""
    n = len(x)
    if n == 0:
        return ONE
    denom = 1
    m = []
    for row in x:
        d = 1
        for v in row:
            d = d * v.d // math.gcd(d, v.d)
        denom *= d
        m.append([(v.a * (d // v.d), v.b * (d // v.d)) for v in row])
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if m[k][k] == (0, 0):
            piv = next((i for i in range(k + 1, n) if m[i][k] != (0, 0)), None)
            if piv is None:
                return ZERO
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pa, pb = m[k][k]
        for i in range(k + 1, n):
            ia, ib = m[i][k]
            for j in range(k + 1, n):
                ja, jb = m[k][j]
                ua, ub = m[i][j]
                ta = ua * pa - ub * pb - (ia * ja - ib * jb)
                tb = ua * pb + ub * pa - (ia * jb + ib * ja)
                m[i][j] = _gauss_div(ta, tb, prev[0], prev[1])
            m[i][k] = (0, 0)
        prev = (pa, pb)
    da, db = m[n - 1][n - 1]
    return Scalar(sign * da, sign * db, denom)


def ldu(g):
    """Factor g = L @ diag(d) @ U with unipotent triangular L, U.

    Raises InvalidInputError when g is singular, StratumError with the
    1-based pivot position when g is invertible but some leading
    principal minor vanishes.
    """
    n = len(g)
    a = mat_copy(g)
    lower = identity(n)
    upper = identity(n)
    d = []
    for k in range(n):
        p = a[k][k]
        if p.val.is_zero():
            if det_exact([[v.val for v in row] for row in g]).is_zero():
                raise InvalidInputError("matrix is singular")
            raise StratumError(f"vanishing leading minor at position {k + 1}", index=k + 1)
        d.append(p)
        for j in range(k + 1, n):
            upper[k][j] = a[k][j] / p
        for i in range(k + 1, n):
            f = a[i][k] / p
            lower[i][k] = f
            # skip only exact zeros: a jet with zero value can still
            # carry derivatives that the update must propagate
            if f.is_zero():
                continue
            ak = a[k]
            ai = a[i]
            for j in range(k + 1, n):
                ai[j] = ai[j] - f * ak[j]
    return lower, d, upper


def principal_minor(g, k: int) -> Scalar:
    return det_exact([row[:k] for row in g[:k]])


def ldu_minors(g):
    """LDU of an invertible matrix through quotients of minors.

    l[i][j] (i > j) is det of rows (1..j-1, i), cols (1..j), divided
    by the j-th principal minor; u[i][j] (i < j) mirrors that with the
    roles of rows and columns swapped; d holds ratios of consecutive
    principal minors.
    """
    n = len(g)
    sig = [ONE] + [principal_minor(g, k) for k in range(1, n + 1)]
    if sig[n].is_zero():
        raise InvalidInputError("matrix is singular")
    for k in range(1, n):
        if sig[k].is_zero():
            raise StratumError(f"vanishing leading minor at position {k}", index=k)
    lower = identity(n)
    upper = identity(n)
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            rows = list(range(j - 1)) + [i - 1]
            cols = list(range(j))
            lower[i - 1][j - 1] = det_exact([[g[r][c] for c in cols] for r in rows]) / sig[j]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rows = list(range(i))
            cols = list(range(i - 1)) + [j - 1]
            upper[i - 1][j - 1] = det_exact([[g[r][c] for c in cols] for r in rows]) / sig[i]
    d = [sig[k] / sig[k - 1] for k in range(1, n + 1)]
    return lower, d, upper


def matrix_rank(x) -> int:
    m = mat_copy(x)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((i for i in range(row, rows) if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        for i in range(row + 1, rows):
            f = m[i][col]
            if f.is_zero():
                continue
            m[i] = [u - (f / p) * v for u, v in zip(m[i], m[row])]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank
