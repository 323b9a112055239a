"""Matrix realizations of the classical families and root-group tools.

Realization sizes: A at rank r acts on N = r + 1, B on N = 2r + 1,
C and D on N = 2r.  For B, C, D the basis rows carry the weights
l_r, ..., l_1 (top to bottom), then 0 for the middle row of B, then
-l_1, ..., -l_r, so row a and row N + 1 - a carry opposite weights
and the positive root spaces sit strictly above the diagonal.

Every positive root tau gets one canonical triple (e, f, h) with
[e, f] = h, tau(h) = 2, and sigma(e) = f for the anti-automorphism
sigma(X) = S X^T S^{-1} whose diagonal S is the identity except in
family B.  The triples drive ordered exponential products, their
coordinate extraction, sl2 embeddings, and Weyl representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError
from .linalg import (
    identity,
    mat_copy,
    mat_eq,
    mat_inverse,
    mat_mul,
    matrix_rank,
    mul_right_i_plus,
)
from .rootsystem import ambient_dim, check_family_rank, pairing, positive_roots
from .scalar import I as IMAG
from .scalar import ONE, ZERO, Scalar, sc
from .weyl import WeylElement, deterministic_reduced_word, simple_roots

HALF = Scalar(1, 0, 2)
TWO = Scalar(2)


def dim(family: str, rank: int) -> int:
    check_family_rank(family, rank)
    if family == "A":
        return rank + 1
    if family == "B":
        return 2 * rank + 1
    return 2 * rank


def row_weight(family: str, rank: int, row: int) -> tuple:
    """Weight of basis row ``row`` (0-based) as a coordinate tuple."""
    n = dim(family, rank)
    m = ambient_dim(family, rank)
    out = [0] * m
    if family == "A":
        out[row] = 1
        return tuple(out)
    r = rank
    if row < r:
        out[r - 1 - row] = 1
    elif family == "B" and row == r:
        pass
    else:
        offset = r + 1 if family == "B" else r
        out[row - offset] = -1
    return tuple(out)


def coroot_diag(family: str, rank: int, root: tuple) -> list[int]:
    """Diagonal of h_root: each row weight paired against the root."""
    return [
        pairing(row_weight(family, rank, a), root) for a in range(dim(family, rank))
    ]


@dataclass(frozen=True)
class RootTriple:
    """Sparse canonical (e, f, h) data for one positive root."""

    root: tuple
    e: tuple  # ((row, col, Scalar), ...)
    f: tuple
    h: tuple  # diagonal ints
    e2: tuple  # sparse square of e
    f2: tuple

    def anchor_f(self):
        return min(self.f, key=lambda t: (t[0], t[1]))

    def anchor_e(self):
        return min(self.e, key=lambda t: (t[0], t[1]))


def _sparse_square(entries):
    acc = {}
    for (r1, c1, v1) in entries:
        for (r2, c2, v2) in entries:
            if c1 == r2:
                key = (r1, c2)
                acc[key] = acc.get(key, ZERO) + v1 * v2
    return tuple((r, c, v) for (r, c), v in sorted(acc.items()) if not v.is_zero())


@lru_cache(maxsize=None)
def root_triple(family: str, rank: int, root: tuple) -> RootTriple:
    if root not in set(positive_roots(family, rank)):
        raise InvalidInputError(f"not a positive root of {family}{rank}: {root!r}")
    n = dim(family, rank)
    nz = [(k + 1, c) for k, c in enumerate(root) if c]

    def mir(x: int) -> int:
        return n - 1 - x

    if family == "A":
        i = root.index(1)
        j = root.index(-1)
        e = ((i, j, ONE),)
        f = ((j, i, ONE),)
    else:
        r = rank

        def row(k: int) -> int:
            return r - k

        if len(nz) == 1:
            k, c = nz[0]
            a = row(k)
            if c == 1:  # short root of B
                z = r
                e = ((a, z, ONE), (z, mir(a), -ONE))
                f = ((z, a, TWO), (mir(a), z, -TWO))
            else:  # long root of C
                e = ((a, mir(a), ONE),)
                f = ((mir(a), a, ONE),)
        else:
            (m_idx, cm), (k_idx, ck) = nz
            ak, am = row(k_idx), row(m_idx)
            if cm == -1:  # l_k - l_m
                e = ((ak, am, ONE), (mir(am), mir(ak), -ONE))
                f = ((am, ak, ONE), (mir(ak), mir(am), -ONE))
            elif family == "B":  # l_k + l_m
                e = ((ak, mir(am), HALF), (am, mir(ak), -HALF))
                f = ((mir(am), ak, TWO), (mir(ak), am, -TWO))
            elif family == "C":
                e = ((ak, mir(am), ONE), (am, mir(ak), ONE))
                f = ((mir(am), ak, ONE), (mir(ak), am, ONE))
            else:
                e = ((ak, mir(am), ONE), (am, mir(ak), -ONE))
                f = ((mir(am), ak, ONE), (mir(ak), am, -ONE))
    h = tuple(coroot_diag(family, rank, root))
    return RootTriple(
        root=root,
        e=tuple(sorted(e)),
        f=tuple(sorted(f)),
        h=h,
        e2=_sparse_square(e),
        f2=_sparse_square(f),
    )


def dense(entries, n: int):
    out = [[ZERO] * n for _ in range(n)]
    for (r, c, v) in entries:
        out[r][c] = out[r][c] + v
    return out


def e_matrix(family: str, rank: int, root: tuple):
    return dense(root_triple(family, rank, root).e, dim(family, rank))


def f_matrix(family: str, rank: int, root: tuple):
    return dense(root_triple(family, rank, root).f, dim(family, rank))


def h_matrix(family: str, rank: int, root: tuple):
    n = dim(family, rank)
    t = root_triple(family, rank, root)
    return [[sc(t.h[i]) if i == j else ZERO for j in range(n)] for i in range(n)]


# -- exponentials -----------------------------------------------------


def exp_terms(triple_entries, square_entries, c):
    """Sparse terms of exp(c X) - I for a root vector X (X^3 = 0)."""
    terms = [(r, col, c * v) for (r, col, v) in triple_entries]
    if square_entries:
        cc = c * c * HALF
        terms.extend((r, col, cc * v) for (r, col, v) in square_entries)
    return terms


def exp_f(family: str, rank: int, root: tuple, c, g=None):
    """Multiply g (default I) on the right by exp(c * f_root)."""
    t = root_triple(family, rank, root)
    if g is None:
        g = identity(dim(family, rank))
    return mul_right_i_plus(g, exp_terms(t.f, t.f2, c))


def exp_e(family: str, rank: int, root: tuple, c, g=None):
    t = root_triple(family, rank, root)
    if g is None:
        g = identity(dim(family, rank))
    return mul_right_i_plus(g, exp_terms(t.e, t.e2, c))


def exp_nilpotent(x):
    """Exact exp of a nilpotent matrix (series terminates)."""
    n = len(x)
    out = identity(n)
    term = identity(n)
    fact = 1
    for k in range(1, n + 1):
        term = mat_mul(term, x)
        if all(v.val.is_zero() for row in term for v in row):
            return out
        if k == n:
            raise InvalidInputError("matrix is not nilpotent")
        fact *= k
        inv = ONE / Scalar(fact)
        out = [[u + t * inv for u, t in zip(ro, rt)] for ro, rt in zip(out, term)]
    return out


def log_unipotent(u):
    """Exact log of a unipotent triangular matrix."""
    n = len(u)
    x = [[v - (ONE if i == j else ZERO) for j, v in enumerate(row)] for i, row in enumerate(u)]
    for i in range(n):
        if not x[i][i].val.is_zero():
            raise InvalidInputError("matrix is not unipotent")
    out = [[ZERO] * n for _ in range(n)]
    term = identity(n)
    for k in range(1, n + 1):
        term = mat_mul(term, x)
        if all(v.val.is_zero() for row in term for v in row):
            break
        coeff = Scalar(1 if k % 2 else -1, 0, k)
        out = [[u0 + t * coeff for u0, t in zip(ro, rt)] for ro, rt in zip(out, term)]
    return out


# -- structural maps --------------------------------------------------


@lru_cache(maxsize=None)
def sigma_diag(family: str, rank: int) -> tuple:
    n = dim(family, rank)
    if family != "B":
        return (ONE,) * n
    r = rank
    out = []
    for a in range(n):
        if a < r:
            out.append(ONE)
        elif a == r:
            out.append(TWO)
        else:
            out.append(Scalar(4))
    return tuple(out)


def sigma(family: str, rank: int, x):
    """The transpose-like anti-automorphism S X^T S^{-1}."""
    s = sigma_diag(family, rank)
    n = dim(family, rank)
    return [[s[u] * x[v][u] / s[v] for v in range(n)] for u in range(n)]


def inverse_dual(family: str, rank: int, g):
    """sigma(g^{-1}), the group-level dual of g."""
    return sigma(family, rank, mat_inverse(g))


@lru_cache(maxsize=None)
def form_matrix(family: str, rank: int):
    """Invariant bilinear form; None for family A."""
    if family == "A":
        return None
    n = dim(family, rank)
    out = [[ZERO] * n for _ in range(n)]
    for u in range(n):
        v = n - 1 - u
        if family == "C":
            out[u][v] = ONE if u < v else -ONE
        else:
            out[u][v] = ONE
    return out


# -- sl2 embeddings and Weyl representatives -------------------------


def iota(family: str, rank: int, root: tuple, m):
    """Embed an exact SL(2) matrix along the root's sl2 triple."""
    a, b = sc(m[0][0]), sc(m[0][1])
    c, d = sc(m[1][0]), sc(m[1][1])
    if a * d - b * c != ONE:
        raise InvalidInputError("iota needs a determinant-one matrix")
    t = root_triple(family, rank, root)
    n = dim(family, rank)
    if not a.is_zero():
        g = exp_f(family, rank, root, c / a)
        g = [[v * a ** t.h[j] for j, v in enumerate(row)] for row in g]
        return mul_right_i_plus(g, exp_terms(t.e, t.e2, b / a))
    alpha = -IMAG * c
    beta = -IMAG * d
    g = mat_copy(r_root(family, rank, root))
    g = [[v * alpha ** t.h[j] for j, v in enumerate(row)] for row in g]
    return mul_right_i_plus(g, exp_terms(t.e, t.e2, beta / alpha))


@lru_cache(maxsize=None)
def r_root(family: str, rank: int, root: tuple):
    """The fixed representative exp(i e) exp(i f) exp(i e) of the
    reflection in ``root``."""
    g = exp_e(family, rank, root, IMAG)
    g = exp_f(family, rank, root, IMAG, g)
    return exp_e(family, rank, root, IMAG, g)


@lru_cache(maxsize=None)
def _r_simple(family: str, rank: int, i: int):
    return r_root(family, rank, simple_roots(family, rank)[i - 1])


def weyl_representative(family: str, rank: int, w: WeylElement):
    """Product of simple-root representatives along the deterministic
    reduced word of w (first letter rightmost in the product)."""
    g = identity(dim(family, rank))
    for i in deterministic_reduced_word(w):
        g = mat_mul(_r_simple(family, rank, i), g)
    return g


# -- ordered exponential coordinates ----------------------------------


def assemble_lower(family: str, rank: int, taus, coeffs):
    """exp(c_n f_n) *** exp(c_1 f_1) for the given root sequence."""
    g = identity(dim(family, rank))
    for tau, c in zip(reversed(taus), reversed(list(coeffs))):
        g = exp_f(family, rank, tau, c, g)
    return g


def assemble_upper(family: str, rank: int, taus, coeffs):
    g = identity(dim(family, rank))
    for tau, c in zip(reversed(taus), reversed(list(coeffs))):
        g = exp_e(family, rank, tau, c, g)
    return g


def extract_lower(family: str, rank: int, taus, g):
    """Read off c_j from a product exp(c_n f_n) *** exp(c_1 f_1).

    The final residue must be the identity; anything else means g is
    not such a product.
    """
    return _extract_checked(family, rank, taus, g, use_f=True)


def extract_upper(family: str, rank: int, taus, g):
    return _extract_checked(family, rank, taus, g, use_f=False)


def _extract_checked(family: str, rank: int, taus, g, use_f: bool):
    g = mat_copy(g)
    coeffs = []
    for tau in taus:
        t = root_triple(family, rank, tau)
        row, col, a0 = t.anchor_f() if use_f else t.anchor_e()
        c = g[row][col] / a0
        coeffs.append(c)
        entries, squares = (t.f, t.f2) if use_f else (t.e, t.e2)
        g = mul_right_i_plus(g, exp_terms(entries, squares, -c))
    n = dim(family, rank)
    for i in range(n):
        for j in range(n):
            v = g[i][j] - ONE if i == j else g[i][j]
            if not v.is_zero():
                raise InvalidInputError(
                    "matrix is not an ordered product over the given roots"
                )
    return coeffs


# -- conjugated generators setting ------------------------------------


def conjugated_generators(family: str, rank: int, word):
    """Per-letter sl2 triples conjugated by the partial representative
    products: at step j the simple triple of letter j is moved into the
    root space of tau_j."""
    from .weyl import check_word, is_reduced

    word = check_word(family, rank, word)
    if not is_reduced(family, rank, word):
        from .errors import InvalidWordError

        raise InvalidWordError(f"word {word!r} is not reduced", index=None)
    n = dim(family, rank)
    simples = simple_roots(family, rank)
    wmat = identity(n)
    winv = identity(n)
    out = []
    for i in word:
        e0 = e_matrix(family, rank, simples[i - 1])
        f0 = f_matrix(family, rank, simples[i - 1])
        h0 = h_matrix(family, rank, simples[i - 1])
        out.append(
            tuple(mat_mul(winv, mat_mul(x, wmat)) for x in (e0, f0, h0))
        )
        r = _r_simple(family, rank, i)
        wmat = mat_mul(r, wmat)
        winv = mat_mul(winv, mat_inverse(r))
    return out


# -- Bruhat stratum detection (family A) ------------------------------


def stratum_permutation(g) -> tuple[int, ...]:
    """The permutation w with g in N- w T N+ (invertible g, family A).

    Northwest submatrix ranks are invariant under left lower and right
    upper unipotent factors, so w(j) is the first row index at which
    appending column j raises rank(g[:i, :j])."""
    n = len(g)

    def nw_rank(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return matrix_rank([row[:j] for row in g[:i]])

    images = []
    for j in range(1, n + 1):
        val = next(
            (
                i
                for i in range(1, n + 1)
                if nw_rank(i, j) == nw_rank(i, j - 1) + 1
            ),
            None,
        )
        if val is None:
            raise InvalidInputError("matrix is singular")
        images.append(val)
    return tuple(images)
