"""Coordinate maps between root-group parameters and triangular data.

The forward map sends pairs z_j = (z_j^-, z_j^+), one per root of the
ordering of a reduced word, through per-root SL(2) pictures

    g(z) = [[1, z^+], [z^-, 1 + z^- z^+]]

to the group element g = G_n *** G_1 * h, where G_j is the image of
g(z_j) under the j-th root embedding and h is a torus element.  The
LDU middle factor of g is exactly h, and the unipotent factors are
ordered exponentials whose coefficient lists (l, u) are the other
coordinate system this module converts to and from.

The inverse direction recovers z from (l, u, h) through the dual
element sigma(g_0^{-1}) and a downward elimination; points where that
elimination degenerates form the exceptional set and raise
ExceptionalSetError.  Pushing jets through the forward map gives the
exact Jacobian determinant, which also has two closed product forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExceptionalSetError, InvalidInputError, StratumError
from .jets import Jet
from .linalg import det_exact, ldu, mat_inverse, mat_mul, scale_rows
from .matrices import (
    assemble_lower,
    assemble_upper,
    coroot_diag,
    dim,
    exp_e,
    exp_f,
    extract_lower,
    extract_upper,
    identity,
    sigma,
    weyl_representative,
)
from .rootsystem import delta, is_positive_root, pairing, simple_roots
from .scalar import ONE, ZERO, Scalar, sc
from .weyl import (
    WeylElement,
    identity_element,
    longest_element,
    ordering_from_word,
    simple_reflection,
)


def check_torus(family: str, rank: int, h) -> list:
    """Validate diagonal torus entries for the family's realization."""
    n = dim(family, rank)
    if h is None:
        return [ONE] * n
    entries = [sc(v) for v in h]
    if len(entries) != n:
        raise InvalidInputError(f"torus diagonal needs {n} entries, got {len(entries)}")
    for v in entries:
        if v.is_zero():
            raise InvalidInputError("torus entries must be nonzero")
    if family != "A":
        for a in range(n):
            b = n - 1 - a
            if a < b and entries[a] * entries[b] != ONE:
                raise InvalidInputError(
                    "torus entries must satisfy h[a] * h[N+1-a] == 1"
                )
        if family == "B" and entries[rank] != ONE:
            raise InvalidInputError("the middle torus entry must be 1 in family B")
    return entries


def check_pairs(pairs, n: int) -> list[tuple]:
    if len(pairs) != n:
        raise InvalidInputError(f"expected {n} coordinate pairs, got {len(pairs)}")
    return [(p[0], p[1]) for p in pairs]


@dataclass
class ForwardResult:
    family: str
    rank: int
    word: tuple
    taus: tuple
    matrix: list
    l: list
    u: list
    h: list
    s: list  # s_j = 1 + z_j^- z_j^+


def _product_matrix(family: str, rank: int, taus, pairs, h=None):
    g = identity(dim(family, rank))
    for tau, (zm, zp) in zip(reversed(taus), reversed(pairs)):
        g = exp_f(family, rank, tau, zm, g)
        g = exp_e(family, rank, tau, zp, g)
    if h is not None:
        g = [[v * h[j] for j, v in enumerate(row)] for row in g]
    return g


def forward_map(family: str, rank: int, word, pairs, h=None) -> ForwardResult:
    """Evaluate the factorization product and its (l, u, h) coordinates."""
    taus = ordering_from_word(family, rank, word)
    pairs = check_pairs(pairs, len(taus))
    pairs = [(sc(a), sc(b)) for a, b in pairs]
    hd = check_torus(family, rank, h)
    g = _product_matrix(family, rank, taus, pairs, hd)
    lower, d, upper = ldu(g)
    if d != hd:
        raise InvalidInputError("internal: middle factor differs from the torus input")
    lcoords = extract_lower(family, rank, taus, lower)
    ucoords = extract_upper(family, rank, taus, upper)
    return ForwardResult(
        family=family,
        rank=rank,
        word=tuple(word),
        taus=taus,
        matrix=g,
        l=lcoords,
        u=ucoords,
        h=hd,
        s=[ONE + zm * zp for zm, zp in pairs],
    )


def forward_coords_jets(family: str, rank: int, taus, pairs):
    """(l, u) of the pure pair product; entries may be jets."""
    g = _product_matrix(family, rank, taus, pairs)
    lower, d, upper = ldu(g)
    lcoords = extract_lower(family, rank, taus, lower)
    ucoords = extract_upper(family, rank, taus, upper)
    return lcoords, ucoords


def inverse_map(family: str, rank: int, word, lcoords, ucoords, h=None):
    """Recover the coordinate pairs from (l, u, h).

    Raises ExceptionalSetError when the point lies outside the open
    image of the forward map.
    """
    taus = ordering_from_word(family, rank, word)
    n = len(taus)
    lcoords = [sc(v) for v in lcoords]
    ucoords = [sc(v) for v in ucoords]
    if len(lcoords) != n or len(ucoords) != n:
        raise InvalidInputError(f"expected {n} lower and upper coordinates")
    hd = check_torus(family, rank, h)

    g = assemble_lower(family, rank, taus, lcoords)
    g = [[v * hd[j] for j, v in enumerate(row)] for row in g]
    g = mat_mul(g, assemble_upper(family, rank, taus, ucoords))

    # dual element: sigma(g_0^{-1}) with the torus part divided out
    ghat = sigma(family, rank, scale_rows(hd, mat_inverse(g)))
    try:
        lhat, dhat, uhat = ldu(ghat)
    except StratumError as err:
        raise ExceptionalSetError(
            f"dual element has no triangular factorization (pivot {err.index})",
            index=err.index,
            value="pivot",
        ) from err
    lprime = extract_lower(family, rank, taus, lhat)

    pair_mat = {}  # pairing table tau_k against coroot of tau_j
    for j in range(n):
        for k in range(j):
            pair_mat[(k, j)] = pairing(taus[k], taus[j])

    zeta: list[tuple] = [None] * n
    eta: list[tuple] = [None] * n
    svals: list = [None] * n
    tail = identity(dim(family, rank))
    tail_dual = identity(dim(family, rank))
    for k in range(n - 1, -1, -1):
        lk_tail = _coord_of_lower(family, rank, taus, tail, k)
        lk_tail_dual = _coord_of_lower(family, rank, taus, tail_dual, k)
        zm = lcoords[k] - lk_tail
        em = lprime[k] - lk_tail_dual
        acc = ONE
        for j in range(k + 1, n):
            acc = acc * svals[j] ** pair_mat[(k, j)]
        den = ONE + em * zm * acc
        if den.is_zero():
            raise ExceptionalSetError(
                f"exceptional set at pair {k + 1}", index=k + 1, value="denominator"
            )
        sk = ONE / den
        zp = -(em * acc) / den
        ep = -(zm * sk * acc)
        zeta[k] = (zm, zp)
        eta[k] = (em, ep)
        svals[k] = sk
        tau = taus[k]
        # tails hold factor_n *** factor_(k+1); factor_k joins on the right
        tail = mat_mul(tail, _pair_factor(family, rank, tau, zm, zp))
        tail_dual = mat_mul(tail_dual, _pair_factor(family, rank, tau, em, ep))

    check = forward_map(family, rank, word, zeta, h=hd)
    if check.l != lcoords or check.u != ucoords:
        raise ExceptionalSetError(
            "coordinates are outside the image of the factorization map",
            index=None,
            value="image",
        )
    return zeta


def _pair_factor(family: str, rank: int, tau, zm, zp):
    g = exp_f(family, rank, tau, zm)
    return exp_e(family, rank, tau, zp, g)


def _coord_of_lower(family: str, rank: int, taus, g, k: int):
    lower, d, upper = ldu(g)
    return extract_lower(family, rank, taus, lower)[k]


def transpose_dual(family: str, rank: int, word, pairs, h=None):
    """Dual coordinates: forward(eta) * h_dual == sigma(g^{-1}).

    Returns (eta_pairs, h_dual_diagonal).
    """
    taus = ordering_from_word(family, rank, word)
    n = len(taus)
    pairs = [(sc(a), sc(b)) for a, b in check_pairs(pairs, n)]
    hd = check_torus(family, rank, h)
    svals = [ONE + zm * zp for zm, zp in pairs]
    for k, v in enumerate(svals):
        if v.is_zero():
            raise ExceptionalSetError(
                f"dual undefined where 1 + z^- z^+ vanishes at pair {k + 1}",
                index=k + 1,
                value="denominator",
            )
    eta = []
    for k in range(n):
        acc = ONE
        for j in range(k + 1, n):
            acc = acc * svals[j] ** pairing(taus[k], taus[j])
        em = -pairs[k][1] / (svals[k] * acc)
        ep = -pairs[k][0] * svals[k] * acc
        eta.append((em, ep))
    hdual = [ONE] * dim(family, rank)
    for k in range(n):
        for a, p in enumerate(coroot_diag(family, rank, taus[k])):
            if p:
                hdual[a] = hdual[a] * svals[k] ** p
    hdual = [hv / hh for hv, hh in zip(hdual, hd)]
    return eta, hdual


# -- Jacobians ---------------------------------------------------------


def jacobian_det_formula(family: str, rank: int, word, pairs) -> Scalar:
    """prod_j s_j^(delta(h_tau_j) - 1)."""
    taus = ordering_from_word(family, rank, word)
    pairs = [(sc(a), sc(b)) for a, b in check_pairs(pairs, len(taus))]
    out = ONE
    for tau, (zm, zp) in zip(taus, pairs):
        out = out * (ONE + zm * zp) ** (delta(family, rank, tau) - 1)
    return out


def jacobian_det_double_product(family: str, rank: int, word, pairs) -> Scalar:
    """prod_{k<j} s_j^(tau_k(h_tau_j)), termwise."""
    taus = ordering_from_word(family, rank, word)
    pairs = [(sc(a), sc(b)) for a, b in check_pairs(pairs, len(taus))]
    svals = [ONE + zm * zp for zm, zp in pairs]
    out = ONE
    for j in range(len(taus)):
        for k in range(j):
            p = pairing(taus[k], taus[j])
            if p < 0 and svals[j].is_zero():
                raise InvalidInputError(
                    "double product undefined: zero base with negative exponent"
                )
            out = out * svals[j] ** p
    return out


def jacobian_det_ad(family: str, rank: int, word, pairs) -> Scalar:
    """det of d(l, u)/d(z^-, z^+) computed with exact jets."""
    taus = ordering_from_word(family, rank, word)
    pairs = check_pairs(pairs, len(taus))
    n = len(taus)
    flat = [sc(p[0]) for p in pairs] + [sc(p[1]) for p in pairs]
    jets = Jet.variables(flat)
    jet_pairs = [(jets[k], jets[n + k]) for k in range(n)]
    lcoords, ucoords = forward_coords_jets(family, rank, taus, jet_pairs)
    rows = []
    for out in list(lcoords) + list(ucoords):
        if isinstance(out, Jet):
            rows.append(list(out.grad))
        else:
            rows.append([ZERO] * (2 * n))
    return det_exact(rows)


def delta_identity_check(family: str, rank: int, word) -> bool:
    """delta(h_tau_j) - 1 == sum_{k<j} tau_k(h_tau_j) for every j."""
    taus = ordering_from_word(family, rank, word)
    for j in range(len(taus)):
        lhs = delta(family, rank, taus[j]) - 1
        rhs = sum(pairing(taus[k], taus[j]) for k in range(j))
        if lhs != rhs:
            return False
    return True


# -- Bruhat strata ------------------------------------------------------


def stratum_data(family: str, rank: int, w: WeylElement):
    """Deterministic root sequence for the stratum of w.

    Returns (gammas, taus): gammas is a word evaluating to w0 * w,
    taus lists the positive roots kept positive by w, in the order the
    factorization consumes them.
    """
    simples = simple_roots(family, rank)
    gammas = []
    taus = []
    v = w
    p = identity_element(family, rank)
    w0 = longest_element(family, rank)
    while v != w0:
        i = next(
            (
                i
                for i, a in enumerate(simples, start=1)
                if is_positive_root(family, rank, v.act_root(a))
            ),
            None,
        )
        if i is None:
            raise InvalidInputError("stratum construction failed to reach the top")
        gammas.append(i)
        taus.append(p.act_root(simples[i - 1]))
        v = v * simple_reflection(family, rank, i)
        p = p * simple_reflection(family, rank, i)
    return tuple(gammas), tuple(taus)


@dataclass
class StratumResult:
    family: str
    rank: int
    w: WeylElement
    gammas: tuple
    taus: tuple
    matrix: list


def forward_map_stratum(family: str, rank: int, w: WeylElement, pairs, h=None) -> StratumResult:
    """Factorization product for the Bruhat stratum of w: the fixed
    representative of w times the pair product over the stratum roots
    times the torus element."""
    gammas, taus = stratum_data(family, rank, w)
    pairs = [(sc(a), sc(b)) for a, b in check_pairs(pairs, len(taus))]
    hd = check_torus(family, rank, h)
    g = _product_matrix(family, rank, taus, pairs, hd)
    wmat = weyl_representative(family, rank, w)
    g = mat_mul(wmat, g)
    return StratumResult(
        family=family, rank=rank, w=w, gammas=gammas, taus=taus, matrix=g
    )
