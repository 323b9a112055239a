"""Triangular factorization and the coordinate maps, unit level.

Covers exact LDU (elimination and minor formulas), ordered product
extraction, the forward product, the transpose dual, the rational
inverse on frozen points, stratum detection, and the error taxonomy.
The broad randomized identities live in the acceptance suite.
"""

from __future__ import annotations

import random

import pytest

from rootfact import (
    ExceptionalSetError,
    InvalidInputError,
    InvalidWordError,
    Scalar,
    StratumError,
    det_exact,
    exp_f,
    forward_map,
    forward_map_stratum,
    identity,
    identity_element,
    inverse_map,
    jacobian_det_ad,
    jacobian_det_double_product,
    jacobian_det_formula,
    ldu,
    ldu_minors,
    longest_element,
    mat_inverse,
    mat_mul,
    matrix_rank,
    ordering_from_word,
    principal_minor,
    simple_reflection,
    stratum_permutation,
    transpose_dual,
    weyl_representative,
)
from rootfact.matrices import assemble_lower, assemble_upper, extract_lower, extract_upper
from rootfact.scalar import ONE, ZERO, sc

from conftest import exact_scalar, generic_pairs, pairs_equal


def rational_matrix(rng: random.Random, n: int):
    return [[exact_scalar(rng) for _ in range(n)] for _ in range(n)]


def unitriangular(rng: random.Random, n: int, lower: bool):
    out = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if (i > j) if lower else (i < j):
                out[i][j] = exact_scalar(rng)
    return out


def test_ldu_identity():
    lower, d, upper = ldu(identity(3))
    assert lower == identity(3) and upper == identity(3)
    assert d == [ONE, ONE, ONE]


def test_ldu_two_by_two_formulas():
    a, b, c, d = Scalar(2), Scalar(3), Scalar(5), Scalar(7)
    lower, diag, upper = ldu([[a, b], [c, d]])
    assert lower[1][0] == c / a
    assert upper[0][1] == b / a
    assert diag == [a, (a * d - b * c) / a]


def test_ldu_multiply_back():
    rng = random.Random(5)
    for _ in range(10):
        lower = unitriangular(rng, 4, lower=True)
        upper = unitriangular(rng, 4, lower=False)
        diag = []
        for _ in range(4):
            while True:
                v = exact_scalar(rng)
                if not v.is_zero():
                    diag.append(v)
                    break
        g = mat_mul(lower, mat_mul([[diag[i] if i == j else ZERO for j in range(4)]
                                    for i in range(4)], upper))
        got_l, got_d, got_u = ldu(g)
        assert got_l == lower and got_u == upper and got_d == diag
        assert ldu_minors(g) == (got_l, got_d, got_u)


def test_ldu_stratum_failures():
    antidiag = [[ZERO, ONE], [ONE, ZERO]]
    with pytest.raises(StratumError) as info:
        ldu(antidiag)
    assert info.value.index == 1
    # invertible but with a vanishing second principal minor
    g = [[ONE, ONE, ZERO], [ONE, ONE, ONE], [ZERO, ONE, ZERO]]
    assert not det_exact(g).is_zero()
    for fn in (ldu, ldu_minors):
        with pytest.raises(StratumError) as info:
            fn(g)
        assert info.value.index == 2


def test_principal_minors_and_rank():
    g = [[Scalar(2), ONE, ZERO], [ONE, Scalar(2), ONE], [ZERO, ONE, Scalar(2)]]
    assert principal_minor(g, 1) == Scalar(2)
    assert principal_minor(g, 2) == Scalar(3)
    assert principal_minor(g, 3) == det_exact(g) == Scalar(4)
    assert matrix_rank(g) == 3
    assert matrix_rank([[ONE, ONE], [ONE, ONE]]) == 1


def test_extraction_round_trip():
    word = (1, 2, 1, 3, 2, 1)
    taus = ordering_from_word("A", 3, word)
    rng = random.Random(9)
    coeffs = [exact_scalar(rng) for _ in taus]
    lower = assemble_lower("A", 3, taus, coeffs)
    assert extract_lower("A", 3, taus, lower) == coeffs
    upper = assemble_upper("A", 3, taus, coeffs)
    assert extract_upper("A", 3, taus, upper) == coeffs


def test_extraction_edge_cases():
    word = (1, 2, 1)
    taus = ordering_from_word("A", 2, word)
    assert extract_lower("A", 2, taus, identity(3)) == [ZERO, ZERO, ZERO]
    z = Scalar(4, 1, 3)
    g = exp_f("A", 2, taus[1], z)
    assert extract_lower("A", 2, taus, g) == [ZERO, z, ZERO]
    with pytest.raises(InvalidInputError):
        extract_lower("A", 2, taus, [[ONE, ONE, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]])


def test_forward_zero_is_identity():
    res = forward_map("A", 2, (1, 2, 1), [(0, 0), (0, 0), (0, 0)])
    assert res.matrix == identity(3)
    assert res.l == [ZERO, ZERO, ZERO] and res.u == [ZERO, ZERO, ZERO]
    assert res.h == [ONE, ONE, ONE]


def test_forward_frozen_gl3_point():
    res = forward_map("A", 2, (1, 2, 1), [(1, 4), (2, 5), (3, 6)])
    assert res.l == [Scalar(13), Scalar(2), Scalar(3)]
    assert res.u == [Scalar(4), Scalar(5), Scalar(1)]
    assert res.s == [Scalar(5), Scalar(11), Scalar(19)]
    got = inverse_map("A", 2, (1, 2, 1), res.l, res.u)
    assert pairs_equal(got, [(1, 4), (2, 5), (3, 6)])


def test_forward_validates_input():
    with pytest.raises(InvalidInputError):
        forward_map("A", 2, (1, 2, 1), [(1, 1)])
    with pytest.raises(InvalidWordError):
        forward_map("A", 2, (1, 1, 2), [(0, 0), (0, 0), (0, 0)])


def test_inverse_exceptional_point():
    with pytest.raises(ExceptionalSetError) as info:
        inverse_map("A", 2, (1, 2, 1), [0, 1, 0], [0, -1, 0])
    assert info.value.payload()["kind"] == "exceptional-set"
    assert info.value.index == 1


def test_transpose_dual_frozen_gl2():
    eta, hdual = transpose_dual("A", 1, (1,), [(1, 2)])
    assert pairs_equal(eta, [(Scalar(-2, 0, 3), Scalar(-3))])
    assert hdual == [Scalar(3), Scalar(1, 0, 3)]


def test_jacobian_triple_value_gl3():
    point = [(1, 4), (2, 5), (3, 6)]
    expected = Scalar(11)  # the lone weight-two root contributes s^1
    assert jacobian_det_formula("A", 2, (1, 2, 1), point) == expected
    assert jacobian_det_double_product("A", 2, (1, 2, 1), point) == expected
    assert jacobian_det_ad("A", 2, (1, 2, 1), point) == expected


def test_stratum_map_longest_element():
    w0 = longest_element("A", 2)
    res = forward_map_stratum("A", 2, w0, [])
    assert res.matrix == weyl_representative("A", 2, w0)
    assert res.taus == ()


def test_stratum_map_identity_matches_forward():
    rng = random.Random(31)
    pairs = generic_pairs(rng, 3)
    w1 = identity_element("A", 2)
    res = forward_map_stratum("A", 2, w1, pairs)
    assert res.matrix == forward_map("A", 2, (1, 2, 1), pairs).matrix


def test_stratum_map_detection():
    rng = random.Random(43)
    w = simple_reflection("A", 2, 1)
    res = forward_map_stratum("A", 2, w, generic_pairs(rng, 2))
    assert stratum_permutation(res.matrix) == (2, 1, 3)
    assert len(res.taus) == 2
    with pytest.raises(InvalidInputError):
        forward_map_stratum("A", 2, w, generic_pairs(rng, 3))


def test_stratum_permutation_generic():
    rng = random.Random(17)
    pairs = generic_pairs(rng, 3)
    g = forward_map("A", 2, (1, 2, 1), pairs).matrix
    assert stratum_permutation(g) == (1, 2, 3)
    flip = weyl_representative("A", 2, longest_element("A", 2))
    perm = stratum_permutation(flip)
    assert perm == (3, 2, 1)
    with pytest.raises(InvalidInputError):
        stratum_permutation([[ONE, ONE], [ONE, ONE]])


def test_mat_inverse_round_trip():
    rng = random.Random(3)
    for _ in range(5):
        g = rational_matrix(rng, 3)
        if det_exact(g).is_zero():
            continue
        assert mat_mul(g, mat_inverse(g)) == identity(3)
