"""Matrix realizations: generators, brackets, exponentials, representatives.

Families realize as GL(rank+1), O(2r+1), Sp(2r), O(2r); generator
triples satisfy the standard bracket relations and group elements
preserve the family's bilinear form.  All entries are exact scalars.
"""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootfact import (
    InvalidInputError,
    InvalidWordError,
    Scalar,
    conjugated_generators,
    coroot_diag,
    dim,
    e_matrix,
    exp_e,
    exp_f,
    exp_nilpotent,
    f_matrix,
    form_matrix,
    h_matrix,
    identity,
    iota,
    log_unipotent,
    longest_element,
    mat_inverse,
    mat_mul,
    pairing,
    positive_roots,
    r_root,
    simple_roots,
    weyl_representative,
    word_evaluate,
)
from rootfact.linalg import mat_transpose
from rootfact.scalar import I, ONE, ZERO, sc

from conftest import exact_scalar

REALIZATIONS = [("A", 2), ("A", 3), ("B", 1), ("B", 2), ("C", 2), ("D", 3)]


def commutator(x, y):
    return [[a - b for a, b in zip(r1, r2)]
            for r1, r2 in zip(mat_mul(x, y), mat_mul(y, x))]


def scale(c, x):
    return [[sc(c) * v for v in row] for row in x]


def unit_matrix(n, i, j, value=1):
    out = [[ZERO] * n for _ in range(n)]
    out[i][j] = sc(value)
    return out


def test_a1_standard_sl2():
    gamma = simple_roots("A", 1)[0]
    assert f_matrix("A", 1, gamma) == [[ZERO, ZERO], [ONE, ZERO]]
    assert e_matrix("A", 1, gamma) == [[ZERO, ONE], [ZERO, ZERO]]
    assert h_matrix("A", 1, gamma) == [[ONE, ZERO], [ZERO, -ONE]]


def test_a2_simple_generators_are_elementary():
    g1, g2 = simple_roots("A", 2)
    assert e_matrix("A", 2, g1) == unit_matrix(3, 0, 1)
    assert e_matrix("A", 2, g2) == unit_matrix(3, 1, 2)


@pytest.mark.parametrize("family,rank", REALIZATIONS)
def test_sl2_triples(family, rank):
    for alpha in positive_roots(family, rank):
        e = e_matrix(family, rank, alpha)
        f = f_matrix(family, rank, alpha)
        h = h_matrix(family, rank, alpha)
        assert commutator(h, e) == scale(2, e)
        assert commutator(h, f) == scale(-2, f)
        assert commutator(e, f) == h


@pytest.mark.parametrize("family,rank", REALIZATIONS)
def test_cartan_acts_by_pairing(family, rank):
    for gamma in simple_roots(family, rank):
        h = h_matrix(family, rank, gamma)
        for alpha in positive_roots(family, rank):
            e = e_matrix(family, rank, alpha)
            assert commutator(h, e) == scale(pairing(alpha, gamma), e)


@pytest.mark.parametrize("family,rank", REALIZATIONS)
def test_triangularity_and_coroot_diagonal(family, rank):
    n = dim(family, rank)
    for alpha in positive_roots(family, rank):
        e = e_matrix(family, rank, alpha)
        f = f_matrix(family, rank, alpha)
        h = h_matrix(family, rank, alpha)
        assert all(e[i][j].is_zero() for i in range(n) for j in range(i + 1))
        assert all(f[i][j].is_zero() for i in range(n) for j in range(i, n))
        diag = coroot_diag(family, rank, alpha)
        assert h == [[sc(diag[i]) if i == j else ZERO for j in range(n)]
                     for i in range(n)]


@pytest.mark.parametrize("family,rank", [("B", 1), ("B", 2), ("C", 2), ("D", 3)])
def test_form_preservation(family, rank):
    J = form_matrix(family, rank)
    rng = random.Random(11)
    for alpha in positive_roots(family, rank):
        for g in (exp_e(family, rank, alpha, exact_scalar(rng)),
                  exp_f(family, rank, alpha, exact_scalar(rng)),
                  r_root(family, rank, alpha)):
            assert mat_mul(mat_transpose(g), mat_mul(J, g)) == J


def test_b1_frozen_values():
    gamma = (1,)
    assert r_root("B", 1, gamma) == [
        [ZERO, ZERO, Scalar(1, 0, 2)],
        [ZERO, -ONE, ZERO],
        [Scalar(2), ZERO, ZERO],
    ]
    J = form_matrix("B", 1)
    g = exp_e("B", 1, gamma, Scalar(3))
    assert mat_mul(mat_transpose(g), mat_mul(J, g)) == J


def test_iota_basics():
    gamma = simple_roots("A", 2)[0]
    ident2 = [[ONE, ZERO], [ZERO, ONE]]
    assert iota("A", 2, gamma, ident2) == identity(3)
    z = Scalar(5, 2, 3)
    lower = [[ONE, ZERO], [z, ONE]]
    assert iota("A", 2, gamma, lower) == exp_f("A", 2, gamma, z)
    upper = [[ONE, z], [ZERO, ONE]]
    assert iota("A", 2, gamma, upper) == exp_e("A", 2, gamma, z)
    flip = [[ZERO, I], [I, ZERO]]
    assert iota("A", 2, gamma, flip) == r_root("A", 2, gamma)
    with pytest.raises(InvalidInputError):
        iota("A", 2, gamma, [[Scalar(2), ZERO], [ZERO, Scalar(2)]])


@pytest.mark.parametrize("family,rank", REALIZATIONS)
def test_iota_homomorphism(family, rank):
    rng = random.Random(23)
    for gamma in simple_roots(family, rank):
        for _ in range(6):
            # det-1 factor products keep the inputs in SL(2)
            def sl2(rng=rng):
                a, b = exact_scalar(rng), exact_scalar(rng)
                while True:
                    d = exact_scalar(rng)
                    if not d.is_zero():
                        break
                lo = [[ONE, ZERO], [a, ONE]]
                up = [[ONE, b], [ZERO, ONE]]
                dg = [[d, ZERO], [ZERO, d.inverse()]]
                return mat_mul(lo, mat_mul(up, dg))

            m1, m2 = sl2(), sl2()
            assert iota(family, rank, gamma, mat_mul(m1, m2)) == mat_mul(
                iota(family, rank, gamma, m1), iota(family, rank, gamma, m2))


def test_representative_normalizes_torus():
    for family, rank in REALIZATIONS:
        w0 = longest_element(family, rank)
        rep = weyl_representative(family, rank, w0)
        n = dim(family, rank)
        diag = [[sc(0)] * n for _ in range(n)]
        for k in range(n):
            diag[k][k] = sc(k + 2)
        conj = mat_mul(rep, mat_mul(diag, mat_inverse(rep)))
        assert all(conj[i][j].is_zero() for i in range(n) for j in range(n) if i != j)


def test_conjugated_generators_gl3():
    triples = conjugated_generators("A", 2, (1, 2, 1))
    e2, f2, h2 = triples[1]
    assert e2 == scale(-I, unit_matrix(3, 0, 2))
    assert f2 == scale(I, unit_matrix(3, 2, 0))
    assert h2 == [[ONE, ZERO, ZERO], [ZERO, ZERO, ZERO], [ZERO, ZERO, -ONE]]
    g1 = simple_roots("A", 2)[0]
    assert triples[0] == (
        e_matrix("A", 2, g1), f_matrix("A", 2, g1), h_matrix("A", 2, g1))


@pytest.mark.parametrize("family,rank,word", [
    ("A", 2, (1, 2, 1)), ("B", 2, (1, 2, 1, 2)),
    ("C", 2, (2, 1, 2, 1)), ("D", 3, (1, 2, 3, 2, 1, 3))])
def test_conjugated_generators_root_spaces(family, rank, word):
    from rootfact import ordering_from_word

    taus = ordering_from_word(family, rank, word)
    triples = conjugated_generators(family, rank, word)
    for tau, (e, f, h) in zip(taus, triples):
        assert h == h_matrix(family, rank, tau)
        assert commutator(e, f) == h
        for gamma in simple_roots(family, rank):
            hg = h_matrix(family, rank, gamma)
            assert commutator(hg, e) == scale(pairing(tau, gamma), e)
            assert commutator(hg, f) == scale(-pairing(tau, gamma), f)


def test_conjugated_generators_rejects_non_reduced():
    with pytest.raises(InvalidWordError):
        conjugated_generators("A", 2, (1, 1))


def test_exp_log_small_cases():
    assert exp_nilpotent([[ZERO, ZERO], [ZERO, ZERO]]) == identity(2)
    z = Scalar(7, -1, 2)
    x = [[ZERO, z], [ZERO, ZERO]]
    assert exp_nilpotent(x) == [[ONE, z], [ZERO, ONE]]
    with pytest.raises(InvalidInputError):
        exp_nilpotent(identity(2))
    with pytest.raises(InvalidInputError):
        log_unipotent([[Scalar(2), ZERO], [ZERO, ONE]])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=6, max_size=6),
       st.lists(st.integers(min_value=1, max_value=4), min_size=6, max_size=6))
def test_exp_log_round_trip(nums, dens):
    vals = [Scalar(a, 0, b) for a, b in zip(nums, dens)]
    x = [[ZERO] * 4 for _ in range(4)]
    slots = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]
    for (i, j), v in zip(slots, vals):
        x[i][j] = v
    assert log_unipotent(exp_nilpotent(x)) == x


def test_ad_torus_grading():
    for family, rank in [("A", 2), ("B", 2), ("C", 2), ("D", 3)]:
        n = dim(family, rank)
        c = Scalar(3, 0, 2)
        for gamma in simple_roots(family, rank):
            powers = coroot_diag(family, rank, gamma)
            t = [[c ** powers[i] if i == j else ZERO for j in range(n)]
                 for i in range(n)]
            tinv = mat_inverse(t)
            for tau in positive_roots(family, rank):
                e = e_matrix(family, rank, tau)
                assert mat_mul(t, mat_mul(e, tinv)) == scale(
                    c ** pairing(tau, gamma), e)
