"""Round trips and byte determinism for the JSON layer.

Everything that crosses the CLI boundary goes through these helpers,
so the tests pin the wire format: scalar strings, [minus, plus] pair
lists, square matrices, integer words and roots, and the canonical
dump (sorted keys, compact separators, one trailing newline).
"""

from __future__ import annotations

import random

import pytest

from rootfact import InvalidInputError, Scalar
from rootfact.serialization import (
    diag_from_json,
    diag_to_json,
    dumps_canonical,
    matrix_from_json,
    matrix_to_json,
    pairs_from_json,
    pairs_to_json,
    roots_from_json,
    roots_to_json,
    scalar_from_json,
    scalar_to_json,
    word_from_json,
    word_to_json,
)

from conftest import exact_scalar


def test_scalar_round_trip():
    rng = random.Random(7)
    for _ in range(30):
        x = exact_scalar(rng)
        assert scalar_from_json(scalar_to_json(x)) == x


def test_scalar_accepts_plain_integers():
    assert scalar_from_json(-3) == Scalar(-3)
    assert scalar_from_json("1/2-3/4*i") == Scalar(2, -3, 4)


def test_scalar_rejects_non_scalars():
    for bad in (True, 2.5, None, [1], "1 + i"):
        with pytest.raises(InvalidInputError):
            scalar_from_json(bad)


def test_matrix_round_trip():
    rng = random.Random(9)
    m = [[exact_scalar(rng) for _ in range(3)] for _ in range(3)]
    assert matrix_from_json(matrix_to_json(m)) == m


def test_matrix_shape_guards():
    with pytest.raises(InvalidInputError):
        matrix_from_json([[1, 2], [3]])
    with pytest.raises(InvalidInputError):
        matrix_from_json([])
    with pytest.raises(InvalidInputError):
        matrix_from_json({"rows": []})


def test_pairs_round_trip():
    rng = random.Random(11)
    pairs = [(exact_scalar(rng), exact_scalar(rng)) for _ in range(6)]
    assert pairs_from_json(pairs_to_json(pairs)) == pairs


def test_pairs_shape_guards():
    with pytest.raises(InvalidInputError):
        pairs_from_json([[1, 2, 3]])
    with pytest.raises(InvalidInputError):
        pairs_from_json("pairs")


def test_diag_round_trip():
    d = [Scalar(5), Scalar(1, 0, 5), Scalar(-2, 3, 7)]
    assert diag_from_json(diag_to_json(d)) == d
    with pytest.raises(InvalidInputError):
        diag_from_json("3")


def test_word_round_trip():
    assert word_from_json(word_to_json((1, 2, 1))) == (1, 2, 1)
    assert word_from_json([]) == ()
    with pytest.raises(InvalidInputError):
        word_from_json([1, True])
    with pytest.raises(InvalidInputError):
        word_from_json((1, 2))


def test_roots_round_trip():
    roots = [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
    assert roots_from_json(roots_to_json(roots)) == roots
    with pytest.raises(InvalidInputError):
        roots_from_json([[1, 0.5]])


def test_dumps_canonical_bytes():
    payload = {"b": [1, 2], "a": "x"}
    text = dumps_canonical(payload)
    assert text == '{"a":"x","b":[1,2]}\n'
    assert dumps_canonical({"a": "x", "b": [1, 2]}) == text
