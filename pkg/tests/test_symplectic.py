import json

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import word, words
from h2moduli import symplectic as sp


def test_named_matrices_are_symplectic_with_det_one():
    for name, m in sp.named_matrices().items():
        assert sp.is_symplectic(m), name
        assert m.det() == 1, name


def test_power_relations():
    minus = -sp.ID
    assert sp.S**2 == minus
    assert sp.S**4 == sp.ID
    assert sp.U**2 == minus


def test_x_and_y_from_s_and_flips():
    assert sp.product([sp.S, sp.FLIP_LOWER, sp.S, sp.FLIP_LOWER]) == sp.X
    assert sp.product([sp.S**-1, sp.T**-1, sp.S]) == sp.Y


def test_elementary_matrix_rejects_diagonal():
    with pytest.raises(ValueError):
        sp.elementary_matrix(2, 2)


def test_e12_and_e34():
    assert sp.elementary_matrix(1, 2) == sp.T
    assert sp.elementary_matrix(3, 4) == sp.R
    assert sp.elementary_matrix(2, 1) == sp.elementary_matrix(1, 2).T


def test_inverse_of_non_symplectic_raises():
    m = sp.IntMat4(np.diag([2, 1, 1, 1]))
    with pytest.raises(sp.NotSymplecticError):
        sp.symplectic_inverse(m)


def test_overflow_detected():
    big = sp.IntMat4(np.diag([2**40, 1, 1, 1]))
    with pytest.raises(sp.MatrixOverflowError):
        big @ big


def test_exact_products_above_fast_path():
    a = sp.IntMat4([[1, 2**31, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert (a @ a).tolist()[0][1] == 2**32


def test_json_roundtrip_and_immutability():
    m = word("TSRU")
    assert sp.IntMat4.from_json(m.to_json()) == m
    assert json.loads(m.to_json()) == m.tolist()
    with pytest.raises(ValueError):
        m.array[0, 0] = 5


def test_block_form_roundtrip():
    m = word("TSRUs")
    assert sp.from_block_form(sp.to_block_form(m)) == m
    omega_block = sp.to_block_form(sp.OMEGA)
    assert omega_block.tolist() == [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]


def test_word_parser_inverse_forms():
    assert word("T-1") == word("t") == sp.T**-1
    with pytest.raises(ValueError):
        word("Q")


@settings(max_examples=150, deadline=None)
@given(words())
def test_words_are_symplectic_unimodular(w):
    m = word(w)
    assert sp.is_symplectic(m)
    assert m.det() == 1
    assert m @ sp.symplectic_inverse(m) == sp.ID


@settings(max_examples=150, deadline=None)
@given(words(max_size=8), words(max_size=8))
def test_reduction_mod2_is_a_homomorphism(a, b):
    ma, mb = word(a), word(b)
    assert sp.reduce_mod2(ma @ mb) == sp.reduce_mod2(ma) @ sp.reduce_mod2(mb)


@settings(max_examples=100, deadline=None)
@given(words(max_size=8))
def test_inverse_word_reverses(w):
    inv = "".join(c.swapcase() for c in reversed(w))
    assert word(w) @ word(inv) == sp.ID
