import numpy as np
import pytest
from hypothesis import strategies as st

from h2moduli import symplectic as sp

LETTERS = ["T", "t", "S", "s", "R", "r", "U", "u"]
GAMMA_LETTERS = ["T", "t", "S", "s", "R", "r"]


def words(alphabet=LETTERS, max_size=12):
    return st.lists(st.sampled_from(alphabet), max_size=max_size).map("".join)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def word(w: str) -> sp.IntMat4:
    return sp.word_matrix(w)
