"""Exact 4x4 integer matrices over the form Omega = diag(J, J).

Matrices act on column vectors of basis symbols (a, b, c, e); the mod-2
action used for orbit computations is right multiplication on row vectors.
"""
from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

INT64_MAX = 2**63 - 1


class MatrixOverflowError(ArithmeticError):
    """An exact product left the signed 64-bit range."""


class NotSymplecticError(ValueError):
    pass


def _check_range(rows: Sequence[Sequence[int]]) -> None:
    for row in rows:
        for x in row:
            if not -INT64_MAX - 1 <= x <= INT64_MAX:
                raise MatrixOverflowError(f"entry {x} does not fit in int64")


class IntMat4:
    """Immutable exact 4x4 integer matrix (int64 entries, checked)."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        rows = [[int(x) for x in row] for row in np.asarray(entries, dtype=object).tolist()]
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("IntMat4 needs a 4x4 array")
        _check_range(rows)
        a = np.array(rows, dtype=np.int64)
        a.setflags(write=False)
        self._a = a

    @classmethod
    def identity(cls) -> "IntMat4":
        return cls(np.eye(4, dtype=np.int64))

    @property
    def array(self) -> np.ndarray:
        """Read-only int64 view."""
        return self._a

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def __matmul__(self, other: "IntMat4") -> "IntMat4":
        return multiply(self, other)

    def __neg__(self) -> "IntMat4":
        return IntMat4([[-x for x in row] for row in self.tolist()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMat4):
            return NotImplemented
        return bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash(self._a.tobytes())

    def __pow__(self, n: int) -> "IntMat4":
        base = self if n >= 0 else symplectic_inverse(self)
        out = IntMat4.identity()
        for _ in range(abs(n)):
            out = multiply(out, base)
        return out

    @property
    def T(self) -> "IntMat4":
        return IntMat4(self._a.T)

    def det(self) -> int:
        # Bareiss fraction-free elimination, exact on Python ints.
        m = [list(r) for r in self.tolist()]
        sign, prev = 1, 1
        for k in range(3):
            if m[k][k] == 0:
                for r in range(k + 1, 4):
                    if m[r][k] != 0:
                        m[k], m[r] = m[r], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, 4):
                for j in range(k + 1, 4):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[3][3]

    def __repr__(self) -> str:
        return f"IntMat4({self.tolist()})"

    def to_json(self) -> str:
        return json.dumps(self.tolist())

    @classmethod
    def from_json(cls, text: str) -> "IntMat4":
        return cls(json.loads(text))


class GF2Mat4:
    """4x4 matrix over GF(2)."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.asarray(entries, dtype=np.uint8) & 1
        if a.shape != (4, 4):
            raise ValueError("GF2Mat4 needs a 4x4 array")
        a.setflags(write=False)
        self._a = a

    @property
    def array(self) -> np.ndarray:
        return self._a

    def key(self) -> bytes:
        """Canonical 16-byte encoding, used as a hash-set key."""
        return self._a.tobytes()

    def __matmul__(self, other: "GF2Mat4") -> "GF2Mat4":
        return GF2Mat4((self._a.astype(np.int64) @ other._a.astype(np.int64)) & 1)

    def act_right(self, v) -> tuple[int, ...]:
        """Row vector v times this matrix, mod 2."""
        row = np.asarray(v, dtype=np.int64) @ self._a.astype(np.int64)
        return tuple(int(x) & 1 for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Mat4):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def tolist(self) -> list[list[int]]:
        return self._a.astype(int).tolist()

    def __repr__(self) -> str:
        return f"GF2Mat4({self.tolist()})"


def multiply(a: IntMat4, b: IntMat4) -> IntMat4:
    """Exact product a @ b; raises MatrixOverflowError outside int64."""
    bound = int(np.abs(a.array).max()) * int(np.abs(b.array).max()) * 4
    if bound <= INT64_MAX:
        return IntMat4(a.array @ b.array)
    al, bl = a.tolist(), b.tolist()
    rows = [[sum(al[i][k] * bl[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    return IntMat4(rows)


def product(mats: Iterable[IntMat4]) -> IntMat4:
    out = IntMat4.identity()
    for m in mats:
        out = multiply(out, m)
    return out


J2 = np.array([[0, 1], [-1, 0]], dtype=np.int64)
OMEGA = IntMat4(np.block([[J2, np.zeros((2, 2), dtype=np.int64)], [np.zeros((2, 2), dtype=np.int64), J2]]))
# [[0, I], [-I, 0]] in the ordering (a, c, b, e); interoperability only.
_BLOCK_PERM = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.int64)


def is_symplectic(m: IntMat4) -> bool:
    return multiply(multiply(m.T, OMEGA), m) == OMEGA


def symplectic_inverse(m: IntMat4) -> IntMat4:
    """Omega^-1 m^T Omega, valid only for symplectic m."""
    if not is_symplectic(m):
        raise NotSymplecticError(f"not symplectic: {m.tolist()}")
    # Omega^-1 = -Omega
    return multiply(multiply(-OMEGA, m.T), OMEGA)


def to_block_form(m: IntMat4) -> IntMat4:
    """Conjugate into the basis where the form reads [[0, I], [-I, 0]]."""
    p = IntMat4(_BLOCK_PERM)
    return multiply(multiply(p, m), p)


def from_block_form(m: IntMat4) -> IntMat4:
    p = IntMat4(_BLOCK_PERM)
    return multiply(multiply(p, m), p)


def reduce_mod2(m: IntMat4) -> GF2Mat4:
    return GF2Mat4(np.mod(m.array, 2))


def _sigma(i: int) -> int:
    # transposes 1<->2, 3<->4 (1-based)
    return i + 1 if i % 2 == 1 else i - 1


def elementary_matrix(i: int, j: int) -> IntMat4:
    """Elementary symplectic matrix E_ij, 1-based indices."""
    if not (1 <= i <= 4 and 1 <= j <= 4):
        raise ValueError("indices must lie in 1..4")
    if i == j:
        raise ValueError("E_ij needs i != j")
    a = np.eye(4, dtype=np.int64)
    a[i - 1, j - 1] += 1
    if i != _sigma(j):
        a[_sigma(j) - 1, _sigma(i) - 1] -= (-1) ** (i + j)
    return IntMat4(a)


def _m(rows) -> IntMat4:
    return IntMat4(rows)


ID = IntMat4.identity()
T = _m([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
S = _m([[0, 1, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 1, 0]])
R = _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
U = _m([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
T_PRIME = _m([[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
X = _m([[1, 0, 2, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, -2, 0, 1]])
Y = _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 1]])
S1 = _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
S2 = _m([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
# diag(Id_2, -Id_2)
FLIP_LOWER = _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])

GENERATORS = {"T": T, "S": S, "R": R, "U": U}


def named_matrices() -> dict[str, IntMat4]:
    """Every named constant, including all twelve E_ij."""
    out = {"T": T, "S": S, "R": R, "U": U, "T'": T_PRIME, "X": X, "Y": Y, "S1": S1, "S2": S2}
    for i in range(1, 5):
        for j in range(1, 5):
            if i != j:
                out[f"E{i}{j}"] = elementary_matrix(i, j)
    return out


def word_matrix(word: str, alphabet: dict[str, IntMat4] | None = None) -> IntMat4:
    """Product of a word such as "TSR" or "T-1U".

    Letters are single characters; an inverse is written as "t" (lowercase) or "T-1".
    """
    alphabet = alphabet or GENERATORS
    out = ID
    i = 0
    w = word.replace(" ", "")
    while i < len(w):
        ch = w[i]
        inv = False
        if ch.islower() and ch.upper() in alphabet:
            ch, inv = ch.upper(), True
        if ch not in alphabet:
            raise ValueError(f"unknown letter {w[i]!r} in word {word!r}")
        i += 1
        if w.startswith("-1", i):
            inv = not inv
            i += 2
        g = alphabet[ch]
        out = multiply(out, symplectic_inverse(g) if inv else g)
    return out
