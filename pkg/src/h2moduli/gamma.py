"""The subgroup Gamma = <T, S, R> of Sp(4, Z) and its six left cosets.

Membership is decided in the finite quotient Sp(4, F_2) (order 720): an
integral symplectic matrix lies in Gamma iff its reduction mod 2 maps the
five-element orbit O1 of e1 onto itself under right multiplication of row
vectors.  This rests on two facts that are re-checked by
:func:`membership_certificate` (and by the test-suite):

* the reduction of <T, S, R> has order 120, i.e. index 6 in Sp(4, F_2);
* that reduction coincides with the setwise stabilizer of O1.

Together with the index count [Sp(4, Z) : Gamma] = 6 these force Gamma to
be the full preimage of the stabilizer.  The index count itself is taken
as given and is not proven here.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .symplectic import (
    FLIP_LOWER,
    GF2Mat4,
    ID,
    IntMat4,
    NotSymplecticError,
    R,
    S,
    S1,
    S2,
    T,
    U,
    X,
    Y,
    elementary_matrix,
    is_symplectic,
    multiply,
    product,
    reduce_mod2,
    symplectic_inverse,
)

Vec2 = tuple[int, int, int, int]

O1: frozenset[Vec2] = frozenset({(1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1), (0, 1, 1, 1)})
O2: frozenset[Vec2] = frozenset(
    {
        (0, 1, 0, 0),
        (1, 0, 1, 0), (1, 0, 0, 1), (1, 0, 1, 1),
        (1, 1, 1, 0), (1, 1, 0, 1), (1, 1, 1, 1),
        (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 1, 1),
    }
)

GAMMA_GENERATORS = {"T": T, "S": S, "R": R}
SP4_GENERATORS = {"T": T, "S": S, "R": R, "U": U}

COSET_TAGS = ("Γ", "UΓ", "RUΓ", "SRUΓ", "URUΓ", "USRUΓ")
COSET_WORDS = {"Γ": "", "UΓ": "U", "RUΓ": "RU", "SRUΓ": "SRU", "URUΓ": "URU", "USRUΓ": "USRU"}

# Reference left action of the generators on the coset family
# (S^-1 acts like S because -Id lies in Gamma).
REFERENCE_COSET_TABLE: dict[str, tuple[str, ...]] = {
    "T": ("Γ", "UΓ", "RUΓ", "URUΓ", "SRUΓ", "USRUΓ"),
    "R": ("Γ", "RUΓ", "UΓ", "SRUΓ", "URUΓ", "USRUΓ"),
    "S": ("Γ", "UΓ", "SRUΓ", "RUΓ", "USRUΓ", "URUΓ"),
    "U": ("UΓ", "Γ", "URUΓ", "USRUΓ", "RUΓ", "SRUΓ"),
    "T-1": ("Γ", "UΓ", "RUΓ", "URUΓ", "SRUΓ", "USRUΓ"),
    "R-1": ("Γ", "RUΓ", "UΓ", "SRUΓ", "URUΓ", "USRUΓ"),
    "S-1": ("Γ", "UΓ", "SRUΓ", "RUΓ", "USRUΓ", "URUΓ"),
}


class VerificationError(AssertionError):
    """A claimed identity or table entry did not hold."""


def _vectors() -> list[Vec2]:
    return [v for v in itertools.product((0, 1), repeat=4) if any(v)]


def orbit_mod2(seed, generators) -> frozenset[Vec2]:
    """Closure of {seed} under right multiplication by the generators mod 2."""
    seed = tuple(int(x) & 1 for x in seed)
    if len(seed) != 4:
        raise ValueError("seed must have 4 entries")
    if not any(seed):
        raise ValueError("zero seed has a trivial orbit")
    gens = [reduce_mod2(g) for g in (generators.values() if isinstance(generators, dict) else generators)]
    seen = {seed}
    todo = deque([seed])
    while todo:
        v = todo.popleft()
        for g in gens:
            w = g.act_right(v)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return frozenset(seen)


@dataclass(frozen=True)
class GF2Group:
    """A finite subgroup of GL(4, F_2) with a shortest generating word per element."""

    elements: frozenset[bytes]
    words: dict[bytes, str] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, m) -> bool:
        key = m.key() if isinstance(m, GF2Mat4) else reduce_mod2(m).key()
        return key in self.elements

    def matrices(self) -> list[GF2Mat4]:
        return [GF2Mat4(np.frombuffer(k, dtype=np.uint8).reshape(4, 4)) for k in sorted(self.elements)]


def enumerate_sp4_f2(generators) -> GF2Group:
    """Breadth-first closure of the mod-2 reductions of the generators."""
    if isinstance(generators, dict):
        named = list(generators.items())
    else:
        named = [(f"g{i}", g) for i, g in enumerate(generators)]
    for name, g in named:
        if not is_symplectic(g):
            raise NotSymplecticError(f"generator {name} is not symplectic")
    gens = [(name, reduce_mod2(g)) for name, g in named]
    start = reduce_mod2(ID)
    words = {start.key(): ""}
    todo = deque([start])
    while todo:
        m = todo.popleft()
        w = words[m.key()]
        for name, g in gens:
            n = m @ g
            k = n.key()
            if k not in words:
                words[k] = w + name
                todo.append(n)
    # finite group: closure under products is closure under inverses
    return GF2Group(frozenset(words), words)


@lru_cache(maxsize=None)
def sp4_f2() -> GF2Group:
    return enumerate_sp4_f2(SP4_GENERATORS)


@lru_cache(maxsize=None)
def gamma_mod2() -> GF2Group:
    return enumerate_sp4_f2(GAMMA_GENERATORS)


def stabilizes_o1(m: GF2Mat4) -> bool:
    return frozenset(m.act_right(v) for v in O1) == O1


@lru_cache(maxsize=None)
def o1_stabilizer() -> frozenset[bytes]:
    return frozenset(m.key() for m in sp4_f2().matrices() if stabilizes_o1(m))


def membership_certificate() -> dict:
    """Re-derive the facts the membership oracle relies on."""
    full, sub = sp4_f2(), gamma_mod2()
    stab = o1_stabilizer()
    return {
        "order_sp4_f2": len(full),
        "order_gamma_mod2": len(sub),
        "index": len(full) // len(sub) if len(sub) else None,
        "gamma_equals_o1_stabilizer": sub.elements == stab,
    }


def gamma_member(m: IntMat4) -> bool:
    if not is_symplectic(m):
        raise NotSymplecticError(f"not symplectic: {m.tolist()}")
    return stabilizes_o1(reduce_mod2(m))


@dataclass(frozen=True)
class CosetLabel:
    tag: str
    representative: IntMat4

    def __str__(self) -> str:
        return self.tag


def _word(word: str) -> IntMat4:
    return product({"T": T, "S": S, "R": R, "U": U}[c] for c in word)


COSET_REPRESENTATIVES: dict[str, IntMat4] = {tag: _word(w) for tag, w in COSET_WORDS.items()}


def coset_of(m: IntMat4) -> CosetLabel:
    """The label L with rep(L)^-1 m in Gamma."""
    if not is_symplectic(m):
        raise NotSymplecticError(f"not symplectic: {m.tolist()}")
    hits = [tag for tag, rep in COSET_REPRESENTATIVES.items() if gamma_member(multiply(symplectic_inverse(rep), m))]
    if len(hits) != 1:
        raise VerificationError(f"matrix {m.tolist()} matched cosets {hits}; expected exactly one")
    return CosetLabel(hits[0], COSET_REPRESENTATIVES[hits[0]])


def coset_table() -> dict[str, tuple[str, ...]]:
    """coset_of(x * rep(C)) for every generator x and coset C."""
    letters = {"T": T, "R": R, "S": S, "U": U}
    rows = {}
    for name in REFERENCE_COSET_TABLE:
        x = letters[name[0]]
        if name.endswith("-1"):
            x = symplectic_inverse(x)
        rows[name] = tuple(coset_of(multiply(x, COSET_REPRESENTATIVES[c])).tag for c in COSET_TAGS)
    return rows


def verify_coset_table() -> dict[str, tuple[str, ...]]:
    """Compute the 7x6 table and compare it cell by cell with the reference table."""
    table = coset_table()
    for row, cells in table.items():
        for col, got, want in zip(COSET_TAGS, cells, REFERENCE_COSET_TABLE[row]):
            if got != want:
                raise VerificationError(f"cell ({row}, {col}): computed {got}, table says {want}")
    return table


def _inv(m: IntMat4) -> IntMat4:
    return symplectic_inverse(m)


def generation_identities() -> list[tuple[str, IntMat4, IntMat4]]:
    """(label, left side, right side) for each word identity behind the generation argument."""
    E = elementary_matrix
    p = multiply(S1, S2)
    return [
        ("E12 = T", E(1, 2), T),
        ("E34 = R", E(3, 4), R),
        ("E21 = U^-1 T^-1 U", E(2, 1), product([_inv(U), _inv(T), U])),
        ("E13 = S U", E(1, 3), multiply(S, U)),
        ("S2 = U^-1 S1 U", S2, product([_inv(U), S1, U])),
        ("E31 = (S1 S2) E13^-1 (S1 S2)^-1", E(3, 1), product([p, _inv(E(1, 3)), _inv(p)])),
        ("E14 = S1 E13 S1^-1", E(1, 4), product([S1, E(1, 3), _inv(S1)])),
        ("E41 = S2 E13 S2^-1", E(4, 1), product([S2, E(1, 3), _inv(S2)])),
    ]


# E21 = U^-1 T^-1 U does not hold (the right side is E43); the word below does.
E21_WITNESS = ("E21 = U^-1 R^-1 U", lambda: product([_inv(U), _inv(R), U]))


def verify_generation() -> dict:
    """Check every generation identity; report which fail and whether generation still follows.

    Returns a report with ``identities`` (label -> bool), ``memberships`` for
    E12, E34, E43 in Gamma, ``corrected`` witnesses for failed displays, and
    ``all_elementary_generated``: every E_ij is a word in T, S, R, U.
    """
    E = elementary_matrix
    identities = {label: lhs == rhs for label, lhs, rhs in generation_identities()}
    memberships = {name: gamma_member(E(*ij)) for name, ij in (("E12", (1, 2)), ("E34", (3, 4)), ("E43", (4, 3)))}
    corrected = {}
    if not identities["E21 = U^-1 T^-1 U"]:
        label, build = E21_WITNESS
        corrected[label] = build() == E(2, 1)
    words = sp4_words_for_elementary()
    return {
        "identities": identities,
        "memberships": memberships,
        "corrected": corrected,
        "failed": [k for k, ok in identities.items() if not ok],
        "all_elementary_generated": all(words.values()),
        "elementary_words": words,
        "derived": {
            "U^-1 T^-1 U": product([_inv(U), _inv(T), U]).tolist(),
        },
    }


def sp4_words_for_elementary() -> dict[str, bool]:
    """For each E_ij confirm membership in <T,S,R,U> by exact products of the proof's witnesses."""
    E = elementary_matrix
    witnesses = {
        "E12": T,
        "E34": R,
        "E43": product([_inv(S), _inv(T), S]),
        "E21": E21_WITNESS[1](),
        "E13": multiply(S, U),
    }
    s2 = product([_inv(U), S1, U])
    p = multiply(S1, s2)
    witnesses["E31"] = product([p, _inv(witnesses["E13"]), _inv(p)])
    witnesses["E14"] = product([S1, witnesses["E13"], _inv(S1)])
    witnesses["E41"] = product([s2, witnesses["E13"], _inv(s2)])
    # remaining ones are transposes/inverses of the above
    witnesses["E42"] = _inv(witnesses["E13"])
    witnesses["E24"] = _inv(witnesses["E31"])
    witnesses["E32"] = witnesses["E14"]
    witnesses["E23"] = witnesses["E41"]
    return {name: witnesses[name] == E(int(name[1]), int(name[2])) for name in sorted(witnesses)}


def txy_matrix(l: int, m: int, n: int) -> IntMat4:
    return IntMat4([[1, m, 2 * l, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, -2 * l, n, 1]])


def factor_txy(l: int, m: int, n: int) -> tuple[IntMat4, IntMat4, str]:
    """Return (closed-form gamma(l, m, n), T^m X^l Y^n, word); raises if they differ or T, X, Y fail to commute."""
    x_built = product([S, FLIP_LOWER, S, FLIP_LOWER])
    if x_built != X:
        raise VerificationError("S diag(I,-I) S diag(I,-I) != X")
    if product([_inv(S), _inv(T), S]) != Y:
        raise VerificationError("S^-1 T^-1 S != Y")
    for a, b in ((T, X), (T, Y), (X, Y)):
        if multiply(a, b) != multiply(b, a):
            raise VerificationError("T, X, Y do not commute")
    shown = txy_matrix(l, m, n)
    built = product([T**m, X**l, Y**n])
    if shown != built:
        raise VerificationError(f"gamma({l},{m},{n}) != T^m X^l Y^n")
    word = f"T^{m} X^{l} Y^{n}"
    return shown, built, word


S_INV_T_S = IntMat4([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]])
T_PRIME_CONJ = IntMat4([[2, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def exact_identities() -> dict[str, bool]:
    """Power relations and the two reference conjugates, plus every generation identity."""
    from .symplectic import T_PRIME

    minus = -ID
    out = {
        "S^2 = -Id": S**2 == minus,
        "S^4 = Id": S**4 == ID,
        "U^2 = -Id": U**2 == minus,
        "S^-1 T S = display": product([_inv(S), T, S]) == S_INV_T_S,
        "T'^-1 T T' = display": product([_inv(T_PRIME), T, T_PRIME]) == T_PRIME_CONJ,
        "T'^-1 T T' not in Gamma": not gamma_member(T_PRIME_CONJ),
    }
    for label, lhs, rhs in generation_identities():
        out[label] = lhs == rhs
    return out


def orbit_summary() -> dict:
    e1, e2 = (1, 0, 0, 0), (0, 1, 0, 0)
    o1 = orbit_mod2(e1, GAMMA_GENERATORS.values())
    o2 = orbit_mod2(e2, GAMMA_GENERATORS.values())
    full = orbit_mod2(e1, SP4_GENERATORS.values())
    return {
        "O1": sorted(o1),
        "O2": sorted(o2),
        "O1_matches": o1 == O1,
        "O2_matches": o2 == O2,
        "orbit_with_U_size": len(full),
    }
