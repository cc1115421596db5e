"""Genus-two translation surfaces glued from three parallelograms.

A chain (z1, z2, z3, z4) gives parallelograms A = (z1, z2), B = (z2, z3),
C = (z3, z4); A is closed into a cylinder along its z1 sides, C along its z4
sides, and the z2 / z3 sides are glued across B.  The periods of the
associated basis (a, b, c, e) are (z1, z2, z3, z4 - z2).

Chains may hold floats/complex or exact Gaussian rationals (:class:`GaussQ`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .gamma import gamma_member
from .symplectic import ID, R, S, T, IntMat4, multiply, symplectic_inverse


class GaussQ:
    """Exact element of Q(i)."""

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        self.real = Fraction(real)
        self.imag = Fraction(imag)

    @classmethod
    def coerce(cls, x) -> "GaussQ":
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x, 0)
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, float):
            return cls(Fraction(x), 0)
        if isinstance(x, (list, tuple)) and len(x) == 2:
            return cls(Fraction(x[0]), Fraction(x[1]))
        raise TypeError(f"cannot make a Gaussian rational from {x!r}")

    def __add__(self, o):
        o = GaussQ.coerce(o)
        return GaussQ(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __sub__(self, o):
        o = GaussQ.coerce(o)
        return GaussQ(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, o):
        return GaussQ.coerce(o) - self

    def __mul__(self, o):
        o = GaussQ.coerce(o)
        return GaussQ(self.real * o.real - self.imag * o.imag, self.real * o.imag + self.imag * o.real)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussQ.coerce(o)
        n = o.real * o.real + o.imag * o.imag
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return self * GaussQ(o.real / n, -o.imag / n)

    def __neg__(self):
        return GaussQ(-self.real, -self.imag)

    def conjugate(self):
        return GaussQ(self.real, -self.imag)

    def __eq__(self, o):
        try:
            o = GaussQ.coerce(o)
        except TypeError:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        return hash((self.real, self.imag))

    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    def __repr__(self):
        return f"GaussQ({self.real}, {self.imag})"


def cross(u, v):
    """Im(conj(u) v); exact for Gaussian rationals."""
    return u.real * v.imag - u.imag * v.real


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class ParallelogramChain:
    z1: object
    z2: object
    z3: object
    z4: object

    def __post_init__(self):
        zs = self.z
        for i in range(3):
            if not cross(zs[i], zs[i + 1]) > 0:
                raise ChainError(
                    f"condition {i + 1} fails: Im(conj(z{i + 1}) z{i + 2}) = {cross(zs[i], zs[i + 1])} is not positive"
                )

    @property
    def z(self) -> tuple:
        return (self.z1, self.z2, self.z3, self.z4)

    def area(self):
        zs = self.z
        return sum((cross(zs[i], zs[i + 1]) for i in range(3)), start=0 * cross(zs[0], zs[1]))


def build(z1, z2, z3, z4) -> ParallelogramChain:
    return ParallelogramChain(z1, z2, z3, z4)


def exact_chain(*zs) -> ParallelogramChain:
    """Chain with Gaussian-rational entries; accepts ints, Fractions, [re, im] pairs or integral complex."""
    return ParallelogramChain(*(GaussQ.coerce(z) for z in zs))


def natural_periods(chain: ParallelogramChain) -> tuple:
    """Periods of (a, b, c, e) for the chain's own decomposition."""
    z1, z2, z3, z4 = chain.z
    return (z1, z2, z3, z4 - z2)


def apply_matrix(m: IntMat4, v) -> tuple:
    rows = m.tolist()
    return tuple(sum((rows[i][j] * v[j] for j in range(4)), start=0 * v[0]) for i in range(4))


@dataclass(frozen=True)
class Decomposition:
    """A chain plus the accumulated basis change relative to the starting decomposition."""

    chain: ParallelogramChain
    frame: IntMat4 = ID
    word: tuple = ()
    initial: tuple = field(default=None)

    def __post_init__(self):
        if self.initial is None:
            object.__setattr__(self, "initial", natural_periods(self.chain))

    @classmethod
    def start(cls, chain: ParallelogramChain) -> "Decomposition":
        return cls(chain)


def period_vector(d: Decomposition) -> tuple:
    """frame applied to the periods of the starting decomposition."""
    return apply_matrix(d.frame, d.initial)


@dataclass(frozen=True)
class NotRealizable:
    move: str
    condition: str
    value: object

    def __bool__(self):
        return False


def _step(d: Decomposition, chain, m: IntMat4, label: str) -> Decomposition:
    return Decomposition(chain, multiply(m, d.frame), d.word + (label,), d.initial)


def t_move(d: Decomposition, sign: int = 1) -> Decomposition:
    """z1 -> z1 +- z2."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    z1, z2, z3, z4 = d.chain.z
    new = ParallelogramChain(z1 + sign * z2, z2, z3, z4)
    return _step(d, new, T if sign == 1 else symplectic_inverse(T), "T" if sign == 1 else "T-1")


def s_move(d: Decomposition) -> Decomposition:
    """(z1, z2, z3, z4) -> (z4, -z3, z2, -z1)."""
    z1, z2, z3, z4 = d.chain.z
    return _step(d, ParallelogramChain(z4, -z3, z2, -z1), S, "S")


def r_move(d: Decomposition, sign: int = 1):
    """z3 -> z3 +- (z4 - z2), or NotRealizable if the new chain leaves the positive cone."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    z1, z2, z3, z4 = d.chain.z
    e = z4 - z2
    if e == 0 * e:
        raise ChainError("z4 = z2: the R move would not change the chain")
    z3n = z3 + sign * e
    label = "R" if sign == 1 else "R-1"
    c2 = cross(z2, z3n)
    if not c2 > 0:
        return NotRealizable(label, "Im(conj(z2) z3') > 0", c2)
    c3 = cross(z3n, z4)
    if not c3 > 0:
        return NotRealizable(label, "Im(conj(z3') z4) > 0", c3)
    return _step(d, ParallelogramChain(z1, z2, z3n, z4), R if sign == 1 else symplectic_inverse(R), label)


def parse_moves(word: str) -> list[str]:
    """'TSRt' or 'T S R-1' -> ['T', 'S', 'R', 'T-1']; lowercase means inverse."""
    out = []
    w = word.replace(" ", "").replace("⁻¹", "-1")
    i = 0
    while i < len(w):
        ch = w[i]
        if ch.upper() not in "TSR":
            raise ValueError(f"unknown move {ch!r} in {word!r}")
        inv = ch.islower()
        i += 1
        if w.startswith("-1", i):
            inv = not inv
            i += 2
        out.append(ch.upper() + ("-1" if inv else ""))
    return out


def apply_move(d: Decomposition, move: str):
    if move == "T":
        return t_move(d, 1)
    if move == "T-1":
        return t_move(d, -1)
    if move == "S":
        return s_move(d)
    if move == "S-1":
        for _ in range(3):
            d = s_move(d)
        return d
    if move == "R":
        return r_move(d, 1)
    if move == "R-1":
        return r_move(d, -1)
    raise ValueError(f"unknown move {move!r}")


def move_matrix(move: str) -> IntMat4:
    base = {"T": T, "S": S, "R": R}[move[0]]
    return symplectic_inverse(base) if move.endswith("-1") else base


@dataclass
class MoveReport:
    ok: bool
    moves: list
    final: Decomposition | None
    product: IntMat4
    failed_at: int | None = None
    reason: str = ""
    area_preserved: bool = True
    in_gamma: bool = True


def verify_move_matrices(chain: ParallelogramChain, word) -> MoveReport:
    """Apply the word geometrically and compare with the product of move matrices.

    The geometric side reads periods off the final chain; the algebraic side
    multiplies the move matrices from scratch.
    """
    moves = parse_moves(word) if isinstance(word, str) else list(word)
    d = Decomposition.start(chain)
    v0 = natural_periods(chain)
    area0 = chain.area()
    prod = ID
    for idx, mv in enumerate(moves):
        nd = apply_move(d, mv)
        if isinstance(nd, NotRealizable):
            return MoveReport(False, moves, d, prod, idx, f"move {idx} ({mv}) not realizable: {nd.condition}")
        d = nd
        prod = multiply(move_matrix(mv), prod)
        geometric = natural_periods(d.chain)
        if geometric != apply_matrix(prod, v0):
            return MoveReport(False, moves, d, prod, idx, f"period vector diverges after move {idx} ({mv})")
        if d.chain.area() != area0:
            return MoveReport(False, moves, d, prod, idx, f"area changed after move {idx} ({mv})", area_preserved=False)
    member = gamma_member(prod)
    ok = member and prod == d.frame
    reason = "" if ok else ("product not in Gamma" if not member else "frame differs from matrix product")
    return MoveReport(ok, moves, d, prod, None if ok else len(moves) - 1, reason, True, member)


@dataclass(frozen=True)
class WeierstrassPoint:
    label: str
    piece: str
    coordinate: object  # in the chart of the piece, origin at its first vertex


def weierstrass_points(chain: ParallelogramChain) -> list[WeierstrassPoint]:
    """Fixed points of the rotation by pi.

    In the cylinder A/z2 the rotation about the center c fixes c and c + z2/2,
    and c + z2/2 = z1/2 modulo z2: the midpoint of the glued z1 side.  C is
    the same with z4 in place of z1.  B is not closed up, so only its center.
    Charts: A spanned by z1, z2; B by z2, z3; C by z3, z4.
    """
    z1, z2, z3, z4 = chain.z
    half = Fraction(1, 2) if isinstance(z1, GaussQ) else 0.5
    zero = 0 * z1
    return [
        WeierstrassPoint("W", "vertex", zero),
        WeierstrassPoint("A_center", "A", (z1 + z2) * half),
        WeierstrassPoint("A_side", "A", z1 * half),
        WeierstrassPoint("B_center", "B", (z2 + z3) * half),
        WeierstrassPoint("C_center", "C", (z3 + z4) * half),
        WeierstrassPoint("C_side", "C", z4 * half),
    ]


def random_word(rng, length: int, alphabet=("T", "T-1", "S", "R", "R-1")) -> list[str]:
    return [alphabet[int(i)] for i in rng.integers(0, len(alphabet), size=length)]


def random_realizable_word(chain: ParallelogramChain, rng, length: int) -> list[str]:
    """Random word where each R move is kept only if realizable from the running chain."""
    d = Decomposition.start(chain)
    out = []
    while len(out) < length:
        mv = random_word(rng, 1)[0]
        nd = apply_move(d, mv)
        if isinstance(nd, NotRealizable):
            continue
        d = nd
        out.append(mv)
    return out
