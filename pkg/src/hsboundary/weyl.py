"""The Weyl group of the genus-2 Hilbert-Siegel group as a product of C2 Weyl groups.

Each factor is one of the eight signed permutations of a coordinate pair and
is addressed by a small integer code.  Elements of the full group are tuples
of codes, one per embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SizeLimit
from .lattice import HighestWeight

Pair = tuple[int, int]
Matrix = tuple[Pair, Pair]

SIEGEL = 0
KLINGEN = 1
STRATUM_NAMES = {SIEGEL: "siegel", KLINGEN: "klingen"}

POSITIVE_ROOTS: tuple[Pair, ...] = ((1, -1), (0, 2), (1, 1), (2, 0))
RHO: Pair = (2, 1)

# Roots of the unipotent radical of the Siegel (0) and Klingen (1) parabolics.
PARABOLIC_ROOTS: dict[int, frozenset[Pair]] = {
    SIEGEL: frozenset({(0, 2), (1, 1), (2, 0)}),
    KLINGEN: frozenset({(1, -1), (1, 1), (2, 0)}),
}

DEFAULT_WEYL_CAP = 8**5


def _signed_permutations() -> list[Matrix]:
    mats = []
    for perm in ((0, 1), (1, 0)):
        for s0, s1 in product((1, -1), repeat=2):
            rows = [[0, 0], [0, 0]]
            rows[0][perm[0]] = s0
            rows[1][perm[1]] = s1
            mats.append((tuple(rows[0]), tuple(rows[1])))
    return mats


FACTORS: tuple[Matrix, ...] = tuple(_signed_permutations())
_CODE = {m: i for i, m in enumerate(FACTORS)}


def mat_apply(m: Matrix, v: Sequence[int]) -> Pair:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _transpose(m: Matrix) -> Matrix:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def factor_code(m: Matrix) -> int:
    try:
        return _CODE[tuple(tuple(r) for r in m)]
    except KeyError:
        raise ValueError(f"{m} is not a signed permutation matrix") from None


def factor_inverse(code: int) -> int:
    # signed permutation matrices are orthogonal
    return _CODE[_transpose(FACTORS[code])]


def factor_compose(a: int, b: int) -> int:
    """Code of ``a o b`` (apply ``b`` first)."""
    return _CODE[mat_mul(FACTORS[a], FACTORS[b])]


def factor_inversions(code: int) -> frozenset[Pair]:
    inv = FACTORS[factor_inverse(code)]
    return frozenset(a for a in POSITIVE_ROOTS if mat_apply(inv, a) not in POSITIVE_ROOTS)


_FACTOR_INVERSIONS = tuple(factor_inversions(i) for i in range(len(FACTORS)))
_FACTOR_LENGTH = tuple(len(s) for s in _FACTOR_INVERSIONS)


def reflection(root: Pair) -> int:
    """Code of the reflection ``x - 2(x.a)/(a.a) a``."""
    norm = root[0] ** 2 + root[1] ** 2
    cols = []
    for e in ((1, 0), (0, 1)):
        t = Fraction(2 * (e[0] * root[0] + e[1] * root[1]), norm)
        cols.append(tuple(int(e[i] - t * root[i]) for i in range(2)))
    return _CODE[_transpose(tuple(cols))]


def factor_from_word(roots: Iterable[Pair]) -> int:
    """Evaluate a word of reflections; the rightmost letter acts first."""
    code = 0
    for r in roots:
        code = factor_compose(code, reflection(r))
    return code


SIMPLE_REFLECTIONS: tuple[int, int] = (reflection((1, -1)), reflection((0, 2)))


def describe_factor(code: int) -> str:
    """Render a factor as a map, e.g. ``(a,b)->(b,-a)``."""
    names = ("a", "b")
    out = []
    for row in FACTORS[code]:
        j = 0 if row[0] else 1
        out.append(("-" if row[j] < 0 else "") + names[j])
    return f"(a,b)->({out[0]},{out[1]})"


@dataclass(frozen=True)
class Root:
    embedding: int
    coords: Pair

    @property
    def positive(self) -> bool:
        return self.coords in POSITIVE_ROOTS


@dataclass(frozen=True)
class Character:
    """Integer pairs per embedding plus the central coordinate; not necessarily dominant."""

    e1: tuple[int, ...]
    e2: tuple[int, ...]
    c: int

    def to_json(self) -> dict:
        return {"e1": list(self.e1), "e2": list(self.e2), "c": self.c}


@dataclass(frozen=True)
class WeylElement:
    factors: tuple[int, ...]
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "length", sum(_FACTOR_LENGTH[f] for f in self.factors))

    @property
    def d(self) -> int:
        return len(self.factors)

    def factor_lengths(self) -> tuple[int, ...]:
        return tuple(_FACTOR_LENGTH[f] for f in self.factors)

    def inversion_set(self) -> list[Root]:
        return [
            Root(s, a)
            for s, f in enumerate(self.factors)
            for a in POSITIVE_ROOTS
            if a in _FACTOR_INVERSIONS[f]
        ]

    def apply(self, pairs: Sequence[Pair]) -> list[Pair]:
        if len(pairs) != self.d:
            raise DimensionMismatch(f"element has {self.d} factors, got {len(pairs)} pairs")
        return [mat_apply(FACTORS[f], v) for f, v in zip(self.factors, pairs)]

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple(factor_inverse(f) for f in self.factors))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.d != other.d:
            raise DimensionMismatch("cannot compose elements of different rank")
        return WeylElement(tuple(factor_compose(a, b) for a, b in zip(self.factors, other.factors)))

    @classmethod
    def identity(cls, d: int) -> "WeylElement":
        return cls((0,) * d)

    def describe(self) -> list[str]:
        return [describe_factor(f) for f in self.factors]


def _check_cap(d: int, cap: int) -> None:
    if d < 1:
        raise ValueError("d must be positive")
    if 8**d > cap:
        raise SizeLimit(f"8^{d} = {8**d} elements exceeds the cap {cap}")


def enumerate_weyl(d: int, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    _check_cap(d, cap)
    return [WeylElement(codes) for codes in product(range(len(FACTORS)), repeat=d)]


def in_kostant_set(w: WeylElement, m: int) -> bool:
    allowed = PARABOLIC_ROOTS[m]
    return all(r.coords in allowed for r in w.inversion_set())


def kostant_set(d: int, m: int, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    """Minimal-length coset representatives: elements whose inversions avoid the Levi."""
    if m not in PARABOLIC_ROOTS:
        raise ValueError(f"unknown stratum {m!r}")
    return [w for w in enumerate_weyl(d, cap) if in_kostant_set(w, m)]


def dot_offset(code: int) -> Pair:
    """The translation part of ``v -> w(v + rho) - rho`` for one factor."""
    wr = mat_apply(FACTORS[code], RHO)
    return (wr[0] - RHO[0], wr[1] - RHO[1])


def dot_action(w: WeylElement, lam: HighestWeight) -> Character:
    if w.d != lam.d:
        raise DimensionMismatch(f"element has d={w.d}, weight has d={lam.d}")
    e1, e2 = [], []
    for f, (a, b) in zip(w.factors, lam.pairs()):
        x, y = mat_apply(FACTORS[f], (a + RHO[0], b + RHO[1]))
        e1.append(x - RHO[0])
        e2.append(y - RHO[1])
    return Character(tuple(e1), tuple(e2), lam.c)
